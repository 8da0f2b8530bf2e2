#pragma once

// Named verification checks over the whole library, grouped into the
// suites the command-line front end exposes.  The acceptance program
// runs the same checks at their full depths.

#include <cstdint>
#include <string>
#include <vector>

namespace dexter {

struct VerifyResult {
  std::string name;
  bool pass = false;
  bool gating = true;  // experimental reports carry pass=true, gating=false
  std::string witness;
};

/// Exhaustive depths for the individual checks; the defaults are the
/// full depths used by the acceptance run.
struct VerifyCaps {
  int interval_counts = 7;     // enumerated interval counts
  int series_printed = 4;      // printed series expansions
  int series_equations = 6;    // functional equations
  int algebraic_degree = 12;   // algebraic equation for the counts
  int maximal_counts = 7;      // Motzkin-counted maxima
  int maximal_predicate = 9;   // predicate vs out-degree
  int order_sandwich = 7;      // comb <= dexter <= tamari
  int monoid_exhaustive = 4;   // associativity, small sizes
  int monoid_random = 8;       // associativity samples
  int m1_roundtrip = 9;
  int m2_roundtrip = 6;
  int factorization = 6;       // product-isomorphism theorems
  int core_machinery = 8;
  int meet_pairs = 7;          // constructive meet vs brute force
  int meet_oracles = 6;        // rise/desc lemma oracles
  int hochschild_counts = 6;
  int hochschild_depth = 8;    // encodings, vertex sets, cover increase
  int coxeter_interval = 6;    // circle check on the interval family
  int h_quadratic = 8;
  int h_symmetry = 8;
  int narayana = 9;
  int zeta = 6;
  int structure = 8;           // tree bijection, Hasse sanity
  int boolean_rank = 7;
  std::uint64_t seed = 20240614;
};

VerifyCaps small_caps();   // quick smoke depths
VerifyCaps medium_caps();  // acceptance depths (the defaults)
VerifyCaps large_caps();   // acceptance depths plus one where affordable

std::vector<VerifyResult> verify_counts(const VerifyCaps& caps);
std::vector<VerifyResult> verify_series(const VerifyCaps& caps);
std::vector<VerifyResult> verify_monoids(const VerifyCaps& caps);
std::vector<VerifyResult> verify_meet(const VerifyCaps& caps);
std::vector<VerifyResult> verify_hochschild(const VerifyCaps& caps);
std::vector<VerifyResult> verify_invariants(const VerifyCaps& caps);

/// All suites plus the non-gating experimental reports.
std::vector<VerifyResult> verify_all(const VerifyCaps& caps);

/// Experimental observations that are reported but never gate.
std::vector<VerifyResult> experimental_reports(const VerifyCaps& caps);

}  // namespace dexter

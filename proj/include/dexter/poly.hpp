#pragma once

// Exact polynomial arithmetic: sparse multivariate polynomials over
// arbitrary-precision integers, truncated power series in t, univariate
// rational polynomials, and cyclotomic factorization.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dexter/bigint.hpp"
#include "dexter/errors.hpp"

namespace dexter {

enum class Var : std::uint8_t { t, s, x, r, b, q };
inline constexpr int kVarCount = 6;
const char* var_name(Var v);

struct Monomial {
  std::array<std::uint16_t, kVarCount> exp{};

  int degree(Var v) const { return exp[static_cast<size_t>(v)]; }
  int total_degree() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exp <=> b.exp;
  }
};

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(int constant);  // NOLINT: implicit for readable arithmetic
  IntPoly(BigInt constant);
  static IntPoly variable(Var v, int power = 1);
  static IntPoly term(BigInt coefficient, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  int degree(Var v) const;
  const std::map<Monomial, BigInt>& terms() const { return terms_; }

  BigInt coeff(const Monomial& m) const;
  BigInt constant_term() const { return coeff(Monomial{}); }

  /// Coefficient of v^power, a polynomial in the remaining variables.
  IntPoly coeff_of(Var v, int power) const;

  IntPoly substitute(Var v, const IntPoly& value) const;
  IntPoly pow(int exponent) const;

  /// Drops all terms of degree > max_degree in v.
  IntPoly truncate(Var v, int max_degree) const;

  /// Quotient when the division leaves no remainder over the integers;
  /// throws division_not_exact otherwise.
  IntPoly div_exact(const IntPoly& divisor) const;

  /// Univariate evaluation; requires at most one variable present.
  BigRat eval(const BigRat& value) const;

  /// Ascending coefficient list of a polynomial in at most one variable.
  std::vector<BigInt> univariate_coeffs() const;

  std::string str() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void add_term(const Monomial& m, const BigInt& c);
  std::map<Monomial, BigInt> terms_;
};

/// A power series in t truncated beyond a fixed degree; coefficients are
/// polynomials in the other variables.
class SeriesTable {
 public:
  SeriesTable() = default;
  explicit SeriesTable(int max_degree) : coeffs_(max_degree + 1) {}

  int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  IntPoly& coeff(int n) { return coeffs_[static_cast<size_t>(n)]; }
  const IntPoly& coeff(int n) const { return coeffs_[static_cast<size_t>(n)]; }

  /// Applies a substitution to every coefficient (e.g. s -> 1).
  SeriesTable substitute(Var v, const IntPoly& value) const;

  /// The series as a single polynomial in t and the coefficient variables.
  IntPoly to_poly() const;

  /// Reads the t-expansion of a polynomial back into a table.
  static SeriesTable from_poly(const IntPoly& p, int max_degree);

  /// Multiplicative inverse; the constant coefficient must be 1 or -1.
  SeriesTable inverse() const;

  SeriesTable& operator+=(const SeriesTable& other);
  SeriesTable& operator-=(const SeriesTable& other);
  friend SeriesTable operator+(SeriesTable a, const SeriesTable& b) {
    return a += b;
  }
  friend SeriesTable operator-(SeriesTable a, const SeriesTable& b) {
    return a -= b;
  }
  friend SeriesTable operator*(const SeriesTable& a, const SeriesTable& b);
  friend bool operator==(const SeriesTable&, const SeriesTable&) = default;

 private:
  std::vector<IntPoly> coeffs_;
};

/// Univariate polynomial with exact rational coefficients, ascending.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRat> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  BigRat eval(const BigRat& value) const;
  std::string str() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  std::vector<BigRat> coeffs_;
};

/// The unique polynomial of degree < points.size() through the given
/// (argument, value) pairs.
RatPoly lagrange_interpolate(
    const std::vector<std::pair<BigRat, BigRat>>& points);

/// The d-th cyclotomic polynomial in x, memoized.
IntPoly cyclotomic(int d);

struct CycloFactorization {
  std::vector<std::pair<int, int>> factors;  // (index d, multiplicity)
  IntPoly remainder;
  std::string str() const;
};

/// Divides out Phi_d exactly, for every d whose degree still fits, until
/// the remainder is free of cyclotomic factors.
CycloFactorization cyclotomic_factor(const IntPoly& p);

}  // namespace dexter

// Command-line front end for the dexter-order library.

#include <cstdio>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dexter/binary_tree.hpp"
#include "dexter/hochschild.hpp"
#include "dexter/invariants.hpp"
#include "dexter/meet.hpp"
#include "dexter/monoid.hpp"
#include "dexter/order.hpp"
#include "dexter/tamari.hpp"
#include "dexter/verify.hpp"

namespace {

using dexter::DyckPath;
using dexter::IntPoly;
using dexter::Poset;
using dexter::Var;
using nlohmann::json;

struct RunConfig {
  std::string format = "text";
  std::string caps = "medium";
  std::uint64_t seed = 20240614;
  int jobs = 1;
  int size_cap = 14;
};

dexter::VerifyCaps caps_for(const RunConfig& config) {
  dexter::VerifyCaps caps = config.caps == "small"  ? dexter::small_caps()
                            : config.caps == "large" ? dexter::large_caps()
                                                     : dexter::medium_caps();
  caps.seed = config.seed;
  return caps;
}

std::string polynomial_report(const IntPoly& p) {
  dexter::CycloFactorization f = dexter::cyclotomic_factor(p);
  if (f.remainder == IntPoly(1) && !f.factors.empty()) return f.str();
  return p.str();
}

// Poset selection shared by the invariants subcommands.
struct PosetChoice {
  int size = -1;
  std::string below, above, lo, hi;
  int hochschild = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--size", size, "whole diagram of the given size");
    cmd->add_option("--below", below, "interval from the minimum to a path");
    cmd->add_option("--above", above, "principal upper ideal of a path");
    cmd->add_option("--between", lo, "interval bottom (with --and)");
    cmd->add_option("--and", hi, "interval top (with --between)");
    cmd->add_option("--hochschild", hochschild,
                    "the Hochschild interval of the given index");
  }

  Poset build(int cap) const {
    if (size >= 0) return dexter::hasse(size, cap).poset();
    if (!below.empty())
      return dexter::lower_interval(DyckPath::parse(below));
    if (!above.empty()) return dexter::upper_ideal(DyckPath::parse(above));
    if (!lo.empty() || !hi.empty()) {
      DyckPath bottom = DyckPath::parse(lo);
      DyckPath top = DyckPath::parse(hi);
      const dexter::DyckPoset& d = dexter::shared_poset(bottom.size(), cap);
      int t = d.index_of(top);
      std::vector<int> members;
      for (int z : d.up_set_of(bottom))
        if (d.poset().leq(z, t)) members.push_back(z);
      if (members.empty())
        throw dexter::not_an_interval("endpoints are not comparable");
      return d.poset().restrict_convex(members);
    }
    if (hochschild >= 1) return dexter::hochschild_poset(hochschild);
    throw CLI::ValidationError(
        "choose a poset with --size, --below, --above, --between/--and or "
        "--hochschild");
  }
};

void print_poset(const Poset& p, const std::string& order,
                 const std::string& format) {
  if (format == "dot") {
    std::cout << p.dot(order);
  } else if (format == "json") {
    std::cout << p.json(order) << "\n";
  } else {
    std::cout << p.size() << " elements, " << p.cover_edges().size()
              << " covers (" << order << ")\n";
    for (const auto& e : p.cover_edges()) {
      std::cout << p.label(e.src) << " -> " << p.label(e.dst);
      if (e.color != dexter::EdgeColor::none)
        std::cout << "  [" << dexter::color_name(e.color) << "]";
      std::cout << "\n";
    }
  }
}

int run_verify(const RunConfig& config, const std::string& suite) {
  dexter::VerifyCaps caps = caps_for(config);
  using Suite =
      std::vector<dexter::VerifyResult> (*)(const dexter::VerifyCaps&);
  std::vector<Suite> suites;
  if (suite == "counts")
    suites = {dexter::verify_counts};
  else if (suite == "series")
    suites = {dexter::verify_series};
  else if (suite == "monoids")
    suites = {dexter::verify_monoids};
  else if (suite == "meet")
    suites = {dexter::verify_meet};
  else if (suite == "hochschild")
    suites = {dexter::verify_hochschild};
  else if (suite == "invariants")
    suites = {dexter::verify_invariants};
  else
    suites = {dexter::verify_counts,     dexter::verify_series,
              dexter::verify_monoids,    dexter::verify_meet,
              dexter::verify_hochschild, dexter::verify_invariants,
              dexter::experimental_reports};

  std::vector<dexter::VerifyResult> results;
  if (config.jobs > 1) {
    std::vector<std::future<std::vector<dexter::VerifyResult>>> futures;
    for (Suite fn : suites)
      futures.push_back(std::async(std::launch::async, fn, caps));
    for (auto& f : futures) {
      auto group = f.get();
      results.insert(results.end(), group.begin(), group.end());
    }
  } else {
    for (Suite fn : suites) {
      auto group = fn(caps);
      results.insert(results.end(), group.begin(), group.end());
    }
  }

  bool all_pass = true;
  if (config.format == "json") {
    json report = json::array();
    for (const auto& r : results) {
      report.push_back({{"name", r.name},
                        {"status", !r.gating ? "info"
                                   : r.pass  ? "pass"
                                             : "fail"},
                        {"witness", r.witness}});
      all_pass = all_pass && (r.pass || !r.gating);
    }
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      const char* status = !r.gating ? "INFO" : r.pass ? "PASS" : "FAIL";
      std::printf("%s  %-28s %s\n", status, r.name.c_str(),
                  r.witness.c_str());
      all_pass = all_pass && (r.pass || !r.gating);
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of the dexter order on Dyck paths"};
  app.require_subcommand(1);
  RunConfig config;
  app.add_option("--format", config.format, "text, json, csv or dot")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_option("--caps", config.caps, "verification depth preset")
      ->check(CLI::IsMember({"small", "medium", "large"}));
  app.add_option("--seed", config.seed, "seed for sampled property checks");
  app.add_option("--jobs", config.jobs, "worker count for verification")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-size", config.size_cap, "size cap for diagrams")
      ->check(CLI::PositiveNumber);

  auto* hasse_cmd = app.add_subcommand("hasse", "emit a cover diagram");
  int hasse_n = 4;
  std::string hasse_order = "dexter";
  hasse_cmd->add_option("--n", hasse_n, "path size")->required();
  hasse_cmd->add_option("--order", hasse_order, "dexter, tamari or comb")
      ->check(CLI::IsMember({"dexter", "tamari", "comb"}));

  auto* meet_cmd = app.add_subcommand("meet", "greatest lower bound");
  std::string meet_a, meet_b;
  meet_cmd->add_option("--path1", meet_a, "first path, e.g. 110100")
      ->required();
  meet_cmd->add_option("--path2", meet_b, "second path")->required();

  auto* intervals_cmd = app.add_subcommand("intervals", "interval counting");
  intervals_cmd->require_subcommand(1);
  auto* count_cmd = intervals_cmd->add_subcommand("count", "interval counts");
  int count_n = 6;
  bool by_blocks = false;
  count_cmd->add_option("--n", count_n, "maximal size")->required();
  count_cmd->add_flag("--by-blocks", by_blocks,
                      "split by block count of the bottom");
  auto* series_cmd =
      intervals_cmd->add_subcommand("series", "generating series");
  std::string series_kind = "A";
  int series_deg = 6;
  series_cmd->add_option("--kind", series_kind, "A, R or C")
      ->check(CLI::IsMember({"A", "R", "C"}));
  series_cmd->add_option("--deg", series_deg, "maximal degree")->required();
  auto* upsizes_cmd = intervals_cmd->add_subcommand(
      "upsizes", "upper-ideal sizes indexed by the tree bijection");
  int upsizes_n = 5;
  upsizes_cmd->add_option("--n", upsizes_n, "path size")->required();

  auto* monoid_cmd = app.add_subcommand("monoid", "free monoid structure");
  monoid_cmd->require_subcommand(1);
  auto* factor_cmd = monoid_cmd->add_subcommand("factor", "factorizations");
  std::string factor_path, factor_bottom, factor_top;
  factor_cmd->add_option("--path", factor_path, "path to factor");
  factor_cmd->add_option("--bottom", factor_bottom,
                         "interval bottom (with --top)");
  factor_cmd->add_option("--top", factor_top, "interval top");

  auto* hochschild_cmd =
      app.add_subcommand("hochschild", "the Hochschild interval");
  hochschild_cmd->require_subcommand(1);
  auto* rho_cmd = hochschild_cmd->add_subcommand("rho", "vertex encoding");
  std::string rho_path, rho_inverse;
  rho_cmd->add_option("--path", rho_path, "path to encode");
  rho_cmd->add_option("--inverse", rho_inverse, "ternary word to decode");
  auto* zsets_cmd =
      hochschild_cmd->add_subcommand("zsets", "recursive vertex sets");
  int zsets_n = 3;
  zsets_cmd->add_option("--n", zsets_n, "word length")->required();

  auto* invariants_cmd = app.add_subcommand("invariants", "poset analytics");
  invariants_cmd->require_subcommand(1);
  auto* coxeter_cmd =
      invariants_cmd->add_subcommand("coxeter", "Coxeter polynomial");
  PosetChoice coxeter_choice;
  coxeter_choice.attach(coxeter_cmd);
  auto* zeta_cmd = invariants_cmd->add_subcommand("zeta", "zeta polynomial");
  PosetChoice zeta_choice;
  zeta_choice.attach(zeta_cmd);
  auto* hpoly_cmd =
      invariants_cmd->add_subcommand("hpoly", "colored h-polynomial");
  int hpoly_n = 4;
  hpoly_cmd->add_option("--n", hpoly_n, "path size")->required();
  auto* chains_cmd =
      invariants_cmd->add_subcommand("chains", "chain statistics");
  PosetChoice chains_choice;
  chains_choice.attach(chains_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "which checks to run")
      ->check(CLI::IsMember({"counts", "series", "monoids", "meet",
                             "hochschild", "invariants", "all"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*hasse_cmd) {
      Poset p = hasse_order == "tamari"
                    ? dexter::tamari_hasse(hasse_n, config.size_cap)
                : hasse_order == "comb"
                    ? dexter::comb_hasse(hasse_n, config.size_cap)
                    : dexter::hasse(hasse_n, config.size_cap).poset();
      print_poset(p, hasse_order, config.format);
    } else if (*meet_cmd) {
      DyckPath v = DyckPath::parse(meet_a);
      DyckPath w = DyckPath::parse(meet_b);
      DyckPath lower = v, upper = w;
      std::vector<std::string> trace;
      while (lower != upper) {
        int d = 0;
        while (lower.at(d) == upper.at(d)) ++d;
        if (lower.at(d) == 1) std::swap(lower, upper);
        upper = dexter::descend_fully(upper, d);
        trace.push_back("lower at step " + std::to_string(d) + " -> " +
                        upper.str());
      }
      if (config.format == "json") {
        std::cout << json{{"meet", lower.str()}, {"trace", trace}}.dump()
                  << "\n";
      } else {
        for (const auto& line : trace) std::cout << line << "\n";
        std::cout << "meet: " << lower.str() << " " << lower.tuple_str()
                  << "\n";
      }
    } else if (*count_cmd) {
      if (config.format == "json") {
        json rows = json::array();
        for (int n = 0; n <= count_n; ++n)
          rows.push_back(
              {{"n", n},
               {"count", dexter::all_intervals(n, std::max(9, count_n))
                             .size()}});
        std::cout << rows.dump() << "\n";
      } else if (by_blocks) {
        std::cout << "n,blocks,count\n";
        dexter::SeriesTable table = dexter::interval_series(
            dexter::IntervalKind::all, count_n, std::max(9, count_n));
        for (int n = 0; n <= count_n; ++n)
          for (int j = 0; j <= n; ++j) {
            IntPoly c = table.coeff(n).coeff_of(Var::s, j);
            if (!c.is_zero())
              std::cout << n << "," << j << "," << c.str() << "\n";
          }
      } else {
        std::cout << "n,count\n";
        for (int n = 0; n <= count_n; ++n)
          std::cout << n << ","
                    << dexter::all_intervals(n, std::max(9, count_n)).size()
                    << "\n";
      }
    } else if (*series_cmd) {
      dexter::IntervalKind kind = series_kind == "R"
                                      ? dexter::IntervalKind::reduced
                                  : series_kind == "C"
                                      ? dexter::IntervalKind::core
                                      : dexter::IntervalKind::all;
      dexter::SeriesTable table =
          dexter::interval_series(kind, series_deg, std::max(9, series_deg));
      std::cout << table.to_poly().str() << "\n";
    } else if (*upsizes_cmd) {
      std::cout << "path,tree,upper_ideal_size\n";
      for (const DyckPath& w : dexter::all_paths(upsizes_n))
        std::cout << w.str() << "," << dexter::to_binary_tree(w).str() << ","
                  << dexter::shared_poset(upsizes_n, config.size_cap)
                         .up_set_of(w)
                         .size()
                  << "\n";
    } else if (*factor_cmd) {
      if (!factor_path.empty()) {
        auto factors = dexter::sharp_factor(DyckPath::parse(factor_path));
        if (factors.empty()) {
          std::cout << "unit\n";
        } else {
          std::string line;
          for (const DyckPath& f : factors) {
            if (!line.empty()) line += " # ";
            line += f.tuple_str();
          }
          std::cout << line << "\n";
        }
      } else if (!factor_bottom.empty() && !factor_top.empty()) {
        auto factors = dexter::interval_factor(
            dexter::IntervalRef{DyckPath::parse(factor_bottom),
                                DyckPath::parse(factor_top)});
        if (factors.empty()) {
          std::cout << "unit\n";
        } else {
          std::string line;
          for (const auto& f : factors) {
            if (!line.empty()) line += " # ";
            line +=
                "[" + f.bottom.tuple_str() + ", " + f.top.tuple_str() + "]";
          }
          std::cout << line << "\n";
        }
      } else {
        throw CLI::ValidationError("factor needs --path or --bottom/--top");
      }
    } else if (*rho_cmd) {
      if (!rho_path.empty()) {
        std::cout << dexter::encode_vertex(DyckPath::parse(rho_path)).str()
                  << "\n";
      } else if (!rho_inverse.empty()) {
        DyckPath w =
            dexter::decode_vertex(dexter::TernaryWord::parse(rho_inverse));
        std::cout << w.str() << " " << w.tuple_str() << "\n";
      } else {
        throw CLI::ValidationError("rho needs --path or --inverse");
      }
    } else if (*zsets_cmd) {
      dexter::VertexSets sets = dexter::vertex_sets(zsets_n);
      auto strings = [](const std::vector<dexter::TernaryWord>& words) {
        std::vector<std::string> out;
        for (const auto& z : words) out.push_back(z.str());
        return out;
      };
      if (config.format == "json") {
        std::cout << json{{"zero", strings(sets.zero)},
                          {"one", strings(sets.one)},
                          {"plain", strings(sets.plain)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "zero:";
        for (const auto& z : sets.zero) std::cout << " " << z.str();
        std::cout << "\none:";
        for (const auto& z : sets.one) std::cout << " " << z.str();
        std::cout << "\nplain:";
        for (const auto& z : sets.plain) std::cout << " " << z.str();
        std::cout << "\n";
      }
    } else if (*coxeter_cmd) {
      Poset p = coxeter_choice.build(config.size_cap);
      IntPoly c = dexter::coxeter_polynomial(p);
      std::cout << p.size() << " elements\n"
                << polynomial_report(c) << "\n"
                << "roots on unit circle: "
                << (dexter::roots_on_unit_circle(c) ? "yes" : "no") << "\n";
    } else if (*zeta_cmd) {
      Poset p = zeta_choice.build(config.size_cap);
      dexter::RatPoly z = dexter::zeta_polynomial(p);
      std::cout << z.str() << "\n"
                << "Z(-1) = " << z.eval(-1).str()
                << ", Z(-2) = " << z.eval(-2).str() << "\n";
    } else if (*hpoly_cmd) {
      std::cout << dexter::colored_h_polynomial(hpoly_n).str() << "\n";
    } else if (*chains_cmd) {
      Poset p = chains_choice.build(config.size_cap);
      std::cout << "elements: " << p.size() << "\n"
                << "longest chain: " << dexter::longest_chain(p) << "\n"
                << "two-element multichains: "
                << dexter::multichain_count(p, 2).str() << "\n";
    } else if (*verify_cmd) {
      return run_verify(config, suite);
    }
  } catch (const dexter::error& failure) {
    std::cerr << "error: " << failure.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& failure) {
    std::cerr << "error: " << failure.what() << "\n";
    return 2;
  }
  return 0;
}

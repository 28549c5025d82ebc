// One line per acceptance criterion: "[PASS|FAIL] #k name: detail (time)".
// Expected rows are restated from the printed tables; values come from
// direct evaluation or brute force in this file, never from the golden
// module under test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "../oracles.hpp"
#include "jmb/catalog.hpp"
#include "jmb/pair_search.hpp"
#include "jmb/shape.hpp"
#include "jmb/tensor_search.hpp"
#include "jmb/verify.hpp"

namespace {

using jmb::Catalog;
using jmb::Characteristic;
using jmb::Nat;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Pinned tolerances.
constexpr double kAlphaTarget = 3.887;
constexpr double kAlphaTolerance = 0.001;

mpz_class fact(unsigned n) {
  mpz_class r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

mpz_class pow_z(unsigned long b, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

double ln(const mpz_class& x) {
  long e = 0;
  const double d = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string plus_block(unsigned m, unsigned t) {
  std::string s = "P" + std::to_string(m);
  if (t > 1) s += "^(" + std::to_string(t) + ")";
  return s;
}

/// Expected shape with an exact value evaluated from the shape itself.
struct Expected {
  std::string shape;
  std::optional<mpz_class> value;  // overrides direct evaluation
};

/// Compares the engine row with a printed row. Symmetric annotations are
/// resolved through pair_from_shape, and the value is the printed shape's
/// product unless given explicitly.
struct RowCheck {
  bool value_ok = false;
  bool shape_ok = false;
  mpz_class expected;
  mpz_class computed;
  std::string computed_shapes;
};

RowCheck check_row(const jmb::PairSolver& solver, unsigned n, const std::vector<Expected>& alts) {
  RowCheck out;
  const auto r = solver.result(n);
  out.computed = r.value.mpz();
  for (const auto& s : r.shapes()) {
    if (!out.computed_shapes.empty()) out.computed_shapes += "|";
    out.computed_shapes += s;
  }
  const auto shapes = r.shapes();
  for (const auto& e : alts) {
    std::string canonical = e.shape;
    mpz_class value;
    try {
      const auto pair = jmb::pair_from_shape(e.shape, solver.characteristic());
      canonical = pair.shape();
      value = jmb::pair_value(pair).mpz();
    } catch (const std::exception&) {
      if (!e.value) continue;
    }
    if (e.value) value = *e.value;
    if (value == out.computed) out.value_ok = true;
    if (std::find(shapes.begin(), shapes.end(), canonical) != shapes.end()) out.shape_ok = true;
    if (out.expected == 0) out.expected = value;
  }
  return out;
}

std::string sci(const mpz_class& v) {
  return jmb::sci_string(Nat(v)).str();
}

// 1 -------------------------------------------------------------------------
Outcome thresholds() {
  const std::map<unsigned, unsigned> want = {{2, 34},  {3, 69},  {5, 70},  {7, 71},  {11, 71},
                                             {13, 71}, {17, 71}, {19, 71}, {23, 71}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& [l, n0] : want) {
    const unsigned got = jmb::threshold(Characteristic(l)).n0;
    d << l << "->" << got << " ";
    ok = ok && got == n0;
  }
  return {ok, d.str()};
}

// 2 -------------------------------------------------------------------------
Outcome small_degree_table() {
  const std::map<unsigned, std::string> printed = {
      {7, "P4+P3"},       {8, "P4^(2)"},       {9, "P6+P3"},       {10, "P6+P4"},
      {11, "P4^(2)+P3"},  {12, "P4^(3)"},      {13, "P4^(3)+P1"},  {14, "P2^(7)"},
      {15, "P4^(3)+P3"},  {16, "P4^(4)"},      {17, "P4^(4)+P1"},  {18, "P2^(9)"},
      {19, "P4^(4)+P3"}};
  std::ostringstream d;
  unsigned bad = 0;
  for (unsigned l : {7u, 11u, 13u}) {
    jmb::PairSolver solver(Characteristic(l), 19);
    for (const auto& [n, shape] : printed) {
      const auto c = check_row(solver, n, {{shape, std::nullopt}});
      if (!c.value_ok || !c.shape_ok) {
        ++bad;
        d << "(" << n << "," << l << ") got " << c.computed_shapes << " ";
      }
    }
  }
  d << "39 rows, " << bad << " mismatched";
  return {bad == 0, d.str()};
}

// 3 -------------------------------------------------------------------------
Outcome mid_range_table() {
  unsigned rows = 0;
  unsigned bad = 0;
  std::ostringstream d;
  for (unsigned l = 7; l <= 73; ++l) {
    if (!is_prime(l)) continue;
    jmb::PairSolver solver(Characteristic(l), 70);
    for (unsigned n = 20; n <= 70; ++n) {
      const unsigned r = n / 2;
      const bool divides = (n + 2) % l == 0;
      mpz_class want;
      if (divides && ((n >= 53 && n <= 60 && n % 2 == 1) || (n >= 61 && n <= 70))) {
        want = fact(n + 2);
      } else if (n >= 63 && n % 2 == 1 && !divides) {
        want = fact(n + 1);
      } else {
        want = pow_z(60, r) * fact(r);
      }
      ++rows;
      if (solver.value(n).mpz() != want) {
        ++bad;
        if (bad <= 3) d << "(" << n << "," << l << ") ";
      }
    }
  }
  d << rows << " rows, " << bad << " mismatched";
  return {bad == 0, d.str()};
}

// 4 -------------------------------------------------------------------------
Outcome char2_table() {
  jmb::PairSolver solver(Characteristic(2), 33);
  const std::set<unsigned> exceptional = {26, 28, 29, 32};
  unsigned bad = 0;
  std::ostringstream d;
  for (unsigned n = 1; n <= 33; ++n) {
    if (exceptional.count(n)) {
      const mpz_class want = fact(n % 2 ? n + 1 : n + 2);
      if (solver.value(n).mpz() != want) {
        ++bad;
        d << "n=" << n << " ";
      }
      continue;
    }
    const unsigned r = n / 6, rem = n % 6;
    std::string shape = r ? plus_block(6, r) : "";
    std::string tail = rem == 0 ? "" : rem == 2 ? "P1^(2)" : plus_block(rem, 1);
    if (!tail.empty()) shape += (shape.empty() ? "" : "+") + tail;
    const auto c = check_row(solver, n, {{shape, std::nullopt}});
    if (!c.value_ok || !c.shape_ok) {
      ++bad;
      d << "n=" << n << " got " << c.computed_shapes << " ";
    }
  }
  d << "33 rows, " << bad << " mismatched";
  return {bad == 0, d.str()};
}

// 5 -------------------------------------------------------------------------
Outcome char3_table() {
  jmb::PairSolver solver(Characteristic(3), 68);
  const std::map<unsigned, mpz_class> expected_discrepancy = {{57, fact(57) * 60},
                                                              {65, fact(66)}};
  std::vector<unsigned> flagged;
  std::vector<std::string> fails;
  bool discrepancy_values_ok = true;
  for (unsigned n = 1; n <= 68; ++n) {
    std::vector<Expected> alts;
    const unsigned r = n / 2;
    if (n <= 4) {
      alts = {{plus_block(n, 1), std::nullopt}};
    } else if (n <= 29 && n != 22 && n != 26 && n != 27) {
      const unsigned q = n / 4, rem = n % 4;
      std::string s = plus_block(4, q);
      if (rem) s += "+" + plus_block(rem, 1);
      alts = {{s, std::nullopt}};
    } else if (n == 57) {
      alts = {{"P55+P2", std::nullopt}};
    } else if (n == 63 || n == 65) {
      alts = {{plus_block(n, 1), fact(n + 1)}};
    } else if (n >= 55 && n <= 67 && n % 3 == 1) {
      alts = {{plus_block(n, 1), fact(n + 2)}};
    } else {
      alts = {{plus_block(2, r), std::nullopt}, {plus_block(2, r) + "+P1", std::nullopt}};
    }
    const auto c = check_row(solver, n, alts);
    if (c.value_ok && c.shape_ok) continue;
    if (expected_discrepancy.count(n)) {
      flagged.push_back(n);
      if (c.computed != expected_discrepancy.at(n)) discrepancy_values_ok = false;
    } else {
      fails.push_back("n=" + std::to_string(n) + " printed " + sci(c.expected) + " computed " +
                      sci(c.computed) + " via " + c.computed_shapes);
    }
  }
  std::ostringstream d;
  d << "discrepancy rows {";
  for (std::size_t i = 0; i < flagged.size(); ++i) d << (i ? "," : "") << flagged[i];
  d << "}";
  const mpz_class f57 = solver.value(57).mpz();
  d << "; f(57,3)=" << sci(f57) << (f57 == fact(57) * 60 ? " equals" : " differs from")
    << " 57!*60=" << sci(fact(57) * 60);
  d << "; f(65,3)" << (solver.value(65).mpz() == fact(66) ? " equals" : " differs from") << " 66!";
  d << "; fail rows: " << fails.size();
  for (const auto& f : fails) d << " [" << f << "]";
  const bool pass = fails.empty() && discrepancy_values_ok &&
                    flagged == std::vector<unsigned>{57, 65};
  return {pass, d.str()};
}

// 6 -------------------------------------------------------------------------
Outcome char5_table() {
  jmb::PairSolver solver(Characteristic(5), 69);
  unsigned bad = 0;
  std::ostringstream d;
  for (unsigned n = 1; n <= 69; ++n) {
    const unsigned r = n / 3;
    std::string shape;
    std::optional<mpz_class> value;
    if (n <= 4) {
      shape = plus_block(n, 1);
    } else if (n == 5) {
      shape = "P3+P2";
    } else if (n == 8) {
      shape = "P4^(2)";
    } else if (n == 11) {
      shape = "P4^(2)+P3";
    } else if (n == 65 || n == 67) {
      shape = plus_block(n, 1);
      value = fact(n + 1);
    } else if (n == 58 || n == 68) {
      shape = plus_block(n, 1);
      value = fact(n + 2);
    } else if (n % 3 == 0) {
      shape = plus_block(3, r);
    } else if (n % 3 == 1 && n <= 31) {
      shape = "P4+" + plus_block(3, r - 1);
    } else if (n % 3 == 1) {
      shape = plus_block(3, r) + "+P1";
    } else {
      shape = plus_block(3, r) + "+P2";
    }
    const auto c = check_row(solver, n, {{shape, value}});
    if (!c.value_ok || !c.shape_ok) {
      ++bad;
      d << "n=" << n << " got " << c.computed_shapes << " ";
    }
  }
  d << "69 rows, " << bad << " mismatched";
  return {bad == 0, d.str()};
}

// 7 -------------------------------------------------------------------------
Outcome degree33_numerals() {
  const Nat f = jmb::best_pair(33, Characteristic(2)).value;
  const mpz_class direct = pow_z(6531840, 5) * 120 * 216;
  const std::string s33 = jmb::sci_string(f).str();
  const std::string s34 = jmb::sci_string(jmb::factorial(34)).str();
  const bool pass = f.mpz() == direct && s33 == "3.08e38" && s34 == "2.95e38" &&
                    f.mpz() > fact(34);
  return {pass, "sci(f(33,2))=" + s33 + " sci(34!)=" + s34 +
                    (f.mpz() > fact(34) ? " f(33,2) > 34!" : " f(33,2) <= 34!")};
}

// 8 -------------------------------------------------------------------------
Outcome power_sandwiches() {
  const mpz_class a = pow_z(2520, 19) * fact(19);
  const mpz_class b = pow_z(2520, 23) * fact(23);
  const bool first = fact(59) < a && a < fact(60);
  const bool second = fact(70) < b && b < fact(71);
  // The registry must agree with the direct computation.
  const auto report = jmb::run_registry();
  const auto* i = report.find("L33.i");
  const auto* ii = report.find("L33.ii");
  const bool registry = i && ii && i->status == jmb::Status::Pass && ii->status == jmb::Status::Pass;
  return {first && second && registry,
          std::string("59!<2520^19*19!<60! ") + (first ? "holds" : "FAILS") +
              "; 70!<2520^23*23!<71! " + (second ? "holds" : "FAILS") + "; registry " +
              (registry ? "agrees" : "disagrees")};
}

// 9 -------------------------------------------------------------------------
Outcome smooth_bound_comparison() {
  const std::vector<unsigned> chars = {2, 3, 5, 7, 11, 13, 17, 19};
  bool dominated = true;
  double worst = -1e9;
  unsigned worst_n = 0, worst_l = 0;
  std::ostringstream d;
  for (unsigned l : chars) {
    jmb::PairSolver solver(Characteristic(l), 70);
    for (unsigned n = 1; n <= 70; ++n) {
      const mpz_class f = solver.value(n).mpz();
      const mpz_class bound = n < 64 ? pow_z(n, 4) * fact(n + 2) : fact(n + 2);
      if (bound < f) {
        dominated = false;
        d << "(" << n << "," << l << ") exceeds ";
      }
      if (n >= 2 && n < 64) {
        const double alpha = (ln(f) - ln(fact(n + 2))) / std::log(static_cast<double>(n));
        if (alpha > worst) {
          worst = alpha;
          worst_n = n;
          worst_l = l;
        }
      }
    }
  }
  const auto rows = jmb::weisfeiler(70, chars);
  const auto* w = jmb::worst_alpha(rows);
  const bool engine_agrees = w && w->n == worst_n && w->l == worst_l &&
                             std::abs(w->alpha - worst) < 1e-9;
  d << "worst alpha at (" << worst_n << "," << worst_l << ") = " << std::fixed
    << std::setprecision(4) << worst << "; engine " << (engine_agrees ? "agrees" : "disagrees");
  const bool pass = dominated && worst_n == 18 && worst_l == 5 &&
                    std::abs(worst - kAlphaTarget) <= kAlphaTolerance && engine_agrees;
  return {pass, d.str()};
}

// 10 ------------------------------------------------------------------------
Outcome primitive_rows() {
  const auto report = jmb::verify_prop8();
  const auto* n9 = report.find("P8.n9.in:5");
  const bool exception_value = Catalog::paper().N_bound(9, Characteristic(5)).mpz() ==
                               2 * pow_z(2520, 2);
  const bool pass = report.ok() && report.count(jmb::Status::Pass) == report.items.size() &&
                    n9 && n9->status == jmb::Status::Pass && exception_value;
  std::ostringstream d;
  d << report.items.size() << " rows, " << report.count(jmb::Status::Fail) << " fail; (9,5) "
    << (exception_value ? "= 2*2520^2" : "!= 2*2520^2");
  return {pass, d.str()};
}

// 11 ------------------------------------------------------------------------
Outcome primitive_restatement() {
  std::vector<unsigned> primes;
  for (unsigned l = 2; l <= 73; ++l) {
    if (is_prime(l)) primes.push_back(l);
  }
  primes.push_back(79);
  unsigned checked = 0, bad = 0;
  std::ostringstream d;
  for (unsigned l : primes) {
    for (unsigned n = 2; n <= 72; ++n) {
      ++checked;
      const auto r = jmb::primitive_bound(n, Characteristic(l));
      if (r.value != Catalog::paper().N_bound(n, Characteristic(l))) {
        ++bad;
        if (bad <= 3) d << "(" << n << "," << l << ") ";
      }
    }
  }
  const auto r95 = jmb::primitive_bound(9, Characteristic(5));
  bool tie = false;
  for (const auto& c : r95.argmax) tie = tie || c.to_string() == "{(3,2)}";
  d << checked << " cells, " << bad << " mismatched; (9,5) argmax "
    << (tie ? "includes" : "lacks") << " {(3,2)}";
  return {bad == 0 && tie, d.str()};
}

// 12 ------------------------------------------------------------------------
Outcome oracle_equivalence() {
  unsigned bad = 0;
  for (unsigned l : {2u, 3u, 5u, 7u}) {
    jmb::PairSolver solver(Characteristic(l), 20);
    for (unsigned n = 1; n <= 20; ++n) {
      const auto want = oracle::brute_force_pair(n, Characteristic(l), Catalog::paper());
      if (solver.value(n).mpz() != want.value) ++bad;
    }
  }
  return {bad == 0, "80 cells, " + std::to_string(bad) + " mismatched"};
}

// 13 ------------------------------------------------------------------------
Outcome properties() {
  // category -> (count, first example)
  std::map<std::string, std::pair<unsigned, std::string>> problems;
  const auto note = [&](const std::string& category, const std::string& example) {
    auto& p = problems[category];
    if (p.first++ == 0) p.second = example;
  };
  std::size_t checks = 0;

  for (unsigned l : {2u, 3u, 5u, 7u, 11u, 13u}) {
    jmb::PairSolver solver(Characteristic(l), jmb::kMaxPairDegree);
    for (unsigned n = 1; n < jmb::kMaxPairDegree; ++n) {
      ++checks;
      if (solver.value(n + 1) < solver.value(n)) note("monotonicity", "n=" + std::to_string(n) + " l=" + std::to_string(l));
    }
    for (unsigned n = 1; n <= 100; ++n) {
      const auto r = solver.result(n);
      for (const auto& p : r.argmax) {
        unsigned symmetric = 0;
        for (const auto& b : p.blocks) {
          ++checks;
          const unsigned m = b.entry.degree;
          if (b.entry.kind == jmb::ConstituentKind::Symmetric) {
            ++symmetric;
            if (l != 2 && l != 5 && m < 53) note("symmetric subdegree >= 53", p.shape() + " l=" + std::to_string(l));
          }
          if (m == 1 && b.t > (l == 2 ? 2u : 1u)) note("trivial multiplicity", p.shape() + " l=" + std::to_string(l));
          if ((l == 3 && n <= 68) || (l == 5 && n <= 69)) {
            if (m > 4 && m <= 12) note("no subdegree in (4,12]", p.shape() + " l=" + std::to_string(l));
          }
        }
        if (symmetric > 1) note("one symmetric block", p.shape() + " l=" + std::to_string(l));
      }
    }
  }

  std::vector<unsigned> large;
  for (unsigned p = 2; p < 200; ++p) {
    if (is_prime(p)) large.push_back(p);
  }
  std::map<unsigned, jmb::PairSolver> solvers;
  for (unsigned n = 1; n <= 40; ++n) {
    std::map<Nat, std::vector<unsigned>> by_value;
    for (unsigned l : large) {
      if (l <= n + 2) continue;
      auto it = solvers.find(l);
      if (it == solvers.end()) it = solvers.emplace(l, jmb::PairSolver(Characteristic(l), 40)).first;
      ++checks;
      by_value[it->second.value(n)].push_back(l);
    }
    if (by_value.size() > 1) {
      std::string example = "n=" + std::to_string(n) + ":";
      for (const auto& [v, ls] : by_value) {
        example += " " + v.to_string() + " for l in {" + std::to_string(ls.front()) +
                   (ls.size() > 1 ? ".." + std::to_string(ls.back()) : "") + "}";
      }
      note("large-l stability", example);
    }
  }

  const auto permissive = Catalog::builtin(jmb::CatalogMode::Permissive);
  for (unsigned l : {2u, 3u, 5u, 7u, 11u}) {
    jmb::PairSolver a(Characteristic(l), 71);
    jmb::PairSolver b(Characteristic(l), 71, permissive);
    for (unsigned n = 1; n <= 71; ++n) {
      ++checks;
      if (a.value(n) != b.value(n)) {
        note("permissive invariance", "n=" + std::to_string(n) + " l=" + std::to_string(l));
      }
    }
  }

  std::ostringstream d;
  unsigned total = 0;
  for (const auto& [k, v] : problems) total += v.first;
  d << checks << " checks, " << total << " violations";
  for (const auto& [k, v] : problems) d << " [" << k << ": " << v.first << ", e.g. " << v.second << "]";
  return {problems.empty(), d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"threshold reproduction", thresholds},
      {"small-degree table, l >= 7", small_degree_table},
      {"mid-range case analysis, l >= 7", mid_range_table},
      {"characteristic 2 table", char2_table},
      {"characteristic 3 table", char3_table},
      {"characteristic 5 table", char5_table},
      {"degree 33 numerals, l = 2", degree33_numerals},
      {"2520-power sandwiches", power_sandwiches},
      {"n^4 (n+2)! comparison", smooth_bound_comparison},
      {"primitive rows vs components", primitive_rows},
      {"primitive bound restatement", primitive_restatement},
      {"DP vs brute force", oracle_equivalence},
      {"property suite", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "#" << (i + 1) << " " << criteria[i].first
              << ": " << o.detail << " (" << std::fixed << std::setprecision(2) << secs << "s)"
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}

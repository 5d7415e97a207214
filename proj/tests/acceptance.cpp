// Acceptance run: one PASS/FAIL line per criterion, details of failures on
// stderr. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/blocks.hpp"
#include "apolar/errors.hpp"
#include "apolar/random.hpp"
#include "apolar/rank.hpp"
#include "apolar/verifier.hpp"

using namespace apolar;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool passed = true;
  std::string summary;
};

const std::string* find(const std::vector<std::pair<std::string, std::string>>& kv,
                        const std::string& key) {
  for (const auto& [k, v] : kv)
    if (k == key) return &v;
  return nullptr;
}

bool pair_matches(const CheckReport& r, const std::string& key) {
  const std::string* o = find(r.observed, key);
  const std::string* e = find(r.expected, key);
  return o && e && *o == *e;
}

void report_failure(const CheckReport& r) {
  std::cerr << "  failed " << r.check_name << " on " << r.instance;
  if (!r.detail.empty()) std::cerr << " (" << r.detail << ")";
  std::cerr << "\n";
  for (const auto& [k, v] : r.observed) std::cerr << "    observed " << k << " = " << v << "\n";
  for (const auto& [k, v] : r.expected) std::cerr << "    expected " << k << " = " << v << "\n";
}

// Counts reports with the given check name; all of them must pass.
Outcome tally(const std::vector<CheckReport>& reports, const std::string& check,
              std::size_t minimum, const std::string& label) {
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.check_name != check) continue;
    if (r.skipped) {
      ++skipped;
    } else if (r.passed) {
      ++passed;
    } else {
      ++failed;
      report_failure(r);
    }
  }
  Outcome o;
  o.passed = failed == 0 && passed >= minimum;
  std::ostringstream s;
  s << label << ": " << passed << " passed, " << failed << " failed";
  if (skipped) s << ", " << skipped << " skipped";
  o.summary = s.str();
  return o;
}

// ------------------------------------------------------------ criterion 1

std::vector<CheckReport> g_monomial_reports;

void exponent_vectors(std::size_t n, unsigned max_degree,
                      const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> e(n, 1);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned used) {
    if (i == n) {
      visit(e);
      return;
    }
    const unsigned rest = static_cast<unsigned>(n - i - 1);
    for (unsigned a = 1; used + a + rest <= max_degree; ++a) {
      e[i] = a;
      rec(i + 1, used + a);
    }
  };
  rec(0, 0);
}

Outcome criterion1() {
  std::size_t total = 0, failed = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    exponent_vectors(n, 8, [&](const std::vector<unsigned>& e) {
      CheckReport r = check_monomial_rank(e);
      ++total;
      if (!pair_matches(r, "rank_lower_bound")) {
        ++failed;
        report_failure(r);
      }
      g_monomial_reports.push_back(std::move(r));
    });
  return {failed == 0 && total > 0,
          std::to_string(total) + " exponent vectors in 2-4 variables, degree <= 8, " +
              std::to_string(failed) + " mismatches"};
}

// ------------------------------------------------------------ criterion 2

Outcome criterion2() {
  CorpusConfig c;
  c.suites = {"binary"};
  c.count = 240;
  c.seed = kSeed;
  c.min_degree = 2;
  c.max_degree = 8;
  const auto reports = run_corpus(c);
  std::size_t with_witness = 0;
  for (const auto& r : reports)
    if (find(r.observed, "witness_bound")) ++with_witness;
  Outcome o = tally(reports, "binary-form", 200, "random binary forms of degree 2-8");
  o.summary += ", " + std::to_string(with_witness) + " with a rational witness attaining the rank";
  return o;
}

// --------------------------------------------------------- criteria 3 to 5

std::vector<CheckReport> g_additive_reports;

Outcome criterion3() {
  CorpusConfig c;
  c.suites = {"additive"};
  c.count = 60;
  c.seed = kSeed + 1;
  g_additive_reports = run_corpus(c);
  return tally(g_additive_reports, "additive-rank", 50,
               "certified_equal with value sum rk(F_i), m <= 3, <= 8 variables, d 2-6");
}

Outcome criterion4() {
  return tally(g_additive_reports, "claim1", 50, "dim T/(J_1 cap ... cap J_m) = sum rk - (m-1)");
}

Outcome criterion5() {
  return tally(g_additive_reports, "colon-inclusion", 50,
               "intersection of colons contained in the J intersection, every degree");
}

// ------------------------------------------------------------ criterion 6

Outcome criterion6() {
  CorpusConfig c;
  c.suites = {"cactus"};
  c.count = 40;
  c.seed = kSeed + 2;
  c.samples = 3;
  const auto reports = run_corpus(c);
  Outcome a = tally(reports, "additive-crank", 30, "two-block crank sums");
  Outcome b = tally(reports, "cactus-lemma", 30, "lemma containment/strictness/inequality");
  return {a.passed && b.passed, a.summary + "; " + b.summary};
}

// ------------------------------------------------------------ criterion 7

Outcome criterion7() {
  CorpusConfig c;
  c.suites = {"gorenstein"};
  c.count = 120;
  c.seed = kSeed + 3;
  c.min_degree = 1;
  c.max_degree = 6;
  return tally(run_corpus(c), "gorenstein", 100, "random forms in <= 3 variables, d <= 6");
}

// ------------------------------------------------------------ criterion 8

Outcome criterion8() {
  const std::vector<std::string> monomial_keys{"perp", "colon", "colon_plus_t",
                                               "perp_plus_t_top"};
  std::size_t compared = 0, failed = 0;
  for (const auto& r : g_monomial_reports)
    for (const auto& key : monomial_keys) {
      ++compared;
      if (!pair_matches(r, key)) {
        ++failed;
        report_failure(r);
      }
    }
  for (const auto& r : g_additive_reports) {
    if (r.check_name != "oracle" || r.skipped) continue;
    for (const auto& [key, value] : r.expected) {
      ++compared;
      if (!pair_matches(r, key)) {
        ++failed;
        report_failure(r);
      }
    }
  }
  return {failed == 0 && compared > 0,
          std::to_string(compared) + " monomial ideals compared with the counting oracle, " +
              std::to_string(failed) + " mismatches"};
}

// ------------------------------------------------------------ criterion 9

// G(x + a z, y + b z) for G over (x, y); t_z - a t_x - b t_y annihilates it.
Polynomial substitute(const Polynomial& g, const Ring& r3, long a, long b) {
  Polynomial lx(r3), ly(r3);
  lx.add_term(Monomial({1, 0, 0}), Rational(1));
  lx.add_term(Monomial({0, 0, 1}), Rational(a));
  ly.add_term(Monomial({0, 1, 0}), Rational(1));
  ly.add_term(Monomial({0, 0, 1}), Rational(b));
  Polynomial out(r3);
  for (const auto& [m, c] : g.terms()) {
    Polynomial term = Polynomial::constant(r3, c);
    for (unsigned k = 0; k < m[0]; ++k) term = term * lx;
    for (unsigned k = 0; k < m[1]; ++k) term = term * ly;
    out += term;
  }
  return out;
}

Outcome criterion9() {
  bool ok = true;
  std::size_t corrupted = 0;
  const Ring r2({"x", "y"});
  const Ring r3({"x", "y", "z"});
  Rng rng(kSeed + 4);
  for (int i = 0; i < 20; ++i) {
    const unsigned d = static_cast<unsigned>(rng.uniform(2, 5));
    const long a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
    const Polynomial F = substitute(random_form(r2, d, 5, rng.next()), r3, a, b);
    const LinearForm t{{Rational(-a), Rational(-b), Rational(1)}};
    if (!apply_operator(t, F).is_zero()) {
      std::cerr << "  corrupted witness does not annihilate " << F.to_string() << "\n";
      ok = false;
      continue;
    }
    const bool unit = colon_by_linear(F, t).is_unit();
    const std::size_t bound = rank_lower_bound(F, t);
    if (!unit || bound != 0) {
      std::cerr << "  corrupted witness on " << F.to_string() << ": unit=" << unit
                << " bound=" << bound << "\n";
      ok = false;
    }
    ++corrupted;
  }

  // A corrupted block witness is caught by the non-annihilation check.
  const BlockDecomposition padded = parse_blocks("x,y,u: x*y^2 ; z,w: z^3 + w^3");
  const std::vector<LinearForm> bad{LinearForm{{Rational(0), Rational(0), Rational(1),
                                                Rational(0), Rational(0)}},
                                    LinearForm{{Rational(0), Rational(0), Rational(0),
                                                Rational(1), Rational(-1)}}};
  const bool caught = !check_nonannihilation(padded, bad).passed;
  if (!caught) std::cerr << "  annihilating block witness not detected\n";

  const std::vector<std::string> overlapping{"x,y: x*y ; y,z: y*z", "a,b: a^2*b ; b: b^3",
                                             "x,y: x^3 + y^3 ; x,z: x*z^2"};
  std::size_t rejected = 0;
  for (const auto& text : overlapping) {
    const BlockDecomposition bd = parse_blocks(text);
    bool thrown = false;
    try {
      additive_rank(bd);
    } catch (const InvalidArgument&) {
      thrown = true;
    }
    if (!check_blocks(bd) && thrown) ++rejected;
  }
  ok = ok && caught && rejected == overlapping.size() && corrupted == 20;
  return {ok, std::to_string(corrupted) + " corrupted witnesses give the unit colon and bound 0; " +
                  std::to_string(rejected) + "/" + std::to_string(overlapping.size()) +
                  " overlapping decompositions rejected; annihilating witness " +
                  (caught ? "detected" : "missed")};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failures = 0;
  for (const auto& [number, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << number << ": " << o.summary
              << " [" << std::fixed << std::setprecision(1) << seconds << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "boxball/boxball.hpp"

using namespace boxball;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects mismatches for one criterion.
struct Check {
  std::vector<std::string> failures;

  template <class A, class B>
  void equal(const std::string& what, const A& actual, const B& expected) {
    if (actual == expected) return;
    std::ostringstream s;
    s << what << ": got " << actual << ", expected " << expected;
    failures.push_back(s.str());
  }
  void that(const std::string& what, bool ok) {
    if (!ok) failures.push_back(what);
  }
};

bool report(int id, const std::string& title, const Check& c, const std::string& detail) {
  const bool ok = c.failures.empty();
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << title << " (" << detail << ")\n";
  for (const auto& f : c.failures) std::cout << "    " << f << '\n';
  std::cout.flush();
  return ok;
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

void check_suite(Check& c, const VerificationReport& r) {
  if (!r.pass()) c.failures.push_back(r.suite + " n=" + std::to_string(r.n) + ": " + std::to_string(r.violation_count) + " violations, first " +
                                      (r.violations.empty() ? std::string("?") : r.violations.front().check + " at " + r.violations.front().witness));
}

bool criterion_golden() {
  Check c;
  const auto t0 = Clock::now();
  const auto w = parse_permutation("452361");
  const auto x0 = from_permutation(w);
  const auto x1 = bbs_move(x0);
  const auto x2 = bbs_move(x1);
  const auto x3 = bbs_move(x2);
  const int sst = steady_state_time(w);
  const auto sd = soliton_decomposition(w).tableau;
  const double elapsed = seconds_since(t0);
  c.equal("BB^1", x1.compact(1), "ee45e2136");
  c.equal("BB^2", x2.compact(1), "eeee452ee136");
  c.equal("BB^3", x3.compact(1), "eeeeee425eee136");
  c.equal("SST", sst, 3);
  c.equal("SD", sd, Tableau({{1, 3, 6}, {2, 5}, {4}}));
  c.that("steady only from t=3", !is_steady_state(x2) && is_steady_state(x3));
  c.that("runtime " + std::to_string(elapsed * 1e3) + " ms >= 1 ms", elapsed < 1e-3);
  return report(1, "golden trace of 452361", c, std::to_string(elapsed * 1e3) + " ms");
}

bool criterion_worked_examples() {
  Check c;
  const auto w = parse_permutation("5623714");
  const auto [p, q] = rs_insert(w);
  const auto sd = soliton_decomposition(w).tableau;
  c.equal("P(5623714)", p, Tableau({{1, 3, 4}, {2, 6, 7}, {5}}));
  c.equal("Q(5623714)", q, Tableau({{1, 2, 5}, {3, 4, 7}, {6}}));
  c.equal("SD(5623714)", sd, Tableau({{1, 3, 4}, {2, 7}, {5, 6}}));
  c.equal("incr", incr(w), 3);
  c.equal("decr", decr(w), 3);
  c.equal("localdecr", local_decr(from_permutation(w)), 3);
  c.that("SD(5623714) nonstandard", !sd.is_standard() && !is_good(w));

  c.equal("shape SD(164352879)", soliton_decomposition(parse_permutation("164352879")).tableau.shape(), Partition({5, 1, 1, 1, 1}));

  const auto pi = parse_permutation("5274163");
  c.equal("SST(5274163)", steady_state_time(pi), 1);
  c.equal("BB^1(5274163)", bbs_move(from_permutation(pi)).compact(1), "e5e72e4136");

  const auto cw = parse_permutation("63174285");
  const Tableau t({{1, 2, 5}, {3, 4, 8}, {6, 7}});
  c.equal("column word", column_reading_word(t), cw);
  c.equal("P(63174285)", insertion_tableau(cw), t);
  c.equal("Q(63174285)", recording_tableau(cw), column_superstandard(Partition({3, 3, 2})));
  c.equal("Q(63174285) literal", recording_tableau(cw), Tableau({{1, 4, 7}, {2, 5, 8}, {3, 6}}));

  const auto chain = chain_tableaux(6);
  const std::vector<std::string> invs{"425136", "453126", "351426", "361452"};
  c.equal("chain length", chain.size(), invs.size());
  for (std::size_t i = 0; i < std::min(chain.size(), invs.size()); ++i) {
    c.equal("chain involution " + std::to_string(i), chain[i].involution.to_string(), invs[i]);
    c.equal("chain SST " + std::to_string(i), steady_state_time(chain[i].involution), static_cast<int>(i));
  }
  return report(2, "worked examples", c, "5623714, 164352879, 5274163, 63174285, n=6 chain");
}

bool criterion_carrier() {
  Check c;
  const auto t0 = Clock::now();
  std::uint64_t perms = 0, gapped = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto r = verify_carrier(n, 1, 1000);
    check_suite(c, r);
    perms += r.evidence["permutations"].get<std::uint64_t>();
    gapped += r.evidence["random_gapped"].get<std::uint64_t>();
  }
  const double elapsed = seconds_since(t0);
  c.equal("permutations checked", perms, 5913u);
  c.equal("random configurations checked", gapped, 7000u);
  c.that("runtime >= 10 s", elapsed < 10.0);
  return report(3, "carrier equals BBS move", c,
                std::to_string(perms) + " permutations + " + std::to_string(gapped) + " gapped configurations, " + fmt_seconds(elapsed));
}

bool criterion_theorem_suites() {
  Check c;
  std::ostringstream detail;
  double slowest = 0.0;
  std::string slowest_name;
  for (const auto& name : suite_names()) {
    if (name == "count-good") continue;  // conjecture evidence, see criterion 5
    const auto t0 = Clock::now();
    for (int n = 1; n <= 7; ++n) check_suite(c, run_suite(name, n, 1));
    const double elapsed = seconds_since(t0);
    if (elapsed > slowest) {
      slowest = elapsed;
      slowest_name = name;
    }
    c.that(name + " took " + fmt_seconds(elapsed) + " for n <= 7", elapsed < 60.0);
  }
  // Extended ranges.
  for (int n = 8; n <= 9; ++n) check_suite(c, run_suite("involutions", n, 1));
  check_suite(c, run_suite("sst-bounds", 8, 1));
  for (int n = 5; n <= 9; ++n) {
    const auto hat = q_hat(n);
    for (const auto& p : standard_tableaux(hat.shape())) {
      const auto w = inverse_rs(p, hat);
      const int sst = steady_state_time(w);
      if (sst != n - 3) c.failures.push_back("Q-hat class member " + w.to_string() + " has SST " + std::to_string(sst));
    }
  }
  detail << "slowest " << slowest_name << " " << fmt_seconds(slowest);
  return report(4, "theorem suites at n <= 7 (extended ranges included)", c, detail.str());
}

bool criterion_conjecture_evidence() {
  Check c;
  const std::vector<std::uint64_t> expected{1, 2, 4, 9, 21, 51, 127};
  for (int n = 1; n <= 7; ++n) {
    const auto count = good_tableaux_count(n);
    c.equal("good tableaux of size " + std::to_string(n), count.good, expected[static_cast<std::size_t>(n - 1)]);
    c.equal("Motzkin(" + std::to_string(n) + ")", count.motzkin, expected[static_cast<std::size_t>(n - 1)]);
    if (n == 4) {
      c.equal("bad tableaux of size 4", count.bad.size(), 1u);
      if (!count.bad.empty()) c.equal("bad tableau", count.bad.front(), Tableau({{1, 3}, {2, 4}}));
    }
  }
  for (int n = 1; n <= 8; ++n) {
    const auto r = run_suite("patterns", n, 1);
    check_suite(c, r);
    c.equal("consecutive-closure counterexamples n=" + std::to_string(n), r.evidence["consecutive_closure_counterexamples"].get<std::uint64_t>(), 0u);
  }
  for (int n = 5; n <= 7; ++n) {
    const auto r = run_suite("sst-bounds", n, 1);
    c.equal("max SST n=" + std::to_string(n), r.evidence["global_max_sst"].get<int>(), n - 3);
    c.that("only Q-hat attains max at n=" + std::to_string(n), r.evidence["only_q_hat_attains_max"].get<bool>());
  }

  auto timed_all = [&](int n, int jobs) {
    const auto t0 = Clock::now();
    for (const auto& name : suite_names()) {
      const auto r = run_suite(name, n, jobs);
      check_suite(c, r);
      if (name == "count-good") c.that("Motzkin match n=" + std::to_string(n), r.evidence["motzkin_match"].get<bool>());
      if (name == "sst-bounds") c.that("n-3 conjecture evidence n=" + std::to_string(n), r.evidence["conjecture_n_minus_3_holds"].get<bool>());
      if (name == "patterns") c.that("consecutive closure n=" + std::to_string(n), r.evidence["consecutive_closure_holds"].get<bool>());
    }
    return seconds_since(t0);
  };
  const double t8 = timed_all(8, 1);
  c.that("n=8 took " + fmt_seconds(t8), t8 < 300.0);
  const double t9 = timed_all(9, 8);
  c.that("n=9 took " + fmt_seconds(t9), t9 < 3600.0);
  return report(5, "conjecture evidence", c, "all suites n=8 " + fmt_seconds(t8) + ", n=9 on 8 workers " + fmt_seconds(t9));
}

bool criterion_determinism() {
  Check c;
  std::size_t compared = 0;
  for (const auto& name : suite_names())
    for (int n : {6, 7}) {
      const auto a = report_json_text(run_suite(name, n, 1), false);
      const auto b = report_json_text(run_suite(name, n, 8), false);
      ++compared;
      c.that(name + " n=" + std::to_string(n) + " differs between --jobs 1 and 8", a == b);
    }
  return report(6, "reports identical for 1 and 8 workers", c, std::to_string(compared) + " report pairs");
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria{criterion_golden, criterion_worked_examples, criterion_carrier,
                                                    criterion_theorem_suites, criterion_conjecture_evidence,
                                                    criterion_determinism};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      all = criteria[i]() && all;
    } catch (const std::exception& e) {
      std::cout << "criterion " << i + 1 << ": FAIL - unexpected error: " << e.what() << '\n';
      all = false;
    }
  }
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << '\n';
  return all ? 0 : 1;
}

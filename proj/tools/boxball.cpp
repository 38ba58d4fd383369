// boxball: simulate box-ball systems on permutations, inspect RS and
// soliton tableaux, and run the verification suites.
//
// Exit codes: 0 success / all theorem checks pass, 1 theorem violation or
// steady-state cap hit, 2 usage, parse or IO error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "boxball/boxball.hpp"

namespace {

using namespace boxball;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void print_tableau(std::ostream& out, const Tableau& t) {
  std::size_t width = 1;
  for (const auto& row : t.rows())
    for (int v : row) width = std::max(width, std::to_string(v).size());
  for (const auto& row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto cell = std::to_string(row[j]);
      if (j) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
}

BbsConfiguration read_configuration(const std::string& text) {
  if (!text.empty() && text.front() == '{') return configuration_from_json(parse_json(text));
  return parse_compact_configuration(text);
}

struct SimulateArgs {
  std::string perm;
  std::string config;
  std::optional<int> steps;
  bool until_steady = false;
  std::optional<int> cap;
  std::string format = "text";
};

int run_simulate(const SimulateArgs& a) {
  if (a.perm.empty() == a.config.empty()) throw Error(ErrorCode::ParseError, "give exactly one of --perm or --config");
  if (!a.steps && !a.until_steady) throw Error(ErrorCode::ParseError, "give --steps N or --until-steady");
  BbsConfiguration x = a.perm.empty() ? read_configuration(a.config) : from_permutation(parse_permutation(a.perm));
  const auto anchor = x.first_box();
  const int cap = a.cap.value_or(default_cap(x.ball_count()));
  const bool json_out = a.format == "json";

  json trace = json::array();
  auto emit = [&](int t, const BbsConfiguration& c) {
    if (json_out)
      trace.push_back(to_json(c));
    else
      std::cout << "t=" << t << ": " << c.render(anchor) << '\n';
  };

  if (a.until_steady) {
    int t = 0;
    while (true) {
      emit(t, x);
      if (is_steady_state(x)) break;
      if (t == cap) {
        std::cerr << "CAP_EXCEEDED: no steady state within " << cap << " moves\n";
        return kExitViolation;
      }
      x = bbs_move(x);
      ++t;
    }
    if (json_out)
      std::cout << json{{"steady_at", t}, {"configuration", to_json(x)}, {"trace", trace}}.dump() << '\n';
    else
      std::cout << "steady at t=" << t << '\n';
    return kExitOk;
  }

  for (int t = 0;; ++t) {
    emit(t, x);
    if (t == *a.steps) break;
    x = bbs_move(x);
  }
  if (json_out) std::cout << to_json(x).dump() << '\n';
  return kExitOk;
}

int run_verify(const std::string& suite, int n, int jobs, const std::string& out, bool timing) {
  const auto report = run_suite(suite, n, jobs);
  if (!out.empty()) write_report(report, out, timing);
  std::cout << suite << " n=" << n << ": checked " << report.checked << ", violations " << report.violation_count
            << (report.pass() ? " (pass)" : " (FAIL)") << '\n';
  for (const auto& v : report.violations)
    std::cout << "  " << v.check << " at " << v.witness << ": expected " << v.expected << ", got " << v.actual << '\n';
  if (!report.evidence.empty()) std::cout << "evidence: " << report.evidence.dump() << '\n';
  return report.pass() ? kExitOk : kExitViolation;
}

int run_count_good(int n, int jobs, const std::string& out, bool timing) {
  const auto report = run_suite("count-good", n, jobs);
  if (!out.empty()) write_report(report, out, timing);
  const auto& e = report.evidence;
  std::cout << e["good"].get<std::uint64_t>() << " / " << e["total"].get<std::uint64_t>() << " good; Motzkin(" << n
            << ")=" << e["motzkin"].get<std::uint64_t>() << "; " << (e["motzkin_match"].get<bool>() ? "match" : "no match")
            << '\n';
  return report.pass() ? kExitOk : kExitViolation;
}

int run_chain(int n, const std::string& format) {
  const auto chain = chain_tableaux(n);
  if (format == "json") {
    json arr = json::array();
    for (const auto& link : chain) {
      const int sst = steady_state_time(link.involution);
      arr.push_back({{"tableau", to_json(link.tableau)},
                     {"expected_sst", link.expected_sst},
                     {"sst", sst},
                     {"involution", to_json(link.involution)}});
    }
    std::cout << arr.dump() << '\n';
    return kExitOk;
  }
  bool ok = true;
  std::cout << "tableau           involution  expected  sst\n";
  for (const auto& link : chain) {
    const int sst = steady_state_time(link.involution);
    ok = ok && sst == link.expected_sst;
    std::string t = link.tableau.to_string();
    std::string inv = link.involution.to_string();
    t.resize(std::max<std::size_t>(t.size(), 17), ' ');
    inv.resize(std::max<std::size_t>(inv.size(), 11), ' ');
    std::cout << t << ' ' << inv << ' ' << link.expected_sst << "         " << sst << '\n';
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Box-ball systems, Robinson-Schensted and soliton decompositions"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Evolve a permutation or configuration");
  simulate->add_option("--perm", sim.perm, "Permutation, e.g. 452361 or 4,5,2,3,6,1");
  simulate->add_option("--config", sim.config, "Configuration as JSON or compact form (e.g. 452ee136)");
  auto* steps_opt = simulate->add_option("--steps", sim.steps, "Number of moves")->check(CLI::NonNegativeNumber);
  simulate->add_flag("--until-steady", sim.until_steady, "Stop at the first steady state")->excludes(steps_opt);
  simulate->add_option("--cap", sim.cap, "Move cap for --until-steady (default 2n)")->check(CLI::PositiveNumber);
  simulate->add_option("--format", sim.format)->check(CLI::IsMember({"text", "json"}));

  std::string perm;
  std::string format = "text";
  std::optional<int> cap;
  auto* rs = app.add_subcommand("rs", "Insertion and recording tableaux");
  rs->add_option("--perm", perm)->required();
  rs->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  auto* sd = app.add_subcommand("sd", "Soliton decomposition");
  sd->add_option("--perm", perm)->required();
  sd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  sd->add_option("--cap", cap)->check(CLI::PositiveNumber);
  auto* sst = app.add_subcommand("sst", "Steady-state time");
  sst->add_option("--perm", perm)->required();
  sst->add_option("--cap", cap)->check(CLI::PositiveNumber);

  std::string suite;
  int n = 0;
  int jobs = 1;
  std::string out;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over S_n");
  verify->add_option("--suite", suite, "Suite name (see `boxball suites`)")->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "JSON report path; a .csv summary is written beside it");
  verify->add_flag("--no-timing", no_timing, "Write wall_time_s as 0 so reports are reproducible");

  auto* count_good = app.add_subcommand("count-good", "Count good standard tableaux of size n");
  count_good->add_option("--n", n)->required();
  count_good->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  count_good->add_option("--out", out);
  count_good->add_flag("--no-timing", no_timing);

  auto* chain = app.add_subcommand("chain", "Chain of tableaux with steady-state times 0..n-3");
  chain->add_option("--n", n)->required()->check(CLI::Range(5, 1000));
  chain->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  app.add_subcommand("suites", "List verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*simulate) return run_simulate(sim);
    if (*rs) {
      const auto pair = rs_insert(parse_permutation(perm));
      if (format == "json") {
        std::cout << json{{"p", to_json(pair.p)}, {"q", to_json(pair.q)}}.dump() << '\n';
      } else {
        std::cout << "P:\n";
        print_tableau(std::cout, pair.p);
        std::cout << "Q:\n";
        print_tableau(std::cout, pair.q);
      }
      return kExitOk;
    }
    if (*sd) {
      const auto w = parse_permutation(perm);
      const auto dec = soliton_decomposition(w, cap.value_or(default_cap(w.size())));
      if (format == "json")
        std::cout << to_json(dec.tableau).dump() << '\n';
      else
        print_tableau(std::cout, dec.tableau);
      return kExitOk;
    }
    if (*sst) {
      const auto w = parse_permutation(perm);
      std::cout << steady_state_time(w, cap.value_or(default_cap(w.size()))) << '\n';
      return kExitOk;
    }
    if (*verify) return run_verify(suite, n, jobs, out, !no_timing);
    if (*count_good) return run_count_good(n, jobs, out, !no_timing);
    if (*chain) return run_chain(n, format);
    for (const auto& name : suite_names()) std::cout << name << '\n';
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == ErrorCode::CapExceeded ? kExitViolation : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

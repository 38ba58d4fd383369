#pragma once

// Exhaustive verification suites. Each suite checks proven statements as
// hard assertions (violations) and records conjectural statements as
// evidence only. Results are assembled in lexicographic order, so reports
// do not depend on the worker count.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "boxball/bbs.hpp"
#include "boxball/core.hpp"
#include "boxball/enumerate.hpp"
#include "boxball/involutions.hpp"
#include "boxball/knuth.hpp"
#include "boxball/patterns.hpp"
#include "boxball/rs.hpp"

namespace boxball {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Goodness and Motzkin numbers

/// The three equivalent forms of goodness, evaluated independently.
struct Goodness {
  bool sd_standard = false;
  bool sd_equals_p = false;
  bool shapes_equal = false;

  bool consistent() const { return sd_standard == sd_equals_p && sd_equals_p == shapes_equal; }
};

inline Goodness goodness(const Permutation& w, const Tableau& sd, const Tableau& p) {
  Goodness g;
  g.sd_standard = sd.is_standard();
  g.sd_equals_p = sd == p;
  g.shapes_equal = sd.has_partition_shape() && sd.row_lengths() == p.row_lengths();
  (void)w;
  return g;
}

inline Goodness goodness(const Permutation& w) {
  return goodness(w, soliton_decomposition(w).tableau, insertion_tableau(w));
}

/// SD(w) is a standard tableau.
inline bool is_good(const Permutation& w) { return soliton_decomposition(w).tableau.is_standard(); }

/// M_0 = 1, M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}.
inline std::uint64_t motzkin(int n) {
  std::vector<std::uint64_t> m{1};
  for (int i = 0; i < n; ++i) {
    std::uint64_t next = m[static_cast<std::size_t>(i)];
    for (int k = 0; k <= i - 1; ++k) next += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(i - 1 - k)];
    m.push_back(next);
  }
  return m[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Reports

struct Violation {
  std::string check;
  std::string witness;
  std::string expected;
  std::string actual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  static constexpr std::size_t kMaxListedViolations = 100;

  std::string suite;
  int n = 0;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  ///< first kMaxListedViolations, in enumeration order
  json evidence = json::object();
  double wall_time_s = 0.0;

  static VerificationReport start(std::string suite_name, int size) {
    VerificationReport r;
    r.suite = std::move(suite_name);
    r.n = size;
    return r;
  }

  bool pass() const { return violation_count == 0; }

  void add_violation(Violation v) {
    ++violation_count;
    if (violations.size() < kMaxListedViolations) violations.push_back(std::move(v));
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline json to_json(const VerificationReport& r, bool include_timing = true) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"check", v.check}, {"witness", v.witness}, {"expected", v.expected}, {"actual", v.actual}});
  return json{{"suite", r.suite},
              {"n", r.n},
              {"checked", r.checked},
              {"pass", r.pass()},
              {"violation_count", r.violation_count},
              {"violations", std::move(violations)},
              {"evidence", r.evidence},
              {"wall_time_s", include_timing ? r.wall_time_s : 0.0}};
}

inline VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.n = j.at("n").get<int>();
    r.checked = j.at("checked").get<std::uint64_t>();
    r.violation_count = j.at("violation_count").get<std::uint64_t>();
    for (const auto& v : j.at("violations"))
      r.violations.push_back({v.at("check").get<std::string>(), v.at("witness").get<std::string>(),
                              v.at("expected").get<std::string>(), v.at("actual").get<std::string>()});
    r.evidence = j.at("evidence");
    r.wall_time_s = j.at("wall_time_s").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad report: ") + e.what());
  }
}

inline std::string report_json_text(const VerificationReport& r, bool include_timing = true) {
  return to_json(r, include_timing).dump(2) + "\n";
}

inline std::string csv_header(const std::string& suite) {
  if (suite == "count-good") return "n,total,good,motzkin,match";
  return "suite,n,checked,violations,pass,wall_time_s";
}

inline std::string csv_row(const VerificationReport& r, bool include_timing = true) {
  std::ostringstream out;
  if (r.suite == "count-good") {
    const auto& e = r.evidence;
    out << r.n << ',' << e.at("total").get<std::uint64_t>() << ',' << e.at("good").get<std::uint64_t>() << ','
        << e.at("motzkin").get<std::uint64_t>() << ',' << (e.at("motzkin_match").get<bool>() ? "true" : "false");
  } else {
    out << r.suite << ',' << r.n << ',' << r.checked << ',' << r.violation_count << ','
        << (r.pass() ? "true" : "false") << ',' << (include_timing ? r.wall_time_s : 0.0);
  }
  return out.str();
}

namespace detail {

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace detail

/// Writes the full report as JSON to `json_path` and a one-row CSV summary
/// next to it (same stem, ".csv").
inline void write_report(const VerificationReport& r, const std::filesystem::path& json_path, bool include_timing = true) {
  detail::write_text(json_path, report_json_text(r, include_timing));
  auto csv_path = json_path;
  csv_path.replace_extension(".csv");
  detail::write_text(csv_path, csv_header(r.suite) + "\n" + csv_row(r, include_timing) + "\n");
}

/// One summary row per report (suite, n); header only when `reports` is empty.
inline void write_summary_csv(std::span<const VerificationReport> reports, const std::filesystem::path& path,
                              bool include_timing = true) {
  std::string text = csv_header("") + "\n";
  for (const auto& r : reports) {
    std::ostringstream row;
    row << r.suite << ',' << r.n << ',' << r.checked << ',' << r.violation_count << ','
        << (r.pass() ? "true" : "false") << ',' << (include_timing ? r.wall_time_s : 0.0);
    text += row.str() + "\n";
  }
  detail::write_text(path, text);
}

inline VerificationReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return report_from_json(json::parse(buf.str()));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

// ---------------------------------------------------------------------------
// Shared per-permutation analysis

/// BB^0(x), ..., BB^T(x) where T = steady time + `extra`.
struct Orbit {
  std::vector<BbsConfiguration> states;
  int steady_time = 0;
};

inline Orbit orbit_until_steady(const BbsConfiguration& start, int cap, int extra = 0) {
  Orbit orbit;
  orbit.states.push_back(start);
  int t = 0;
  while (!is_steady_state(orbit.states.back())) {
    if (t == cap) throw Error(ErrorCode::CapExceeded, "no steady state within " + std::to_string(cap) + " moves");
    orbit.states.push_back(bbs_move(orbit.states.back()));
    ++t;
  }
  orbit.steady_time = t;
  for (int i = 0; i < extra; ++i) orbit.states.push_back(bbs_move(orbit.states.back()));
  return orbit;
}

inline Orbit orbit_until_steady(const Permutation& w, int extra = 0) {
  return orbit_until_steady(from_permutation(w), default_cap(w.size()), extra);
}

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Hash of the occupied boxes and configuration-array layout of each state.
inline std::uint64_t trajectory_signature(std::span<const BbsConfiguration> states) {
  std::uint64_t h = 0x12345678u;
  for (const auto& x : states) {
    h = mix(h, 0xffu);
    for (auto b : x.occupied_boxes()) h = mix(h, static_cast<std::uint64_t>(b));
    h = mix(h, 0xfeu);
    for (const auto& [shift, len] : configuration_array(x).layout()) {
      h = mix(h, static_cast<std::uint64_t>(shift));
      h = mix(h, static_cast<std::uint64_t>(len));
    }
  }
  return h;
}

inline std::string str(int v) { return std::to_string(v); }
inline std::string str(bool v) { return v ? "true" : "false"; }
inline std::string str(const std::vector<int>& v) { return "[" + join(v, ",") + "]"; }

inline Violation cap_violation(const Permutation& w, const Error& e) {
  return {"steady-state-within-cap", w.to_string(), "steady state within 2n moves", e.what()};
}

struct Record {
  std::vector<Violation> violations;
};

inline void absorb(VerificationReport& r, std::vector<Violation>& vs) {
  for (auto& v : vs) r.add_violation(std::move(v));
}

inline int max_n_from_env() {
  if (const char* env = std::getenv("BOXBALL_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "BOXBALL_MAX_N is not an integer");
    }
  }
  return 9;
}

}  // namespace detail

/// Upper bound on n for enumeration suites (env BOXBALL_MAX_N, default 9).
inline int max_enumeration_n() { return detail::max_n_from_env(); }

// ---------------------------------------------------------------------------
// Suites

/// Groups S_n by recording tableau and checks that steady-state time,
/// soliton shape, goodness and the whole trajectory layout (occupied boxes
/// and configuration-array shape at every t) are constant on each class.
/// For n <= 6 it also checks that each class is a dual Knuth class.
inline VerificationReport verify_q_invariance(int n, int jobs = 1) {
  struct PermRecord {
    Tableau q;
    int sst = -1;
    std::vector<int> sd_shape;
    bool good = false;
    std::uint64_t signature = 0;
    std::vector<Violation> violations;
  };
  auto records = map_permutations(n, jobs, [](const Permutation& w) {
    PermRecord rec;
    const auto rs = rs_insert(w);
    rec.q = rs.q;
    try {
      const auto orbit = orbit_until_steady(w, 1);
      rec.sst = orbit.steady_time;
      const Tableau sd = increasing_run_decomposition(orbit.states[static_cast<std::size_t>(orbit.steady_time)]).entries();
      rec.sd_shape = sd.row_lengths();
      const auto g = goodness(w, sd, rs.p);
      rec.good = g.sd_standard;
      if (!g.consistent())
        rec.violations.push_back({"good-equivalences", w.to_string(), "SD standard == (SD == P) == (sh SD == sh P)",
                                  detail::str(g.sd_standard) + "," + detail::str(g.sd_equals_p) + "," + detail::str(g.shapes_equal)});
      rec.signature = detail::trajectory_signature(orbit.states);
    } catch (const Error& e) {
      rec.violations.push_back(detail::cap_violation(w, e));
    }
    return rec;
  });

  auto report = VerificationReport::start("q-invariance", n);
  report.checked = records.size();
  struct ClassInfo {
    std::size_t first = 0;
    std::vector<std::size_t> members;
  };
  std::map<Tableau, ClassInfo> classes;
  const auto perms_for_small_n = n <= 6 ? all_permutations(n) : std::vector<Permutation>{};
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& rec = records[i];
    detail::absorb(report, rec.violations);
    auto [it, inserted] = classes.try_emplace(rec.q, ClassInfo{i, {}});
    it->second.members.push_back(i);
    if (inserted) continue;
    const auto& ref = records[it->second.first];
    const std::string witness = Permutation(unrank_lex(n, i)).to_string() + " vs " + Permutation(unrank_lex(n, it->second.first)).to_string();
    if (rec.sst != ref.sst) report.add_violation({"q-determines-sst", witness, detail::str(ref.sst), detail::str(rec.sst)});
    if (rec.sd_shape != ref.sd_shape)
      report.add_violation({"q-determines-sd-shape", witness, detail::str(ref.sd_shape), detail::str(rec.sd_shape)});
    if (rec.good != ref.good) report.add_violation({"q-determines-goodness", witness, detail::str(ref.good), detail::str(rec.good)});
    if (rec.signature != ref.signature)
      report.add_violation({"q-determines-dynamics", witness, "identical occupied boxes and array shapes", "differ"});
  }

  std::uint64_t good_classes = 0;
  std::size_t largest = 0;
  bool knuth_checked = false;
  for (const auto& [q, info] : classes) {
    largest = std::max(largest, info.members.size());
    if (records[info.first].good) ++good_classes;
    if (n <= 6) {
      knuth_checked = true;
      std::set<Permutation> q_class;
      for (auto idx : info.members) q_class.insert(perms_for_small_n[idx]);
      const auto knuth_class = dual_knuth_class(perms_for_small_n[info.first]);
      if (knuth_class != q_class)
        report.add_violation({"dual-knuth-class-equals-q-class", perms_for_small_n[info.first].to_string(),
                              std::to_string(q_class.size()) + " members", std::to_string(knuth_class.size()) + " members"});
    }
  }
  report.evidence = {{"classes", classes.size()},
                     {"good_classes", good_classes},
                     {"largest_class", largest},
                     {"expected_classes", involutions(n).size()},
                     {"dual_knuth_closure_checked", knuth_checked}};
  if (classes.size() != involutions(n).size())
    report.add_violation({"class-count", std::to_string(n), std::to_string(involutions(n).size()), std::to_string(classes.size())});
  return report;
}

/// The rightmost run after one move is Row_1(P), holds ball 1 and stays the
/// rightmost run; when the k rightmost solitons are formed at t=0 the next
/// one forms within one move.
inline VerificationReport verify_first_soliton(int n, int jobs = 1) {
  struct PermRecord {
    std::vector<Violation> violations;
    int formed_at_start = 0;
  };
  auto records = map_permutations(n, jobs, [](const Permutation& w) {
    PermRecord rec;
    auto& vs = rec.violations;
    const auto id = w.to_string();
    try {
      const auto orbit = orbit_until_steady(w, 1);
      const auto& states = orbit.states;
      const int sst = orbit.steady_time;
      const auto row1_p = insertion_tableau(w).row(0);
      const Tableau sd = increasing_run_decomposition(states[static_cast<std::size_t>(sst)]).entries();
      const auto first_soliton = sd.row(0);

      const auto rightmost_after_one = increasing_run_decomposition(states[1]).rows.front().entries;
      if (rightmost_after_one != row1_p)
        vs.push_back({"rightmost-run-of-bb1-is-row1-p", id, detail::str(row1_p), detail::str(rightmost_after_one)});
      if (rightmost_after_one.empty() || rightmost_after_one.front() != 1)
        vs.push_back({"first-soliton-contains-1", id, "1 in rightmost run", detail::str(rightmost_after_one)});
      if (first_soliton != row1_p) vs.push_back({"row1-sd-is-row1-p", id, detail::str(row1_p), detail::str(first_soliton)});
      for (std::size_t t = 1; t < states.size(); ++t) {
        const auto run = increasing_run_decomposition(states[t]).rows.front().entries;
        if (run != first_soliton)
          vs.push_back({"rightmost-run-stable", id + " t=" + std::to_string(t), detail::str(first_soliton), detail::str(run)});
      }

      // k = number of rightmost solitons already formed at t = 0.
      std::vector<ConfigurationArray> ids;
      for (const auto& x : states) ids.push_back(increasing_run_decomposition(x));
      std::size_t k = 0;
      while (k < sd.row_count()) {
        bool formed = true;
        for (const auto& idt : ids)
          formed = formed && k < idt.rows.size() && idt.rows[k].entries == sd.row(k);
        if (!formed) break;
        ++k;
      }
      rec.formed_at_start = static_cast<int>(k);
      if (k >= 1 && k < sd.row_count()) {
        for (std::size_t t = 1; t < ids.size(); ++t) {
          for (std::size_t r = 0; r <= k; ++r) {
            const auto got = r < ids[t].rows.size() ? ids[t].rows[r].entries : std::vector<int>{};
            if (got != sd.row(r))
              vs.push_back({"next-soliton-after-one-move", id + " t=" + std::to_string(t) + " row=" + std::to_string(r + 1),
                            detail::str(sd.row(r)), detail::str(got)});
          }
        }
      }
    } catch (const Error& e) {
      vs.push_back(detail::cap_violation(w, e));
    }
    return rec;
  });
  auto report = VerificationReport::start("first-soliton", n);
  report.checked = records.size();
  std::map<int, std::uint64_t> formed_histogram;
  for (auto& rec : records) {
    detail::absorb(report, rec.violations);
    ++formed_histogram[rec.formed_at_start];
  }
  json hist = json::object();
  for (const auto& [k, count] : formed_histogram) hist[std::to_string(k)] = count;
  report.evidence = {{"solitons_formed_at_t0_histogram", hist}};
  return report;
}

/// local_incr and local_decr are constant along each orbit (through steady
/// state plus three moves) and equal incr(w) and des(w)+1; the two
/// steady-state detectors agree on every visited configuration; steady
/// states stay steady with unchanged run decomposition.
inline VerificationReport verify_local_schensted(int n, int jobs = 1) {
  struct PermRecord {
    std::vector<Violation> violations;
    std::uint64_t configurations = 0;
  };
  auto records = map_permutations(n, jobs, [](const Permutation& w) {
    PermRecord rec;
    auto& vs = rec.violations;
    const auto id = w.to_string();
    try {
      const auto orbit = orbit_until_steady(w, 3);
      const int li = incr(w);
      const int ld = des(w) + 1;
      for (std::size_t t = 0; t < orbit.states.size(); ++t) {
        const auto& x = orbit.states[t];
        const auto where = id + " t=" + std::to_string(t);
        ++rec.configurations;
        if (local_incr(x) != li) vs.push_back({"local-incr-invariant", where, detail::str(li), detail::str(local_incr(x))});
        if (local_decr(x) != ld) vs.push_back({"local-decr-invariant", where, detail::str(ld), detail::str(local_decr(x))});
        if (local_decr(x) != static_cast<int>(increasing_runs(x).size()))
          vs.push_back({"local-decr-is-run-count", where, detail::str(static_cast<int>(increasing_runs(x).size())),
                        detail::str(local_decr(x))});
        const bool steady_ca = is_steady_state(x);
        const bool steady_id = is_steady_state_via_id(x);
        if (steady_ca != steady_id) vs.push_back({"steady-detectors-agree", where, detail::str(steady_ca), detail::str(steady_id)});
        if (t + 1 < orbit.states.size()) {
          const auto& next = orbit.states[t + 1];
          if (next.first_box() < x.first_box()) vs.push_back({"window-moves-right", where, ">= " + std::to_string(x.first_box()), std::to_string(next.first_box())});
          if (steady_ca) {
            if (!is_steady_state(next)) vs.push_back({"steady-is-absorbing", where, "true", "false"});
            if (increasing_run_decomposition(next).entries() != increasing_run_decomposition(x).entries())
              vs.push_back({"steady-id-fixed", where, increasing_run_decomposition(x).entries().to_string(),
                            increasing_run_decomposition(next).entries().to_string()});
          }
        }
      }
      const Tableau sd = increasing_run_decomposition(orbit.states[static_cast<std::size_t>(orbit.steady_time)]).entries();
      if (sd.first_row_length() != li) vs.push_back({"sd-first-row-is-incr", id, detail::str(li), detail::str(sd.first_row_length())});
      if (sd.first_column_length() != ld)
        vs.push_back({"sd-first-column-is-des-plus-1", id, detail::str(ld), detail::str(sd.first_column_length())});
      if (sd.first_column_length() < decr(w))
        vs.push_back({"sd-first-column-at-least-decr", id, ">= " + detail::str(decr(w)), detail::str(sd.first_column_length())});
    } catch (const Error& e) {
      vs.push_back(detail::cap_violation(w, e));
    }
    return rec;
  });
  auto report = VerificationReport::start("local-schensted", n);
  report.checked = records.size();
  std::uint64_t configurations = 0;
  for (auto& rec : records) {
    detail::absorb(report, rec.violations);
    configurations += rec.configurations;
  }
  report.evidence = {{"configurations_visited", configurations}};
  return report;
}

/// L-shaped soliton decomposition implies steady-state time <= 1, and
/// SD(w) is L-shaped iff incr + des >= n, with shape (incr, 1^des).
inline VerificationReport verify_l_shaped(int n, int jobs = 1) {
  struct PermRecord {
    std::vector<Violation> violations;
    bool l_shaped = false;
  };
  auto records = map_permutations(n, jobs, [n](const Permutation& w) {
    PermRecord rec;
    auto& vs = rec.violations;
    const auto id = w.to_string();
    try {
      const auto steady = reach_steady_state(from_permutation(w), default_cap(n));
      const auto sd = increasing_run_decomposition(steady.configuration).entries();
      const Partition shape = sd.shape();
      rec.l_shaped = shape.is_hook();
      const int i = incr(w);
      const int d = des(w);
      if (rec.l_shaped && steady.time > 1) vs.push_back({"l-shaped-sst-at-most-1", id, "<= 1", detail::str(steady.time)});
      if (rec.l_shaped != (i + d >= n))
        vs.push_back({"l-shaped-iff-incr-plus-des", id, detail::str(i + d >= n), detail::str(rec.l_shaped)});
      if (rec.l_shaped) {
        std::vector<int> expected{i};
        expected.insert(expected.end(), static_cast<std::size_t>(d), 1);
        if (shape.parts() != expected) vs.push_back({"l-shape-is-incr-des", id, detail::str(expected), detail::str(shape.parts())});
      }
    } catch (const Error& e) {
      vs.push_back(detail::cap_violation(w, e));
    }
    return rec;
  });
  auto report = VerificationReport::start("l-shaped", n);
  report.checked = records.size();
  std::uint64_t l_count = 0;
  for (auto& rec : records) {
    detail::absorb(report, rec.violations);
    if (rec.l_shaped) ++l_count;
  }
  report.evidence = {{"l_shaped", l_count}};
  return report;
}

/// Involution statements over all involutions of S_n: noncrossing shape
/// formula and SST <= 1, nested => noncrossing, RS shape L-shaped iff nested,
/// noncrossing good iff nested, and the folded-column involution of every
/// shape of size n.
inline VerificationReport verify_involutions(int n, int jobs = 1) {
  struct Record {
    std::vector<Violation> violations;
    bool noncrossing = false;
    bool nested = false;
    bool good = false;
  };
  const auto items = involutions(n);
  auto records = map_items(items, jobs, [n](const Permutation& w) {
    Record rec;
    auto& vs = rec.violations;
    const auto id = format_cycles(w) + " = " + w.to_string();
    try {
      rec.noncrossing = is_noncrossing(w);
      rec.nested = is_nested(w);
      const auto steady = reach_steady_state(from_permutation(w), default_cap(n));
      const auto sd = increasing_run_decomposition(steady.configuration).entries();
      const auto p = insertion_tableau(w);
      rec.good = sd.is_standard();
      if (rec.nested && !rec.noncrossing) vs.push_back({"nested-implies-noncrossing", id, "true", "false"});
      if (rec.noncrossing) {
        const auto expected = noncrossing_shape(w);
        if (!sd.has_partition_shape() || sd.shape() != expected)
          vs.push_back({"noncrossing-sd-shape", id, expected.to_string(), detail::str(sd.row_lengths())});
        if (steady.time > 1) vs.push_back({"noncrossing-sst-at-most-1", id, "<= 1", detail::str(steady.time)});
        if (rec.good != rec.nested) vs.push_back({"noncrossing-good-iff-nested", id, detail::str(rec.nested), detail::str(rec.good)});
      }
      const bool rs_hook = p.shape().is_hook();
      if (rs_hook != rec.nested) vs.push_back({"rs-l-shaped-iff-nested", id, detail::str(rec.nested), detail::str(rs_hook)});
    } catch (const Error& e) {
      vs.push_back(detail::cap_violation(w, e));
    }
    return rec;
  });

  auto report = VerificationReport::start("involutions", n);
  report.checked = records.size();
  std::uint64_t noncrossing = 0, nested = 0, good = 0;
  for (auto& rec : records) {
    detail::absorb(report, rec.violations);
    noncrossing += rec.noncrossing;
    nested += rec.nested;
    good += rec.good;
  }
  std::uint64_t shapes = 0;
  for (const auto& shape : partitions_of(n)) {
    ++shapes;
    const auto t = column_superstandard(shape);
    const auto folded = superstandard_involution(shape);
    const auto via_rs = inverse_rs(t, t);
    if (folded != via_rs)
      report.add_violation({"superstandard-involution-matches-inverse-rs", shape.to_string(), via_rs.to_string(), folded.to_string()});
    if (column_reading_word(t) != folded)
      report.add_violation({"superstandard-involution-is-column-word", shape.to_string(), column_reading_word(t).to_string(), folded.to_string()});
    if (!is_noncrossing(folded)) report.add_violation({"superstandard-involution-noncrossing", shape.to_string(), "true", "false"});
  }
  report.checked += shapes;
  report.evidence = {{"involutions", items.size()},
                     {"noncrossing", noncrossing},
                     {"nested", nested},
                     {"good_involutions", good},
                     {"motzkin", motzkin(n)},
                     {"noncrossing_equals_motzkin", noncrossing == motzkin(n)},
                     {"shapes_checked", shapes}};
  return report;
}

/// Avoiding both 2143 and 3142 classically implies good (asserted); a good
/// permutation whose consecutive window standardizes to a bad permutation
/// would refute closure under consecutive patterns (evidence only).
inline VerificationReport verify_pattern_goodness(int n, int jobs = 1) {
  // goodness tables for every smaller size, indexed by lexicographic rank
  std::vector<std::vector<char>> good_small(static_cast<std::size_t>(n));
  for (int m = 1; m < n; ++m) {
    auto table = map_permutations(m, jobs, [](const Permutation& w) -> char { return is_good(w) ? 1 : 0; });
    good_small[static_cast<std::size_t>(m)] = std::move(table);
  }
  const Permutation p2143({2, 1, 4, 3});
  const Permutation p3142({3, 1, 4, 2});
  struct PermRecord {
    std::vector<Violation> violations;
    bool good = false;
    bool avoids = false;
    std::vector<std::string> closure_counterexamples;
  };
  auto records = map_permutations(n, jobs, [&](const Permutation& w) {
    PermRecord rec;
    try {
      rec.good = is_good(w);
    } catch (const Error& e) {
      rec.violations.push_back(detail::cap_violation(w, e));
      return rec;
    }
    rec.avoids = !contains_classical(w, p2143) && !contains_classical(w, p3142);
    if (rec.avoids && !rec.good) rec.violations.push_back({"avoid-2143-3142-implies-good", w.to_string(), "good", "bad"});
    if (rec.good) {
      for (int len = 1; len < n; ++len)
        for (int start = 0; start + len <= n; ++start) {
          const std::span<const int> window(w.word().data() + start, static_cast<std::size_t>(len));
          const auto pattern = standardize(window);
          if (!good_small[static_cast<std::size_t>(len)][static_cast<std::size_t>(rank_lex(pattern.word()))])
            rec.closure_counterexamples.push_back(w.to_string() + " window " + pattern.to_string());
        }
    }
    return rec;
  });
  auto report = VerificationReport::start("patterns", n);
  report.checked = records.size();
  std::uint64_t good = 0, avoiding = 0, counterexamples = 0;
  json examples = json::array();
  for (auto& rec : records) {
    detail::absorb(report, rec.violations);
    good += rec.good;
    avoiding += rec.avoids;
    counterexamples += rec.closure_counterexamples.size();
    for (auto& c : rec.closure_counterexamples)
      if (examples.size() < 20) examples.push_back(c);
  }
  report.evidence = {{"good", good},
                     {"avoid_2143_and_3142", avoiding},
                     {"consecutive_closure_counterexamples", counterexamples},
                     {"consecutive_closure_examples", examples},
                     {"consecutive_closure_holds", counterexamples == 0}};
  return report;
}

/// Records every steady-state time in S_n. Asserts SST <= n-3 on shape
/// (n-3,2,1) classes, SST = n-3 on the class of q_hat(n), and the chain of
/// tableaux with times 0..n-3 (n >= 5). Whether only q_hat(n) attains the
/// global maximum is evidence.
inline VerificationReport verify_sst_bounds(int n, int jobs = 1) {
  struct PermRecord {
    std::vector<Violation> violations;
    int sst = -1;
    Tableau q;
  };
  auto records = map_permutations(n, jobs, [](const Permutation& w) {
    PermRecord rec;
    rec.q = recording_tableau(w);
    try {
      rec.sst = steady_state_time(w);
    } catch (const Error& e) {
      rec.violations.push_back(detail::cap_violation(w, e));
    }
    return rec;
  });
  auto report = VerificationReport::start("sst-bounds", n);
  report.checked = records.size();
  const std::vector<int> special_shape{n - 3, 2, 1};
  const std::optional<Tableau> hat = n >= 5 ? std::optional<Tableau>(q_hat(n)) : std::nullopt;
  std::map<int, std::uint64_t> histogram;
  int global_max = -1;
  std::set<Tableau> max_tableaux;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& rec = records[i];
    detail::absorb(report, rec.violations);
    if (rec.sst < 0) continue;
    ++histogram[rec.sst];
    if (rec.sst > global_max) {
      global_max = rec.sst;
      max_tableaux.clear();
    }
    if (rec.sst == global_max) max_tableaux.insert(rec.q);
    if (n >= 5 && rec.q.row_lengths() == special_shape && rec.sst > n - 3)
      report.add_violation({"shape-n-3-2-1-sst-at-most-n-3", Permutation(unrank_lex(n, i)).to_string(), "<= " + std::to_string(n - 3), std::to_string(rec.sst)});
    if (hat && rec.q == *hat && rec.sst != n - 3)
      report.add_violation({"q-hat-sst-is-n-3", Permutation(unrank_lex(n, i)).to_string(), std::to_string(n - 3), std::to_string(rec.sst)});
  }
  json chain = json::array();
  if (n >= 5) {
    for (const auto& link : chain_tableaux(n)) {
      int sst = -1;
      bool good = false;
      try {
        sst = steady_state_time(link.involution);
        good = is_good(link.involution);
      } catch (const Error& e) {
        report.add_violation(detail::cap_violation(link.involution, e));
      }
      ++report.checked;
      if (sst != link.expected_sst)
        report.add_violation({"chain-sst", link.tableau.to_string(), std::to_string(link.expected_sst), std::to_string(sst)});
      if (!good) report.add_violation({"chain-tableau-good", link.tableau.to_string(), "good", "bad"});
      chain.push_back({{"tableau", link.tableau.to_string()}, {"involution", link.involution.to_string()}, {"sst", sst}});
    }
  }
  json hist = json::object();
  for (const auto& [t, count] : histogram) hist[std::to_string(t)] = count;
  json maxers = json::array();
  for (const auto& t : max_tableaux) maxers.push_back(t.to_string());
  const bool only_hat = hat && max_tableaux.size() == 1 && *max_tableaux.begin() == *hat;
  report.evidence = {{"sst_histogram", hist},
                     {"global_max_sst", global_max},
                     {"max_attained_by", maxers},
                     {"only_q_hat_attains_max", only_hat},
                     {"max_equals_n_minus_3", n >= 5 && global_max == n - 3},
                     {"chain", chain}};
  if (n >= 5) report.evidence["conjecture_n_minus_3_holds"] = only_hat && global_max == n - 3;
  return report;
}

/// Which orientation case a configuration dual Knuth pair falls in, and the
/// step the image pair is expected to differ by.
struct KnuthImageExpectation {
  DualKnuthStep step;
  /// Balls in their expected left-to-right order in the image of `x`.
  std::vector<int> order_in_x;
};

/// For x, y = x with the step's pair swapped: the image relation and order.
inline KnuthImageExpectation expected_image_relation(const BbsConfiguration& x, const DualKnuthStep& step) {
  const int k = step.k;
  const auto pos = x.ball_positions();
  auto ordered = [&](std::vector<int> balls) {
    std::sort(balls.begin(), balls.end(), [&](int a, int b) { return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]; });
    return balls;
  };
  if (step.kind == DualKnuthKind::First) return {step, ordered({k, k + 1, k + 2})};

  const auto snapshot = bbs_move_snapshots(x)[static_cast<std::size_t>(k - 1)];
  const auto spos = snapshot.ball_positions();
  const auto lo = std::min(spos[static_cast<std::size_t>(k)], spos[static_cast<std::size_t>(k + 1)]);
  const auto hi = std::max(spos[static_cast<std::size_t>(k)], spos[static_cast<std::size_t>(k + 1)]);
  bool empty_between = false;
  for (auto b = lo + 1; b < hi; ++b) empty_between = empty_between || !snapshot.is_ball(b);
  if (empty_between) return {step, ordered({k, k + 1, k + 2})};
  // k+2 moves in front of the pair; the image differs by the first kind.
  const auto kth = ordered({k, k + 1});
  const bool k_first = kth.front() == k;
  std::vector<int> order = k_first ? std::vector<int>{k + 2, k, k + 1} : std::vector<int>{k + 1, k, k + 2};
  return {{DualKnuthKind::First, k}, order};
}

/// For every configuration on the orbits of S_n (through steady state plus
/// one move) and each configuration-level dual Knuth neighbour: the images
/// under one move are again related, with the predicted kind and ball order,
/// identical occupied boxes, equal configuration-array layout and the same
/// steady-state status.
inline VerificationReport verify_knuth_lemma(int n, int jobs = 1) {
  struct PermRecord {
    std::vector<Violation> violations;
    std::uint64_t pairs = 0;
    std::uint64_t second_to_first = 0;
  };
  auto records = map_permutations(n, jobs, [](const Permutation& w) {
    PermRecord rec;
    auto& vs = rec.violations;
    try {
      const auto orbit = orbit_until_steady(w, 1);
      for (std::size_t t = 0; t < orbit.states.size(); ++t) {
        const auto& x = orbit.states[t];
        for (const auto& [y, step] : config_dual_knuth_neighbors(x)) {
          ++rec.pairs;
          const auto where = w.to_string() + " t=" + std::to_string(t) + " " + to_string(step.kind) + " k=" + std::to_string(step.k);
          if (is_steady_state(x) != is_steady_state(y)) vs.push_back({"related-steady-together", where, detail::str(is_steady_state(x)), detail::str(is_steady_state(y))});
          if (configuration_array(x).layout() != configuration_array(y).layout())
            vs.push_back({"related-same-array-shape", where, "equal layouts", "differ"});
          const auto bx = bbs_move(x);
          const auto by = bbs_move(y);
          if (bx.occupied_boxes() != by.occupied_boxes()) {
            vs.push_back({"image-same-occupied-boxes", where, "equal", "differ"});
            continue;
          }
          const auto steps = config_dual_knuth_steps(bx, by);
          const auto expected = expected_image_relation(x, step);
          if (expected.step.kind != step.kind) ++rec.second_to_first;
          if (std::find(steps.begin(), steps.end(), expected.step) == steps.end()) {
            std::string got;
            for (const auto& s : steps) got += std::string(to_string(s.kind)) + " k=" + std::to_string(s.k) + ";";
            vs.push_back({"image-relation-kind", where, std::string(to_string(expected.step.kind)) + " k=" + std::to_string(expected.step.k),
                          got.empty() ? "unrelated" : got});
            continue;
          }
          const auto pos = bx.ball_positions();
          auto order = expected.order_in_x;
          std::vector<int> actual = order;
          std::sort(actual.begin(), actual.end(), [&](int a, int b) { return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]; });
          if (actual != order) vs.push_back({"image-ball-order", where, detail::str(order), detail::str(actual)});
        }
      }
    } catch (const Error& e) {
      vs.push_back(detail::cap_violation(w, e));
    }
    return rec;
  });
  auto report = VerificationReport::start("knuth-lemma", n);
  std::uint64_t pairs = 0, switched = 0;
  for (auto& rec : records) {
    detail::absorb(report, rec.violations);
    pairs += rec.pairs;
    switched += rec.second_to_first;
  }
  report.checked = pairs;
  report.evidence = {{"pairs", pairs}, {"second_kind_becoming_first", switched}, {"permutations", records.size()}};
  return report;
}

/// Every Bender-Knuth involution applied twice is the identity and keeps the
/// tableau standard, over all standard tableaux of size n.
inline VerificationReport verify_bender_knuth(int n, int jobs = 1) {
  const auto tableaux = standard_tableaux(n);
  auto records = map_items(tableaux, jobs, [n](const Tableau& t) {
    std::vector<Violation> vs;
    for (int i = 1; i < n; ++i) {
      const auto once = bender_knuth(t, i);
      if (!once.is_standard()) vs.push_back({"bender-knuth-standard", t.to_string() + " i=" + std::to_string(i), "standard", once.to_string()});
      const auto twice = bender_knuth(once, i);
      if (twice != t) vs.push_back({"bender-knuth-involutive", t.to_string() + " i=" + std::to_string(i), t.to_string(), twice.to_string()});
    }
    return vs;
  });
  auto report = VerificationReport::start("bender-knuth", n);
  report.checked = tableaux.size();
  for (auto& vs : records) detail::absorb(report, vs);
  report.evidence = {{"standard_tableaux", tableaux.size()}};
  return report;
}

/// Deterministic gapped configuration with n balls: a random ordering of
/// the balls with 0..max_gap empty boxes between consecutive balls.
inline BbsConfiguration random_gapped_configuration(int n, std::uint64_t& state, int max_gap = 3) {
  auto next = [&state] {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::vector<int> balls(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) balls[static_cast<std::size_t>(i)] = i + 1;
  for (std::size_t i = balls.size(); i > 1; --i) std::swap(balls[i - 1], balls[static_cast<std::size_t>(next() % i)]);
  std::vector<int> cells;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    if (i > 0) cells.insert(cells.end(), static_cast<std::size_t>(next() % static_cast<std::uint64_t>(max_gap + 1)), BbsConfiguration::kEmpty);
    cells.push_back(balls[i]);
  }
  return BbsConfiguration(1, std::move(cells));
}

/// carrier_move == bbs_move on S_n and on `random_configs` gapped
/// configurations with n balls.
inline VerificationReport verify_carrier(int n, int jobs = 1, int random_configs = 1000, std::uint64_t seed = 20221) {
  auto mismatch = [](const BbsConfiguration& x, const std::string& label) -> std::optional<Violation> {
    const auto direct = bbs_move(x);
    const auto carried = carrier_move(x);
    if (direct == carried) return std::nullopt;
    return Violation{"carrier-equals-bbs-move", label, direct.render(), carried.render()};
  };
  auto perm_records = map_permutations(n, jobs, [&](const Permutation& w) { return mismatch(from_permutation(w), w.to_string()); });
  std::vector<BbsConfiguration> gapped;
  std::uint64_t state = seed ^ static_cast<std::uint64_t>(n);
  for (int i = 0; i < random_configs; ++i) gapped.push_back(random_gapped_configuration(n, state));
  auto gap_records = map_items(gapped, jobs, [&](const BbsConfiguration& x) { return mismatch(x, x.render()); });

  auto report = VerificationReport::start("carrier", n);
  report.checked = perm_records.size() + gap_records.size();
  for (auto& r : perm_records)
    if (r) report.add_violation(*r);
  for (auto& r : gap_records)
    if (r) report.add_violation(*r);
  report.evidence = {{"permutations", perm_records.size()}, {"random_gapped", gap_records.size()}, {"seed", seed}};
  return report;
}

/// Result of counting good standard tableaux of one size.
struct GoodTableauxCount {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t good = 0;
  std::uint64_t motzkin = 0;
  bool motzkin_match = false;
  std::map<Partition, std::pair<std::uint64_t, std::uint64_t>> per_shape;  ///< shape -> (total, good)
  std::vector<Tableau> bad;
};

/// Goodness of each standard tableau T of size n, decided on the
/// representative inverse_rs(T, T) of its recording-tableau class.
inline GoodTableauxCount good_tableaux_count(int n, int jobs = 1, std::vector<Violation>* violations = nullptr) {
  const auto tableaux = standard_tableaux(n);
  struct Rec {
    bool good = false;
    std::optional<Violation> violation;
  };
  auto records = map_items(tableaux, jobs, [](const Tableau& t) {
    Rec rec;
    const auto w = inverse_rs(t, t);
    try {
      const auto g = goodness(w);
      rec.good = g.sd_standard;
      if (!g.consistent())
        rec.violation = Violation{"good-equivalences", w.to_string(), "all three agree",
                                  detail::str(g.sd_standard) + "," + detail::str(g.sd_equals_p) + "," + detail::str(g.shapes_equal)};
    } catch (const Error& e) {
      rec.violation = detail::cap_violation(w, e);
    }
    return rec;
  });
  GoodTableauxCount out;
  out.n = n;
  out.total = tableaux.size();
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    auto& [tot, good] = out.per_shape[tableaux[i].shape()];
    ++tot;
    if (records[i].good) {
      ++good;
      ++out.good;
    } else {
      out.bad.push_back(tableaux[i]);
    }
    if (records[i].violation && violations) violations->push_back(*records[i].violation);
  }
  out.motzkin = motzkin(n);
  out.motzkin_match = out.good == out.motzkin;
  return out;
}

inline VerificationReport good_count_report(int n, int jobs = 1) {
  std::vector<Violation> vs;
  const auto count = good_tableaux_count(n, jobs, &vs);
  auto report = VerificationReport::start("count-good", n);
  report.checked = count.total;
  detail::absorb(report, vs);
  json shapes = json::object();
  for (const auto& [shape, tg] : count.per_shape) shapes[shape.to_string()] = {{"total", tg.first}, {"good", tg.second}};
  json bad = json::array();
  for (const auto& t : count.bad)
    if (bad.size() < 200) bad.push_back(t.to_string());
  report.evidence = {{"total", count.total},     {"good", count.good},  {"motzkin", count.motzkin},
                     {"motzkin_match", count.motzkin_match}, {"per_shape", shapes}, {"bad_tableaux", bad},
                     {"bad_count", count.bad.size()}};
  return report;
}

// ---------------------------------------------------------------------------
// Registry

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"q-invariance", "first-soliton", "local-schensted", "l-shaped",
                                              "involutions",  "patterns",      "sst-bounds",      "knuth-lemma",
                                              "bender-knuth", "carrier",       "count-good"};
  return names;
}

/// Runs a named suite and stamps its wall time.
inline VerificationReport run_suite(const std::string& name, int n, int jobs = 1) {
  using Fn = std::function<VerificationReport(int, int)>;
  static const std::map<std::string, Fn> table{
      {"q-invariance", [](int m, int j) { return verify_q_invariance(m, j); }},
      {"first-soliton", [](int m, int j) { return verify_first_soliton(m, j); }},
      {"local-schensted", [](int m, int j) { return verify_local_schensted(m, j); }},
      {"l-shaped", [](int m, int j) { return verify_l_shaped(m, j); }},
      {"involutions", [](int m, int j) { return verify_involutions(m, j); }},
      {"patterns", [](int m, int j) { return verify_pattern_goodness(m, j); }},
      {"sst-bounds", [](int m, int j) { return verify_sst_bounds(m, j); }},
      {"knuth-lemma", [](int m, int j) { return verify_knuth_lemma(m, j); }},
      {"bender-knuth", [](int m, int j) { return verify_bender_knuth(m, j); }},
      {"carrier", [](int m, int j) { return verify_carrier(m, j); }},
      {"count-good", [](int m, int j) { return good_count_report(m, j); }},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::UnknownSuite, "no suite named '" + name + "'");
  if (n < 1 || n > max_enumeration_n())
    throw Error(ErrorCode::OutOfRangeValue, "n=" + std::to_string(n) + " outside 1.." + std::to_string(max_enumeration_n()) + " (BOXBALL_MAX_N)");
  const auto start = std::chrono::steady_clock::now();
  auto report = it->second(n, jobs);
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace boxball

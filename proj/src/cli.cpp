#include "farey/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "farey/approximation.hpp"
#include "farey/decimal.hpp"
#include "farey/frequency.hpp"
#include "farey/geometry.hpp"
#include "farey/io.hpp"

namespace farey::cli {

namespace {

using io::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct Common {
  std::string format;
  std::string output;
};

struct CensusArgs {
  std::uint64_t kappa = 0;
  std::size_t top = 0;
  bool table1 = false;
  bool table2 = false;
  bool oracle = false;
  unsigned workers = 0;
};

struct ApproxArgs {
  std::string target;
  std::string epsilon;
  std::string method = "both";
  bool fast = false;
  std::uint64_t max_loops = ApproximationOptions{}.max_loops;
};

struct CompareArgs {
  std::string target;
  std::string epsilon = "1e-12";
  std::size_t fuzz = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_q = 500;
  std::uint64_t max_loops = ApproximationOptions{}.max_loops;
};

struct ColinearArgs {
  std::uint64_t kappa = 0;
  std::string anchor = "0";
  std::uint64_t min_level = 0;
  std::uint64_t max_level = 0;
};

struct FibArgs {
  std::string seed = "0/1,1/1";
  std::size_t steps = 0;
};

struct ExtendedArgs {
  std::uint64_t kappa = 0;
  std::size_t top = 0;
  unsigned workers = 0;
};

Format pick_format(const std::string& requested, Format fallback) {
  if (requested.empty()) return fallback;
  return requested == "json" ? Format::json : Format::csv;
}

std::uint64_t max_kappa_from_env() {
  const char* raw = std::getenv("MEDIANT_MAX_KAPPA");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxKappa;
  std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 18) {
    throw UsageError("MEDIANT_MAX_KAPPA must be a positive integer, got '" + text + "'");
  }
  return std::stoull(text);
}

// Table conventions: RNF as "1/q", except plain "1" for q = 1.
std::string rnf_label(const Fraction& f) { return f.den() == 1 ? "1" : "1/" + f.den().str(); }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::vector<FrequencyRecord> materialize(const Census& census, std::span<const CensusEntry> entries) {
  std::vector<FrequencyRecord> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(census.record(e));
  return out;
}

void emit_records(std::ostream& out, Format format, std::uint64_t kappa, const std::vector<FrequencyRecord>& rows,
                  json extra = json::object()) {
  if (format == Format::json) {
    json j = io::census_json(kappa, rows);
    for (auto& [k, v] : extra.items()) j[k] = v;
    print_json(out, j);
    return;
  }
  io::write_census_csv_header(out);
  for (const auto& r : rows) io::write_census_csv_row(out, r);
}

// Highest RNF first, ties by value; stable on an already value-sorted input.
std::vector<CensusEntry> rank_by_rnf(std::span<const CensusEntry> entries, TrialMode mode, std::size_t top) {
  std::vector<CensusEntry> ranked(entries.begin(), entries.end());
  auto height = [mode](const Fraction& f) -> const BigInt& {
    return mode == TrialMode::standard ? f.den() : std::max(f.num(), f.den());
  };
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const CensusEntry& a, const CensusEntry& b) { return height(a.fraction) < height(b.fraction); });
  if (top != 0 && ranked.size() > top) ranked.resize(top);
  return ranked;
}

void run_census(const CensusArgs& a, Format format, std::ostream& out) {
  const std::uint64_t k = a.kappa;
  if (a.table1) {
    const std::size_t rows = a.top == 0 ? 4 : a.top;
    if (rows > k) throw UsageError("--top exceeds kappa for --table1");
    json j = json::array();
    if (format == Format::csv) out << "kappa,p,q,P_x100\n";
    for (std::uint64_t q = 1; q <= rows; ++q) {
      const Fraction f(BigInt(1), BigInt(q));
      const std::string pct = to_fixed(percentage(f, k) * 100, 4);
      if (format == Format::csv) {
        out << k << ",1," << q << ',' << pct << '\n';
      } else {
        j.push_back({{"kappa", k}, {"p", 1}, {"q", q}, {"percent", pct}});
      }
    }
    if (format == Format::json) print_json(out, j);
    return;
  }
  if (a.table2) {
    const auto entries = top_by_rnf(k, a.top == 0 ? 33 : a.top);
    json j = json::array();
    if (format == Format::csv) out << "p,q,T,RNF\n";
    for (const auto& e : entries) {
      if (format == Format::csv) {
        out << e.fraction.num() << ',' << e.fraction.den() << ',' << e.t << ',' << rnf_label(e.fraction) << '\n';
      } else {
        j.push_back({{"p", e.fraction.num().str()}, {"q", e.fraction.den().str()}, {"t", e.t},
                     {"rnf", rnf_label(e.fraction)}});
      }
    }
    if (format == Format::json) print_json(out, j);
    return;
  }

  if (a.oracle) {
    const auto census = enumerate_trial(k, {max_kappa_from_env(), a.workers});
    const auto ranked = a.top == 0 ? std::vector<CensusEntry>(census.entries().begin(), census.entries().end())
                                   : rank_by_rnf(census.entries(), census.mode(), a.top);
    emit_records(out, format, k, materialize(census, ranked));
    return;
  }
  if (a.top != 0) {
    const Census census(k, TrialMode::standard, top_by_rnf(k, a.top));
    emit_records(out, format, k, materialize(census, census.entries()));
    return;
  }
  if (format == Format::json) {
    const auto census = census_closed_form(k);
    emit_records(out, format, k, materialize(census, census.entries()));
    return;
  }
  // Plain CSV streams straight off the Farey walk.
  const Census shell(k, TrialMode::standard, {});
  io::write_census_csv_header(out);
  for_each_farey(k, [&](std::uint64_t p, std::uint64_t q) {
    io::write_census_csv_row(out, shell.record({Fraction(BigInt(p), BigInt(q)), k / q}));
  });
}

void run_farey(std::uint64_t order, Format format, std::ostream& out) {
  const auto seq = farey_sequence(order);
  if (format == Format::json) {
    json j = json::array();
    for (const auto& f : seq) j.push_back(f.to_string());
    print_json(out, j);
    return;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i].to_string();
  out << '\n';
}

void write_track_csv(std::ostream& out, const ApproximationTrack& t) {
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    out << io::method_name(t.method) << ',' << i + 1 << ',' << t.steps[i].to_string() << ','
        << to_general(t.steps[i].value(), io::kCsvDigits) << '\n';
  }
}

void run_approx(const ApproxArgs& a, Format format, std::ostream& out) {
  const Target target = Target::parse(a.target, a.epsilon);
  ApproximationOptions options;
  options.max_loops = a.max_loops;
  options.fast_division = a.fast;

  std::optional<ApproximationTrack> farey;
  std::optional<CFResult> cf;
  if (a.method == "farey" || a.method == "both") farey = farey_approximate(target, options);
  if (a.method == "cf" || a.method == "both") cf = cf_expand(target, options);

  if (format == Format::json) {
    json tracks = json::array();
    if (farey) tracks.push_back(io::track_json(*farey, target));
    if (cf) tracks.push_back(io::track_json(cf->track, target, &cf->expansion));
    print_json(out, tracks.size() == 1 ? tracks[0] : tracks);
    return;
  }
  out << "method,index,fraction,x\n";
  if (farey) write_track_csv(out, *farey);
  if (cf) write_track_csv(out, cf->track);
}

void run_compare(const CompareArgs& a, Format format, std::ostream& out) {
  ApproximationOptions options;
  options.max_loops = a.max_loops;
  if (a.fuzz > 0) {
    if (!a.target.empty()) throw UsageError("--target and --fuzz are mutually exclusive");
    const Rational eps = parse_decimal(a.epsilon, true);
    if (eps <= 0) throw UsageError("epsilon must be positive");
    const auto s = fuzz_compare(a.fuzz, a.max_q, eps, a.seed, options);
    json j{{"targets", s.targets},
           {"seed", a.seed},
           {"max_q", a.max_q},
           {"epsilon", to_ratio_string(eps)},
           {"subsequence_failures", s.subsequence_failures},
           {"increment_mismatches", s.increment_mismatches},
           {"inexact_endings", s.inexact_endings},
           {"min_loop_difference", s.min_loop_difference},
           {"max_loop_difference", s.max_loop_difference}};
    if (format == Format::json) {
      print_json(out, j);
    } else {
      out << "targets,subsequence_failures,increment_mismatches,inexact_endings,min_loop_difference,"
             "max_loop_difference\n"
          << s.targets << ',' << s.subsequence_failures << ',' << s.increment_mismatches << ','
          << s.inexact_endings << ',' << s.min_loop_difference << ',' << s.max_loop_difference << '\n';
    }
    return;
  }
  if (a.target.empty()) throw UsageError("compare needs --target or --fuzz");
  const Target target = Target::parse(a.target, a.epsilon);
  const auto report = compare_tracks(target, options);
  if (format == Format::json) {
    print_json(out, io::report_json(report, target));
    return;
  }
  out << "convergents_in_farey,all_convergents_in_farey,increments_match_farey,farey_loop,cf_loop,"
         "loop_difference,farey_error,cf_error\n"
      << report.convergents_in_farey << ',' << report.all_convergents_in_farey << ','
      << report.increments_match_farey << ',' << report.farey.loop_count << ',' << report.cf.track.loop_count
      << ',' << report.loop_difference << ',' << to_general(report.farey_error, io::kCsvDigits) << ','
      << to_general(report.cf_error, io::kCsvDigits) << '\n';
}

Anchor parse_anchor(const std::string& s) {
  if (s == "0" || s == "0,0") return Anchor::origin();
  if (s == "1" || s == "1,1") return Anchor::unit();
  throw UsageError("--anchor must be 0,0 or 1,1");
}

void run_colinear(const ColinearArgs& a, Format format, std::ostream& out) {
  const Anchor anchor = parse_anchor(a.anchor);
  std::vector<LineGroup> groups;
  if (a.min_level != 0 || a.max_level != 0) {
    const std::uint64_t last = a.max_level == 0 ? a.kappa : a.max_level;
    groups = sub_category(anchor, a.kappa, a.min_level == 0 ? 1 : a.min_level, last).groups;
  } else if (anchor == Anchor::origin()) {
    groups = classify_category_a(a.kappa).groups;
  } else {
    groups = classify_category_b(a.kappa).groups;
  }
  if (format == Format::json) {
    json j = json::array();
    for (const auto& g : groups) j.push_back(io::line_group_json(g));
    print_json(out, j);
    return;
  }
  out << "anchor,slope,fraction,x,y\n";
  for (const auto& g : groups) {
    const std::string anchor_label = anchor == Anchor::origin() ? "0,0" : "1,1";
    for (const auto& m : g.members) {
      out << '"' << anchor_label << "\"," << to_ratio_string(g.slope) << ',' << m.source.to_string() << ','
          << to_ratio_string(m.x) << ',' << to_ratio_string(m.y) << '\n';
    }
  }
}

void run_fib(const FibArgs& a, Format format, std::ostream& out) {
  const auto comma = a.seed.find(',');
  if (comma == std::string::npos) throw UsageError("--seed must look like lo,hi (e.g. 0/1,1/1)");
  const NeighbourPair seed(Fraction::parse(a.seed.substr(0, comma)), Fraction::parse(a.seed.substr(comma + 1)));
  const auto track = fibonacci_lucas_track(seed, a.steps);
  if (format == Format::json) {
    json j = json::array();
    for (const auto& f : track) j.push_back(f.to_string());
    print_json(out, j);
    return;
  }
  out << "index,fraction,p,q\n";
  for (std::size_t i = 0; i < track.size(); ++i) {
    out << i << ',' << track[i].to_string() << ',' << track[i].num() << ',' << track[i].den() << '\n';
  }
}

void run_extended(const ExtendedArgs& a, Format format, std::ostream& out) {
  const auto census = extended_trial(a.kappa, {max_kappa_from_env(), a.workers});
  const auto ranked = a.top == 0 ? std::vector<CensusEntry>(census.entries().begin(), census.entries().end())
                                 : rank_by_rnf(census.entries(), census.mode(), a.top);
  json extra{{"distinct", census.size()}, {"total", census.total_count().str()}};
  emit_records(out, format, a.kappa, materialize(census, ranked), extra);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact census, Farey and continued-fraction tools for rationals on [0, 1]", "mediant"};
  app.require_subcommand(1);
  app.fallthrough(false);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", common.output, "Write to this file instead of stdout");
  };
  auto positive = CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max());

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "Frequency census of reduced fractions on [0, 1]");
  census_cmd->add_option("--kappa,-k", census.kappa, "Largest denominator")->required()->check(positive);
  census_cmd->add_option("--top", census.top, "Keep the N highest-RNF records");
  auto* t1 = census_cmd->add_flag("--table1", census.table1, "Percentages (x100, 4 decimals) of 1/1..1/N");
  auto* t2 = census_cmd->add_flag("--table2", census.table2, "Top N (default 33) by RNF with T and 1/q");
  t1->excludes(t2);
  census_cmd->add_flag("--oracle", census.oracle, "Use brute-force enumeration instead of the closed form");
  census_cmd->add_option("--workers", census.workers, "Enumeration threads (0 = all cores)");
  add_common(census_cmd);

  std::uint64_t order = 0;
  auto* farey_cmd = app.add_subcommand("farey", "List the Farey sequence F_n");
  farey_cmd->add_option("--order,-n", order, "Order n")->required()->check(positive);
  add_common(farey_cmd);

  ApproxArgs approx;
  auto* approx_cmd = app.add_subcommand("approx", "Approximate a target by mediants and/or continued fraction");
  approx_cmd->add_option("--target", approx.target, "Decimal or p/q in [0, 1]")->required();
  approx_cmd->add_option("--epsilon", approx.epsilon, "Tolerance, e.g. 0.0001 or 1e-4")->required();
  approx_cmd->add_option("--method", approx.method)->check(CLI::IsMember({"farey", "cf", "both"}));
  approx_cmd->add_flag("--fast", approx.fast, "Division instead of repeated subtraction for cf");
  approx_cmd->add_option("--max-loops", approx.max_loops)->check(positive);
  add_common(approx_cmd);

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Compare the two approximation tracks");
  compare_cmd->add_option("--target", compare.target, "Decimal or p/q in (0, 1)");
  compare_cmd->add_option("--epsilon", compare.epsilon, "Tolerance");
  compare_cmd->add_option("--fuzz", compare.fuzz, "Number of random reduced targets");
  compare_cmd->add_option("--seed", compare.seed, "RNG seed for --fuzz");
  compare_cmd->add_option("--max-q", compare.max_q, "Largest random denominator")->check(CLI::Range(2, 1 << 30));
  compare_cmd->add_option("--max-loops", compare.max_loops)->check(positive);
  add_common(compare_cmd);

  ColinearArgs colinear;
  auto* colinear_cmd = app.add_subcommand("colinear", "Collinear groups through (0,0) or (1,1)");
  colinear_cmd->add_option("--kappa,-k", colinear.kappa)->required()->check(positive);
  colinear_cmd->add_option("--anchor", colinear.anchor, "0,0 or 1,1");
  colinear_cmd->add_option("--min-level", colinear.min_level, "Restrict to denominators >= this");
  colinear_cmd->add_option("--max-level", colinear.max_level, "Restrict to denominators <= this");
  add_common(colinear_cmd);

  FibArgs fib;
  auto* fib_cmd = app.add_subcommand("fib", "Zigzag mediant (Fibonacci-Lucas) track");
  fib_cmd->add_option("--seed", fib.seed, "Neighbour pair lo,hi");
  fib_cmd->add_option("--steps", fib.steps)->required()->check(positive);
  add_common(fib_cmd);

  ExtendedArgs extended;
  auto* extended_cmd = app.add_subcommand("extended", "Census over [0, kappa] by enumeration");
  extended_cmd->add_option("--kappa,-k", extended.kappa)->required()->check(positive);
  extended_cmd->add_option("--top", extended.top, "Keep the N highest-RNF records");
  extended_cmd->add_option("--workers", extended.workers, "Enumeration threads (0 = all cores)");
  add_common(extended_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!common.output.empty()) {
    file.open(common.output);
    if (!file) {
      err << "error: cannot open " << common.output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = common.output.empty() ? out : file;

  try {
    if (census_cmd->parsed()) run_census(census, pick_format(common.format, Format::csv), sink);
    if (farey_cmd->parsed()) run_farey(order, pick_format(common.format, Format::csv), sink);
    if (approx_cmd->parsed()) run_approx(approx, pick_format(common.format, Format::json), sink);
    if (compare_cmd->parsed()) run_compare(compare, pick_format(common.format, Format::json), sink);
    if (colinear_cmd->parsed()) run_colinear(colinear, pick_format(common.format, Format::json), sink);
    if (fib_cmd->parsed()) run_fib(fib, pick_format(common.format, Format::csv), sink);
    if (extended_cmd->parsed()) run_extended(extended, pick_format(common.format, Format::csv), sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ApproximationError& e) {
    err << "error: " << e.what() << '\n';
    const auto& partial = e.partial();
    err << "partial " << io::method_name(partial.method) << " track (loop " << partial.loop_count << "):";
    for (const auto& f : partial.steps) err << ' ' << f.to_string();
    err << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace farey::cli

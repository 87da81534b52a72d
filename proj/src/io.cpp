#include "farey/io.hpp"

#include "farey/decimal.hpp"

namespace farey::io {

namespace {

json big(const BigInt& n) {
  if (n <= std::numeric_limits<std::int64_t>::max()) return n.convert_to<std::int64_t>();
  return n.str();
}

json fraction_list(const std::vector<Fraction>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

}  // namespace

const char* method_name(Method m) { return m == Method::farey ? "farey" : "cf"; }

void write_census_csv_header(std::ostream& out) { out << kCensusCsvHeader << '\n'; }

void write_census_csv_row(std::ostream& out, const FrequencyRecord& r) {
  out << r.fraction.num() << ',' << r.fraction.den() << ',' << to_general(r.fraction.value(), kCsvDigits) << ','
      << r.t << ',' << to_general(r.p_pct, kCsvDigits) << ','
      << (r.t_norm ? to_general(*r.t_norm, kCsvDigits) : std::string()) << ',' << to_general(r.rnf, kCsvDigits)
      << '\n';
}

json record_json(const FrequencyRecord& r) {
  return json{{"p", big(r.fraction.num())},
              {"q", big(r.fraction.den())},
              {"t", r.t},
              {"p_pct", to_ratio_string(r.p_pct)},
              {"t_norm", r.t_norm ? json(to_ratio_string(*r.t_norm)) : json(nullptr)},
              {"rnf", to_ratio_string(r.rnf)}};
}

json census_json(std::uint64_t kappa, std::span<const FrequencyRecord> records) {
  json rows = json::array();
  for (const auto& r : records) rows.push_back(record_json(r));
  return json{{"kappa", kappa}, {"records", std::move(rows)}};
}

json track_json(const ApproximationTrack& track, const Target& target, const CFExpansion* expansion) {
  json out{{"method", method_name(track.method)},
           {"target", to_ratio_string(target.value)},
           {"epsilon", to_ratio_string(target.epsilon)},
           {"steps", fraction_list(track.steps)}};
  if (expansion != nullptr) {
    json coefficients = json::array();
    for (const auto& a : expansion->coefficients) coefficients.push_back(big(a));
    out["coefficients"] = std::move(coefficients);
  }
  out["loop"] = track.loop_count;
  return out;
}

json line_group_json(const LineGroup& g) {
  json members = json::array();
  for (const auto& m : g.members) {
    members.push_back(
        {{"fraction", m.source.to_string()}, {"x", to_ratio_string(m.x)}, {"y", to_ratio_string(m.y)}});
  }
  return json{{"anchor", {big(numerator(g.anchor.x)), big(numerator(g.anchor.y))}},
              {"slope", to_ratio_string(g.slope)},
              {"members", std::move(members)}};
}

json report_json(const EquivalenceReport& report, const Target& target) {
  return json{{"target", to_ratio_string(target.value)},
              {"epsilon", to_ratio_string(target.epsilon)},
              {"farey", track_json(report.farey, target)},
              {"cf", track_json(report.cf.track, target, &report.cf.expansion)},
              {"convergents_in_farey", report.convergents_in_farey},
              {"all_convergents_in_farey", report.all_convergents_in_farey},
              {"convergents_beyond_horizon", report.convergents_beyond_horizon},
              {"increments_match_farey", report.increments_match_farey},
              {"farey_loop", report.farey.loop_count},
              {"cf_loop", report.cf.track.loop_count},
              {"loop_difference", report.loop_difference},
              {"farey_error", to_ratio_string(report.farey_error)},
              {"cf_error", to_ratio_string(report.cf_error)}};
}

}  // namespace farey::io

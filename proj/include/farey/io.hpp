#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "json.hpp"
#include "farey/approximation.hpp"
#include "farey/frequency.hpp"
#include "farey/geometry.hpp"

namespace farey::io {

using nlohmann::json;

inline constexpr const char* kCensusCsvHeader = "p,q,x,T,P,Tnorm,RNF";

/// Significant digits used for every decimal in census CSV output.
inline constexpr unsigned kCsvDigits = 12;

void write_census_csv_header(std::ostream& out);
void write_census_csv_row(std::ostream& out, const FrequencyRecord& r);

json record_json(const FrequencyRecord& r);

/// {"kappa": ..., "records": [...]}
json census_json(std::uint64_t kappa, std::span<const FrequencyRecord> records);

json track_json(const ApproximationTrack& track, const Target& target, const CFExpansion* expansion = nullptr);

json line_group_json(const LineGroup& g);

json report_json(const EquivalenceReport& report, const Target& target);

const char* method_name(Method m);

}  // namespace farey::io

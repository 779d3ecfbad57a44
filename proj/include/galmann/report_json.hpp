#ifndef GALMANN_REPORT_JSON_HPP
#define GALMANN_REPORT_JSON_HPP

#include "json.hpp"

#include "galmann/curve.hpp"
#include "galmann/frames.hpp"
#include "galmann/mannheim.hpp"

namespace galmann {

using Json = nlohmann::ordered_json;

Json to_json(const InvariantSample& sample);
Json to_json(const FrenetSample& sample);
Json to_json(const FrenetResidualRow& row);
Json to_json(const MannheimReport& report);
Json to_json(const PairReport& report);
Json to_json(const OdeReport& report);
Json to_json(const ClosedFormReport& report);
Json to_json(const HelixReport& report);

/// Compact description of a curve for report envelopes (never the full
/// sample table; tables go to CSV).
Json curve_summary(const Curve& curve);

} // namespace galmann

#endif

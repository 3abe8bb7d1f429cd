#pragma once

#include <json.hpp>

#include "ppforge/asymptotics.hpp"
#include "ppforge/repsearch.hpp"
#include "ppforge/series.hpp"

namespace ppforge::cli {

using json = nlohmann::json;

// Arbitrary-precision quantities are serialized as strings.
json to_json(const series::SeriesValue& v);
json to_json(const series::ClosedForm& cf, long check_digits, const HiReal& closed_value,
             const HiReal& direct_value);
json to_json(const series::TwoTermIdentity& id);
json to_json(const asym::GrowthFit& fit, const std::string& expression);
json to_json(const repsearch::Representation& rep);
json to_json(const repsearch::AppendixReport& rep);

}  // namespace ppforge::cli

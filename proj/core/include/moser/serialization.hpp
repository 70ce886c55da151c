#pragma once

// JSON and CSV forms of profiles, samples and reports.
//
// Profiles: {"t_support": T, "knots": [[s, v], [s, v, "jump"], ...]}.
// Doubles are written as shortest round-trip decimals, so a profile
// survives dump/parse bit for bit. Non-finite numbers become the strings
// "inf", "-inf" and "nan".

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "moser/equivalence.hpp"
#include "moser/inequalities.hpp"
#include "moser/optimizer.hpp"
#include "moser/profile.hpp"
#include "moser/rearrangement.hpp"

namespace moser {

nlohmann::json number(double x);

nlohmann::json to_json(const RadialProfile& p);
/// Throws error(parse_error) on malformed input, error(invalid_profile) on bad knots.
RadialProfile profile_from_json(const nlohmann::json& j);
std::string dump_profile(const RadialProfile& p);
RadialProfile parse_profile(std::string_view text);

/// Rows "value,area"; blank lines and lines starting with '#' are skipped,
/// as is a first row that does not parse as numbers (a header).
WeightedSamples parse_samples_csv(std::istream& in);

/// "%.17g" in the C locale.
std::string format_double(double x);

nlohmann::json to_json(const FunctionalReport& r);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const QuasiNorm& q);
nlohmann::json to_json(const EquivalenceTrace& t);
nlohmann::json to_json(const OptimizationResult& r);

}  // namespace moser

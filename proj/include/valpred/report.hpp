#pragma once
// JSON and TSV serialization for poll input and analysis reports.

#include "valpred/outcome_model.hpp"
#include "valpred/plausibility.hpp"
#include "valpred/prediction.hpp"
#include "valpred/validity.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace valpred {

using Json = nlohmann::json;

// Round to `digits` decimals, ties to even.
double round_half_even(double value, int digits);

// Parses {"n": int, "counts": {label: int, ...}, "nonresponse": int}.
// Throws InputError on malformed input or when the counts identity fails.
PollData parse_poll(const Json& j);
PollData parse_poll_text(std::string_view text);
PollData load_poll(const std::string& path);

Json to_json(const PollData& poll);
Json to_json(const PredictionSet& set);
// {outcome: {upper, lower, dont_know}}, rounded to 6 decimals.
Json to_json(const PlausibilityAssignment& assignment);
Json to_json(const ValidityReport& report);
Json to_json(const EnsembleValidityReport& report);
Json to_json(const MonteCarloEstimate& estimate);

// Shortest decimal text that round-trips the double.
std::string format_double(double v);

void write_curve_tsv(std::ostream& os, const MiscoverageCurve& curve);
// (theta_hat, pi(target)) on `points` equally spaced values in [0, 1].
void write_logistic_tsv(std::ostream& os, double lambda, std::size_t points = 1001);

} // namespace valpred

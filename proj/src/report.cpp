#include "valpred/report.hpp"

#include "valpred/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace valpred {

double round_half_even(double value, int digits)
{
    // nearbyint honours the default FE_TONEAREST mode: ties go to even.
    const double scale = std::pow(10.0, digits);
    return std::nearbyint(value * scale) / scale;
}

namespace {

std::int64_t require_count(const Json& j, const char* key)
{
    if (!j.contains(key)) {
        throw InputError(std::string("poll is missing \"") + key + "\"");
    }
    const auto& v = j.at(key);
    if (!v.is_number_integer()) {
        throw InputError(std::string("poll field \"") + key + "\" must be an integer");
    }
    return v.get<std::int64_t>();
}

} // namespace

PollData parse_poll(const Json& j)
{
    if (!j.is_object()) {
        throw InputError("poll must be a JSON object");
    }
    for (const auto& [key, _] : j.items()) {
        if (key != "n" && key != "counts" && key != "nonresponse") {
            throw InputError("unexpected poll field \"" + key + "\"");
        }
    }
    PollData poll;
    poll.n = require_count(j, "n");
    poll.nonresponse = require_count(j, "nonresponse");
    if (!j.contains("counts") || !j.at("counts").is_object()) {
        throw InputError("poll field \"counts\" must be an object");
    }
    for (const auto& [label, v] : j.at("counts").items()) {
        if (!v.is_number_integer()) {
            throw InputError("poll count for '" + label + "' must be an integer");
        }
        poll.counts[label] = v.get<std::int64_t>();
    }
    poll.validate();
    return poll;
}

PollData parse_poll_text(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("poll is not valid JSON: ") + e.what());
    }
    return parse_poll(j);
}

PollData load_poll(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open poll file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_poll_text(buf.str());
}

Json to_json(const PollData& poll)
{
    Json counts = Json::object();
    for (const auto& [label, c] : poll.counts) {
        counts[label] = c;
    }
    return {{"n", poll.n}, {"counts", counts}, {"nonresponse", poll.nonresponse}};
}

Json to_json(const PredictionSet& set)
{
    return {{"alpha", set.alpha}, {"members", set.members}, {"empty", set.empty()}};
}

Json to_json(const PlausibilityAssignment& assignment)
{
    Json out = Json::object();
    for (const auto& [label, b] : assignment.outcomes) {
        out[label] = {{"upper", round_half_even(b.upper, 6)},
                      {"lower", round_half_even(b.lower, 6)},
                      {"dont_know", round_half_even(b.dont_know, 6)}};
    }
    return out;
}

Json to_json(const ValidityReport& report)
{
    return {{"alpha_grid", report.alpha_grid},
            {"miscoverage", report.miscoverage},
            {"holds", report.holds},
            {"A", report.A},
            {"guarantee_consistent", report.guarantee_consistent}};
}

Json to_json(const EnsembleValidityReport& report)
{
    Json members = Json::array();
    for (const auto& m : report.members) {
        members.push_back({{"own_miscoverage", m.own_miscoverage},
                           {"hypothesis_holds", m.hypothesis_holds},
                           {"plausibility_miscoverage", m.plausibility_miscoverage}});
    }
    return {{"alpha", report.alpha},
            {"members", members},
            {"max_miscoverage", report.max_miscoverage},
            {"hypothesis_holds", report.hypothesis_holds},
            {"holds", report.holds}};
}

Json to_json(const MonteCarloEstimate& estimate)
{
    return {{"estimate", estimate.estimate},
            {"std_error", estimate.std_error},
            {"trials", estimate.trials},
            {"misses", estimate.misses}};
}

std::string format_double(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) {
        throw InputError("cannot format number");
    }
    return std::string(buf, end);
}

void write_curve_tsv(std::ostream& os, const MiscoverageCurve& curve)
{
    os << "pi\tG\n";
    for (const auto& p : curve.points()) {
        os << format_double(p.pi) << '\t' << format_double(p.G) << '\n';
    }
}

void write_logistic_tsv(std::ostream& os, double lambda, std::size_t points)
{
    if (points < 2) {
        throw DomainError("logistic curve needs at least two points");
    }
    os << "theta_hat\tpi_T\n";
    const double steps = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double theta = static_cast<double>(i) / steps;
        os << format_double(theta) << '\t' << format_double(logistic_target_probability(theta, lambda)) << '\n';
    }
}

} // namespace valpred

#include "valpred/prediction.hpp"

#include "valpred/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace valpred {

bool PredictionSet::contains(const Label& l) const
{
    return std::binary_search(members.begin(), members.end(), l);
}

void check_alpha(double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("alpha must lie in (0, 1)");
    }
}

std::uint64_t prediction_mask(std::span<const double> probs, double alpha) noexcept
{
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < probs.size() && i < 64; ++i) {
        if (probs[i] > alpha) {
            mask |= std::uint64_t{1} << i;
        }
    }
    return mask;
}

PredictionSet prediction_set(const PredictiveDistribution& pi, double alpha)
{
    check_alpha(alpha);
    PredictionSet out{alpha, {}};
    const auto probs = pi.probs();
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > alpha) {
            out.members.push_back(pi.space().label(i));
        }
    }
    return out;
}

std::optional<double> second_smallest_positive(std::span<const double> probs)
{
    double first = std::numeric_limits<double>::infinity();
    double second = std::numeric_limits<double>::infinity();
    int positives = 0;
    for (double p : probs) {
        if (!(p > 0.0)) {
            continue;
        }
        ++positives;
        if (p < first) {
            second = first;
            first = p;
        } else if (p < second) {
            second = p;
        }
    }
    if (positives < 2) {
        return std::nullopt;
    }
    return second;
}

double validity_threshold(const JointModel& model)
{
    double a = 1.0;
    for (std::size_t i = 0; i < model.data_size(); ++i) {
        if (auto s = second_smallest_positive(model.conditional_at(i).probs())) {
            a = std::min(a, *s);
        }
    }
    return a;
}

CollapseBounds set_collapse_bounds(double alpha, double lambda)
{
    if (!(alpha > 0.0 && alpha < 0.5)) {
        throw DomainError("collapse bounds need 0 < alpha < 1/2");
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("lambda must be a positive finite number");
    }
    const double half_width = std::log((1.0 - alpha) / alpha) / lambda;
    return {0.5 - half_width, 0.5 + half_width};
}

} // namespace valpred

#pragma once

#include "valpred/outcome_model.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace valpred {

// Outcomes whose (upper) probability strictly exceeds alpha. May be empty.
struct PredictionSet {
    double alpha = 0.0;
    std::vector<Label> members; // canonical (lexicographic) order

    bool empty() const noexcept { return members.empty(); }
    bool singleton() const noexcept { return members.size() == 1; }
    bool contains(const Label& l) const;

    friend bool operator==(const PredictionSet&, const PredictionSet&) = default;
};

// Throws DomainError unless 0 < alpha < 1.
void check_alpha(double alpha);

// Bitmask of outcomes with prob > alpha (strict, no tolerance).
std::uint64_t prediction_mask(std::span<const double> probs, double alpha) noexcept;

PredictionSet prediction_set(const PredictiveDistribution& pi, double alpha);

// Second-smallest strictly positive value (duplicates counted separately), or
// nullopt when fewer than two probabilities are positive.
std::optional<double> second_smallest_positive(std::span<const double> probs);

// A = min over data values of the second-smallest positive conditional
// probability; data values with fewer than two positive outcomes are skipped
// and A = 1 when every value is skipped. Validity holds for all alpha in (0, A).
double validity_threshold(const JointModel& model);

struct CollapseBounds {
    double theta_low = 0.5;
    double theta_high = 0.5;
};

// The logistic prediction set is a singleton iff theta <= theta_low or
// theta >= theta_high. Requires 0 < alpha < 1/2 and lambda > 0.
CollapseBounds set_collapse_bounds(double alpha, double lambda);

} // namespace valpred

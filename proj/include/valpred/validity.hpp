#pragma once
// Exact and Monte Carlo checks of prediction-set validity.
//
// For the prediction set Pi_x(alpha) = {y : pi_x(y) > alpha} the miscoverage
// P{Y not in Pi_X(alpha)} equals G(alpha) = P{pi_X(Y) <= alpha}, the
// distribution function of the attained conditional probability. The set is
// valid at level alpha when G(alpha) <= alpha.

#include "valpred/outcome_model.hpp"

#include <cstdint>
#include <vector>

namespace valpred {

struct CurvePoint {
    double pi = 0.0;
    double G = 0.0;
};

// Right-continuous step function G, with one point per distinct attained
// value of pi_X(Y) plus the endpoints 0 and 1.
class MiscoverageCurve {
public:
    MiscoverageCurve(std::vector<CurvePoint> points, double threshold);

    const std::vector<CurvePoint>& points() const noexcept { return points_; }
    double threshold() const noexcept { return threshold_; }

    // G(pi) for any pi in [0, 1].
    double operator()(double pi) const;

private:
    std::vector<CurvePoint> points_;
    double threshold_;
};

struct ValidityReport {
    std::vector<double> alpha_grid;
    std::vector<double> miscoverage;
    std::vector<bool> holds;
    double A = 1.0;
    // True when holds[i] for every grid point below A.
    bool guarantee_consistent = true;
};

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t misses = 0;
};

MiscoverageCurve miscoverage_cdf(const JointModel& model);

// Direct route: enumerate Pi_x(alpha) and sum the mass outside it.
double prediction_set_miscoverage(const JointModel& model, double alpha);

ValidityReport check_validity(const JointModel& model, const std::vector<double>& alpha_grid);

// `count` equally spaced points from `first` to `last` inclusive.
std::vector<double> alpha_grid(double first = 0.001, double last = 0.999, std::size_t count = 512);

MonteCarloEstimate monte_carlo_miscoverage(const JointModel& model, double alpha, std::uint64_t trials,
                                           std::uint64_t seed);

} // namespace valpred

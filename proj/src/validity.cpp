#include "valpred/validity.hpp"

#include "valpred/errors.hpp"
#include "valpred/kernels.hpp"
#include "valpred/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace valpred {

MiscoverageCurve::MiscoverageCurve(std::vector<CurvePoint> points, double threshold)
    : points_(std::move(points)), threshold_(threshold)
{
    if (points_.empty()) {
        throw InputError("miscoverage curve needs at least one point");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i].pi > points_[i - 1].pi) || points_[i].G < points_[i - 1].G) {
            throw InputError("miscoverage curve must be increasing in pi and nondecreasing in G");
        }
    }
}

double MiscoverageCurve::operator()(double pi) const
{
    auto it = std::upper_bound(points_.begin(), points_.end(), pi,
                               [](double v, const CurvePoint& p) { return v < p.pi; });
    if (it == points_.begin()) {
        return 0.0;
    }
    return std::prev(it)->G;
}

MiscoverageCurve miscoverage_cdf(const JointModel& model)
{
    const auto attained = omp::attained_values(model);
    std::vector<CurvePoint> points;
    points.reserve(attained.size() + 2);
    double acc = 0.0;
    // Zero-probability outcomes carry no mass; the curve always starts at (0, 0).
    points.push_back({0.0, 0.0});
    for (const auto& a : attained) {
        acc += a.mass;
        if (a.value == points.back().pi) {
            points.back().G = acc;
        } else {
            points.push_back({a.value, acc});
        }
    }
    if (points.back().pi < 1.0) {
        points.push_back({1.0, acc});
    }
    return MiscoverageCurve(std::move(points), validity_threshold(model));
}

double prediction_set_miscoverage(const JointModel& model, double alpha)
{
    check_alpha(alpha);
    return omp::set_miscoverage(model, alpha);
}

ValidityReport check_validity(const JointModel& model, const std::vector<double>& grid)
{
    for (double a : grid) {
        check_alpha(a);
    }
    const auto curve = miscoverage_cdf(model);
    ValidityReport report;
    report.alpha_grid = grid;
    report.A = curve.threshold();
    report.miscoverage.reserve(grid.size());
    report.holds.reserve(grid.size());
    for (double a : grid) {
        const double g = curve(a);
        report.miscoverage.push_back(g);
        report.holds.push_back(g <= a);
        if (a < report.A && !(g <= a)) {
            report.guarantee_consistent = false;
        }
    }
    return report;
}

std::vector<double> alpha_grid(double first, double last, std::size_t count)
{
    if (count < 2 || !(first < last)) {
        throw DomainError("alpha grid needs count >= 2 and first < last");
    }
    std::vector<double> grid(count);
    const double step = (last - first) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = first + step * static_cast<double>(i);
    }
    grid.back() = last;
    return grid;
}

MonteCarloEstimate monte_carlo_miscoverage(const JointModel& model, double alpha, std::uint64_t trials,
                                           std::uint64_t seed)
{
    check_alpha(alpha);
    if (trials == 0) {
        throw DomainError("Monte Carlo needs at least one trial");
    }
    MonteCarloEstimate out;
    out.trials = trials;
    out.misses = omp::monte_carlo_misses(model, alpha, trials, seed);
    const double t = static_cast<double>(trials);
    out.estimate = static_cast<double>(out.misses) / t;
    out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / t);
    return out;
}

} // namespace valpred

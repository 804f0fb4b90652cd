#include "valpred/kernels.hpp"

#include <cstdint>
#include <numeric>

namespace valpred::omp {

namespace {

template <typename Partial>
double ordered_sum(const JointModel& model, Partial&& partial)
{
    const auto count = static_cast<std::int64_t>(model.data_size());
    std::vector<double> partials(model.data_size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        partials[static_cast<std::size_t>(i)] = partial(static_cast<std::size_t>(i));
    }
    // Left fold in data-value order, same as the serial loop.
    return std::accumulate(partials.begin(), partials.end(), 0.0);
}

} // namespace

std::vector<AttainedValue> attained_values(const JointModel& model)
{
    check_enumerable(model);
    const std::size_t outcomes = model.space().size();
    const auto count = static_cast<std::int64_t>(model.data_size());
    std::vector<AttainedValue> out(model.pair_count());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto xi = static_cast<std::size_t>(i);
        detail::fill_attained(model, xi, std::span(out).subspan(xi * outcomes, outcomes));
    }
    detail::sort_attained(out);
    return out;
}

double miscoverage_at(const JointModel& model, double alpha)
{
    check_enumerable(model);
    return ordered_sum(model, [&](std::size_t i) { return detail::miscoverage_partial(model, i, alpha); });
}

double set_miscoverage(const JointModel& model, double alpha)
{
    check_enumerable(model);
    return ordered_sum(model, [&](std::size_t i) { return detail::set_miscoverage_partial(model, i, alpha); });
}

double plausibility_set_miscoverage(const JointModel& model, const UpperTable& upper, double alpha)
{
    check_enumerable(model);
    detail::check_upper_table(model, upper);
    return ordered_sum(model, [&](std::size_t i) { return detail::plausibility_partial(model, upper, i, alpha); });
}

std::uint64_t monte_carlo_misses(const JointModel& model, double alpha, std::uint64_t trials, std::uint64_t seed)
{
    const auto tables = detail::build_sampling_tables(model);
    const auto n = static_cast<std::int64_t>(trials);
    std::uint64_t misses = 0;
#pragma omp parallel for schedule(static) reduction(+ : misses)
    for (std::int64_t t = 0; t < n; ++t) {
        misses += detail::trial_misses(model, tables, alpha, seed, static_cast<std::uint64_t>(t)) ? 1 : 0;
    }
    return misses;
}

} // namespace valpred::omp

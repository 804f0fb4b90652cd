#include "valpred/kernels.hpp"

#include "valpred/errors.hpp"
#include "valpred/prediction.hpp"
#include "valpred/rng.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace valpred {

void check_enumerable(const JointModel& model)
{
    check_enumerable(model.pair_count());
}

void check_enumerable(std::size_t pair_count)
{
    if (pair_count > kMaxEnumerationPairs) {
        throw EnumerationSizeError("model has " + std::to_string(pair_count) +
                                   " (x, y) pairs; exact enumeration is limited to " +
                                   std::to_string(kMaxEnumerationPairs));
    }
}

namespace detail {

SamplingTables build_sampling_tables(const JointModel& model)
{
    SamplingTables t;
    t.outcomes = model.space().size();
    t.marginal_cdf.resize(model.data_size());
    t.conditional_cdf.resize(model.data_size() * t.outcomes);
    double acc = 0.0;
    for (std::size_t i = 0; i < model.data_size(); ++i) {
        acc += model.marginal()[i];
        t.marginal_cdf[i] = acc;
        double row = 0.0;
        const auto probs = model.conditional_at(i).probs();
        for (std::size_t k = 0; k < t.outcomes; ++k) {
            row += probs[k];
            t.conditional_cdf[i * t.outcomes + k] = row;
        }
    }
    return t;
}

namespace {

// First index whose cumulative value exceeds u; the last index absorbs
// rounding when the table tops out just below 1.
std::size_t invert(std::span<const double> cdf, double u)
{
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
        --it;
    }
    return static_cast<std::size_t>(it - cdf.begin());
}

} // namespace

bool trial_misses(const JointModel& model, const SamplingTables& tables, double alpha, std::uint64_t seed,
                  std::uint64_t trial)
{
    const Philox4x32 rng(seed);
    const auto [ux, uy] = rng.uniform2(trial);
    const std::size_t xi = invert(tables.marginal_cdf, ux);
    const std::size_t yi =
        invert(std::span<const double>(tables.conditional_cdf).subspan(xi * tables.outcomes, tables.outcomes), uy);
    return !(model.conditional_at(xi)[yi] > alpha);
}

double miscoverage_partial(const JointModel& model, std::size_t x_index, double alpha)
{
    double s = 0.0;
    for (double p : model.conditional_at(x_index).probs()) {
        if (p <= alpha) {
            s += p;
        }
    }
    return model.marginal()[x_index] * s;
}

double set_miscoverage_partial(const JointModel& model, std::size_t x_index, double alpha)
{
    const auto probs = model.conditional_at(x_index).probs();
    const auto mask = prediction_mask(probs, alpha);
    double s = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (!(mask & (std::uint64_t{1} << k))) {
            s += probs[k];
        }
    }
    return model.marginal()[x_index] * s;
}

double plausibility_partial(const JointModel& model, const UpperTable& upper, std::size_t x_index, double alpha)
{
    const auto probs = model.conditional_at(x_index).probs();
    const auto mask = prediction_mask(upper.row(x_index), alpha);
    double s = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (!(mask & (std::uint64_t{1} << k))) {
            s += probs[k];
        }
    }
    return model.marginal()[x_index] * s;
}

void fill_attained(const JointModel& model, std::size_t x_index, std::span<AttainedValue> out)
{
    const auto probs = model.conditional_at(x_index).probs();
    const double w = model.marginal()[x_index];
    for (std::size_t k = 0; k < probs.size(); ++k) {
        out[k] = {probs[k], w * probs[k], static_cast<std::uint32_t>(x_index), static_cast<std::uint32_t>(k)};
    }
}

void sort_attained(std::vector<AttainedValue>& values)
{
    std::sort(values.begin(), values.end(), [](const AttainedValue& a, const AttainedValue& b) {
        return std::tie(a.value, a.x_index, a.y_index) < std::tie(b.value, b.x_index, b.y_index);
    });
}

void check_upper_table(const JointModel& model, const UpperTable& upper)
{
    if (upper.outcomes != model.space().size() || upper.values.size() != model.pair_count()) {
        throw InputError("upper-probability table does not match the model");
    }
}

} // namespace detail

namespace reference {

std::vector<AttainedValue> attained_values(const JointModel& model)
{
    check_enumerable(model);
    const std::size_t outcomes = model.space().size();
    std::vector<AttainedValue> out(model.pair_count());
    for (std::size_t i = 0; i < model.data_size(); ++i) {
        detail::fill_attained(model, i, std::span(out).subspan(i * outcomes, outcomes));
    }
    detail::sort_attained(out);
    return out;
}

double miscoverage_at(const JointModel& model, double alpha)
{
    check_enumerable(model);
    double total = 0.0;
    for (std::size_t i = 0; i < model.data_size(); ++i) {
        total += detail::miscoverage_partial(model, i, alpha);
    }
    return total;
}

double set_miscoverage(const JointModel& model, double alpha)
{
    check_enumerable(model);
    double total = 0.0;
    for (std::size_t i = 0; i < model.data_size(); ++i) {
        total += detail::set_miscoverage_partial(model, i, alpha);
    }
    return total;
}

double plausibility_set_miscoverage(const JointModel& model, const UpperTable& upper, double alpha)
{
    check_enumerable(model);
    detail::check_upper_table(model, upper);
    double total = 0.0;
    for (std::size_t i = 0; i < model.data_size(); ++i) {
        total += detail::plausibility_partial(model, upper, i, alpha);
    }
    return total;
}

std::uint64_t monte_carlo_misses(const JointModel& model, double alpha, std::uint64_t trials, std::uint64_t seed)
{
    const auto tables = detail::build_sampling_tables(model);
    std::uint64_t misses = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        misses += detail::trial_misses(model, tables, alpha, seed, t) ? 1 : 0;
    }
    return misses;
}

} // namespace reference
} // namespace valpred

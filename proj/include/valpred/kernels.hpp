#pragma once
// Enumeration and sampling kernels over a JointModel.
//
// Every kernel exists twice: `reference` is the plain serial loop kept as the
// test oracle, `omp` partitions data values (or trial indices) across OpenMP
// threads. Floating-point reductions collect one partial per data value and
// sum them in data-value order, so both variants return bit-identical results
// for any thread count.

#include "valpred/outcome_model.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace valpred {

inline constexpr std::size_t kMaxEnumerationPairs = 10'000'000;

// Throws EnumerationSizeError when the model has more than kMaxEnumerationPairs pairs.
void check_enumerable(const JointModel& model);
void check_enumerable(std::size_t pair_count);

// One (x, y) pair: the attained conditional probability pi_x(y) and its joint
// mass marginal(x) * pi_x(y).
struct AttainedValue {
    double value = 0.0;
    double mass = 0.0;
    std::uint32_t x_index = 0;
    std::uint32_t y_index = 0;
};

// Per-data-value upper probabilities, row-major [x_index * N + y_index].
struct UpperTable {
    std::size_t outcomes = 0;
    std::vector<double> values;

    std::span<const double> row(std::size_t x_index) const
    {
        return {values.data() + x_index * outcomes, outcomes};
    }
};

namespace reference {

// All pairs sorted by (value, x_index, y_index).
std::vector<AttainedValue> attained_values(const JointModel& model);
// P{pi_X(Y) <= alpha}.
double miscoverage_at(const JointModel& model, double alpha);
// P{Y not in Pi_X(alpha)}, enumerating the prediction sets themselves.
double set_miscoverage(const JointModel& model, double alpha);
// P{Y not in plausibility set} under `model`, with sets built from `upper`.
double plausibility_set_miscoverage(const JointModel& model, const UpperTable& upper, double alpha);
// Number of trials among [0, trials) whose outcome falls outside Pi_X(alpha).
std::uint64_t monte_carlo_misses(const JointModel& model, double alpha, std::uint64_t trials, std::uint64_t seed);

} // namespace reference

namespace omp {

std::vector<AttainedValue> attained_values(const JointModel& model);
double miscoverage_at(const JointModel& model, double alpha);
double set_miscoverage(const JointModel& model, double alpha);
double plausibility_set_miscoverage(const JointModel& model, const UpperTable& upper, double alpha);
std::uint64_t monte_carlo_misses(const JointModel& model, double alpha, std::uint64_t trials, std::uint64_t seed);

} // namespace omp

namespace detail {

// Cumulative tables used by both samplers; built serially.
struct SamplingTables {
    std::vector<double> marginal_cdf;
    std::vector<double> conditional_cdf; // row-major, one row per data value
    std::size_t outcomes = 0;
};

SamplingTables build_sampling_tables(const JointModel& model);

// Whether trial `trial` misses, i.e. draws (X, Y) with Y outside Pi_X(alpha).
bool trial_misses(const JointModel& model, const SamplingTables& tables, double alpha, std::uint64_t seed,
                  std::uint64_t trial);

double miscoverage_partial(const JointModel& model, std::size_t x_index, double alpha);
double set_miscoverage_partial(const JointModel& model, std::size_t x_index, double alpha);
double plausibility_partial(const JointModel& model, const UpperTable& upper, std::size_t x_index, double alpha);
void fill_attained(const JointModel& model, std::size_t x_index, std::span<AttainedValue> out);
void sort_attained(std::vector<AttainedValue>& values);
void check_upper_table(const JointModel& model, const UpperTable& upper);

} // namespace detail

} // namespace valpred

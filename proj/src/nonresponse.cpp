#include "valpred/nonresponse.hpp"

#include "valpred/errors.hpp"

#include <algorithm>
#include <numeric>

namespace valpred {

BinaryLabels binary_labels(const PollData& poll, const Label& target)
{
    poll.validate();
    if (poll.counts.size() != 2) {
        throw InputError("poll must have exactly two outcomes");
    }
    if (!poll.counts.contains(target)) {
        throw InputError("target '" + target + "' is not a poll outcome");
    }
    for (const auto& [label, c] : poll.counts) {
        if (label != target) {
            return {target, label};
        }
    }
    throw InputError("poll must have exactly two outcomes");
}

std::vector<double> imputation_fractions(std::size_t grid_size)
{
    if (grid_size < 2) {
        throw DomainError("grid size must be at least 2");
    }
    std::vector<double> f(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        f[i] = static_cast<double>(i) / static_cast<double>(grid_size - 1);
    }
    return f;
}

namespace {

double imputed_theta(std::int64_t target_count, double fraction, std::int64_t nonresponse, std::int64_t n)
{
    const double theta =
        (static_cast<double>(target_count) + fraction * static_cast<double>(nonresponse)) / static_cast<double>(n);
    // Endpoint members reproduce theta_hat exactly; interior members may round past 1 by an ulp.
    return std::min(theta, 1.0);
}

} // namespace

std::vector<double> imputation_thetas(const PollData& poll, std::size_t grid_size, const Label& target)
{
    const auto labels = binary_labels(poll, target);
    if (poll.n < 1) {
        throw DomainError("poll size n must be at least 1");
    }
    std::vector<double> out;
    for (double f : imputation_fractions(grid_size)) {
        out.push_back(imputed_theta(poll.counts.at(labels.target), f, poll.nonresponse, poll.n));
    }
    return out;
}

ModelEnsemble imputation_ensemble(const PollData& poll, const LogisticRuleParams& params, std::size_t grid_size,
                                  const Label& target)
{
    const auto labels = binary_labels(poll, target);
    params.validate();
    if (params.n != poll.n) {
        throw InputError("logistic rule poll size does not match the poll");
    }
    const auto fractions = imputation_fractions(grid_size);
    const std::int64_t responders = poll.responders();
    const auto count = static_cast<std::size_t>(responders + 1);

    std::vector<DataValue> xs(count);
    std::iota(xs.begin(), xs.end(), DataValue{0});
    const std::vector<double> marginal(count, 1.0 / static_cast<double>(count));

    std::vector<JointModel> members;
    members.reserve(fractions.size());
    for (double f : fractions) {
        std::vector<PredictiveDistribution> cond;
        cond.reserve(count);
        for (auto x : xs) {
            cond.push_back(logistic_rule(imputed_theta(x, f, poll.nonresponse, poll.n), params, labels));
        }
        auto space = cond.front().space_ptr();
        members.emplace_back(std::move(space), xs, marginal, std::move(cond));
    }
    return ModelEnsemble(std::move(members));
}

DataValue observed_data_value(const PollData& poll, const Label& target)
{
    const auto labels = binary_labels(poll, target);
    return poll.counts.at(labels.target);
}

double naive_mar_theta(const PollData& poll, const Label& target)
{
    const auto labels = binary_labels(poll, target);
    if (poll.responders() <= 0) {
        throw DomainError("every polled voter is a nonresponder; the missing-at-random ratio is undefined");
    }
    return static_cast<double>(poll.counts.at(labels.target)) / static_cast<double>(poll.responders());
}

PredictiveDistribution naive_mar_rule(const PollData& poll, const LogisticRuleParams& params, const Label& target)
{
    const auto labels = binary_labels(poll, target);
    return logistic_rule(naive_mar_theta(poll, target), params, labels);
}

} // namespace valpred

#include "valpred/outcome_model.hpp"

#include "valpred/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

namespace valpred {

OutcomeSpace::OutcomeSpace(std::vector<Label> labels) : labels_(std::move(labels))
{
    if (labels_.size() < 2) {
        throw InputError("outcome space needs at least two labels");
    }
    for (const auto& l : labels_) {
        if (l.empty()) {
            throw InputError("outcome labels must be non-empty");
        }
    }
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw InputError("duplicate outcome label");
    }
}

std::optional<std::size_t> OutcomeSpace::find(const Label& label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t OutcomeSpace::index_of(const Label& label) const
{
    if (auto i = find(label)) {
        return *i;
    }
    throw InputError("unknown outcome label '" + label + "'");
}

std::uint64_t OutcomeSpace::mask_of(std::span<const Label> subset) const
{
    if (size() > 64) {
        throw InputError("subset masks support at most 64 outcomes");
    }
    std::uint64_t mask = 0;
    for (const auto& l : subset) {
        mask |= std::uint64_t{1} << index_of(l);
    }
    return mask;
}

std::vector<Label> OutcomeSpace::labels_of(std::uint64_t mask) const
{
    std::vector<Label> out;
    for (std::size_t i = 0; i < size() && i < 64; ++i) {
        if (mask & (std::uint64_t{1} << i)) {
            out.push_back(labels_[i]);
        }
    }
    return out;
}

std::uint64_t OutcomeSpace::full_mask() const noexcept
{
    return size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

SpacePtr make_space(std::vector<Label> labels)
{
    return std::make_shared<const OutcomeSpace>(std::move(labels));
}

SpacePtr binary_space()
{
    static const SpacePtr space = make_space({"C", "T"});
    return space;
}

void PollData::validate() const
{
    if (n < 0 || nonresponse < 0) {
        throw InputError("poll sizes must be non-negative");
    }
    std::int64_t total = nonresponse;
    for (const auto& [label, c] : counts) {
        if (label.empty()) {
            throw InputError("poll labels must be non-empty");
        }
        if (c < 0) {
            throw InputError("poll count for '" + label + "' is negative");
        }
        total += c;
    }
    if (total != n) {
        throw InputError("poll counts plus nonresponse (" + std::to_string(total) +
                         ") do not add up to n (" + std::to_string(n) + ")");
    }
}

namespace {

void check_probabilities(std::span<const double> probs)
{
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw InputError("probability outside [0, 1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
        throw InputError("probabilities do not sum to one");
    }
}

} // namespace

PredictiveDistribution::PredictiveDistribution(SpacePtr space, std::vector<double> probs)
    : space_(std::move(space)), probs_(std::move(probs))
{
    if (!space_) {
        throw InputError("predictive distribution without outcome space");
    }
    if (probs_.size() != space_->size()) {
        throw InputError("predictive distribution must cover every outcome");
    }
    check_probabilities(probs_);
}

PredictiveDistribution::PredictiveDistribution(SpacePtr space, const std::map<Label, double>& probs)
    : space_(std::move(space))
{
    if (!space_) {
        throw InputError("predictive distribution without outcome space");
    }
    probs_.assign(space_->size(), 0.0);
    std::vector<bool> seen(space_->size(), false);
    for (const auto& [label, p] : probs) {
        auto i = space_->index_of(label);
        probs_[i] = p;
        seen[i] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw InputError("predictive distribution must cover every outcome");
    }
    check_probabilities(probs_);
}

double PredictiveDistribution::prob_of(std::uint64_t mask) const
{
    double s = 0.0;
    for (std::size_t i = 0; i < probs_.size() && i < 64; ++i) {
        if (mask & (std::uint64_t{1} << i)) {
            s += probs_[i];
        }
    }
    return s;
}

JointModel::JointModel(SpacePtr space, std::vector<DataValue> data_values, std::vector<double> marginal,
                       std::vector<PredictiveDistribution> conditional)
    : space_(std::move(space)),
      data_values_(std::move(data_values)),
      marginal_(std::move(marginal)),
      conditional_(std::move(conditional))
{
    if (!space_) {
        throw InputError("joint model without outcome space");
    }
    if (data_values_.empty()) {
        throw InputError("joint model needs at least one data value");
    }
    if (marginal_.size() != data_values_.size() || conditional_.size() != data_values_.size()) {
        throw InputError("marginal and conditional must be defined for every data value");
    }
    if (std::adjacent_find(data_values_.begin(), data_values_.end(), std::greater_equal<>{}) !=
        data_values_.end()) {
        throw InputError("data values must be strictly increasing");
    }
    check_probabilities(marginal_);
    for (const auto& c : conditional_) {
        if (c.space() != *space_) {
            throw InputError("conditional distribution over a different outcome space");
        }
    }
}

std::size_t JointModel::index_of(DataValue x) const
{
    auto it = std::lower_bound(data_values_.begin(), data_values_.end(), x);
    if (it == data_values_.end() || *it != x) {
        throw InputError("data value " + std::to_string(x) + " is not in the model");
    }
    return static_cast<std::size_t>(it - data_values_.begin());
}

void LogisticRuleParams::validate() const
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("lambda must be a positive finite number");
    }
    if (n < 1) {
        throw DomainError("poll size n must be at least 1");
    }
}

double logistic_target_probability(double theta_hat, double lambda)
{
    if (!(theta_hat >= 0.0 && theta_hat <= 1.0)) {
        throw DomainError("theta_hat must lie in [0, 1]");
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("lambda must be a positive finite number");
    }
    const double z = lambda * (theta_hat - 0.5);
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

PredictiveDistribution logistic_rule(double theta_hat, const LogisticRuleParams& params,
                                     const BinaryLabels& labels)
{
    params.validate();
    const double target = logistic_target_probability(theta_hat, params.lambda);
    SpacePtr space = (labels.target == "T" && labels.other == "C") ? binary_space()
                                                                   : make_space({labels.target, labels.other});
    std::vector<double> probs(2);
    probs[space->index_of(labels.target)] = target;
    probs[space->index_of(labels.other)] = 1.0 - target;
    return PredictiveDistribution(std::move(space), std::move(probs));
}

namespace {

JointModel flat_joint(std::int64_t n, auto&& rule)
{
    const auto count = static_cast<std::size_t>(n + 1);
    std::vector<DataValue> xs(count);
    std::iota(xs.begin(), xs.end(), DataValue{0});
    std::vector<double> marginal(count, 1.0 / static_cast<double>(count));
    std::vector<PredictiveDistribution> cond;
    cond.reserve(count);
    for (auto x : xs) {
        cond.push_back(rule(x));
    }
    auto space = cond.front().space_ptr();
    return JointModel(std::move(space), std::move(xs), std::move(marginal), std::move(cond));
}

} // namespace

JointModel binomial_flat_joint(const LogisticRuleParams& params, const BinaryLabels& labels)
{
    params.validate();
    const double n = static_cast<double>(params.n);
    return flat_joint(params.n, [&](DataValue x) {
        return logistic_rule(static_cast<double>(x) / n, params, labels);
    });
}

JointModel uninformative_joint(std::int64_t n, const BinaryLabels& labels)
{
    if (n < 1) {
        throw DomainError("poll size n must be at least 1");
    }
    auto space = make_space({labels.target, labels.other});
    return flat_joint(n, [&](DataValue) { return PredictiveDistribution(space, std::vector<double>{0.5, 0.5}); });
}

double theta_hat(const PollData& poll, const Label& target, std::int64_t imputed_to_target)
{
    auto it = poll.counts.find(target);
    if (it == poll.counts.end()) {
        throw InputError("target '" + target + "' is not a poll outcome");
    }
    if (imputed_to_target < 0 || imputed_to_target > poll.nonresponse) {
        throw DomainError("imputed count must lie in [0, nonresponse]");
    }
    if (poll.n <= 0) {
        throw DomainError("poll size n must be positive");
    }
    return static_cast<double>(it->second + imputed_to_target) / static_cast<double>(poll.n);
}

} // namespace valpred

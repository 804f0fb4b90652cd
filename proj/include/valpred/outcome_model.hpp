#pragma once
// Outcome spaces, poll data, predictive distributions and finite joint models.
//
// A JointModel is a finite data space with a marginal pmf and a conditional
// rule x -> pi_x. The binary poll model couples a flat marginal on {0..n}
// with the logistic rule
//
//     pi_x(T) = exp{lambda (theta - 1/2)} / (1 + exp{lambda (theta - 1/2)}),
//     pi_x(C) = 1 - pi_x(T),   theta = x / n.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace valpred {

using Label = std::string;
using DataValue = std::int64_t;

inline constexpr double kProbabilityTolerance = 1e-9;

// Finite outcome set. Labels are kept in lexicographic order so that every
// serialized report lists outcomes the same way.
class OutcomeSpace {
public:
    explicit OutcomeSpace(std::vector<Label> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<Label>& labels() const noexcept { return labels_; }
    const Label& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> find(const Label& label) const;
    // Throws InputError for labels outside the space.
    std::size_t index_of(const Label& label) const;
    bool contains(const Label& label) const { return find(label).has_value(); }

    // Validated, sorted, deduplicated list of labels -> bitmask over indices.
    // Only for spaces of at most 64 outcomes.
    std::uint64_t mask_of(std::span<const Label> subset) const;
    std::vector<Label> labels_of(std::uint64_t mask) const;
    std::uint64_t full_mask() const noexcept;

    friend bool operator==(const OutcomeSpace&, const OutcomeSpace&) = default;

private:
    std::vector<Label> labels_;
};

using SpacePtr = std::shared_ptr<const OutcomeSpace>;

SpacePtr make_space(std::vector<Label> labels);

// The two-candidate space {C, T} used by the poll examples.
SpacePtr binary_space();

struct PollData {
    std::int64_t n = 0;
    std::map<Label, std::int64_t> counts;
    std::int64_t nonresponse = 0;

    // Checks non-negativity and sum(counts) + nonresponse == n.
    void validate() const;
    std::int64_t responders() const noexcept { return n - nonresponse; }
};

class PredictiveDistribution {
public:
    PredictiveDistribution(SpacePtr space, std::vector<double> probs);
    PredictiveDistribution(SpacePtr space, const std::map<Label, double>& probs);

    const OutcomeSpace& space() const noexcept { return *space_; }
    const SpacePtr& space_ptr() const noexcept { return space_; }
    std::span<const double> probs() const noexcept { return probs_; }

    double operator[](std::size_t i) const { return probs_[i]; }
    double prob(const Label& label) const { return probs_[space_->index_of(label)]; }
    // Sum of probabilities over a subset given as a mask.
    double prob_of(std::uint64_t mask) const;

private:
    SpacePtr space_;
    std::vector<double> probs_;
};

class JointModel {
public:
    // data_values must be strictly increasing; marginal and conditional are
    // aligned with data_values.
    JointModel(SpacePtr space, std::vector<DataValue> data_values, std::vector<double> marginal,
               std::vector<PredictiveDistribution> conditional);

    const OutcomeSpace& space() const noexcept { return *space_; }
    const SpacePtr& space_ptr() const noexcept { return space_; }
    std::size_t data_size() const noexcept { return data_values_.size(); }
    std::span<const DataValue> data_values() const noexcept { return data_values_; }
    std::span<const double> marginal() const noexcept { return marginal_; }
    const PredictiveDistribution& conditional_at(std::size_t index) const { return conditional_[index]; }

    // Throws InputError for data values outside the model.
    std::size_t index_of(DataValue x) const;
    const PredictiveDistribution& conditional(DataValue x) const { return conditional_[index_of(x)]; }

    // Number of (x, y) pairs an exact enumeration visits.
    std::size_t pair_count() const noexcept { return data_size() * space_->size(); }

private:
    SpacePtr space_;
    std::vector<DataValue> data_values_;
    std::vector<double> marginal_;
    std::vector<PredictiveDistribution> conditional_;
};

struct LogisticRuleParams {
    double lambda = 10.0;
    std::int64_t n = 1;

    void validate() const;
};

// Which label the poll fraction theta_hat refers to; the other label receives
// the complement.
struct BinaryLabels {
    Label target = "T";
    Label other = "C";
};

// Probability of the target label under the logistic rule.
double logistic_target_probability(double theta_hat, double lambda);

PredictiveDistribution logistic_rule(double theta_hat, const LogisticRuleParams& params,
                                     const BinaryLabels& labels = {});

// Flat marginal over {0..n}; conditional(x) = logistic_rule(x / n).
JointModel binomial_flat_joint(const LogisticRuleParams& params, const BinaryLabels& labels = {});

// Every data value predicts (1/2, 1/2); flat marginal over {0..n}.
JointModel uninformative_joint(std::int64_t n, const BinaryLabels& labels = {});

// (counts[target] + imputed_to_target) / n.
double theta_hat(const PollData& poll, const Label& target, std::int64_t imputed_to_target);

} // namespace valpred

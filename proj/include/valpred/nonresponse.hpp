#pragma once
// Ensembles that cover every way of assigning poll nonresponders.
//
// Member f (f on an even grid over [0, 1]) imputes a fraction f of the
// nonresponders to the target label. Its data value X is the number of
// responders choosing the target, uniform on {0..n - nonresponse}, and its
// conditional rule is the logistic rule at theta = (x + f * nonresponse) / n.
// The logistic rule is monotone in theta, so the two endpoint members attain
// every upper and lower probability.

#include "valpred/outcome_model.hpp"
#include "valpred/plausibility.hpp"

#include <cstddef>
#include <vector>

namespace valpred {

// Binary poll check: exactly two labels, one of which is labels.target.
BinaryLabels binary_labels(const PollData& poll, const Label& target = "T");

// Imputed fractions used by an ensemble of `grid_size` members.
std::vector<double> imputation_fractions(std::size_t grid_size);

// theta_hat at the observed data value for each grid member.
std::vector<double> imputation_thetas(const PollData& poll, std::size_t grid_size, const Label& target = "T");

ModelEnsemble imputation_ensemble(const PollData& poll, const LogisticRuleParams& params,
                                  std::size_t grid_size = 2, const Label& target = "T");

// Data value the ensemble should be queried at: counts[target].
DataValue observed_data_value(const PollData& poll, const Label& target = "T");

// Missing-at-random baseline: theta = counts[target] / (n - nonresponse).
double naive_mar_theta(const PollData& poll, const Label& target = "T");
PredictiveDistribution naive_mar_rule(const PollData& poll, const LogisticRuleParams& params,
                                      const Label& target = "T");

} // namespace valpred

#pragma once
// Upper and lower probabilities over a finite collection of joint models.
//
//     upper_x(B) = max over models of P(Y in B | X = x)
//     lower_x(B) = 1 - upper_x(B^c) = min over models of P(Y in B | X = x)
//
// upper - lower is the "don't know" mass left by model uncertainty.

#include "valpred/kernels.hpp"
#include "valpred/outcome_model.hpp"
#include "valpred/prediction.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace valpred {

class ModelEnsemble {
public:
    // All members must share outcome labels and data values.
    explicit ModelEnsemble(std::vector<JointModel> members);

    const std::vector<JointModel>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    const OutcomeSpace& space() const noexcept { return members_.front().space(); }
    std::span<const DataValue> data_values() const noexcept { return members_.front().data_values(); }

    // Upper probabilities of every singleton at every data value.
    UpperTable upper_table() const;

private:
    std::vector<JointModel> members_;
};

struct OutcomeBounds {
    double upper = 0.0;
    double lower = 0.0;
    double dont_know = 0.0;
};

struct PlausibilityAssignment {
    SpacePtr space;
    std::map<Label, OutcomeBounds> outcomes;

    const OutcomeBounds& at(const Label& l) const;
};

double upper_probability(const ModelEnsemble& ensemble, DataValue x, std::span<const Label> subset);
double lower_probability(const ModelEnsemble& ensemble, DataValue x, std::span<const Label> subset);

// Mask-based forms for exhaustive subset iteration.
double upper_probability_mask(const ModelEnsemble& ensemble, std::size_t x_index, std::uint64_t mask);
double lower_probability_mask(const ModelEnsemble& ensemble, std::size_t x_index, std::uint64_t mask);

PlausibilityAssignment plausibility_assignment(const ModelEnsemble& ensemble, DataValue x);

// {y : upper_x(y) > alpha}; the union of the members' own prediction sets.
PredictionSet plausibility_prediction_set(const ModelEnsemble& ensemble, DataValue x, double alpha);

struct MemberValidity {
    // P{pi_X(Y) <= alpha} under this member (the precondition of the guarantee).
    double own_miscoverage = 0.0;
    bool hypothesis_holds = false;
    // P{Y not in plausibility set} under this member.
    double plausibility_miscoverage = 0.0;
};

struct EnsembleValidityReport {
    double alpha = 0.0;
    std::vector<MemberValidity> members;
    double max_miscoverage = 0.0;
    bool hypothesis_holds = false;
    // max_miscoverage <= alpha; only meaningful as a guarantee when hypothesis_holds.
    bool holds = false;
};

EnsembleValidityReport check_ensemble_validity(const ModelEnsemble& ensemble, double alpha);

enum class BetDecision { accept_B, accept_complement, abstain };

const char* to_string(BetDecision d) noexcept;

// accept_B if price < lower(B), accept_complement if price > upper(B), else abstain.
BetDecision bet_decision(double lower, double upper, double price);

// Works from per-outcome bounds, so B or its complement must be empty or a
// single outcome; otherwise throws InputError (use the ensemble overload).
BetDecision bet_decision(const PlausibilityAssignment& assignment, std::span<const Label> subset, double price);
BetDecision bet_decision(const ModelEnsemble& ensemble, DataValue x, std::span<const Label> subset, double price);

} // namespace valpred

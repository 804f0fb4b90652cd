#include "valpred/plausibility.hpp"

#include "valpred/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace valpred {

ModelEnsemble::ModelEnsemble(std::vector<JointModel> members) : members_(std::move(members))
{
    if (members_.empty()) {
        throw InputError("model ensemble needs at least one member");
    }
    const auto& first = members_.front();
    for (const auto& m : members_) {
        if (m.space() != first.space()) {
            throw InputError("ensemble members disagree on outcome labels");
        }
        if (!std::ranges::equal(m.data_values(), first.data_values())) {
            throw InputError("ensemble members disagree on data values");
        }
    }
}

UpperTable ModelEnsemble::upper_table() const
{
    const std::size_t outcomes = space().size();
    const std::size_t count = members_.front().data_size();
    UpperTable table{outcomes, std::vector<double>(count * outcomes, 0.0)};
    for (const auto& m : members_) {
        for (std::size_t i = 0; i < count; ++i) {
            const auto probs = m.conditional_at(i).probs();
            for (std::size_t k = 0; k < outcomes; ++k) {
                double& u = table.values[i * outcomes + k];
                u = std::max(u, probs[k]);
            }
        }
    }
    return table;
}

const OutcomeBounds& PlausibilityAssignment::at(const Label& l) const
{
    auto it = outcomes.find(l);
    if (it == outcomes.end()) {
        throw InputError("unknown outcome label '" + l + "'");
    }
    return it->second;
}

double upper_probability_mask(const ModelEnsemble& ensemble, std::size_t x_index, std::uint64_t mask)
{
    const auto full = ensemble.space().full_mask();
    if (mask & ~full) {
        throw InputError("subset contains outcomes outside the space");
    }
    if (mask == 0) {
        return 0.0;
    }
    if (mask == full) {
        return 1.0;
    }
    double best = 0.0;
    for (const auto& m : ensemble.members()) {
        best = std::max(best, m.conditional_at(x_index).prob_of(mask));
    }
    return std::min(best, 1.0);
}

double lower_probability_mask(const ModelEnsemble& ensemble, std::size_t x_index, std::uint64_t mask)
{
    const auto full = ensemble.space().full_mask();
    if (mask & ~full) {
        throw InputError("subset contains outcomes outside the space");
    }
    return 1.0 - upper_probability_mask(ensemble, x_index, full & ~mask);
}

namespace {

std::size_t data_index(const ModelEnsemble& ensemble, DataValue x)
{
    return ensemble.members().front().index_of(x);
}

} // namespace

double upper_probability(const ModelEnsemble& ensemble, DataValue x, std::span<const Label> subset)
{
    return upper_probability_mask(ensemble, data_index(ensemble, x), ensemble.space().mask_of(subset));
}

double lower_probability(const ModelEnsemble& ensemble, DataValue x, std::span<const Label> subset)
{
    return lower_probability_mask(ensemble, data_index(ensemble, x), ensemble.space().mask_of(subset));
}

PlausibilityAssignment plausibility_assignment(const ModelEnsemble& ensemble, DataValue x)
{
    const auto xi = data_index(ensemble, x);
    const auto& space = ensemble.space();
    PlausibilityAssignment out;
    out.space = ensemble.members().front().space_ptr();
    for (std::size_t k = 0; k < space.size(); ++k) {
        const std::uint64_t mask = std::uint64_t{1} << k;
        OutcomeBounds b;
        b.upper = upper_probability_mask(ensemble, xi, mask);
        b.lower = lower_probability_mask(ensemble, xi, mask);
        b.dont_know = b.upper - b.lower;
        out.outcomes.emplace(space.label(k), b);
    }
    return out;
}

PredictionSet plausibility_prediction_set(const ModelEnsemble& ensemble, DataValue x, double alpha)
{
    check_alpha(alpha);
    const auto assignment = plausibility_assignment(ensemble, x);
    PredictionSet out{alpha, {}};
    for (const auto& [label, b] : assignment.outcomes) {
        if (b.upper > alpha) {
            out.members.push_back(label);
        }
    }
    return out;
}

EnsembleValidityReport check_ensemble_validity(const ModelEnsemble& ensemble, double alpha)
{
    check_alpha(alpha);
    const auto upper = ensemble.upper_table();
    EnsembleValidityReport report;
    report.alpha = alpha;
    report.hypothesis_holds = true;
    for (const auto& m : ensemble.members()) {
        MemberValidity v;
        v.own_miscoverage = omp::miscoverage_at(m, alpha);
        v.hypothesis_holds = v.own_miscoverage <= alpha;
        v.plausibility_miscoverage = omp::plausibility_set_miscoverage(m, upper, alpha);
        report.hypothesis_holds = report.hypothesis_holds && v.hypothesis_holds;
        report.max_miscoverage = std::max(report.max_miscoverage, v.plausibility_miscoverage);
        report.members.push_back(v);
    }
    report.holds = report.max_miscoverage <= alpha;
    return report;
}

const char* to_string(BetDecision d) noexcept
{
    switch (d) {
    case BetDecision::accept_B:
        return "accept_B";
    case BetDecision::accept_complement:
        return "accept_complement";
    case BetDecision::abstain:
        return "abstain";
    }
    return "abstain";
}

BetDecision bet_decision(double lower, double upper, double price)
{
    if (!(price > 0.0 && price < 1.0)) {
        throw DomainError("price must lie in (0, 1)");
    }
    if (price < lower) {
        return BetDecision::accept_B;
    }
    if (price > upper) {
        return BetDecision::accept_complement;
    }
    return BetDecision::abstain;
}

BetDecision bet_decision(const PlausibilityAssignment& assignment, std::span<const Label> subset, double price)
{
    if (!assignment.space) {
        throw InputError("plausibility assignment without outcome space");
    }
    const auto& space = *assignment.space;
    const auto mask = space.mask_of(subset);
    const auto complement = space.full_mask() & ~mask;
    double lower = 0.0;
    double upper = 0.0;
    if (mask == 0) {
        lower = upper = 0.0;
    } else if (complement == 0) {
        lower = upper = 1.0;
    } else if (std::popcount(mask) == 1) {
        const auto& b = assignment.at(space.label(static_cast<std::size_t>(std::countr_zero(mask))));
        lower = b.lower;
        upper = b.upper;
    } else if (std::popcount(complement) == 1) {
        const auto& b = assignment.at(space.label(static_cast<std::size_t>(std::countr_zero(complement))));
        lower = 1.0 - b.upper;
        upper = 1.0 - b.lower;
    } else {
        throw InputError("per-outcome bounds cannot price this event; evaluate it on the ensemble");
    }
    return bet_decision(lower, upper, price);
}

BetDecision bet_decision(const ModelEnsemble& ensemble, DataValue x, std::span<const Label> subset, double price)
{
    return bet_decision(lower_probability(ensemble, x, subset), upper_probability(ensemble, x, subset), price);
}

} // namespace valpred

#pragma once
// Random ensembles for property checks.

#include "valpred/plausibility.hpp"

#include <random>
#include <string>
#include <vector>

namespace testgen {

inline valpred::ModelEnsemble random_ensemble(std::uint64_t seed, std::size_t outcomes = 4,
                                              std::size_t data_values = 6, std::size_t members = 3)
{
    std::mt19937_64 gen(seed);
    std::gamma_distribution<double> g(0.6, 1.0);
    std::vector<valpred::Label> labels;
    for (std::size_t k = 0; k < outcomes; ++k) {
        labels.push_back(std::string(1, static_cast<char>('A' + k)));
    }
    auto space = valpred::make_space(labels);
    std::vector<valpred::DataValue> xs;
    for (std::size_t i = 0; i < data_values; ++i) xs.push_back(static_cast<valpred::DataValue>(i));
    std::vector<valpred::JointModel> out;
    for (std::size_t m = 0; m < members; ++m) {
        std::vector<double> w(data_values);
        double ws = 0.0;
        for (auto& v : w) ws += (v = g(gen) + 0.05);
        for (auto& v : w) v /= ws;
        std::vector<valpred::PredictiveDistribution> cond;
        for (std::size_t i = 0; i < data_values; ++i) {
            std::vector<double> p(outcomes);
            double s = 0.0;
            for (auto& v : p) s += (v = g(gen));
            for (auto& v : p) v /= s;
            cond.emplace_back(space, p);
        }
        out.emplace_back(space, xs, w, cond);
    }
    return valpred::ModelEnsemble(std::move(out));
}

} // namespace testgen

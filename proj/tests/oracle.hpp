#pragma once
// Brute-force oracles for the tests. These work on plain probability tables
// and never call into the library's enumeration kernels.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

// One row per data value: weight and conditional probabilities.
struct Table {
    std::vector<double> weight;
    std::vector<std::vector<double>> rows;
};

inline long double logistic(long double theta, long double lambda)
{
    const long double e = std::exp(lambda * (theta - 0.5L));
    return e / (1.0L + e);
}

// Binary logistic model with a flat marginal on {0..n}; rows are (C, T).
inline Table logistic_table(int n, double lambda)
{
    Table t;
    for (int x = 0; x <= n; ++x) {
        const long double p = logistic(static_cast<long double>(x) / n, lambda);
        t.weight.push_back(1.0 / (n + 1));
        t.rows.push_back({static_cast<double>(1.0L - p), static_cast<double>(p)});
    }
    return t;
}

// G(alpha) = sum of weight * p over cells with p <= alpha.
inline long double G(const Table& t, double alpha)
{
    long double s = 0.0L;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (double p : t.rows[i]) {
            if (p <= alpha) {
                s += static_cast<long double>(t.weight[i]) * p;
            }
        }
    }
    return s;
}

// Minimum over rows of the second-smallest positive entry; rows with fewer
// than two positive entries are ignored.
inline double threshold_A(const Table& t)
{
    double a = 1.0;
    for (const auto& r : t.rows) {
        std::vector<double> pos;
        for (double p : r) {
            if (p > 0) pos.push_back(p);
        }
        if (pos.size() < 2) continue;
        std::sort(pos.begin(), pos.end());
        a = std::min(a, pos[1]);
    }
    return a;
}

} // namespace oracle

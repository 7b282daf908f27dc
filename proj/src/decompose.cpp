#include "nrt/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nrt {

KnapsackSolution knapsack_max(std::span<const int> weights, long long capacity) {
    if (capacity < 0) throw std::invalid_argument("knapsack_max: negative capacity");
    long long total = 0;
    for (int w : weights) {
        if (w < 0) throw std::invalid_argument("knapsack_max: negative weight");
        total += w;
    }
    const int n = static_cast<int>(weights.size());
    const long long cap = std::min(capacity, total);

    // dp[i][c]: best subset sum of the first i items within capacity c.
    std::vector<std::vector<long long>> dp(static_cast<size_t>(n) + 1,
                                           std::vector<long long>(static_cast<size_t>(cap) + 1, 0));
    for (int i = 1; i <= n; ++i) {
        const long long w = weights[static_cast<size_t>(i - 1)];
        for (long long c = 0; c <= cap; ++c) {
            long long best = dp[static_cast<size_t>(i - 1)][static_cast<size_t>(c)];
            if (w <= c) best = std::max(best, dp[static_cast<size_t>(i - 1)][static_cast<size_t>(c - w)] + w);
            dp[static_cast<size_t>(i)][static_cast<size_t>(c)] = best;
        }
    }

    KnapsackSolution sol;
    sol.best_value = dp[static_cast<size_t>(n)][static_cast<size_t>(cap)];
    long long c = cap;
    for (int i = n; i >= 1; --i) {
        // Excluded whenever the value survives without item i; this drops the
        // highest possible indices and all zero-weight items.
        if (dp[static_cast<size_t>(i)][static_cast<size_t>(c)] ==
            dp[static_cast<size_t>(i - 1)][static_cast<size_t>(c)])
            continue;
        sol.chosen.push_back(i - 1);
        c -= weights[static_cast<size_t>(i - 1)];
    }
    std::reverse(sol.chosen.begin(), sol.chosen.end());
    return sol;
}

std::optional<Partition> decompose_profile(std::span<const int> profile, long long R) {
    if (R < 0) throw std::invalid_argument("decompose_profile: R must be >= 0");
    const int n = static_cast<int>(profile.size());
    long long total = 0;
    for (int w : profile) total += w;

    if (total <= R) {
        Partition part;
        part.J.resize(static_cast<size_t>(n));
        std::iota(part.J.begin(), part.J.end(), 0);
        return part;
    }

    const KnapsackSolution sol = knapsack_max(profile, R);
    if (total - sol.best_value > R) return std::nullopt;

    Partition part;
    part.I = sol.chosen;
    size_t next = 0;
    for (int i = 0; i < n; ++i) {
        if (next < part.I.size() && part.I[next] == i)
            ++next;
        else
            part.J.push_back(i);
    }
    return part;
}

std::optional<Partition> decompose(const NrtMatrix& x, int R) {
    return decompose_profile(row_weight_profile(x), R);
}

bool balls_intersect(const NrtMatrix& x, const NrtMatrix& y, int R) {
    return decompose_profile(distance_profile(x, y), R).has_value();
}

}  // namespace nrt

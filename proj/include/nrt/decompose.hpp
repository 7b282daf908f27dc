#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nrt/core.hpp"

// Whether two R-balls intersect reduces to a 0-1 knapsack over the row
// weights of the difference: maximize a subset sum under capacity R and test
// whether the leftover also fits under R.

namespace nrt {

/// A split of the row indices {0,...,s-1}: I and J partition them and, as a
/// decomposability witness, both restricted weights are <= R.
struct Partition {
    std::vector<int> I;
    std::vector<int> J;
};

struct KnapsackSolution {
    long long best_value = 0;
    std::vector<int> chosen;  // ascending indices
};

/// Subset-sum maximization (values equal weights): pick indices whose total
/// weight is as large as possible without exceeding capacity. Reconstruction
/// prefers excluding the highest index first, so the witness is canonical
/// and zero-weight items always stay out of the chosen set.
KnapsackSolution knapsack_max(std::span<const int> weights, long long capacity);

/// Decide R-decomposability of a row-weight profile, returning the canonical
/// witness partition or nullopt. Profiles with total weight <= R get (∅, all).
std::optional<Partition> decompose_profile(std::span<const int> profile, long long R);

/// Witness partition making both halves of x weigh <= R, if any.
std::optional<Partition> decompose(const NrtMatrix& x, int R);

inline bool is_decomposable(const NrtMatrix& x, int R) { return decompose(x, R).has_value(); }

/// B(x,R) and B(y,R) intersect iff x-y is R-decomposable.
bool balls_intersect(const NrtMatrix& x, const NrtMatrix& y, int R);

}  // namespace nrt

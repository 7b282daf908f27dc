#pragma once

#include <cstdint>
#include <optional>

#include "nrt/codes.hpp"
#include "nrt/core.hpp"

// Exhaustive perfect-code search as exact cover by ball translates: pick the
// smallest uncovered point, branch on the centers whose ball contains it and
// stays disjoint from everything chosen so far (disjointness decided by the
// knapsack criterion, so the search doubles as a stress test of it). With
// 0 in C fixed, translation invariance makes the search exhaustive.

namespace nrt {

struct SearchConfig {
    std::uint64_t max_nodes = 10'000'000;
    int parallel_width = 1;     // branch-parallel workers at the first choice point
    bool use_symmetry = true;   // normalize 0 into the code
    bool validate_steps = false;  // re-check pairwise packing after every placement
};

enum class SearchStatus { Found, ExhaustedNone, Aborted };

struct SearchOutcome {
    SearchStatus status;
    std::optional<Code> code;
    std::uint64_t nodes_explored = 0;
};

/// Finds an R-perfect code or proves none exists (under 0 in C when
/// use_symmetry is set, which loses no generality). Divisibility failure of
/// the ball volume returns ExhaustedNone immediately. Node budget expiry
/// returns Aborted, never a silent negative.
SearchOutcome search_perfect(const Params& params, const SearchConfig& config = {});

/// Admissible lower bound on how many more disjoint balls a cover needs.
std::uint64_t greedy_cover_lower_bound(std::uint64_t uncovered_points, std::uint64_t ball_points);

/// The fresh-space bound q^{s*r} / |B(R)|, rounded up.
std::uint64_t greedy_cover_lower_bound(const Params& params);

}  // namespace nrt

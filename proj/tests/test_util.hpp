#pragma once

// Brute-force oracles shared by the test suites. Everything here computes
// straight from definitions (odometer enumeration, direct weight scans,
// all-subsets checks) and stays independent of the library's own
// enumeration, knapsack and search paths that it is used to cross-check.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "nrt/core.hpp"

namespace testutil {

inline bool advance_digits(std::vector<int>& digits, int q) {
    for (size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < q) return true;
        digits[k] = 0;
    }
    return false;
}

/// Every matrix of the space, by direct odometer enumeration.
inline std::vector<nrt::NrtMatrix> enumerate_space(const nrt::Params& params) {
    std::vector<nrt::NrtMatrix> out;
    std::vector<int> digits(static_cast<size_t>(params.cells()), 0);
    do {
        out.emplace_back(params, digits);
    } while (advance_digits(digits, params.q));
    return out;
}

/// NRT weight straight from the definition.
inline int naive_weight(const nrt::NrtMatrix& x) {
    int total = 0;
    for (int i = 0; i < x.rows(); ++i) {
        int row_w = 0;
        for (int j = 0; j < x.cols(); ++j)
            if (x.entry(i, j) != 0) row_w = j + 1;
        total += row_w;
    }
    return total;
}

inline int naive_distance(const nrt::NrtMatrix& x, const nrt::NrtMatrix& y) {
    const int q = x.params().q;
    std::vector<int> diff;
    for (int k = 0; k < static_cast<int>(x.entries().size()); ++k)
        diff.push_back((x.entries()[static_cast<size_t>(k)] -
                        y.entries()[static_cast<size_t>(k)] + q) % q);
    return naive_weight(nrt::NrtMatrix(x.params(), diff));
}

/// B(center, R) as a set, by filtering the whole space.
inline std::set<nrt::NrtMatrix> naive_ball(const nrt::NrtMatrix& center, int R) {
    std::set<nrt::NrtMatrix> out;
    for (const auto& y : enumerate_space(center.params()))
        if (naive_distance(center, y) <= R) out.insert(y);
    return out;
}

/// R-decomposability by trying all 2^s partitions.
inline bool naive_decomposable(const std::vector<int>& profile, long long R) {
    const size_t s = profile.size();
    for (std::uint64_t mask = 0; mask < (1ULL << s); ++mask) {
        long long w_i = 0, w_j = 0;
        for (size_t k = 0; k < s; ++k)
            (mask >> k & 1 ? w_i : w_j) += profile[k];
        if (w_i <= R && w_j <= R) return true;
    }
    return false;
}

inline std::vector<int> random_profile(std::mt19937_64& rng, int s, int max_entry) {
    std::uniform_int_distribution<int> entry(0, max_entry);
    std::vector<int> out(static_cast<size_t>(s));
    for (auto& e : out) e = entry(rng);
    return out;
}

/// A matrix whose i-th row is e_{profile[i]}, realizing a weight profile.
inline nrt::NrtMatrix matrix_with_profile(const nrt::Params& params,
                                          const std::vector<int>& profile) {
    std::vector<std::vector<int>> rows;
    for (int w : profile) rows.push_back(nrt::canonical_row(w, params.r));
    return nrt::NrtMatrix::from_rows(params, rows);
}

}  // namespace testutil

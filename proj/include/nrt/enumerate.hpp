#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "nrt/core.hpp"

// Exact counting and deterministic enumeration. Counts use arbitrary
// precision throughout: divisibility verdicts must be exact and q^{s*r}
// outgrows 64 bits quickly.

namespace nrt {

using BigInt = boost::multiprecision::cpp_int;

/// q^{s*r}, the number of points of the space.
BigInt space_size(const Params& params);

/// c[0..r] with c[0] = 1 and c[j] = (q-1) * q^{j-1}: how many rows of each
/// NRT weight exist. Sums to q^r.
std::vector<BigInt> row_weight_counts(int q, int r);

/// counts[w] = number of matrices of weight exactly w, for w = 0..s*r.
/// The s-fold convolution of row_weight_counts.
struct WeightDistribution {
    Params params;
    std::vector<BigInt> counts;
};

WeightDistribution weight_distribution(const Params& params);

/// |B(R)| = sum of counts[w] for w <= R. Equals q^{s*r} once R >= s*r.
BigInt ball_volume(const Params& params);
BigInt ball_volume(int q, int s, int r, int R);

/// Lazily enumerates all q^{s*r} matrices exactly once, in lexicographic
/// order on the row-major entries (the zero matrix first).
class SpaceRange {
  public:
    explicit SpaceRange(const Params& params) : params_(params) {}

    struct sentinel {};

    class iterator {
      public:
        explicit iterator(const Params& params);
        const NrtMatrix& operator*() const { return current_; }
        iterator& operator++();
        friend bool operator==(const iterator& it, sentinel) { return it.done_; }

      private:
        NrtMatrix current_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(params_); }
    sentinel end() const { return {}; }

  private:
    Params params_;
};

inline SpaceRange space(const Params& params) { return SpaceRange(params); }

/// All rows of length r over Z_q with NRT weight exactly j, in lexicographic
/// order. Size (q-1)*q^{j-1} for j >= 1, just the zero row for j = 0.
std::vector<std::vector<int>> rows_of_weight(int q, int r, int j);

/// The ball B(R) around zero, each point exactly once. Order is
/// deterministic: weight compositions (w_1,...,w_s) with sum <= R are
/// visited recursively with w_1 varying slowest and each w_i ascending from
/// 0, rows of a fixed weight in lexicographic order. The zero matrix comes
/// first. Throws std::length_error when the volume exceeds max_points.
std::vector<NrtMatrix> ball_offsets(const Params& params, int R,
                                    std::uint64_t max_points = UINT64_MAX);

/// B(center, R) = center + B(R), in ball_offsets order.
std::vector<NrtMatrix> ball(const NrtMatrix& center, int R,
                            std::uint64_t max_points = UINT64_MAX);

/// q^{s*r} as uint64; throws std::invalid_argument if it does not fit.
std::uint64_t space_size_u64(const Params& params);

/// Mixed-radix rank of x among all matrices, consistent with the
/// lexicographic enumeration order (zero matrix has index 0).
std::uint64_t encode_index(const NrtMatrix& x);
NrtMatrix decode_index(const Params& params, std::uint64_t index);

}  // namespace nrt

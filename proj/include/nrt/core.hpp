#pragma once

#include <compare>
#include <span>
#include <vector>

// Matrix space Z_q^{s x r} with the NRT (Niederreiter-Rosenbloom-Tsfasman)
// weight: a row contributes the largest 1-based index of a nonzero entry,
// rows add up. All values here are immutable after construction; every
// operation returns a fresh value.

namespace nrt {

/// Parameter tuple (q, s, r, R): alphabet size, chains (rows), chain length
/// (columns), radius. t and delta are always derived, never stored.
struct Params {
    int q;  // alphabet size, >= 2
    int s;  // rows, >= 1
    int r;  // columns, >= 1
    int R;  // radius, >= 0

    Params(int q, int s, int r, int R);

    long long t() const { return static_cast<long long>(s) - R - 1; }
    long long delta() const {
        return (static_cast<long long>(r) + 1) * (static_cast<long long>(R) + 1) -
               static_cast<long long>(s) * r - 1;
    }
    long long cells() const { return static_cast<long long>(s) * r; }

    /// Same metric space: alphabet and shape agree (R is not part of the space).
    bool same_space(const Params& o) const { return q == o.q && s == o.s && r == o.r; }

    friend bool operator==(const Params&, const Params&) = default;
};

/// A point of the space: an s x r matrix with entries in [0, q-1],
/// stored row-major as least nonnegative residues.
class NrtMatrix {
  public:
    NrtMatrix(Params params, std::vector<int> entries);

    static NrtMatrix zero(const Params& params);
    static NrtMatrix from_rows(const Params& params, const std::vector<std::vector<int>>& rows);

    const Params& params() const { return params_; }
    int rows() const { return params_.s; }
    int cols() const { return params_.r; }

    int entry(int i, int j) const { return entries_[static_cast<size_t>(i) * params_.r + j]; }
    std::span<const int> row(int i) const {
        return {entries_.data() + static_cast<size_t>(i) * params_.r,
                static_cast<size_t>(params_.r)};
    }
    std::span<const int> entries() const { return entries_; }

    // Ordering is lexicographic on the row-major entries (the canonical code
    // order); alphabet and shape compare first, R is ignored.
    friend std::strong_ordering operator<=>(const NrtMatrix& a, const NrtMatrix& b);
    friend bool operator==(const NrtMatrix& a, const NrtMatrix& b);

  private:
    Params params_;
    std::vector<int> entries_;
};

/// A bijection of the row indices {0, ..., s-1}.
class RowPermutation {
  public:
    explicit RowPermutation(std::vector<int> mapping);

    static RowPermutation identity(int s);
    /// theta(i) = i+1 (mod s), the shift used by the two-element sticky set.
    static RowPermutation cyclic_shift(int s);

    int size() const { return static_cast<int>(mapping_.size()); }
    int apply(int i) const { return mapping_[i]; }
    RowPermutation inverse() const;

  private:
    std::vector<int> mapping_;
};

/// NRT weight of one row: 0 for the zero row, otherwise the largest
/// 1-based index of a nonzero entry.
int row_weight(std::span<const int> row);

/// Total NRT weight: sum of row weights. In [0, s*r].
int weight(const NrtMatrix& x);

/// Row weights of x as a vector of length s.
std::vector<int> row_weight_profile(const NrtMatrix& x);

/// Entrywise difference mod q.
NrtMatrix difference(const NrtMatrix& x, const NrtMatrix& y);

/// NRT distance d(x,y) = w(x-y). Throws std::invalid_argument on
/// alphabet/shape mismatch.
int distance(const NrtMatrix& x, const NrtMatrix& y);

/// Per-row NRT distances, i.e. the row weight profile of x-y.
std::vector<int> distance_profile(const NrtMatrix& x, const NrtMatrix& y);

/// Entrywise sum mod q. Translations are isometries.
NrtMatrix translate(const NrtMatrix& x, const NrtMatrix& z);

/// Row i of the result is row theta^{-1}(i) of x; an isometry.
NrtMatrix apply_row_permutation(const NrtMatrix& x, const RowPermutation& theta);

/// Canonical row e_j of length r: the zero row for j = 0, else a single 1 at
/// 1-based position j, so row_weight(e_j) = j. Throws for j outside [0, r].
std::vector<int> canonical_row(int j, int r);

}  // namespace nrt

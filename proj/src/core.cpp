#include "nrt/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nrt {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Params::Params(int q_, int s_, int r_, int R_) : q(q_), s(s_), r(r_), R(R_) {
    require(q >= 2, "Params: q must be >= 2");
    require(s >= 1, "Params: s must be >= 1");
    require(r >= 1, "Params: r must be >= 1");
    require(R >= 0, "Params: R must be >= 0");
}

NrtMatrix::NrtMatrix(Params params, std::vector<int> entries)
    : params_(params), entries_(std::move(entries)) {
    require(entries_.size() == static_cast<size_t>(params_.cells()),
            "NrtMatrix: entry count does not match s*r");
    for (int e : entries_) require(0 <= e && e < params_.q, "NrtMatrix: entry out of [0, q-1]");
}

NrtMatrix NrtMatrix::zero(const Params& params) {
    return NrtMatrix(params, std::vector<int>(static_cast<size_t>(params.cells()), 0));
}

NrtMatrix NrtMatrix::from_rows(const Params& params, const std::vector<std::vector<int>>& rows) {
    require(rows.size() == static_cast<size_t>(params.s), "from_rows: wrong row count");
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(params.cells()));
    for (const auto& row : rows) {
        require(row.size() == static_cast<size_t>(params.r), "from_rows: wrong row length");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return NrtMatrix(params, std::move(flat));
}

std::strong_ordering operator<=>(const NrtMatrix& a, const NrtMatrix& b) {
    if (auto c = a.params_.q <=> b.params_.q; c != 0) return c;
    if (auto c = a.params_.s <=> b.params_.s; c != 0) return c;
    if (auto c = a.params_.r <=> b.params_.r; c != 0) return c;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                  b.entries_.begin(), b.entries_.end());
}

bool operator==(const NrtMatrix& a, const NrtMatrix& b) {
    return a.params_.same_space(b.params_) && a.entries_ == b.entries_;
}

RowPermutation::RowPermutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
    const int s = static_cast<int>(mapping_.size());
    require(s >= 1, "RowPermutation: empty mapping");
    std::vector<char> seen(static_cast<size_t>(s), 0);
    for (int v : mapping_) {
        require(0 <= v && v < s && !seen[static_cast<size_t>(v)],
                "RowPermutation: mapping is not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
}

RowPermutation RowPermutation::identity(int s) {
    std::vector<int> m(static_cast<size_t>(s));
    std::iota(m.begin(), m.end(), 0);
    return RowPermutation(std::move(m));
}

RowPermutation RowPermutation::cyclic_shift(int s) {
    std::vector<int> m(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) m[static_cast<size_t>(i)] = (i + 1) % s;
    return RowPermutation(std::move(m));
}

RowPermutation RowPermutation::inverse() const {
    std::vector<int> inv(mapping_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<size_t>(mapping_[static_cast<size_t>(i)])] = i;
    return RowPermutation(std::move(inv));
}

int row_weight(std::span<const int> row) {
    for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
        if (row[static_cast<size_t>(j)] != 0) return j + 1;
    return 0;
}

int weight(const NrtMatrix& x) {
    int w = 0;
    for (int i = 0; i < x.rows(); ++i) w += row_weight(x.row(i));
    return w;
}

std::vector<int> row_weight_profile(const NrtMatrix& x) {
    std::vector<int> p(static_cast<size_t>(x.rows()));
    for (int i = 0; i < x.rows(); ++i) p[static_cast<size_t>(i)] = row_weight(x.row(i));
    return p;
}

namespace {

void check_same_space(const NrtMatrix& x, const NrtMatrix& y) {
    if (!x.params().same_space(y.params()))
        throw std::invalid_argument("operands live in different NRT spaces");
}

}  // namespace

NrtMatrix difference(const NrtMatrix& x, const NrtMatrix& y) {
    check_same_space(x, y);
    const int q = x.params().q;
    std::vector<int> d(x.entries().size());
    for (size_t k = 0; k < d.size(); ++k) d[k] = (x.entries()[k] - y.entries()[k] + q) % q;
    return NrtMatrix(x.params(), std::move(d));
}

int distance(const NrtMatrix& x, const NrtMatrix& y) {
    check_same_space(x, y);
    const int r = x.cols();
    int total = 0;
    for (int i = 0; i < x.rows(); ++i) {
        auto a = x.row(i), b = y.row(i);
        for (int j = r - 1; j >= 0; --j) {
            if (a[static_cast<size_t>(j)] != b[static_cast<size_t>(j)]) {
                total += j + 1;
                break;
            }
        }
    }
    return total;
}

std::vector<int> distance_profile(const NrtMatrix& x, const NrtMatrix& y) {
    check_same_space(x, y);
    const int r = x.cols();
    std::vector<int> p(static_cast<size_t>(x.rows()), 0);
    for (int i = 0; i < x.rows(); ++i) {
        auto a = x.row(i), b = y.row(i);
        for (int j = r - 1; j >= 0; --j) {
            if (a[static_cast<size_t>(j)] != b[static_cast<size_t>(j)]) {
                p[static_cast<size_t>(i)] = j + 1;
                break;
            }
        }
    }
    return p;
}

NrtMatrix translate(const NrtMatrix& x, const NrtMatrix& z) {
    check_same_space(x, z);
    const int q = x.params().q;
    std::vector<int> sum(x.entries().size());
    for (size_t k = 0; k < sum.size(); ++k) sum[k] = (x.entries()[k] + z.entries()[k]) % q;
    return NrtMatrix(x.params(), std::move(sum));
}

NrtMatrix apply_row_permutation(const NrtMatrix& x, const RowPermutation& theta) {
    if (theta.size() != x.rows())
        throw std::invalid_argument("apply_row_permutation: permutation size != s");
    std::vector<int> out(x.entries().size());
    const int r = x.cols();
    for (int i = 0; i < x.rows(); ++i) {
        auto src = x.row(i);
        std::copy(src.begin(), src.end(),
                  out.begin() + static_cast<size_t>(theta.apply(i)) * static_cast<size_t>(r));
    }
    return NrtMatrix(x.params(), std::move(out));
}

std::vector<int> canonical_row(int j, int r) {
    if (j < 0 || j > r) throw std::invalid_argument("canonical_row: j outside [0, r]");
    std::vector<int> row(static_cast<size_t>(r), 0);
    if (j > 0) row[static_cast<size_t>(j - 1)] = 1;
    return row;
}

}  // namespace nrt

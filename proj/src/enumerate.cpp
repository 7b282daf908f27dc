#include "nrt/enumerate.hpp"

#include <limits>
#include <stdexcept>

namespace nrt {

BigInt space_size(const Params& params) {
    return boost::multiprecision::pow(BigInt(params.q), static_cast<unsigned>(params.cells()));
}

std::vector<BigInt> row_weight_counts(int q, int r) {
    if (q < 2 || r < 1) throw std::invalid_argument("row_weight_counts: need q >= 2, r >= 1");
    std::vector<BigInt> c(static_cast<size_t>(r) + 1);
    c[0] = 1;
    BigInt power = 1;  // q^{j-1}
    for (int j = 1; j <= r; ++j) {
        c[static_cast<size_t>(j)] = BigInt(q - 1) * power;
        power *= q;
    }
    return c;
}

WeightDistribution weight_distribution(const Params& params) {
    const auto row_counts = row_weight_counts(params.q, params.r);
    std::vector<BigInt> counts{1};  // zero rows so far
    counts.reserve(static_cast<size_t>(params.cells()) + 1);
    for (int i = 0; i < params.s; ++i) {
        std::vector<BigInt> next(counts.size() + static_cast<size_t>(params.r), 0);
        for (size_t w = 0; w < counts.size(); ++w) {
            if (counts[w] == 0) continue;
            for (int j = 0; j <= params.r; ++j)
                next[w + static_cast<size_t>(j)] += counts[w] * row_counts[static_cast<size_t>(j)];
        }
        counts = std::move(next);
    }
    return {params, std::move(counts)};
}

BigInt ball_volume(const Params& params) {
    const auto dist = weight_distribution(params);
    const long long top = std::min<long long>(params.R, params.cells());
    BigInt total = 0;
    for (long long w = 0; w <= top; ++w) total += dist.counts[static_cast<size_t>(w)];
    return total;
}

BigInt ball_volume(int q, int s, int r, int R) { return ball_volume(Params(q, s, r, R)); }

SpaceRange::iterator::iterator(const Params& params) : current_(NrtMatrix::zero(params)) {}

SpaceRange::iterator& SpaceRange::iterator::operator++() {
    const Params& p = current_.params();
    std::vector<int> e(current_.entries().begin(), current_.entries().end());
    int k = static_cast<int>(e.size()) - 1;
    while (k >= 0) {
        if (++e[static_cast<size_t>(k)] < p.q) break;
        e[static_cast<size_t>(k)] = 0;
        --k;
    }
    if (k < 0)
        done_ = true;
    else
        current_ = NrtMatrix(p, std::move(e));
    return *this;
}

std::vector<std::vector<int>> rows_of_weight(int q, int r, int j) {
    if (j < 0 || j > r) throw std::invalid_argument("rows_of_weight: j outside [0, r]");
    std::vector<std::vector<int>> out;
    if (j == 0) {
        out.emplace_back(static_cast<size_t>(r), 0);
        return out;
    }
    // Entries before position j are free, position j is nonzero, rest is zero.
    std::vector<int> prefix(static_cast<size_t>(j - 1), 0);
    while (true) {
        for (int d = 1; d < q; ++d) {
            std::vector<int> row(static_cast<size_t>(r), 0);
            std::copy(prefix.begin(), prefix.end(), row.begin());
            row[static_cast<size_t>(j - 1)] = d;
            out.push_back(std::move(row));
        }
        int k = j - 2;
        while (k >= 0) {
            if (++prefix[static_cast<size_t>(k)] < q) break;
            prefix[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

namespace {

void emit_ball_rows(const Params& params, int row, int remaining,
                    std::vector<std::vector<int>>& chosen, std::vector<NrtMatrix>& out,
                    std::uint64_t max_points) {
    if (row == params.s) {
        if (out.size() >= max_points) throw std::length_error("ball enumeration budget exceeded");
        out.push_back(NrtMatrix::from_rows(params, chosen));
        return;
    }
    const int cap = std::min(params.r, remaining);
    for (int w = 0; w <= cap; ++w) {
        for (auto& candidate : rows_of_weight(params.q, params.r, w)) {
            chosen.push_back(std::move(candidate));
            emit_ball_rows(params, row + 1, remaining - w, chosen, out, max_points);
            chosen.pop_back();
        }
    }
}

}  // namespace

std::vector<NrtMatrix> ball_offsets(const Params& params, int R, std::uint64_t max_points) {
    if (R < 0) throw std::invalid_argument("ball_offsets: R must be >= 0");
    std::vector<NrtMatrix> out;
    std::vector<std::vector<int>> chosen;
    chosen.reserve(static_cast<size_t>(params.s));
    emit_ball_rows(params, 0, R, chosen, out, max_points);
    return out;
}

std::vector<NrtMatrix> ball(const NrtMatrix& center, int R, std::uint64_t max_points) {
    auto offsets = ball_offsets(center.params(), R, max_points);
    std::vector<NrtMatrix> out;
    out.reserve(offsets.size());
    for (const auto& off : offsets) out.push_back(translate(center, off));
    return out;
}

std::uint64_t space_size_u64(const Params& params) {
    const BigInt n = space_size(params);
    if (n > std::numeric_limits<std::uint64_t>::max() / 2)
        throw std::invalid_argument("space too large for 64-bit enumeration");
    return n.convert_to<std::uint64_t>();
}

std::uint64_t encode_index(const NrtMatrix& x) {
    space_size_u64(x.params());  // overflow guard
    std::uint64_t idx = 0;
    for (int e : x.entries()) idx = idx * static_cast<std::uint64_t>(x.params().q) +
                                     static_cast<std::uint64_t>(e);
    return idx;
}

NrtMatrix decode_index(const Params& params, std::uint64_t index) {
    std::vector<int> e(static_cast<size_t>(params.cells()));
    for (size_t k = e.size(); k-- > 0;) {
        e[k] = static_cast<int>(index % static_cast<std::uint64_t>(params.q));
        index /= static_cast<std::uint64_t>(params.q);
    }
    if (index != 0) throw std::invalid_argument("decode_index: index out of range");
    return NrtMatrix(params, std::move(e));
}

}  // namespace nrt

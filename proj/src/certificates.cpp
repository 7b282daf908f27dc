#include "nrt/certificates.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nrt/decompose.hpp"
#include "nrt/enumerate.hpp"

namespace nrt {

namespace {

void check_budget(const BigInt& needed, std::uint64_t budget, const char* what) {
    if (needed > budget)
        throw BudgetExceeded(std::string(what) + ": would enumerate " + needed.str() +
                             " points, budget is " + std::to_string(budget));
}

NrtMatrix standard_sticky_set_vector(const Params& params) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<size_t>(params.s));
    for (int i = 0; i < params.s; ++i)
        rows.push_back(canonical_row(i <= params.R ? 1 : 0, params.r));
    return NrtMatrix::from_rows(params, rows);
}

}  // namespace

StickyVectorCert build_sticky_vector(const Params& params) {
    if (params.s < 2) throw std::invalid_argument("build_sticky_vector: needs s >= 2");
    if (params.delta() < 1) throw std::invalid_argument("build_sticky_vector: needs delta >= 1");
    if (params.R + 1 > params.cells())
        throw std::invalid_argument("build_sticky_vector: B(R) is the whole space");

    // R+1 = (ell+1)s - h with ell*s <= R+1 < (ell+1)s and 1 <= h <= s.
    const int ell = (params.R + 1) / params.s;
    const int h = (ell + 1) * params.s - (params.R + 1);

    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<size_t>(params.s));
    for (int i = 0; i < params.s; ++i)
        rows.push_back(canonical_row(i < params.s - h ? ell + 1 : ell, params.r));
    return {params, ell, h, NrtMatrix::from_rows(params, rows)};
}

std::vector<NrtMatrix> qualifying_centers(const NrtMatrix& p, int R, std::uint64_t budget) {
    Params at_r = p.params();
    at_r.R = R;
    check_budget(ball_volume(at_r), budget, "qualifying_centers");
    std::vector<NrtMatrix> out;
    for (auto& center : ball(p, R))
        if (!decompose(center, R)) out.push_back(std::move(center));
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_sticky_vector(const StickyVectorCert& cert, std::uint64_t budget) {
    if (cert.params.delta() < 1)
        throw std::invalid_argument("verify_sticky_vector: certificate requires delta >= 1");
    if (weight(cert.m) != cert.params.R + 1)
        throw std::invalid_argument("verify_sticky_vector: w(m) != R+1");
    // m is sticky for B(R) iff no ball covers m while avoiding B(R).
    return qualifying_centers(cert.m, cert.params.R, budget).empty();
}

StickySetCert build_sticky_set(const Params& params) {
    if (params.s < 2 || params.r < 2)
        throw std::invalid_argument("build_sticky_set: needs s, r >= 2");
    if (params.delta() != 0) throw std::invalid_argument("build_sticky_set: needs delta = 0");

    NrtMatrix m = standard_sticky_set_vector(params);
    NrtMatrix shifted = apply_row_permutation(m, RowPermutation::cyclic_shift(params.s));
    return {params, std::move(m), std::move(shifted)};
}

bool verify_sticky_set(const StickySetCert& cert, std::uint64_t budget) {
    if (cert.params.delta() != 0)
        throw std::invalid_argument("verify_sticky_set: certificate requires delta = 0");
    const int R = cert.params.R;

    Params at_r = cert.params;
    at_r.R = R;
    check_budget(BigInt(2) * ball_volume(at_r), budget, "verify_sticky_set");
    const auto q_m = qualifying_centers(cert.m, R, budget);
    const auto q_shift = qualifying_centers(cert.m_shift, R, budget);

    // Any disjoint cover of {m, m'} avoiding B(R) would pick one center from
    // each list; it is defeated iff every such pair collides.
    for (const auto& c : q_m)
        for (const auto& c2 : q_shift)
            if (c == c2 || !balls_intersect(c, c2, R)) return false;
    return true;
}

bool check_restriction_lemma(const Params& params, const NrtMatrix& c) {
    if (params.delta() > 0)
        throw std::invalid_argument("check_restriction_lemma: needs delta <= 0");
    const auto e1 = canonical_row(1, params.r);
    int tail_weight = 0;
    for (int i = 0; i < params.s; ++i) {
        if (i <= params.R) {
            auto row = c.row(i);
            if (!std::equal(row.begin(), row.end(), e1.begin())) return false;
        } else {
            tail_weight += row_weight(c.row(i));
        }
    }
    return tail_weight == params.R;
}

std::vector<NrtMatrix> r_closure(const std::vector<NrtMatrix>& S, int R, std::uint64_t budget) {
    if (S.empty()) throw std::invalid_argument("r_closure: S must be non-empty");
    const Params params = S.front().params();
    for (const auto& x : S)
        if (!x.params().same_space(params))
            throw std::invalid_argument("r_closure: S spans multiple spaces");

    const BigInt n_big = space_size(params);
    check_budget(n_big, budget, "r_closure");
    const std::uint64_t n = space_size_u64(params);

    std::uint64_t enumerated = n;

    // A point is outside the closure iff some ball avoiding S covers it.
    std::vector<std::uint8_t> reachable_by_avoiding(n, 0);
    const auto offsets = ball_offsets(params, R, budget);
    for (const auto& c : space(params)) {
        bool avoids = true;
        for (const auto& x : S) {
            if (distance(c, x) <= R) {
                avoids = false;
                break;
            }
        }
        if (!avoids) continue;
        enumerated += offsets.size();
        if (enumerated > budget) throw BudgetExceeded("r_closure: marking budget exceeded");
        for (const auto& off : offsets) reachable_by_avoiding[encode_index(translate(c, off))] = 1;
    }

    std::vector<NrtMatrix> closure;
    for (std::uint64_t i = 0; i < n; ++i)
        if (!reachable_by_avoiding[i]) closure.push_back(decode_index(params, i));
    return closure;
}

bool is_r_closed(const std::vector<NrtMatrix>& S, int R, std::uint64_t budget) {
    std::vector<NrtMatrix> sorted(S);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return r_closure(S, R, budget) == sorted;
}

}  // namespace nrt

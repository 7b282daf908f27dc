#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nrt/core.hpp"

// Non-existence witnesses for perfect codes. A vector m outside B(R) is
// R-sticky for B(R) when every R-ball containing m meets B(R); for delta >= 1
// one exists. For delta = 0 no single vector works, but the pair {m, m'}
// (m' a cyclic row shift of m) cannot be covered by disjoint R-balls that all
// avoid B(R). Verification is exhaustive and budgeted: over-large instances
// abort loudly, they never report an unverified result.

namespace nrt {

/// Thrown when an exhaustive check would enumerate more points than allowed.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Witness for delta >= 1: rows 1..s-h of m are e_{ell+1}, the rest e_ell,
/// so w(m) = (ell+1)s - h = R+1.
struct StickyVectorCert {
    Params params;
    int ell;
    int h;
    NrtMatrix m;
};

/// Witness pair for delta = 0: m has rows e_1 (R+1 times) then zeros,
/// m_shift is its cyclic row shift.
struct StickySetCert {
    Params params;
    NrtMatrix m;
    NrtMatrix m_shift;
};

/// Requires s >= 2, delta >= 1 and R+1 <= s*r (a point outside B(R) exists).
StickyVectorCert build_sticky_vector(const Params& params);

/// Exhaustively checks that every R-ball containing m meets B(R).
bool verify_sticky_vector(const StickyVectorCert& cert, std::uint64_t budget);

/// Requires s, r >= 2 and delta = 0.
StickySetCert build_sticky_set(const Params& params);

/// Exhaustively checks that no pair of disjoint R-balls covering {m, m'}
/// avoids B(R): every qualifying pair (c, c') has c != c' and intersecting
/// balls.
bool verify_sticky_set(const StickySetCert& cert, std::uint64_t budget);

/// Centers c with p in B(c,R) whose ball avoids B(R), i.e. the
/// counterexample candidates to p being R-sticky. Sorted.
std::vector<NrtMatrix> qualifying_centers(const NrtMatrix& p, int R, std::uint64_t budget);

/// Structural oracle for delta <= 0: a center c that covers the standard m
/// while avoiding B(R) must copy m on its first R+1 rows and spend exactly R
/// on the rest. Checks that shape on c.
bool check_restriction_lemma(const Params& params, const NrtMatrix& c);

/// cl_R(S): points p such that every R-ball containing p meets S. Computed
/// by full enumeration; S must be non-empty and share one space. Result is
/// sorted and always contains S.
std::vector<NrtMatrix> r_closure(const std::vector<NrtMatrix>& S, int R, std::uint64_t budget);

bool is_r_closed(const std::vector<NrtMatrix>& S, int R, std::uint64_t budget);

}  // namespace nrt

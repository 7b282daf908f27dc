#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nrt/codes.hpp"
#include "nrt/core.hpp"

// The verdict engine: classifies a parameter tuple (q, s, r, R) by applying
// the known existence and non-existence criteria in a fixed precedence
// order, with a machine-readable reason and, where possible, an executable
// construction recipe.

namespace nrt {

enum class Outcome { TrivialOnly, ExistsConstructive, Nonexistent, Unknown };

enum class Reason {
    // TrivialOnly
    RadiusZero,
    BallCoversSpace,
    // ExistsConstructive
    S1Construction,
    RepetitionCode,
    HammingCode,
    HammingParameters,  // prime-power q: existence known, construction not provided
    GolayParameters,    // recognized only, never constructed
    LiftFromRadiusOne,
    // Nonexistent
    DeltaNonnegative,
    SEqualsRPlusTwo,
    RadiusOneClassification,
    Divisibility,
    // Unknown
    NoApplicableRule,
};

struct Recipe {
    enum class Kind { S1Zero, Repetition, Hamming, LiftRepetition, LiftHamming };
    Kind kind;
    int i = 0;  // Hamming order
    int h = 0;  // lift width
};

struct Verdict {
    Params params;
    Outcome outcome;
    Reason reason;
    std::string detail;
    // Every non-existence rule that fires, in precedence order (first = reason).
    std::vector<Reason> nonexistence_reasons;
    std::optional<Recipe> recipe;
};

/// delta = (r+1)(R+1) - s*r - 1, equivalently r(R+1-s) + R.
long long delta(int s, int r, int R);

/// Applies, in order: R = 0 and R >= s*r (trivial radii); the s = 1
/// construction; the complete r = 1 classification; delta >= 0; s = R+2 with
/// R >= 2; the divisibility requirement |B(R)| | q^{s*r}; lifting a radius-1
/// code when R = 1. Anything left is Unknown.
Verdict verdict(const Params& params);

/// Verdicts for s in [1, s_max], r in [1, r_max], R in [1, min(R_max, s*r-1)],
/// in lexicographic (s, r, R) order.
std::vector<Verdict> scan(int q, int s_max, int r_max, int R_max);

/// Builds the code a constructive verdict promises. Throws if no recipe.
Code execute_recipe(const Verdict& v);

std::string_view outcome_name(Outcome o);
std::string_view reason_name(Reason r);

}  // namespace nrt

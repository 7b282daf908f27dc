#include "nrt/feasibility.hpp"

#include <stdexcept>

#include "nrt/enumerate.hpp"

namespace nrt {

long long delta(int s, int r, int R) { return Params(2, s, r, R).delta(); }

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(int n) {
    if (n < 2) return false;
    int p = 2;
    while (p * static_cast<long long>(p) <= n && n % p != 0) ++p;
    if (static_cast<long long>(p) * p > n) return true;  // n itself prime
    while (n % p == 0) n /= p;
    return n == 1;
}

/// i >= 2 with s = 1 + q + ... + q^{i-1}, if any.
std::optional<int> hamming_order(int q, int s) {
    long long sum = 1 + q, power = q;
    for (int i = 2; sum <= s; ++i) {
        if (sum == s) return i;
        power *= q;
        sum += power;
    }
    return std::nullopt;
}

/// The complete classification of perfect codes in the s x 1 (Hamming
/// metric) space: repetition, Hamming, or Golay parameters; nothing else.
Verdict classify_radius_one_space(const Params& p) {
    Verdict v{p, Outcome::Nonexistent, Reason::RadiusOneClassification, "", {}, std::nullopt};

    if (p.q == 2 && p.s % 2 == 1 && p.s >= 3 && p.R == (p.s - 1) / 2) {
        v.outcome = Outcome::ExistsConstructive;
        v.reason = Reason::RepetitionCode;
        v.detail = "binary repetition code, |C| = 2";
        v.recipe = Recipe{Recipe::Kind::Repetition, 0, 0};
        return v;
    }
    if (p.R == 1) {
        if (auto i = hamming_order(p.q, p.s); i && is_prime_power(p.q)) {
            if (is_prime(p.q)) {
                v.outcome = Outcome::ExistsConstructive;
                v.reason = Reason::HammingCode;
                v.detail = "Hamming code of order " + std::to_string(*i);
                v.recipe = Recipe{Recipe::Kind::Hamming, *i, 0};
            } else {
                v.outcome = Outcome::ExistsConstructive;
                v.reason = Reason::HammingParameters;
                v.detail = "Hamming parameters over a prime-power alphabet; construction needs a "
                           "field and is not provided here";
            }
            return v;
        }
    }
    if (p.q == 2 && p.s == 23 && p.R == 3) {
        v.outcome = Outcome::ExistsConstructive;
        v.reason = Reason::GolayParameters;
        v.detail = "binary Golay parameters, |C| = 2^12 (recognized, not constructed)";
        return v;
    }
    if (p.q == 3 && p.s == 11 && p.R == 2) {
        v.outcome = Outcome::ExistsConstructive;
        v.reason = Reason::GolayParameters;
        v.detail = "ternary Golay parameters, |C| = 3^6 (recognized, not constructed)";
        return v;
    }

    v.detail = "complete classification of the r = 1 (Hamming metric) case: parameters match "
               "no repetition, Hamming or Golay code";
    if (space_size(p) % ball_volume(p) != 0) v.nonexistence_reasons.push_back(Reason::Divisibility);
    v.nonexistence_reasons.insert(v.nonexistence_reasons.begin(), Reason::RadiusOneClassification);
    return v;
}

}  // namespace

Verdict verdict(const Params& p) {
    Verdict v{p, Outcome::Unknown, Reason::NoApplicableRule, "", {}, std::nullopt};

    if (p.R == 0) {
        v.outcome = Outcome::TrivialOnly;
        v.reason = Reason::RadiusZero;
        v.detail = "R = 0: only the whole space is 0-perfect";
        return v;
    }
    if (p.R >= p.cells()) {
        v.outcome = Outcome::TrivialOnly;
        v.reason = Reason::BallCoversSpace;
        v.detail = "B(R) is the whole space: only one-word codes are R-perfect";
        return v;
    }
    if (p.s == 1) {
        // R < r here since R < s*r.
        v.outcome = Outcome::ExistsConstructive;
        v.reason = Reason::S1Construction;
        v.detail = "prefix construction: any map from the q^(r-R) suffixes to R-prefixes";
        v.recipe = Recipe{Recipe::Kind::S1Zero, 0, 0};
        return v;
    }
    if (p.r == 1) return classify_radius_one_space(p);

    // s, r >= 2 from here on.
    const long long d = p.delta();
    if (d >= 0) v.nonexistence_reasons.push_back(Reason::DeltaNonnegative);
    if (p.s == p.R + 2 && p.R >= 2) v.nonexistence_reasons.push_back(Reason::SEqualsRPlusTwo);
    const BigInt volume = ball_volume(p);
    if (space_size(p) % volume != 0) v.nonexistence_reasons.push_back(Reason::Divisibility);

    if (!v.nonexistence_reasons.empty()) {
        v.outcome = Outcome::Nonexistent;
        v.reason = v.nonexistence_reasons.front();
        switch (v.reason) {
            case Reason::DeltaNonnegative:
                v.detail = "delta = " + std::to_string(d) +
                           (d >= 1 ? " >= 1: a sticky vector blocks every perfect code"
                                   : " = 0: a two-element sticky set blocks every perfect code");
                break;
            case Reason::SEqualsRPlusTwo:
                v.detail = "s = R+2 with R >= 2: projecting to r = R would give a delta = 0 "
                           "perfect code, which cannot exist";
                break;
            default:
                v.detail = "ball volume " + volume.str() + " does not divide q^(s*r) = " +
                           space_size(p).str();
                break;
        }
        return v;
    }

    if (p.R == 1) {
        const Verdict base = classify_radius_one_space(Params(p.q, p.s, 1, 1));
        if (base.outcome == Outcome::ExistsConstructive) {
            v.outcome = Outcome::ExistsConstructive;
            v.reason = Reason::LiftFromRadiusOne;
            v.detail = "lift of the radius-1 code in the s x 1 space by h = " +
                       std::to_string(p.r - 1) + " (" + base.detail + ")";
            if (base.recipe) {
                v.recipe = Recipe{base.recipe->kind == Recipe::Kind::Repetition
                                      ? Recipe::Kind::LiftRepetition
                                      : Recipe::Kind::LiftHamming,
                                  base.recipe->i, p.r - 1};
            }
            return v;
        }
    }

    v.detail = "no known criterion applies; existence is open here";
    return v;
}

std::vector<Verdict> scan(int q, int s_max, int r_max, int R_max) {
    if (q < 2 || s_max < 1 || r_max < 1 || R_max < 1)
        throw std::invalid_argument("scan: bounds must be >= 1 (q >= 2)");
    std::vector<Verdict> rows;
    for (int s = 1; s <= s_max; ++s)
        for (int r = 1; r <= r_max; ++r) {
            const int top = std::min<int>(R_max, s * r - 1);
            for (int R = 1; R <= top; ++R) rows.push_back(verdict(Params(q, s, r, R)));
        }
    return rows;
}

Code execute_recipe(const Verdict& v) {
    if (!v.recipe) throw std::invalid_argument("execute_recipe: verdict carries no recipe");
    const Params& p = v.params;
    switch (v.recipe->kind) {
        case Recipe::Kind::S1Zero:
            return construct_s1(
                p, [&](const std::vector<int>&) { return std::vector<int>(static_cast<size_t>(p.R), 0); });
        case Recipe::Kind::Repetition:
            return construct_repetition(p.s);
        case Recipe::Kind::Hamming:
            return construct_hamming(p.q, v.recipe->i);
        case Recipe::Kind::LiftRepetition:
            return lift_trivial(construct_repetition(p.s), v.recipe->h);
        case Recipe::Kind::LiftHamming:
            return lift_trivial(construct_hamming(p.q, v.recipe->i), v.recipe->h);
    }
    throw std::logic_error("execute_recipe: unhandled recipe kind");
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::TrivialOnly: return "TrivialOnly";
        case Outcome::ExistsConstructive: return "ExistsConstructive";
        case Outcome::Nonexistent: return "Nonexistent";
        case Outcome::Unknown: return "Unknown";
    }
    return "?";
}

std::string_view reason_name(Reason r) {
    switch (r) {
        case Reason::RadiusZero: return "RadiusZero";
        case Reason::BallCoversSpace: return "BallCoversSpace";
        case Reason::S1Construction: return "S1Construction";
        case Reason::RepetitionCode: return "RepetitionCode";
        case Reason::HammingCode: return "HammingCode";
        case Reason::HammingParameters: return "HammingParameters";
        case Reason::GolayParameters: return "GolayParameters";
        case Reason::LiftFromRadiusOne: return "LiftFromRadiusOne";
        case Reason::DeltaNonnegative: return "DeltaNonnegative";
        case Reason::SEqualsRPlusTwo: return "SEqualsRPlusTwo";
        case Reason::RadiusOneClassification: return "RadiusOneClassification";
        case Reason::Divisibility: return "Divisibility";
        case Reason::NoApplicableRule: return "NoApplicableRule";
    }
    return "?";
}

}  // namespace nrt

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "nrt/core.hpp"
#include "test_util.hpp"

using namespace nrt;

TEST_CASE("Params validates and derives t, delta") {
    const Params p(2, 3, 2, 1);
    CHECK(p.t() == 1);
    CHECK(p.delta() == -1);  // 3*2 - 6 - 1

    CHECK(Params(2, 2, 2, 1).delta() == 1);
    CHECK(Params(2, 4, 2, 2).delta() == 0);

    CHECK_THROWS_AS(Params(1, 1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Params(2, 0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Params(2, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Params(2, 1, 1, -1), std::invalid_argument);
}

TEST_CASE("delta identity delta = r(R+1-s) + R") {
    for (int s = 1; s <= 9; ++s)
        for (int r = 1; r <= 9; ++r)
            for (int R = 0; R <= 12; ++R) {
                const Params p(2, s, r, R);
                CHECK(p.delta() == static_cast<long long>(r) * (R + 1 - s) + R);
            }
}

TEST_CASE("row_weight basics") {
    CHECK(row_weight(std::vector<int>{0, 0, 0}) == 0);
    CHECK(row_weight(std::vector<int>{1, 0, 0}) == 1);
    CHECK(row_weight(std::vector<int>{1, 0, 2}) == 3);
}

TEST_CASE("weight adds row weights") {
    const Params p(2, 3, 2, 1);
    CHECK(weight(NrtMatrix::zero(p)) == 0);

    // three rows (0,1): weight 2 each
    const auto x = NrtMatrix::from_rows(p, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(weight(x) == 6);

    const Params p2(2, 2, 2, 1);
    CHECK(weight(NrtMatrix::from_rows(p2, {{1, 0}, {0, 1}})) == 3);
}

TEST_CASE("weight matches naive definition on a full small space") {
    const Params p(3, 2, 2, 1);
    for (const auto& x : testutil::enumerate_space(p)) CHECK(weight(x) == testutil::naive_weight(x));
}

TEST_CASE("distance examples") {
    const Params p(2, 1, 2, 1);
    const auto a = NrtMatrix::from_rows(p, {{1, 0}});
    const auto b = NrtMatrix::from_rows(p, {{0, 1}});
    CHECK(distance(a, a) == 0);
    CHECK(distance(a, b) == 2);  // difference (1,1)

    const Params p3(3, 1, 1, 0);
    CHECK(distance(NrtMatrix::from_rows(p3, {{1}}), NrtMatrix::from_rows(p3, {{2}})) == 1);

    const Params other(3, 1, 2, 1);
    CHECK_THROWS_AS(distance(a, NrtMatrix::zero(other)), std::invalid_argument);
}

TEST_CASE("metric axioms, exhaustive on q=2 s=2 r=2") {
    const Params p(2, 2, 2, 1);
    const auto pts = testutil::enumerate_space(p);
    for (const auto& x : pts)
        for (const auto& y : pts) {
            const int d = distance(x, y);
            CHECK(d == distance(y, x));
            CHECK((d == 0) == (x == y));
            for (const auto& z : pts) CHECK(d <= distance(x, z) + distance(z, y));
        }
}

TEST_CASE("translate: identity, self-inverse mod 2, mod-3 example") {
    const Params p(2, 2, 2, 1);
    const auto x = NrtMatrix::from_rows(p, {{1, 0}, {1, 1}});
    CHECK(translate(x, NrtMatrix::zero(p)) == x);
    CHECK(translate(x, x) == NrtMatrix::zero(p));

    const Params p3(3, 1, 2, 1);
    CHECK(translate(NrtMatrix::from_rows(p3, {{1, 2}}), NrtMatrix::from_rows(p3, {{2, 2}})) ==
          NrtMatrix::from_rows(p3, {{0, 1}}));
}

TEST_CASE("translation invariance of the distance, exhaustive q=2 s=2 r=2") {
    const Params p(2, 2, 2, 1);
    const auto pts = testutil::enumerate_space(p);
    for (const auto& x : pts)
        for (const auto& y : pts)
            for (const auto& z : pts)
                CHECK(distance(translate(x, z), translate(y, z)) == distance(x, y));
}

TEST_CASE("row permutations") {
    CHECK_THROWS_AS(RowPermutation({0, 0}), std::invalid_argument);

    const Params p(2, 2, 2, 1);
    const auto x = NrtMatrix::from_rows(p, {{1, 0}, {0, 1}});
    CHECK(apply_row_permutation(x, RowPermutation::identity(2)) == x);

    const auto swapped = apply_row_permutation(x, RowPermutation({1, 0}));
    CHECK(swapped == NrtMatrix::from_rows(p, {{0, 1}, {1, 0}}));
    CHECK(weight(swapped) == weight(x));

    // cyclic shift of (e1,e1,e1,0) is (0,e1,e1,e1)
    const Params p4(2, 4, 2, 2);
    const auto m = NrtMatrix::from_rows(p4, {{1, 0}, {1, 0}, {1, 0}, {0, 0}});
    const auto shifted = apply_row_permutation(m, RowPermutation::cyclic_shift(4));
    CHECK(shifted == NrtMatrix::from_rows(p4, {{0, 0}, {1, 0}, {1, 0}, {1, 0}}));
}

TEST_CASE("row permutation preserves weight on a full space") {
    const Params p(2, 3, 2, 1);
    const auto theta = RowPermutation({2, 0, 1});
    for (const auto& x : testutil::enumerate_space(p)) {
        CHECK(weight(apply_row_permutation(x, theta)) == weight(x));
        // theta^{-1} undoes theta
        CHECK(apply_row_permutation(apply_row_permutation(x, theta), theta.inverse()) == x);
    }
}

TEST_CASE("canonical_row") {
    CHECK(canonical_row(0, 3) == std::vector<int>{0, 0, 0});
    CHECK(canonical_row(1, 2) == std::vector<int>{1, 0});
    CHECK(canonical_row(2, 2) == std::vector<int>{0, 1});
    CHECK(row_weight(canonical_row(2, 2)) == 2);
    CHECK_THROWS_AS(canonical_row(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(canonical_row(-1, 2), std::invalid_argument);
}

TEST_CASE("ultrametric row lemma, exhaustive for q in {2,3}, r <= 4") {
    for (int q : {2, 3})
        for (int r = 1; r <= 4; ++r) {
            std::vector<std::vector<int>> rows;
            std::vector<int> digits(static_cast<size_t>(r), 0);
            do {
                rows.push_back(digits);
            } while (testutil::advance_digits(digits, q));

            for (const auto& a : rows)
                for (const auto& b : rows) {
                    std::vector<int> sum(a.size());
                    for (size_t k = 0; k < a.size(); ++k) sum[k] = (a[k] + b[k]) % q;
                    const int wa = row_weight(a), wb = row_weight(b), ws = row_weight(sum);
                    CHECK(ws <= std::max(wa, wb));
                    if (wa != wb) CHECK(ws == std::max(wa, wb));
                }
        }
}

TEST_CASE("matrix construction validates entries and shape") {
    const Params p(2, 2, 2, 1);
    CHECK_THROWS_AS(NrtMatrix(p, {0, 1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(NrtMatrix(p, {0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(NrtMatrix::from_rows(p, {{0, 1}}), std::invalid_argument);
}

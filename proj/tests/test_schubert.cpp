#include <doctest.h>

#include <vector>

#include "k3strat/schubert.hpp"

using namespace k3strat;

namespace {

WeylElement wB(const std::vector<int>& win) {
    return WeylElement::from_window(Family::B, win);
}

int brute_conjugate_length(const WeylElement& w, int i) {
    const WeylElement s = simple_reflection(w.family(), w.rank(), i);
    return length(multiply(s, multiply(w, s)));
}

}  // namespace

TEST_CASE("covers list the colength-one targets in index order") {
    const std::vector<CoverDatum> c1 = pieri_covers(wB({5, 2}));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].reflection_index == 1);
    CHECK(c1[0].source == wB({5, 2}));
    CHECK(c1[0].target == wB({2, 5}));

    CHECK(pieri_covers(WeylElement::identity(Family::B, 2)).empty());
    CHECK(pieri_covers(WeylElement::identity(Family::D, 3)).empty());

    const std::vector<CoverDatum> top = pieri_covers(wB({5, 4}));
    REQUIRE(top.size() == 2);
    CHECK(top[0].reflection_index == 1);
    CHECK(top[1].reflection_index == 2);

    for (const WeylElement& w : all_elements(Family::B, 3)) {
        const std::vector<CoverDatum> covers = pieri_covers(w);
        CHECK(covers.empty() == w.is_identity());
        int last = 0;
        for (const CoverDatum& c : covers) {
            CHECK(c.reflection_index > last);
            last = c.reflection_index;
            CHECK(length(c.target) == length(w) - 1);
            CHECK(c.target ==
                  multiply(w, simple_reflection(Family::B, 3, c.reflection_index)));
        }
        int descents = 0;
        for (int i = 1; i <= 3; ++i)
            if (is_right_descent(w, i)) ++descents;
        CHECK(static_cast<int>(covers.size()) == descents);
    }
}

TEST_CASE("cover classification matches the conjugate length directly") {
    CHECK(classify_cover(wB({2, 5}), 2) == CoverKind::InseparableDegreeP);
    // s_2 s_1 s_2 has window [4,5]; conjugating by s_2 leaves s_1, length 1
    CHECK(classify_cover(wB({4, 5}), 2) == CoverKind::DimensionLoss);

    // s_2 itself: the conjugate collapses back to s_2, so the length is kept
    CHECK(classify_cover(wB({1, 4}), 2) == CoverKind::InseparableDegreeP);

    CHECK_THROWS_AS(classify_cover(wB({2, 5}), 1), DomainError);  // index 1 excluded
    CHECK_THROWS_AS(classify_cover(wB({2, 1}), 2), DomainError);  // no descent at 2
    CHECK_THROWS_AS(classify_cover(wB({5, 2}), 3), DomainError);  // out of range

    for (Family f : {Family::B, Family::D}) {
        const int m = 3;
        for (const WeylElement& w : all_elements(f, m)) {
            for (int i = 2; i <= m; ++i) {
                if (!is_right_descent(w, i)) continue;
                const int conj = brute_conjugate_length(w, i);
                const int base = length(w);
                REQUIRE((conj == base || conj == base - 2));
                CHECK(classify_cover(w, i) == (conj == base
                                                   ? CoverKind::InseparableDegreeP
                                                   : CoverKind::DimensionLoss));
            }
        }
    }
}

TEST_CASE("cover kind names") {
    CHECK(cover_kind_name(CoverKind::InseparableDegreeP) == "InseparableDegreeP");
    CHECK(cover_kind_name(CoverKind::DimensionLoss) == "DimensionLoss");
}

TEST_CASE("poincare polynomials count elements by length") {
    const RationalPolynomial b2 = poincare_polynomial(Family::B, 2);
    CHECK(b2.coeffs() == std::vector<Rational>{1, 2, 2, 2, 1});
    CHECK(b2(Rational(3)) == Rational(160));
    CHECK(b2(Rational(1)) == Rational(8));

    CHECK(poincare_polynomial(Family::B, 1) ==
          RationalPolynomial(std::vector<Rational>{1, 1}));

    SUBCASE("factorization into q-integers of the degrees") {
        // odd family degrees 2,4,...,2m; even family degrees 2,4,...,2m-2 and m
        auto product_of = [](const std::vector<int>& degrees) {
            RationalPolynomial acc{Rational(1)};
            for (int d : degrees) acc = acc * RationalPolynomial::q_integer(d);
            return acc;
        };
        CHECK(b2 == product_of({2, 4}));
        CHECK(poincare_polynomial(Family::B, 3) == product_of({2, 4, 6}));
        CHECK(poincare_polynomial(Family::D, 2) == product_of({2, 2}));
        CHECK(poincare_polynomial(Family::D, 3) == product_of({2, 4, 3}));
        CHECK(poincare_polynomial(Family::D, 4) == product_of({2, 4, 6, 4}));
    }

    CHECK_THROWS_AS(poincare_polynomial(Family::B, 5), DomainError);
    CHECK_THROWS_AS(poincare_polynomial(Family::C, 2), DomainError);
}

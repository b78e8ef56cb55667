#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "k3strat/qflag.hpp"
#include "k3strat/rational.hpp"

using namespace k3strat;

namespace {

Row unit(int n, int i) {
    Row r(n, 0);
    r[i - 1] = 1;
    return r;
}

// The complete flag whose isotropic steps are spanned by e_{w(1)}, ..., e_{w(m)}.
IsotropicFlag coordinate_flag(const QuadraticSpace& V, const WeylElement& w) {
    Matrix rows;
    for (int j = 1; j <= V.n / 2; ++j) rows.push_back(unit(V.n, w.apply(j)));
    return complete_flag(V, IsotropicFlag::from_chain(V, rows));
}

int intersection_dim(const Matrix& a, const Matrix& b, int p) {
    Matrix stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return static_cast<int>(a.size() + b.size()) - rank_of(stacked, p);
}

}  // namespace

TEST_CASE("split space construction and the anti-diagonal pairing") {
    const QuadraticSpace V = make_split_space(5, 3);
    CHECK(V.n == 5);
    CHECK(V.p == 3);
    CHECK(V.pair(unit(5, 1), unit(5, 5)) == 1);
    CHECK(V.pair(unit(5, 5), unit(5, 1)) == 1);
    CHECK(V.pair(unit(5, 1), unit(5, 2)) == 0);
    CHECK(V.pair(unit(5, 2), unit(5, 4)) == 1);
    CHECK(V.pair(unit(5, 3), unit(5, 3)) == 1);
    CHECK_THROWS_AS(V.pair(unit(4, 1), unit(5, 1)), DomainError);

    CHECK_THROWS_AS(make_split_space(5, 2), DomainError);
    CHECK_THROWS_AS(make_split_space(5, 9), DomainError);
    CHECK_THROWS_AS(make_split_space(2, 3), DomainError);
    CHECK_NOTHROW(make_split_space(4, 7));
}

TEST_CASE("isotropy of row spans") {
    const QuadraticSpace V = make_split_space(5, 3);
    CHECK(is_isotropic(V, {unit(5, 1), unit(5, 2)}));
    CHECK_FALSE(is_isotropic(V, {{1, 0, 0, 0, 1}}));  // <v,v> = 2
    CHECK_FALSE(is_isotropic(V, {unit(5, 3)}));
    CHECK_FALSE(is_isotropic(V, {unit(5, 1), unit(5, 5)}));
    CHECK(is_isotropic(V, {}));
    CHECK_THROWS_AS(is_isotropic(V, {unit(5, 1), unit(5, 1)}), DomainError);
}

TEST_CASE("flag construction, completion, and self-duality") {
    const QuadraticSpace V = make_split_space(5, 3);
    const IsotropicFlag partial =
        IsotropicFlag::from_chain(V, {unit(5, 1), unit(5, 2)});
    CHECK(partial.step_count() == 2);
    CHECK(partial.step(1) == Matrix{unit(5, 1)});
    CHECK_FALSE(partial.is_complete(V));
    CHECK_THROWS_AS(partial.step(3), DomainError);

    const IsotropicFlag full = complete_flag(V, partial);
    CHECK(full.step_count() == 4);
    CHECK(full.is_complete(V));
    CHECK(full == standard_flag(V));
    CHECK(complete_flag(V, full) == full);  // idempotent
    // V_3 = span(e_1,e_2)^perp = span(e_1,e_2,e_3); V_4 = e_1^perp
    CHECK(full.step(3) == Matrix{unit(5, 1), unit(5, 2), unit(5, 3)});
    CHECK(full.step(4) == Matrix{unit(5, 1), unit(5, 2), unit(5, 3), unit(5, 4)});

    SUBCASE("rejected constructions") {
        CHECK_THROWS_AS(IsotropicFlag::from_chain(V, {unit(5, 3)}), DomainError);
        CHECK_THROWS_AS(IsotropicFlag::from_chain(V, {unit(5, 1), unit(5, 5)}),
                        DomainError);
        CHECK_THROWS_AS(IsotropicFlag::from_chain(V, {unit(5, 1), unit(5, 1)}),
                        DomainError);
        CHECK_THROWS_AS(IsotropicFlag::from_chain(V, {unit(4, 1)}), DomainError);
        CHECK_THROWS_AS(complete_flag(V, IsotropicFlag::from_chain(V, {unit(5, 1)})),
                        DomainError);
        // nested and dimension checks of the step-wise constructor
        CHECK_THROWS_AS(
            IsotropicFlag::from_steps(V, {{unit(5, 1)}, {unit(5, 2), unit(5, 5)}}),
            DomainError);
        CHECK_THROWS_AS(IsotropicFlag::from_steps(V, {{unit(5, 1), unit(5, 2)}}),
                        DomainError);
        CHECK_NOTHROW(
            IsotropicFlag::from_steps(V, {{unit(5, 1)}, {unit(5, 1), unit(5, 2)}}));
    }

    SUBCASE("even dimension") {
        const QuadraticSpace W = make_split_space(4, 3);
        const IsotropicFlag f =
            complete_flag(W, IsotropicFlag::from_chain(W, {unit(4, 1), unit(4, 2)}));
        CHECK(f.step(3) == Matrix{unit(4, 1), unit(4, 2), unit(4, 3)});
        CHECK(f.is_complete(W));
    }
}

TEST_CASE("twisting swaps the middle step for the other isotropic plane") {
    const QuadraticSpace V = make_split_space(4, 3);
    const IsotropicFlag f = standard_flag(V);
    const IsotropicFlag t = twist_flag(V, f);
    CHECK(t.step(1) == f.step(1));
    CHECK(t.step(3) == f.step(3));
    CHECK(t.step(2) == Matrix{unit(4, 1), unit(4, 3)});
    CHECK(twist_flag(V, t) == f);

    for (const IsotropicFlag& g : enumerate_isotropic_flags(V)) {
        const IsotropicFlag tg = twist_flag(V, g);
        CHECK(tg.step(2) != g.step(2));
        CHECK(twist_flag(V, tg) == g);
    }

    const QuadraticSpace odd = make_split_space(5, 3);
    CHECK_THROWS_AS(twist_flag(odd, standard_flag(odd)), DomainError);
    CHECK_THROWS_AS(
        twist_flag(V, IsotropicFlag::from_chain(V, {unit(4, 1), unit(4, 2)})),
        DomainError);
}

TEST_CASE("relative position reads off coordinate flags") {
    const QuadraticSpace V5 = make_split_space(5, 3);
    const IsotropicFlag std5 = standard_flag(V5);
    for (const WeylElement& w : all_elements(Family::B, 2))
        CHECK(relative_position(V5, std5, coordinate_flag(V5, w)) == w);

    const QuadraticSpace V4 = make_split_space(4, 3);
    const IsotropicFlag std4 = standard_flag(V4);
    for (const WeylElement& w : all_elements(Family::C, 2))
        CHECK(relative_position(V4, std4, coordinate_flag(V4, w)) == w);

    CHECK(relative_position(V5, std5, std5).is_identity());
    CHECK(relative_position(V5, std5, std5).family() == Family::B);
    CHECK(relative_position(V4, std4, std4).family() == Family::D);
    CHECK(relative_position(V5, std5,
                            coordinate_flag(V5, WeylElement::from_window(Family::B, {5, 4})))
              .window() == std::vector<int>{5, 4});

    CHECK_THROWS_AS(relative_position(
                        V5, std5, IsotropicFlag::from_chain(V5, {unit(5, 1), unit(5, 2)})),
                    DomainError);
}

TEST_CASE("relative position axioms on sampled pairs") {
    std::mt19937 rng(12345);
    for (int n : {4, 5}) {
        const QuadraticSpace V = make_split_space(n, 3);
        const std::vector<IsotropicFlag> flags = enumerate_isotropic_flags(V);
        std::uniform_int_distribution<size_t> pick(0, flags.size() - 1);
        for (int trial = 0; trial < 60; ++trial) {
            const IsotropicFlag& a = flags[pick(rng)];
            const IsotropicFlag& b = flags[pick(rng)];
            CHECK(relative_position(V, a, a).is_identity());
            const WeylElement ab = relative_position(V, a, b);
            CHECK(relative_position(V, b, a) == ab.inverse());
            if (n % 2 == 0) {
                const WeylElement twisted = relative_position(V, a, twist_flag(V, b));
                CHECK(twisted ==
                      multiply(ab, simple_reflection(Family::C, n / 2, twisted_letter)));
            }
        }
    }
}

TEST_CASE("flag counts match the length generating function") {
    const QuadraticSpace V3 = make_split_space(3, 3);
    const QuadraticSpace V4 = make_split_space(4, 3);
    const QuadraticSpace V5 = make_split_space(5, 3);
    CHECK(count_isotropic_flags(V3) == 4);
    CHECK(count_isotropic_flags(V4) == 32);
    CHECK(count_isotropic_flags(V5) == 160);
    CHECK(enumerate_isotropic_flags(V5).size() == 160);
    CHECK(count_isotropic_flags(make_split_space(5, 5)) == 936);    // (1+5)(1+5+25+125)
    CHECK(count_isotropic_flags(make_split_space(6, 3)) == 4160);   // both cosets
    CHECK(count_isotropic_flags(make_split_space(7, 3)) == 58240);

    SUBCASE("enumeration yields distinct complete flags") {
        const std::vector<IsotropicFlag> flags = enumerate_isotropic_flags(V4);
        REQUIRE(flags.size() == 32);
        std::set<IsotropicFlag> unique(flags.begin(), flags.end());
        CHECK(unique.size() == 32);
        for (const IsotropicFlag& f : flags) CHECK(f.is_complete(V4));
    }

    SUBCASE("serial and parallel kernels agree") {
        for (int n : {4, 5, 6, 7})
            CHECK(count_isotropic_flags(make_split_space(n, 3)) ==
                  count_isotropic_flags_serial(make_split_space(n, 3)));
        CHECK(count_isotropic_flags(make_split_space(4, 5)) ==
              count_isotropic_flags_serial(make_split_space(4, 5)));
    }
}

TEST_CASE("census cells have size p to the length") {
    const QuadraticSpace V5 = make_split_space(5, 3);
    const CensusMap census5 = bruhat_cell_census(V5, standard_flag(V5));
    const std::vector<WeylElement> all5 = all_elements(Family::B, 2);
    REQUIRE(census5.size() == all5.size());
    long long total = 0;
    for (const WeylElement& w : all5) {
        REQUIRE(census5.count(w) == 1);
        long long cell = 1;
        for (int i = 0; i < length(w); ++i) cell *= 3;
        CHECK(census5.at(w) == cell);
        total += cell;
    }
    CHECK(total == 160);
    CHECK(census5.at(WeylElement::identity(Family::B, 2)) == 1);

    const QuadraticSpace V4 = make_split_space(4, 3);
    const CensusMap census4 = bruhat_cell_census(V4, standard_flag(V4));
    REQUIRE(census4.size() == 8);  // both cosets of the even group
    for (const WeylElement& w : all_elements(Family::C, 2)) {
        long long cell = 1;
        for (int i = 0; i < length(w); ++i) cell *= 3;
        CHECK(census4.at(w) == cell);
    }

    SUBCASE("serial twin and base-flag independence") {
        CHECK(bruhat_cell_census_serial(V5, standard_flag(V5)) == census5);
        CHECK(bruhat_cell_census_serial(V4, standard_flag(V4)) == census4);
        const IsotropicFlag other =
            coordinate_flag(V4, WeylElement::from_window(Family::C, {4, 2}));
        CHECK(bruhat_cell_census(V4, other) == census4);
    }
}

TEST_CASE("middle subspaces split into two rulings matching the cosets") {
    const QuadraticSpace V = make_split_space(4, 3);
    const IsotropicFlag std4 = standard_flag(V);
    const std::vector<IsotropicFlag> flags = enumerate_isotropic_flags(V);

    std::set<Matrix> middles;
    for (const IsotropicFlag& f : flags) middles.insert(f.step(2));
    CHECK(middles.size() == 8);  // 2(p+1) maximal isotropic planes

    int same_ruling = 0;
    for (const Matrix& u : middles)
        if (intersection_dim(u, std4.step(2), V.p) % 2 == 0) ++same_ruling;
    CHECK(same_ruling == 4);

    // a flag sits in the reference SO-orbit exactly when its middle step lies
    // in the reference ruling, and the relative position's coset tag agrees
    int in_subgroup = 0;
    for (const IsotropicFlag& f : flags) {
        const bool same =
            intersection_dim(f.step(2), std4.step(2), V.p) % 2 == 0;
        const WeylElement w = relative_position(V, std4, f);
        CHECK((w.family() == Family::D) == same);
        if (same) ++in_subgroup;
    }
    CHECK(in_subgroup == 16);
}

TEST_CASE("budget caps reject oversized scans") {
    const QuadraticSpace V5 = make_split_space(5, 3);
    CHECK_THROWS_AS(count_isotropic_flags(V5, 100), BudgetError);
    CHECK_THROWS_AS(count_isotropic_flags_serial(V5, 100), BudgetError);
    CHECK_THROWS_AS(enumerate_isotropic_flags(V5, 100), BudgetError);
    CHECK_THROWS_AS(bruhat_cell_census(V5, standard_flag(V5), 200), BudgetError);
    CHECK_THROWS_AS(count_isotropic_flags(make_split_space(8, 5)), BudgetError);
    CHECK_NOTHROW(count_isotropic_flags(V5, 243));
}

TEST_CASE("hermitian point counts") {
    CHECK(hermitian_point_count(3) == 28);
    CHECK(hermitian_point_count(5) == 126);
    CHECK(hermitian_point_count(7) == 344);
    CHECK_THROWS_AS(hermitian_point_count(2), DomainError);
    CHECK_THROWS_AS(hermitian_point_count(9), DomainError);
    CHECK_THROWS_AS(hermitian_point_count(11), BudgetError);  // 11^4 over the default cap
    CHECK_THROWS_AS(hermitian_point_count(7, 2400), BudgetError);
    CHECK(hermitian_point_count(11, 15000) == 1332);
}

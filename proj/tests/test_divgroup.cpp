#include "atomforge/divgroup.hpp"
#include "atomforge/errors.hpp"

#include <doctest.h>

using namespace atomforge;

TEST_CASE("atoms per component") {
    GroupSpec zzz{{CompZ{}, CompZ{}, CompZ{}}};
    CHECK(atoms_of(zzz).size() == 3);

    GroupSpec mixed{{CompLex{3}, CompZ{}, CompQ{}}};
    auto atoms = atoms_of(mixed);
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0].component == 0);
    CHECK(std::get<std::vector<Int>>(atoms[0].value) == std::vector<Int>{0, 0, 1});
    CHECK(atoms[1].component == 1);
    CHECK(std::get<Int>(atoms[1].value) == 1);

    GroupSpec qonly{{CompQ{}}};
    CHECK(atoms_of(qonly).empty());
}

TEST_CASE("sum-of-atoms recognition") {
    GroupSpec lex2{{CompLex{2}}};
    OrderedGroupElement five;
    five.entries[0] = GroupValue(std::vector<Int>{0, 5});
    CHECK(is_sum_of_atoms(five, lex2));

    OrderedGroupElement heavy;
    heavy.entries[0] = GroupValue(std::vector<Int>{1, 0});
    CHECK(heavy.is_positive());
    CHECK(!is_sum_of_atoms(heavy, lex2)); // above every n * (0,1), still no sum

    GroupSpec qonly{{CompQ{}}};
    OrderedGroupElement half;
    half.entries[0] = GroupValue(Rational(1, 2));
    CHECK(!is_sum_of_atoms(half, qonly));

    OrderedGroupElement negative;
    negative.entries[0] = GroupValue(std::vector<Int>{0, -1});
    CHECK_THROWS_AS(is_sum_of_atoms(negative, lex2), NotPositive);
}

TEST_CASE("proper convex subgroup counts") {
    CHECK(proper_convex_subgroup_count(CompLex{3}) == 3);
    CHECK(proper_convex_subgroup_count(CompZ{}) == 1);
    CHECK(proper_convex_subgroup_count(CompQ{}) == 1);
}

TEST_CASE("lexicographic order is most-significant-first") {
    for (int n = 0; n <= 100; ++n) {
        GroupValue v(std::vector<Int>{1, -n});
        CHECK(value_sign(v) == 1);
    }
    CHECK(value_sign(GroupValue(std::vector<Int>{0, 0, -3})) == -1);
    CHECK(value_sign(GroupValue(std::vector<Int>{0, 0, 0})) == 0);
}

TEST_CASE("atom minimality on a bounded box") {
    // no 0 < g < atom exists among lex pairs with coordinates in [-3, 3]
    std::vector<Int> atom{0, 1};
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            std::vector<Int> g{a, b};
            GroupValue gv(g);
            if (value_sign(gv) <= 0) continue;
            if (g == atom) continue;
            // g < atom means atom - g > 0
            std::vector<Int> diff{atom[0] - g[0], atom[1] - g[1]};
            CHECK(value_sign(GroupValue(diff)) <= 0);
        }
}

TEST_CASE("rationals normalize") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).sign() == -1);
    CHECK_THROWS_AS(Rational(1, 0), InvalidParameters);
}

TEST_CASE("recipe censuses match the pinned examples") {
    DivisibilityCensus pid = divisibility_census(3, 3, 3);
    CHECK(pid.atom_count == 3);
    CHECK(pid.maximal_ideal_count == 3);
    CHECK(pid.nonzero_prime_count == 3);
    CHECK(pid.atomic);
    CHECK(pid.furstenberg);
    CHECK(pid.claims_hold());

    DivisibilityCensus c224 = divisibility_census(2, 2, 4);
    CHECK(c224.eta == 3);
    CHECK(c224.atom_count == 2);
    CHECK(c224.maximal_ideal_count == 2);
    CHECK(c224.nonzero_prime_count == 4);
    CHECK(!c224.atomic);
    CHECK(c224.furstenberg);

    DivisibilityCensus c235 = divisibility_census(2, 3, 5);
    CHECK(c235.eta == 3);
    REQUIRE(c235.spec.components.size() == 3);
    CHECK(component_to_string(c235.spec.components[0]) == "Lex(3)");
    CHECK(component_to_string(c235.spec.components[1]) == "Z");
    CHECK(component_to_string(c235.spec.components[2]) == "Q");
    CHECK(c235.atom_count == 2);
    CHECK(c235.maximal_ideal_count == 3);
    CHECK(c235.nonzero_prime_count == 5);
    CHECK(!c235.furstenberg);

    CHECK(divisibility_census(1, 1, 1).claims_hold());
    CHECK_THROWS_AS(divisibility_census(3, 2, 4), InvalidParameters);
    CHECK_THROWS_AS(divisibility_census(0, 1, 1), InvalidParameters);

    // unchecked claims are declared, not dropped
    CHECK(c235.not_checkable.size() == 2);
}

TEST_CASE("the full grid to 6 matches the theorem") {
    int triples = 0;
    for (int a = 1; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            for (int c = b; c <= 6; ++c) {
                ++triples;
                CHECK(divisibility_census(a, b, c).claims_hold());
            }
    CHECK(triples == 56);
}

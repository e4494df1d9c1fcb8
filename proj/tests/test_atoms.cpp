#include "atomforge/atoms.hpp"
#include "atomforge/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace atomforge;

namespace {

TruncElem make(const TruncCtx& ctx, std::vector<std::uint16_t> c) {
    c.resize(std::size_t(ctx.N), 0);
    return TruncElem(ctx, std::move(c));
}

} // namespace

TEST_CASE("irreducibility by valuation") {
    const TruncCtx& c6 = TruncCtx::get(2, 1, 2, 6);
    CHECK(is_irreducible_truncated(make(c6, {0, 0, 1, 1})));  // t^2 + t^3
    CHECK(!is_irreducible_truncated(make(c6, {0, 0, 0, 0, 1}))); // t^4 = t^2 t^2
    const TruncCtx& c226 = TruncCtx::get(2, 2, 2, 6);
    CHECK(is_irreducible_truncated(TruncElem::monomial(c226, 3)));
    CHECK_THROWS_AS(is_irreducible_truncated(TruncElem::zero(c6)), ZeroElement);
    CHECK_THROWS_AS(is_irreducible_truncated(TruncElem::one(c6)), IsUnit);
}

TEST_CASE("valuation criterion equals the two-nonunit search at (2,1,2,6)") {
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 6);
    enumerate_elements(ctx, TruncFilter::NonzeroNonunits, [&](const TruncElem& x) {
        if (x.valuation() > ctx.N - ctx.e - 1) return;
        bool splits = oracles::two_nonunit_product(x).has_value();
        CHECK(is_irreducible_truncated(x) == !splits);
    });
}

TEST_CASE("closed-form counts") {
    CHECK(predicted_atom_count(2, 1, 2) == 4);
    CHECK(predicted_atom_count(3, 1, 2) == 6);
    CHECK(predicted_atom_count(2, 2, 1) == 3);
    CHECK(predicted_atom_count(2, 1, 3) == 12);
    CHECK(predicted_atom_count(2, 2, 2) == 24);
    CHECK(predicted_atom_count(4, 1, 2) == 8);
}

TEST_CASE("census of the cusp ring over F_2") {
    AtomCensus census = atom_census(TruncCtx::get(2, 1, 2, 6));
    CHECK(census.orbits.size() == 4);
    CHECK(census.predicted == 4);
    CHECK(census.irreducibles_total == 12); // 8 with v = 2, 4 with v = 3
    CHECK(census.truncation_stable);
    std::uint64_t total = 0;
    for (const auto& orbit : census.orbits) total += orbit.size;
    CHECK(total == census.irreducibles_total);

    // representatives pairwise non-associate, checked against every unit
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 6);
    for (std::size_t i = 0; i < census.orbits.size(); ++i)
        for (std::size_t j = i + 1; j < census.orbits.size(); ++j) {
            bool associate = false;
            enumerate_elements(ctx, TruncFilter::Units, [&](const TruncElem& u) {
                if (u * census.orbits[i].representative == census.orbits[j].representative)
                    associate = true;
            });
            CHECK(!associate);
        }
}

TEST_CASE("census matches the closed form over F_3") {
    AtomCensus census = atom_census(TruncCtx::get(3, 1, 2, 6));
    CHECK(census.orbits.size() == 6);
    CHECK(census.truncation_stable);
}

TEST_CASE("association canonical forms on the (q,1,2) shape") {
    const TruncCtx& c2 = TruncCtx::get(2, 1, 2, 6);
    // the unit 1 + t^2 absorbs the t^4 term
    CHECK(association_canonical_form(make(c2, {0, 0, 1, 0, 1})) ==
          TruncElem::monomial(c2, 2));
    CHECK(association_canonical_form(make(c2, {0, 0, 1, 1})) == make(c2, {0, 0, 1, 1}));

    const TruncCtx& c3 = TruncCtx::get(3, 1, 2, 6);
    // 2t^3 + t^4 scales by 2^-1 = 2 to t^3 + 2t^4
    CHECK(association_canonical_form(make(c3, {0, 0, 0, 2, 1})) ==
          make(c3, {0, 0, 0, 1, 2}));

    CHECK_THROWS_AS(association_canonical_form(TruncElem::monomial(TruncCtx::get(2, 2, 2, 6), 2)),
                    WrongRingShape);
}

TEST_CASE("canonical-form partition equals the orbit partition") {
    for (int q : {2, 3}) {
        const TruncCtx& ctx = TruncCtx::get(q, 1, 2, 6);
        // group irreducibles by canonical form
        std::map<std::uint64_t, std::set<std::uint64_t>> by_form;
        enumerate_elements(ctx, TruncFilter::NonzeroNonunits, [&](const TruncElem& x) {
            if (!is_irreducible_truncated(x)) return;
            by_form[association_canonical_form(x).encode()].insert(x.encode());
        });
        AtomCensus census = atom_census(ctx);
        CHECK(by_form.size() == census.orbits.size());
        // and the classes coincide element by element: two irreducibles share
        // a form iff some unit carries one to the other
        std::vector<TruncElem> irr;
        enumerate_elements(ctx, TruncFilter::NonzeroNonunits, [&](const TruncElem& x) {
            if (is_irreducible_truncated(x)) irr.push_back(x);
        });
        for (const TruncElem& a : irr)
            for (const TruncElem& b : irr) {
                bool same_form = association_canonical_form(a) == association_canonical_form(b);
                bool associate = false;
                enumerate_elements(ctx, TruncFilter::Units, [&](const TruncElem& u) {
                    if (u * a == b) associate = true;
                });
                CHECK(same_form == associate);
            }
    }
}

TEST_CASE("prime element check finds counterexamples") {
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 8);

    SUBCASE("t^2 is not prime; witness (t^3, t^3)") {
        PrimeCheckResult r = prime_element_check(TruncElem::monomial(ctx, 2));
        CHECK(!r.is_prime);
        REQUIRE(r.counterexample.has_value());
        CHECK(r.counterexample->first == TruncElem::monomial(ctx, 3));
        CHECK(r.counterexample->second == TruncElem::monomial(ctx, 3));
    }
    SUBCASE("t^3 is not prime; least witness by exhaustive scan is (t^2, t^4)") {
        PrimeCheckResult r = prime_element_check(TruncElem::monomial(ctx, 3));
        CHECK(!r.is_prime);
        REQUIRE(r.counterexample.has_value());
        const auto& [a, b] = *r.counterexample;
        CHECK(a == TruncElem::monomial(ctx, 2));
        CHECK(b == TruncElem::monomial(ctx, 4));
        // witness properties hold
        TruncElem p = TruncElem::monomial(ctx, 3);
        CHECK(divides_truncated(p, a * b).has_value());
        CHECK(!divides_truncated(p, a).has_value());
        CHECK(!divides_truncated(p, b).has_value());
    }
    SUBCASE("t is prime in the truncated DVR") {
        const TruncCtx& dvr = TruncCtx::get(2, 1, 1, 6);
        PrimeCheckResult r = prime_element_check(TruncElem::monomial(dvr, 1));
        CHECK(r.is_prime);
        CHECK(!r.counterexample.has_value());
    }
}

TEST_CASE("cohen-kaplansky floor") {
    AtomCensus census = atom_census(TruncCtx::get(2, 1, 2, 6));
    CHECK(ck_min_atoms_check(census)); // 4 >= 3, with t^2 non-prime
    AtomCensus census2 = atom_census(TruncCtx::get(2, 2, 1, 3));
    CHECK(census2.orbits.size() == 3);
    CHECK(ck_min_atoms_check(census2));
}

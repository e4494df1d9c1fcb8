#include "atomforge/radical.hpp"
#include "atomforge/errors.hpp"

#include <doctest.h>

using namespace atomforge;

TEST_CASE("membership by the universal unit test") {
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 6);
    CHECK(in_jacobson_radical(TruncElem::monomial(ctx, 2)));
    CHECK(in_jacobson_radical(TruncElem::zero(ctx)));
    CHECK(!in_jacobson_radical(TruncElem::one(ctx)));

    // over F_2 the least counterexample for x = 1 is y = 1: 1*1 + 1 = 0
    auto y = radical_counterexample(TruncElem::one(ctx));
    REQUIRE(y.has_value());
    CHECK(*y == TruncElem::one(ctx));
}

TEST_CASE("radical equals the nonunit set in the local model") {
    RadicalReport r = jacobson_radical(TruncCtx::get(2, 1, 2, 6));
    CHECK(r.members.size() == 16);
    CHECK(r.equals_nonunit_set);
    for (const TruncElem& m : r.members) CHECK(!m.is_unit());
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == TruncElem::monomial(TruncCtx::get(2, 1, 2, 6), 2));
    CHECK(r.condition_e == ConditionEStatus::FailsWithWitness);

    // 1 + radical stays inside the units
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 6);
    TruncElem one = TruncElem::one(ctx);
    for (const TruncElem& m : r.members) CHECK((one + m).is_unit());
}

TEST_CASE("radical counts across parameters") {
    CHECK(jacobson_radical(TruncCtx::get(3, 1, 2, 6)).members.size() == 81);
    CHECK(jacobson_radical(TruncCtx::get(2, 1, 1, 4)).members.size() == 8);
}

TEST_CASE("condition (E) panels over the infinite rings") {
    std::vector<RingElement> zpanel{
        RingElement::integer(1), RingElement::integer(-1), RingElement::integer(2),
        RingElement::integer(-2), RingElement::integer(1000000)};
    PanelReport zr = condition_e_panel(ZRing{}, zpanel);
    CHECK(zr.entries.size() == 5);
    CHECK(zr.status == ConditionEStatus::HoldsOnPanel);

    std::vector<RingElement> gpanel{RingElement::gaussian(1, 0), RingElement::gaussian(0, 1),
                                    RingElement::gaussian(3, 4)};
    PanelReport gr = condition_e_panel(GaussRing{}, gpanel);
    CHECK(gr.entries[0].witness.value == RingElement::gaussian(2, 0));
    CHECK(gr.entries[1].witness.value == RingElement::gaussian(2, 0));
    CHECK(gr.entries[2].witness.value == RingElement::gaussian(26, 0));

    std::vector<RingElement> ppanel{RingElement::poly(2, {1}), RingElement::poly(2, {0, 1}),
                                    RingElement::poly(2, {1, 1, 1})};
    PanelReport pr = condition_e_panel(PolyRing{2}, ppanel);
    for (const auto& entry : pr.entries)
        CHECK(entry.witness.y == RingElement::poly(2, {0, 1}));

    CHECK_THROWS_AS(condition_e_panel(TruncRing{2, 1, 2, 6}, {}), UnsupportedRing);
    CHECK_THROWS_AS(condition_e_panel(ZRing{}, {RingElement::integer(0)}), ZeroElement);
}

TEST_CASE("the universal test agrees with the maximal-ideal intersection") {
    // unique maximal ideal = the nonunit set, so membership in the radical
    // must equal nonunitness, element by element
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 6);
    enumerate_elements(ctx, TruncFilter::All, [&](const TruncElem& x) {
        CHECK(in_jacobson_radical(x) == !x.is_unit());
    });
}

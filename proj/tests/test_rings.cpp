#include "atomforge/trunc.hpp"
#include "atomforge/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace atomforge;

namespace {

TruncElem make(const TruncCtx& ctx, std::vector<std::uint16_t> c) {
    c.resize(std::size_t(ctx.N), 0);
    return TruncElem(ctx, std::move(c));
}

} // namespace

TEST_CASE("construction validates the subring constraints") {
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 6);
    CHECK_THROWS_AS(make(ctx, {0, 1}), InvalidInput);        // slot 1 forced zero
    CHECK_NOTHROW(make(ctx, {1, 0, 1}));
    CHECK_THROWS_AS(TruncCtx::get(2, 1, 2, 5), InvalidParameters); // N < 3e
    CHECK_THROWS_AS(TruncCtx::get(6, 1, 1, 3), InvalidParameters); // q not a prime power

    // slot 0 outside the subfield: F_4 + t^2 F_16[[t]]
    const TruncCtx& wide = TruncCtx::get(4, 2, 2, 6);
    std::vector<std::uint16_t> bad(6, 0);
    bad[0] = 2; // a code in F_16 \ F_4 (the F_4 copy is {0,1,6,7})
    CHECK_THROWS_AS(TruncElem(wide, bad), InvalidInput);
}

TEST_CASE("valuation") {
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 8);
    CHECK(make(ctx, {0, 0, 1, 1}).valuation() == 2); // t^2 + t^3
    CHECK(make(ctx, {1}).valuation() == 0);
    TruncElem t2 = TruncElem::monomial(ctx, 2);
    TruncElem t3 = TruncElem::monomial(ctx, 3);
    CHECK((t2 * t3).valuation() == 5);
    CHECK_THROWS_AS(TruncElem::zero(ctx).valuation(), ZeroElement);
}

TEST_CASE("valuation is additive inside the window") {
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 8);
    std::vector<TruncElem> all;
    enumerate_elements(ctx, TruncFilter::All,
                       [&](const TruncElem& x) { all.push_back(x); });
    for (const TruncElem& a : all) {
        if (a.is_zero()) continue;
        for (const TruncElem& b : all) {
            if (b.is_zero()) continue;
            if (a.valuation() + b.valuation() >= ctx.N) continue;
            CHECK((a * b).valuation() == a.valuation() + b.valuation());
        }
    }
}

TEST_CASE("enumeration counts and order") {
    const TruncCtx& c1 = TruncCtx::get(2, 1, 2, 6);
    CHECK(enumerate_count(c1, TruncFilter::All) == 32);
    CHECK(enumerate_count(c1, TruncFilter::Units) == 16);
    CHECK(enumerate_count(c1, TruncFilter::NonzeroNonunits) == 15);

    const TruncCtx& c2 = TruncCtx::get(2, 2, 2, 6);
    CHECK(enumerate_count(c2, TruncFilter::All) == 512);

    // ascending encode order, each element exactly once
    std::vector<std::uint64_t> encodes;
    enumerate_elements(c1, TruncFilter::All,
                       [&](const TruncElem& x) { encodes.push_back(x.encode()); });
    for (std::size_t i = 1; i < encodes.size(); ++i) CHECK(encodes[i - 1] < encodes[i]);
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(enumerate_count(TruncCtx::get(9, 3, 4, 13), TruncFilter::All),
                    BudgetExceeded);
}

TEST_CASE("closure under products, checked by construction") {
    const TruncCtx& ctx = TruncCtx::get(3, 1, 2, 6);
    std::vector<TruncElem> all;
    enumerate_elements(ctx, TruncFilter::All,
                       [&](const TruncElem& x) { all.push_back(x); });
    // sampled grid; the constructor revalidates every product
    for (std::size_t i = 0; i < all.size(); i += 7)
        for (std::size_t j = 0; j < all.size(); j += 11)
            CHECK_NOTHROW(all[i] * all[j]);
}

TEST_CASE("unit criterion matches exhaustive inverse search") {
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 6);
    std::vector<TruncElem> all;
    enumerate_elements(ctx, TruncFilter::All,
                       [&](const TruncElem& x) { all.push_back(x); });
    TruncElem one = TruncElem::one(ctx);
    for (const TruncElem& x : all) {
        bool invertible = false;
        for (const TruncElem& y : all)
            if (x * y == one) { invertible = true; break; }
        CHECK(invertible == x.is_unit());
        if (x.is_unit()) CHECK(x * x.inverse() == one);
    }
}

TEST_CASE("divisibility in the truncated model") {
    const TruncCtx& ctx = TruncCtx::get(2, 1, 2, 8);
    TruncElem t2 = TruncElem::monomial(ctx, 2);
    TruncElem t3 = TruncElem::monomial(ctx, 3);
    TruncElem t6 = TruncElem::monomial(ctx, 6);

    SUBCASE("witness for t^2 | t^6 is t^4") {
        auto w = divides_truncated(t2, t6);
        REQUIRE(w.has_value());
        CHECK(*w == TruncElem::monomial(ctx, 4));
        CHECK(t2 * *w == t6);
    }
    SUBCASE("t !in R blocks t^2 | t^3") {
        CHECK(!divides_truncated(t2, t3).has_value());
    }
    SUBCASE("an element divides itself with witness 1") {
        auto w = divides_truncated(t3, t3);
        REQUIRE(w.has_value());
        CHECK(*w == TruncElem::one(ctx));
    }
    SUBCASE("divisors beyond the window are refused") {
        CHECK_THROWS_AS(divides_truncated(t6, t6), OutsideSoundnessWindow); // v = 6 > 5
    }
    SUBCASE("windowed verdicts are stable under deeper truncation") {
        // zero-padding to N+4 refines the model toward the untruncated ring;
        // verdicts for windowed divisors must not move
        const TruncCtx& deep = TruncCtx::get(2, 1, 2, 12);
        auto lift = [&](const TruncElem& x) {
            std::vector<std::uint16_t> c = x.coeffs();
            c.resize(12, 0);
            return TruncElem(deep, std::move(c));
        };
        std::vector<TruncElem> all;
        enumerate_elements(ctx, TruncFilter::All,
                           [&](const TruncElem& x) { all.push_back(x); });
        for (const TruncElem& b : all) {
            if (b.is_zero() || b.valuation() > ctx.N - ctx.e - 1) continue;
            for (const TruncElem& a : all) {
                if (a.is_zero()) continue;
                CHECK(divides_truncated(b, a).has_value() ==
                      divides_truncated(lift(b), lift(a)).has_value());
            }
        }
    }
    SUBCASE("witnesses agree with an exhaustive scan") {
        std::vector<TruncElem> all;
        enumerate_elements(ctx, TruncFilter::All,
                           [&](const TruncElem& x) { all.push_back(x); });
        for (const TruncElem& b : all) {
            if (b.is_zero() || b.valuation() > ctx.N - ctx.e - 1) continue;
            for (const TruncElem& a : all) {
                if (a.is_zero()) continue;
                bool found = false;
                for (const TruncElem& c : all)
                    if (b * c == a) { found = true; break; }
                CHECK(divides_truncated(b, a).has_value() == found);
            }
        }
    }
}

TEST_CASE("canonical associates scale the lead into the transversal") {
    const TruncCtx& ctx = TruncCtx::get(3, 1, 2, 6);
    // 2t^3 + t^4 normalizes to t^3 + 2t^4 (scale by 2^-1 = 2)
    TruncElem x = make(ctx, {0, 0, 0, 2, 1});
    auto [u, canon] = trunc_canonical_associate(x);
    CHECK(canon == make(ctx, {0, 0, 0, 1, 2}));
    CHECK(u * canon == x);
}

TEST_CASE("budget override via the environment") {
    setenv("ATOMFORGE_BUDGET", "8", 1);
    CHECK_THROWS_AS(enumerate_count(TruncCtx::get(2, 1, 2, 6), TruncFilter::All),
                    BudgetExceeded);
    unsetenv("ATOMFORGE_BUDGET");
    CHECK(enumerate_count(TruncCtx::get(2, 1, 2, 6), TruncFilter::All) == 32);
}

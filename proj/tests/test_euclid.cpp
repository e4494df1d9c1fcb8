#include "atomforge/euclid.hpp"
#include "atomforge/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace atomforge;

namespace {

RingElement z(long v) { return RingElement::integer(Int(v)); }
RingElement p2(std::vector<std::uint16_t> c) { return RingElement::poly(2, std::move(c)); }

Int chain_product(const std::vector<Int>& v) {
    Int p = 1;
    for (const Int& x : v) p *= x;
    return p;
}

} // namespace

TEST_CASE("euclid chain over the integers reproduces the least-factor chain") {
    // frozen from the trial-division oracle; recomputed here for the small span
    EuclidState s = euclid_run(ZRing{}, 7);
    std::vector<long> expected{2, 3, 7, 43, 13, 53, 5};
    REQUIRE(s.chosen.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(s.chosen[i] == z(expected[i]));

    // oracle replay: each non-seed step factors prod + 1 at its least prime
    std::vector<Int> so_far;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) {
            Int x = chain_product(so_far) + 1;
            CHECK(oracles::least_prime_factor(x) == s.chosen[i].as_int());
        }
        so_far.push_back(s.chosen[i].as_int());
    }

    CHECK(s.certificates.size() == 21); // C(7,2)
    for (const auto& cert : s.certificates) CHECK(cert.verify());
}

TEST_CASE("euclid transcript replays exactly") {
    EuclidState s = euclid_run(ZRing{}, 6);
    RingElement prod = RingElement::one(s.ring);
    for (std::size_t i = 0; i < s.transcript.size(); ++i) {
        const EuclidStep& st = s.transcript[i];
        if (i == 0) {
            CHECK(st.seeded);
            CHECK(st.selected == z(2));
        } else {
            CHECK(*st.x == *st.y * prod + RingElement::one(s.ring));
            CHECK(st.x_factorization->replay() == *st.x);
            CHECK(st.new_certificates.size() == i);
        }
        prod = prod * s.chosen[i];
    }
}

TEST_CASE("euclid chain over F_2[t]") {
    EuclidState s = euclid_run(PolyRing{2}, 5);
    REQUIRE(s.chosen.size() == 5);
    CHECK(s.chosen[0] == p2({0, 1}));          // t
    CHECK(s.chosen[1] == p2({1, 1}));          // t + 1
    CHECK(s.chosen[2] == p2({1, 0, 1, 1}));    // t^3 + t^2 + 1
    CHECK(s.chosen[3] == p2({1, 1, 1}));       // t^2 + t + 1
    CHECK(s.chosen[4] == p2({1, 1, 0, 1}));    // t^3 + t + 1

    // the step the construction pins: x = t*t + 1 = (t+1)^2
    const EuclidStep& step2 = s.transcript[1];
    CHECK(*step2.x == p2({1, 0, 1}));
    CHECK(step2.x_factorization->factors.size() == 1);
    CHECK(step2.selected == p2({1, 1}));

    // each selected factor is irreducible per the trial-division oracle
    for (const RingElement& f : s.chosen)
        CHECK(oracles::poly_irreducible_trial(f.as_poly()));
    for (const auto& cert : s.certificates) CHECK(cert.verify());
}

TEST_CASE("euclid chain over the gaussian integers") {
    EuclidState s = euclid_run(GaussRing{}, 5);
    REQUIRE(s.chosen.size() == 5);
    CHECK(s.chosen[0] == RingElement::gaussian(1, 1));
    CHECK(s.chosen[1] == RingElement::gaussian(3, 0));
    CHECK(s.chosen[2] == RingElement::gaussian(19, 0));
    CHECK(s.chosen[3] == RingElement::gaussian(4, 9));
    CHECK(s.chosen[4] == RingElement::gaussian(630307, 0));

    // x values 3, 19, 6499, 630307 confirmed by the oracle
    CHECK(*s.transcript[1].x == RingElement::gaussian(3, 0));
    CHECK(*s.transcript[3].x == RingElement::gaussian(6499, 0));
    CHECK(oracles::factor(Int(6499)) == std::map<Int, unsigned>{{Int(67), 1}, {Int(97), 1}});
    CHECK(oracles::is_prime(Int(630307)));
    for (const auto& cert : s.certificates) CHECK(cert.verify());
}

TEST_CASE("chosen irreducibles stay pairwise distinct") {
    for (unsigned count : {6u}) {
        EuclidState s = euclid_run(ZRing{}, count);
        for (std::size_t i = 0; i < s.chosen.size(); ++i)
            for (std::size_t j = i + 1; j < s.chosen.size(); ++j)
                CHECK(!(s.chosen[i] == s.chosen[j]));
    }
}

TEST_CASE("euclid rejects truncated rings") {
    CHECK_THROWS_AS(euclid_init(TruncRing{2, 1, 2, 6}), UnsupportedRing);
}

TEST_CASE("euclid surfaces factorization overflow without corrupting state") {
    FactorConfig cheap;
    cheap.trial_bound = 10; // keeps 139 out of reach at the next step
    cheap.rho_iterations = 4;
    cheap.rho_polynomials = 1;
    EuclidState s = euclid_run(ZRing{}, 9); // all nine factor below the MR bound
    CHECK_THROWS_AS(euclid_step(s, cheap), FactorizationOverflow);
    CHECK(s.chosen.size() == 9); // untouched by the failed step
    CHECK(s.certificates.size() == 36);
}

TEST_CASE("nonunit specialization case split") {
    CHECK(nonunit_specialization(z(10), z(7)) == z(0));   // b already nonzero nonunit
    CHECK(nonunit_specialization(z(10), z(1)) == z(1));   // via the witness for 10
    CHECK(nonunit_specialization(z(3), z(0)) == z(2));    // least nonzero nonunit
    CHECK_THROWS_AS(nonunit_specialization(z(0), z(1)), ZeroLeadingCoefficient);

    // the produced specialization makes ax + b a nonzero nonunit
    for (auto [a, b] : std::vector<std::pair<long, long>>{
             {10, 7}, {10, 1}, {3, 0}, {-5, -1}, {7, 12}}) {
        RingElement x = nonunit_specialization(z(a), z(b));
        RingElement val = z(a) * x + z(b);
        CHECK(!val.is_zero());
        CHECK(!is_unit(val));
    }
    RingElement gx = nonunit_specialization(RingElement::gaussian(2, 1),
                                            RingElement::gaussian(0, 1));
    RingElement gval = RingElement::gaussian(2, 1) * gx + RingElement::gaussian(0, 1);
    CHECK(!gval.is_zero());
    CHECK(!is_unit(gval));
}

TEST_CASE("pollack initialization picks alpha and beta") {
    PollackState s1 = pollack_init(5, {1, 4});
    CHECK(s1.alpha == 2);
    CHECK(s1.beta == 3);
    PollackState s2 = pollack_init(8, {1});
    CHECK(s2.alpha == 3);
    CHECK(s2.beta == 3);

    CHECK_THROWS_AS(pollack_init(5, {1, 2}), InvalidParameters);    // not closed
    CHECK_THROWS_AS(pollack_init(5, {1, 2, 3, 4}), InvalidParameters); // not proper
    CHECK_THROWS_AS(pollack_init(8, {1, 2}), InvalidParameters);    // 2 not a unit
    CHECK_THROWS_AS(pollack_init(2, {1}), InvalidParameters);       // modulus too small
}

TEST_CASE("pollack emissions avoid the subgroup") {
    PollackState s = pollack_run(5, {1, 4}, 8);
    std::vector<long> expected{7, 37, 1297, 17, 3, 13, 101234977, 787};
    REQUIRE(s.chosen.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(s.chosen[i] == expected[i]);
        long cls = Int(s.chosen[i] % 5).convert_to<long>();
        CHECK((cls == 2 || cls == 3));
        CHECK(oracles::is_prime(s.chosen[i]));
    }
    CHECK(s.certificates.size() == 28);
    for (const auto& cert : s.certificates) CHECK(cert.verify());

    // transcript replay: y = P(x) with the recorded coefficients
    Int prod = 1;
    for (std::size_t i = 0; i < s.transcript.size(); ++i) {
        const PollackStep& st = s.transcript[i];
        Int ab1 = s.alpha * s.beta - 1;
        CHECK(st.poly_lead == s.alpha * ab1 * prod);
        CHECK(st.poly_const == ab1 * prod + s.alpha);
        CHECK(st.y == st.poly_lead * st.x + st.poly_const);
        CHECK(st.y_factorization.replay() == RingElement::integer(st.y));
        prod *= s.chosen[i];
    }
}

TEST_CASE("pollack with the trivial subgroup mod 8") {
    PollackState s = pollack_run(8, {1}, 8);
    std::vector<long> expected{11, 7, 619, 3931, 331, 47093, 5, 13};
    REQUIRE(s.chosen.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(s.chosen[i] == expected[i]);

    // step 2 exercises the subgroup filter: 91 = 7 * 13, both classes outside
    // H, least factor 7 selected
    CHECK(s.transcript[1].y == 91);
    CHECK(s.transcript[1].selected == 7);

    // step 4: y = 381307 = 97 * 3931 and class(97) = 1 lies in H, so the
    // larger factor is the emission
    CHECK(s.transcript[3].y == 381307);
    CHECK(s.transcript[3].selected == 3931);
    CHECK(oracles::factor(Int(381307)) ==
          std::map<Int, unsigned>{{Int(97), 1}, {Int(3931), 1}});
}

TEST_CASE("polyvalue prime generator") {
    std::vector<Int> f{1, 0, 1}; // t^2 + 1
    auto primes = polyvalue_run(f, 3);
    REQUIRE(primes.size() == 3);
    CHECK(primes[0].prime == 2);
    CHECK(primes[0].argument == 1);
    CHECK(primes[1].prime == 5);
    CHECK(primes[1].argument == 2);
    CHECK(primes[2].prime == 101);
    CHECK(primes[2].argument == 10);
    for (const auto& p : primes) {
        CHECK(p.value == eval_int_poly(f, p.argument));
        CHECK(p.value % p.prime == 0);
        CHECK(oracles::is_prime(p.prime));
    }

    // trivial branch: f(0) = 0
    std::vector<Int> t{0, 1};
    auto tp = polyvalue_run(t, 4);
    CHECK(tp[0].prime == 2);
    CHECK(tp[1].prime == 3);
    CHECK(tp[2].prime == 5);
    CHECK(tp[3].prime == 7);

    CHECK_THROWS_AS(polyvalue_next_prime({Int(5)}, {}), InvalidParameters);
    CHECK_THROWS_AS(polyvalue_next_prime({Int(1), Int(0)}, {}), InvalidParameters);
}

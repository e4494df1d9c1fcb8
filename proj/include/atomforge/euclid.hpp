#pragma once

#include "atomforge/ring.hpp"

#include <optional>
#include <set>
#include <vector>

namespace atomforge {

// ---------------------------------------------------------------------------
// Euclidean Criterion generator: factoring y * f_1...f_n + 1 yields a fresh
// irreducible pairwise comaximal with everything chosen so far.

struct EuclidStep {
    bool seeded = false;                 // first step places the seed, no x
    std::optional<RingElement> y;
    std::optional<RingElement> x;        // y * prod(chosen) + 1
    std::optional<Factorization> x_factorization;
    RingElement selected;
    std::vector<BezoutCertificate> new_certificates; // one per prior element
};

struct EuclidState {
    RingDescriptor ring;
    std::vector<RingElement> chosen;             // canonical irreducibles
    std::vector<BezoutCertificate> certificates; // all pairs i < j
    std::vector<EuclidStep> transcript;
};

EuclidState euclid_init(const RingDescriptor& ring);

/// Appends the canonically least irreducible factor of y*prod+1 (or the seed
/// when empty) together with fresh certificates against every prior element.
/// FactorizationOverflow propagates; the input state is untouched (value
/// semantics).
EuclidState euclid_step(const EuclidState& state, const FactorConfig& cfg = {});

/// Runs until `count` irreducibles are chosen.
EuclidState euclid_run(const RingDescriptor& ring, unsigned count,
                       const FactorConfig& cfg = {});

/// Lemma "ax + b is a nonzero nonunit": x such that a*x + b is a nonzero
/// nonunit, by the case split on b. ZeroLeadingCoefficient when a = 0.
RingElement nonunit_specialization(const RingElement& a, const RingElement& b);

// ---------------------------------------------------------------------------
// residue-class generator over Z (irreducibles avoiding a proper subgroup
// H of (Z/N)^x)

struct PollackStep {
    Int poly_lead, poly_const;       // P(t) = lead * t + const
    Int x;                           // specialization point
    Int y;                           // P(x), the factored value
    Factorization y_factorization;
    Int selected;                    // emitted prime
    int selected_class;              // selected mod N
    std::vector<BezoutCertificate> new_certificates;
};

struct PollackState {
    long modulus = 0;
    std::set<long> subgroup;
    Int alpha, beta;
    std::vector<Int> chosen;
    std::vector<BezoutCertificate> certificates;
    std::vector<PollackStep> transcript;
};

/// Validates (N, H) and fixes alpha = least integer >= 2 with class outside H
/// and beta = its least positive inverse mod N. InvalidParameters when H is
/// not a proper subgroup of (Z/N)^x or N < 3.
PollackState pollack_init(long modulus, const std::set<long>& subgroup);

/// One emission: factors y = (alpha*x+1)(alpha*beta-1)*prod + alpha at the
/// specialization point and selects the least prime factor whose class
/// avoids H. InvariantViolation if no factor avoids H (impossible per the
/// construction; raising it is a self-test).
PollackState pollack_step(const PollackState& state, const FactorConfig& cfg = {});

PollackState pollack_run(long modulus, const std::set<long>& subgroup,
                         unsigned count, const FactorConfig& cfg = {});

// ---------------------------------------------------------------------------
// primes dividing polynomial values

struct PolyValuePrime {
    Int prime;
    Int argument; // prime | f(argument)
    Int value;    // f(argument)
};

/// Integer polynomial as coefficients, constant term first.
Int eval_int_poly(const std::vector<Int>& f, const Int& x);

/// Next prime dividing some f(n), outside `known`. Nonconstant f required.
PolyValuePrime polyvalue_next_prime(const std::vector<Int>& f,
                                    const std::vector<Int>& known,
                                    const FactorConfig& cfg = {});

std::vector<PolyValuePrime> polyvalue_run(const std::vector<Int>& f, unsigned count,
                                          const FactorConfig& cfg = {});

} // namespace atomforge

#pragma once

#include "atomforge/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace atomforge {

/// Largest n for which the 13-prime Miller-Rabin base set {2,...,41} is a
/// proven deterministic primality test (Sorenson-Webster).
const Int& mr_deterministic_bound();

struct FactorConfig {
    std::uint64_t trial_bound = 1'000'000;   // trial division by primes <= bound
    std::uint64_t rho_iterations = 1u << 26; // per-polynomial budget for Brent rho
    int rho_polynomials = 8;                 // x^2 + c for c = 1..rho_polynomials
};

/// Multiplicities of the positive prime factors of |n|, ascending.
struct IntFactorization {
    int sign = 1; // -1 for negative input
    std::vector<std::pair<Int, unsigned>> primes;

    Int replay() const; // sign * prod p^e
};

/// Certified primality verdict for n >= 2. Below the deterministic
/// Miller-Rabin bound the base set decides; above it a Pocklington (n-1)
/// certificate is constructed (recursively factoring n-1) and checked by
/// exact modular arithmetic. Throws FactorizationOverflow when neither
/// route completes within the budget.
bool is_certified_prime(const Int& n, const FactorConfig& cfg = {});

/// Full factorization of n != 0 by trial division, Brent rho splitting and
/// certified primality of every emitted factor.
/// Throws ZeroElement on 0 and FactorizationOverflow when a cofactor resists
/// the pipeline.
IntFactorization factor_integer(const Int& n, const FactorConfig& cfg = {});

/// Strong-probable-prime test to one base (exact arithmetic; building block
/// for the deterministic set and for composite screening).
bool miller_rabin_witness(const Int& n, const Int& base);

/// Least x with x*x <= n < (x+1)*(x+1), n >= 0.
Int isqrt(const Int& n);

} // namespace atomforge

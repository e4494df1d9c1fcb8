#pragma once

#include "atomforge/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace atomforge {

/// chi = prod (1 - chi_(f_i)) over a symmetric window: the characteristic
/// function of the integers coprime to every listed prime, with exact
/// periodicity and the Euclid extraction recorded per coset point.
struct PeriodicityReport {
    std::vector<std::int64_t> primes;
    std::int64_t period = 1;              // prod f_i
    std::int64_t window_radius = 0;
    bool verified = false;                // chi(x + period) = chi(x) throughout
    bool coset_check = false;             // chi = 1 on 1 + period Z in window
    // every x = 1 (mod period) in the window, x != +-1, with a prime factor
    // outside the input list
    std::vector<std::pair<std::int64_t, std::int64_t>> euclid_witnesses;
};

/// InvalidPrimeList unless the inputs are distinct primes >= 2.
PeriodicityReport periodic_char_check(const std::vector<std::int64_t>& primes,
                                      std::int64_t window_radius);

/// Membership in the Golomb-basic set b + aZ; NotCoprime when gcd(a, b) != 1.
bool golomb_membership(const Int& x, const Int& base_point, const Int& modulus);

struct ClosedIdealReport {
    std::int64_t prime = 0;
    std::int64_t window_radius = 0;
    std::uint64_t points_checked = 0;  // window points outside (p)
    std::uint64_t points_skipped = 0;  // multiples of p need no neighborhood
    bool all_neighborhoods_disjoint = false;
};

/// For every window point x outside (p), the Golomb-basic neighborhood
/// x + pZ misses pZ inside the window.
ClosedIdealReport maximal_ideal_closed_check(std::int64_t p, std::int64_t window_radius);

} // namespace atomforge

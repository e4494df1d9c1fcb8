#include "atomforge/topo.hpp"
#include "atomforge/errors.hpp"
#include "atomforge/intfactor.hpp"

#include <algorithm>
#include <set>

namespace atomforge {

namespace {

bool small_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int chi(std::int64_t x, const std::vector<std::int64_t>& primes) {
    for (std::int64_t p : primes)
        if (x % p == 0) return 0;
    return 1;
}

} // namespace

PeriodicityReport periodic_char_check(const std::vector<std::int64_t>& primes,
                                      std::int64_t window_radius) {
    if (primes.empty()) throw InvalidPrimeList("empty prime list");
    std::set<std::int64_t> distinct(primes.begin(), primes.end());
    if (distinct.size() != primes.size())
        throw InvalidPrimeList("primes must be distinct");
    for (std::int64_t p : primes)
        if (!small_prime(p)) throw InvalidPrimeList(std::to_string(p) + " is not prime");
    if (window_radius < 1) throw InvalidInput("window radius must be positive");

    PeriodicityReport report;
    report.primes = primes;
    for (std::int64_t p : primes) report.period *= p;
    report.window_radius = window_radius;

    report.verified = true;
    for (std::int64_t x = -window_radius; x + report.period <= window_radius; ++x) {
        if (chi(x, primes) != chi(x + report.period, primes)) {
            report.verified = false;
            break;
        }
    }

    report.coset_check = true;
    for (std::int64_t x = -window_radius; x <= window_radius; ++x) {
        if (((x - 1) % report.period + report.period) % report.period != 0) continue;
        if (chi(x, primes) != 1) {
            report.coset_check = false;
            continue;
        }
        if (x == 1 || x == -1) continue;
        // Euclid extraction: a prime factor outside the list must exist
        IntFactorization f = factor_integer(Int(x));
        std::int64_t external = 0;
        for (const auto& [p, e] : f.primes) {
            std::int64_t pv = std::int64_t(p);
            if (!distinct.count(pv)) { external = pv; break; }
        }
        if (external == 0) {
            report.coset_check = false;
        } else {
            report.euclid_witnesses.emplace_back(x, external);
        }
    }
    return report;
}

bool golomb_membership(const Int& x, const Int& base_point, const Int& modulus) {
    if (modulus < 1) throw InvalidInput("modulus must be positive");
    if (gcd(modulus, base_point) != 1)
        throw NotCoprime("x + aZ is Golomb-basic only for coprime (a, b)");
    Int diff = (x - base_point) % modulus;
    return diff == 0;
}

ClosedIdealReport maximal_ideal_closed_check(std::int64_t p, std::int64_t window_radius) {
    if (!small_prime(p)) throw InvalidPrimeList(std::to_string(p) + " is not prime");
    if (window_radius < 1) throw InvalidInput("window radius must be positive");

    ClosedIdealReport report;
    report.prime = p;
    report.window_radius = window_radius;
    report.all_neighborhoods_disjoint = true;
    // Golomb's space lives on the positive integers: window = [1, radius]
    for (std::int64_t x = 1; x <= window_radius; ++x) {
        if (x % p == 0) {
            ++report.points_skipped;
            continue;
        }
        ++report.points_checked;
        // neighborhood x + pZ: window points congruent to x mod p must all
        // avoid pZ — immediate since x is not 0 mod p, but verified literally
        for (std::int64_t y = 1; y <= window_radius; ++y) {
            if ((y - x) % p == 0 && y % p == 0) {
                report.all_neighborhoods_disjoint = false;
                break;
            }
        }
    }
    return report;
}

} // namespace atomforge

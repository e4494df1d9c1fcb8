#pragma once

#include <cstdint>
#include <vector>

namespace atomforge {

/// Table-backed finite field F_{p^k}. Supported sizes are tiny (q <= 729:
/// every base field of the toolkit and every coefficient field F_{q^d} of a
/// truncated subring), so full addition/multiplication tables are built once
/// per (p, k) and contexts are cached for the lifetime of the process.
///
/// Elements are value codes in [0, q): the element sum c_i x^i has code
/// sum c_i p^i. Code order (plain integer order) is the fixed field-element
/// order used for canonical transversals and tie-breaking everywhere.
class Fq {
public:
    /// Cached context lookup. p must be one of {2,3,5,7}; p^k <= 729.
    static const Fq& get(int p, int k);

    /// Context for a field of size q = p^k given as a prime power.
    static const Fq& of_order(int q);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    /// Monic irreducible modulus, coefficients ascending, length k+1.
    /// The least such polynomial in code order; for F_4, F_8, F_9 this is
    /// x^2+x+1, x^3+x+1, x^2+1.
    const std::vector<int>& modulus() const { return modulus_; }

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[idx(a, b)]; }
    std::uint16_t sub(std::uint16_t a, std::uint16_t b) const { return add_[idx(a, neg_[b])]; }
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[idx(a, b)]; }
    std::uint16_t inv(std::uint16_t a) const; // throws ZeroElement on 0
    std::uint16_t pow(std::uint16_t a, long long e) const;

    /// Membership in the subfield of order subq (subq = p^m with m | k):
    /// the fixed field of Frobenius^m, i.e. a^subq == a.
    bool in_subfield(std::uint16_t a, int subq) const;

    /// Representative of the orbit F_subq^x * a inside F_q^x: the least orbit
    /// member in code order. a must be nonzero.
    std::uint16_t orbit_transversal_rep(std::uint16_t a, int subq) const;

private:
    Fq(int p, int k);
    std::size_t idx(std::uint16_t a, std::uint16_t b) const {
        return std::size_t(a) * q_ + b;
    }

    int p_, k_, q_;
    std::vector<int> modulus_;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

/// True iff q is a prime power p^k with p prime; outputs p and k.
bool prime_power_split(int q, int& p, int& k);

} // namespace atomforge

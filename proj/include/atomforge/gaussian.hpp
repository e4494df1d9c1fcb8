#pragma once

#include "atomforge/bigint.hpp"
#include "atomforge/intfactor.hpp"

#include <utility>
#include <vector>

namespace atomforge {

/// Exact Gaussian integer a + bi.
struct GaussianInt {
    Int re, im;

    GaussianInt() = default;
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    bool operator==(const GaussianInt&) const = default;

    GaussianInt operator+(const GaussianInt& w) const { return {re + w.re, im + w.im}; }
    GaussianInt operator-(const GaussianInt& w) const { return {re - w.re, im - w.im}; }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator*(const GaussianInt& w) const {
        return {re * w.re - im * w.im, re * w.im + im * w.re};
    }

    GaussianInt conj() const { return {re, -im}; }
    Int norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }
};

/// Nearest-integer quotient and the corresponding remainder of z / w.
/// The remainder always satisfies norm(r) <= norm(w)/2 < norm(w).
std::pair<GaussianInt, GaussianInt> gaussian_divmod(const GaussianInt& z,
                                                    const GaussianInt& w);

/// True iff w | z exactly; quotient out when requested.
bool gaussian_divides(const GaussianInt& w, const GaussianInt& z,
                      GaussianInt* quotient = nullptr);

GaussianInt gaussian_gcd(GaussianInt z, GaussianInt w);

struct GaussianXgcd {
    GaussianInt g, u, v; // u*a + v*b = g
};
GaussianXgcd gaussian_xgcd(const GaussianInt& a, const GaussianInt& b);

/// First-quadrant associate: the unique rotation i^k * z with re > 0, im >= 0
/// (axis elements land on the positive real axis). Returns (unit, canonical)
/// with z = unit * canonical.
std::pair<GaussianInt, GaussianInt> gaussian_canonical(const GaussianInt& z);

/// Canonical order: norm, then (re, im) lexicographic.
int gaussian_compare(const GaussianInt& a, const GaussianInt& b);

struct GaussianFactorization {
    GaussianInt unit;
    std::vector<std::pair<GaussianInt, unsigned>> factors; // canonical, sorted
};

/// Factorization into canonical Gaussian primes via the norm: 2 ramifies to
/// (1+i)^2, p = 1 (mod 4) splits (root of -1 found by deterministic
/// nonresidue search), p = 3 (mod 4) stays inert.
GaussianFactorization gaussian_factor(const GaussianInt& z,
                                      const FactorConfig& cfg = {});

} // namespace atomforge

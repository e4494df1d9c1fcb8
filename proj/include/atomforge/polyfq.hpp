#pragma once

#include "atomforge/fq.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace atomforge {

/// Dense univariate polynomial over a cached Fq context. Coefficients are
/// field codes, ascending by degree, never with a trailing zero.
class PolyFq {
public:
    PolyFq() : F_(nullptr) {}
    explicit PolyFq(const Fq& F) : F_(&F) {}
    PolyFq(const Fq& F, std::vector<std::uint16_t> coeffs);

    static PolyFq zero(const Fq& F) { return PolyFq(F); }
    static PolyFq constant(const Fq& F, std::uint16_t c);
    static PolyFq x(const Fq& F); // the monomial t

    const Fq& field() const { return *F_; }
    const std::vector<std::uint16_t>& coeffs() const { return c_; }
    int degree() const { return int(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_unit() const { return degree() == 0; }
    std::uint16_t coeff(int i) const {
        return i >= 0 && i < int(c_.size()) ? c_[i] : 0;
    }
    std::uint16_t lead() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const PolyFq& o) const { return c_ == o.c_; }

    PolyFq operator+(const PolyFq& o) const;
    PolyFq operator-(const PolyFq& o) const;
    PolyFq operator*(const PolyFq& o) const;
    PolyFq operator-() const;

    std::uint16_t eval(std::uint16_t a) const;
    PolyFq derivative() const;

    std::string to_string() const; // e.g. "t^3+2*t+1"

private:
    void normalize();
    const Fq* F_;
    std::vector<std::uint16_t> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<PolyFq, PolyFq> poly_divmod(const PolyFq& a, const PolyFq& b);

/// (unit, monic) with a = unit * monic; a nonzero.
std::pair<std::uint16_t, PolyFq> poly_monic(const PolyFq& a);

PolyFq poly_gcd(PolyFq a, PolyFq b); // monic (or zero)

struct PolyXgcd {
    PolyFq g, u, v; // u*a + v*b = g, g monic when nonzero
};
PolyXgcd poly_xgcd(const PolyFq& a, const PolyFq& b);

PolyFq poly_powmod(const PolyFq& base, long long e, const PolyFq& mod);

/// Canonical order: degree, then coefficients compared from the leading end
/// in field code order.
int poly_compare(const PolyFq& a, const PolyFq& b);

struct PolyFactorization {
    std::uint16_t unit = 1;                          // field constant
    std::vector<std::pair<PolyFq, unsigned>> factors; // monic irreducible, sorted
};

/// Complete factorization: squarefree decomposition, distinct-degree
/// factorization, then deterministic Berlekamp splitting of equal-degree
/// parts (exhausting the nullspace basis and all c in F_q separates every
/// pair of factors). Exact and deterministic for the small fields used here.
PolyFactorization poly_factor(const PolyFq& f);

bool poly_is_irreducible(const PolyFq& f);

} // namespace atomforge

#pragma once

#include "atomforge/fq.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace atomforge {

/// Context for the truncated local subring F_q + t^e F_{q^d}[[t]] mod t^N.
/// Coefficients live in K = F_{q^d}; slot 0 is constrained to the subfield of
/// order q (Frobenius fixed field), slots 1..e-1 are identically zero.
struct TruncCtx {
    int q, d, e, N;
    const Fq* K;   // coefficient field F_{q^d}
    int Kq;        // q^d

    static const TruncCtx& get(int q, int d, int e, int N);

    /// Element count q * (q^d)^(N-e); throws BudgetExceeded past the
    /// enumeration budget (2^24 by default, ATOMFORGE_BUDGET overrides).
    std::uint64_t element_count() const;
    std::uint64_t unit_count() const;
    void check_budget() const;
    /// Guard for the exhaustive pairwise scans (radical, orbit partition,
    /// prime search): element_count^2 must fit the same budget.
    void check_pair_budget() const;

    /// Sorted codes of the slot-0 subfield inside K.
    const std::vector<std::uint16_t>& subfield_codes() const { return subfield_; }

    /// Canonical representative of the F_q^x-orbit of a nonzero leading
    /// coefficient (least member in code order).
    std::uint16_t transversal(std::uint16_t lead) const;

private:
    TruncCtx(int q, int d, int e, int N);
    std::vector<std::uint16_t> subfield_;
};

/// Immutable element of a truncated subring: N coefficient codes over K.
class TruncElem {
public:
    TruncElem() : ctx_(nullptr) {}
    /// Validates the subring constraints (throws InvalidInput).
    TruncElem(const TruncCtx& ctx, std::vector<std::uint16_t> coeffs);

    static TruncElem zero(const TruncCtx& ctx);
    static TruncElem one(const TruncCtx& ctx);
    /// c * t^k (c a K code; the result must satisfy the constraints)
    static TruncElem monomial(const TruncCtx& ctx, int k, std::uint16_t c = 1);

    const TruncCtx& ctx() const { return *ctx_; }
    const std::vector<std::uint16_t>& coeffs() const { return c_; }
    std::uint16_t coeff(int i) const { return c_[std::size_t(i)]; }

    bool operator==(const TruncElem& o) const { return c_ == o.c_; }
    bool is_zero() const;
    bool is_unit() const { return c_[0] != 0; }

    TruncElem operator+(const TruncElem& o) const;
    TruncElem operator-(const TruncElem& o) const;
    TruncElem operator-() const;
    TruncElem operator*(const TruncElem& o) const; // convolution mod t^N

    /// Least index with a nonzero coefficient; throws ZeroElement on 0.
    int valuation() const;

    /// Multiplicative inverse of a unit (coefficient recursion; stays in the
    /// subring). Throws InvalidInput when the element is not a unit.
    TruncElem inverse() const;

    /// Position of the element in the fixed enumeration order: base-q^d value
    /// of the coefficient vector, slot j weighted (q^d)^j.
    std::uint64_t encode() const;

    std::string to_string() const;

private:
    const TruncCtx* ctx_;
    std::vector<std::uint16_t> c_;
    friend class TruncEnumerator;
};

enum class TruncFilter { All, Units, NonzeroNonunits };

/// Visits every element matching the filter exactly once, ascending in
/// encode() order. Checks the enumeration budget first.
void enumerate_elements(const TruncCtx& ctx, TruncFilter filter,
                        const std::function<void(const TruncElem&)>& fn);

std::uint64_t enumerate_count(const TruncCtx& ctx, TruncFilter filter);

/// Divisibility b | a in the truncated model. Both nonzero; requires the
/// divisor inside the soundness window, v(b) <= N-e-1 (OutsideSoundnessWindow
/// beyond it). Within the window the verdict provably matches the
/// untruncated subring: the quotient digits that carry the membership
/// constraints (slots 0..e-1) are all visible below t^N. The witness, when
/// it exists, has v(c) = v(a) - v(b), reproduces a exactly under the
/// truncated product, and is the enumeration-least such witness (free top
/// slots zero).
std::optional<TruncElem> divides_truncated(const TruncElem& b, const TruncElem& a);

/// The same decision procedure without the window guard (test support).
std::optional<TruncElem> divides_model(const TruncElem& b, const TruncElem& a);

/// Canonical associate: (u, x_can) with x = u * x_can, where x_can is the
/// encode-least unit multiple of x whose leading coefficient lies in the
/// F_q^x-orbit transversal. Constant on associate orbits.
std::pair<TruncElem, TruncElem> trunc_canonical_associate(const TruncElem& x);

} // namespace atomforge

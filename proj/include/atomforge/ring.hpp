#pragma once

#include "atomforge/bigint.hpp"
#include "atomforge/gaussian.hpp"
#include "atomforge/polyfq.hpp"
#include "atomforge/trunc.hpp"

#include <string>
#include <variant>
#include <vector>

namespace atomforge {

// ---------------------------------------------------------------------------
// descriptors

struct ZRing {
    bool operator==(const ZRing&) const = default;
};
struct GaussRing {
    bool operator==(const GaussRing&) const = default;
};
struct PolyRing {
    int q; // prime power in {2,3,4,5,7,8,9}
    bool operator==(const PolyRing&) const = default;
};
struct TruncRing {
    int q, d, e, N;
    bool operator==(const TruncRing&) const = default;
    const TruncCtx& ctx() const { return TruncCtx::get(q, d, e, N); }
};

using RingDescriptor = std::variant<ZRing, GaussRing, PolyRing, TruncRing>;

/// "z" | "gauss" | "poly-fq:<q>" | "trunc:<q>:<d>:<e>:<N>"
RingDescriptor parse_ring(const std::string& text);
std::string ring_to_string(const RingDescriptor& ring);
bool ring_equal(const RingDescriptor& a, const RingDescriptor& b);

// ---------------------------------------------------------------------------
// elements

class RingElement {
public:
    using Payload = std::variant<Int, GaussianInt, PolyFq, TruncElem>;

    RingElement() = default;
    RingElement(RingDescriptor ring, Payload payload);

    static RingElement integer(Int v);
    static RingElement gaussian(Int re, Int im);
    static RingElement poly(int q, std::vector<std::uint16_t> coeffs);
    static RingElement trunc(const TruncRing& ring, TruncElem v);
    static RingElement zero(const RingDescriptor& ring);
    static RingElement one(const RingDescriptor& ring);

    const RingDescriptor& ring() const { return ring_; }
    const Payload& payload() const { return payload_; }

    const Int& as_int() const { return std::get<Int>(payload_); }
    const GaussianInt& as_gaussian() const { return std::get<GaussianInt>(payload_); }
    const PolyFq& as_poly() const { return std::get<PolyFq>(payload_); }
    const TruncElem& as_trunc() const { return std::get<TruncElem>(payload_); }

    bool operator==(const RingElement& o) const;
    bool is_zero() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;

    std::string to_string() const;

private:
    RingDescriptor ring_;
    Payload payload_;
};

// ---------------------------------------------------------------------------
// certificates

/// Comaximality witness: u*a + v*b = 1.
struct BezoutCertificate {
    RingElement a, b, u, v;
    bool verify() const;
};

/// unit * prod factor^multiplicity; factors canonical, sorted, irreducible.
struct Factorization {
    RingElement unit;
    std::vector<std::pair<RingElement, unsigned>> factors;
    RingElement replay() const;
};

/// value = y*x + 1 and value is not a unit.
struct ConditionEWitness {
    RingElement x, y, value;
    bool verify() const;
};

// ---------------------------------------------------------------------------
// operations (total over the stated preconditions; errors per spec)

bool is_unit(const RingElement& x);

struct CanonicalAssociate {
    RingElement unit, canonical; // x = unit * canonical
};
CanonicalAssociate canonical_associate(const RingElement& x);

/// Canonical order used for factor sorting and "least" tie-breaks:
/// magnitude / norm-then-lex / degree-then-lex / encode.
int compare_elements(const RingElement& a, const RingElement& b);

BezoutCertificate bezout(const RingElement& a, const RingElement& b);

Factorization factor(const RingElement& x, const FactorConfig& cfg = {});

RingElement irreducible_divisor(const RingElement& x, const FactorConfig& cfg = {});

ConditionEWitness condition_e_witness(const RingElement& x);

/// Irreducibility through the factorization route (or the valuation rule for
/// truncated subrings).
bool is_irreducible(const RingElement& x, const FactorConfig& cfg = {});

/// Least nonzero nonunit in canonical order (2, 1+i, t, t^e).
RingElement least_nonzero_nonunit(const RingDescriptor& ring);

/// Canonically least irreducible (2, 1+i, t, t^e); the generator seeds.
RingElement least_irreducible(const RingDescriptor& ring);

} // namespace atomforge

#include "atomforge/ring.hpp"
#include "atomforge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace atomforge {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

const Fq& poly_field(int q) { return Fq::of_order(q); }

int parse_int_field(const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw InvalidInput("malformed number in ring descriptor");
    return v;
}

} // namespace

RingDescriptor parse_ring(const std::string& text) {
    if (text == "z") return ZRing{};
    if (text == "gauss") return GaussRing{};
    if (text.rfind("poly-fq:", 0) == 0) {
        int q = parse_int_field(text.substr(8));
        poly_field(q); // validates
        if (q > 9) throw InvalidInput("q must be <= 9");
        return PolyRing{q};
    }
    if (text.rfind("trunc:", 0) == 0) {
        std::stringstream ss(text.substr(6));
        std::string part;
        std::vector<int> vals;
        while (std::getline(ss, part, ':')) vals.push_back(parse_int_field(part));
        if (vals.size() != 4) throw InvalidInput("trunc descriptor needs q:d:e:N");
        TruncRing r{vals[0], vals[1], vals[2], vals[3]};
        r.ctx(); // validates
        return r;
    }
    throw InvalidInput("unknown ring descriptor: " + text);
}

std::string ring_to_string(const RingDescriptor& ring) {
    return std::visit(
        overloaded{[](const ZRing&) { return std::string("z"); },
                   [](const GaussRing&) { return std::string("gauss"); },
                   [](const PolyRing& r) { return "poly-fq:" + std::to_string(r.q); },
                   [](const TruncRing& r) {
                       return "trunc:" + std::to_string(r.q) + ":" + std::to_string(r.d) +
                              ":" + std::to_string(r.e) + ":" + std::to_string(r.N);
                   }},
        ring);
}

bool ring_equal(const RingDescriptor& a, const RingDescriptor& b) { return a == b; }

// ---------------------------------------------------------------------------

RingElement::RingElement(RingDescriptor ring, Payload payload)
    : ring_(std::move(ring)), payload_(std::move(payload)) {
    bool ok = std::visit(
        overloaded{[&](const ZRing&) { return std::holds_alternative<Int>(payload_); },
                   [&](const GaussRing&) { return std::holds_alternative<GaussianInt>(payload_); },
                   [&](const PolyRing&) { return std::holds_alternative<PolyFq>(payload_); },
                   [&](const TruncRing&) { return std::holds_alternative<TruncElem>(payload_); }},
        ring_);
    if (!ok) throw InvalidInput("payload does not match ring kind");
}

RingElement RingElement::integer(Int v) { return RingElement(ZRing{}, std::move(v)); }

RingElement RingElement::gaussian(Int re, Int im) {
    return RingElement(GaussRing{}, GaussianInt{std::move(re), std::move(im)});
}

RingElement RingElement::poly(int q, std::vector<std::uint16_t> coeffs) {
    return RingElement(PolyRing{q}, PolyFq(poly_field(q), std::move(coeffs)));
}

RingElement RingElement::trunc(const TruncRing& ring, TruncElem v) {
    return RingElement(ring, std::move(v));
}

RingElement RingElement::zero(const RingDescriptor& ring) {
    return std::visit(
        overloaded{[](const ZRing&) { return integer(0); },
                   [](const GaussRing&) { return gaussian(0, 0); },
                   [](const PolyRing& r) {
                       return RingElement(r, PolyFq::zero(poly_field(r.q)));
                   },
                   [](const TruncRing& r) {
                       return RingElement(r, TruncElem::zero(r.ctx()));
                   }},
        ring);
}

RingElement RingElement::one(const RingDescriptor& ring) {
    return std::visit(
        overloaded{[](const ZRing&) { return integer(1); },
                   [](const GaussRing&) { return gaussian(1, 0); },
                   [](const PolyRing& r) {
                       return RingElement(r, PolyFq::constant(poly_field(r.q), 1));
                   },
                   [](const TruncRing& r) {
                       return RingElement(r, TruncElem::one(r.ctx()));
                   }},
        ring);
}

bool RingElement::operator==(const RingElement& o) const {
    return ring_ == o.ring_ && payload_ == o.payload_;
}

bool RingElement::is_zero() const {
    return std::visit(overloaded{[](const Int& v) { return v == 0; },
                                 [](const GaussianInt& v) { return v.is_zero(); },
                                 [](const PolyFq& v) { return v.is_zero(); },
                                 [](const TruncElem& v) { return v.is_zero(); }},
                      payload_);
}

namespace {

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (!ring_equal(a.ring(), b.ring()))
        throw InvalidInput("elements from different rings");
}

} // namespace

RingElement RingElement::operator+(const RingElement& o) const {
    require_same_ring(*this, o);
    RingElement r;
    r.ring_ = ring_;
    r.payload_ = std::visit(
        overloaded{[&](const Int& v) { return Payload(v + o.as_int()); },
                   [&](const GaussianInt& v) { return Payload(v + o.as_gaussian()); },
                   [&](const PolyFq& v) { return Payload(v + o.as_poly()); },
                   [&](const TruncElem& v) { return Payload(v + o.as_trunc()); }},
        payload_);
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator-() const {
    RingElement r;
    r.ring_ = ring_;
    r.payload_ = std::visit(overloaded{[](const Int& v) { return Payload(-v); },
                                       [](const GaussianInt& v) { return Payload(-v); },
                                       [](const PolyFq& v) { return Payload(-v); },
                                       [](const TruncElem& v) { return Payload(-v); }},
                            payload_);
    return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
    require_same_ring(*this, o);
    RingElement r;
    r.ring_ = ring_;
    r.payload_ = std::visit(
        overloaded{[&](const Int& v) { return Payload(v * o.as_int()); },
                   [&](const GaussianInt& v) { return Payload(v * o.as_gaussian()); },
                   [&](const PolyFq& v) { return Payload(v * o.as_poly()); },
                   [&](const TruncElem& v) { return Payload(v * o.as_trunc()); }},
        payload_);
    return r;
}

std::string RingElement::to_string() const {
    return std::visit(
        overloaded{[](const Int& v) { return v.str(); },
                   [](const GaussianInt& v) {
                       return "(" + v.re.str() + "," + v.im.str() + ")";
                   },
                   [](const PolyFq& v) { return v.to_string(); },
                   [](const TruncElem& v) { return v.to_string(); }},
        payload_);
}

// ---------------------------------------------------------------------------

bool BezoutCertificate::verify() const {
    RingElement lhs = u * a + v * b;
    return lhs == RingElement::one(a.ring());
}

RingElement Factorization::replay() const {
    RingElement acc = unit;
    for (const auto& [f, e] : factors)
        for (unsigned i = 0; i < e; ++i) acc = acc * f;
    return acc;
}

bool ConditionEWitness::verify() const {
    return value == y * x + RingElement::one(x.ring()) && !is_unit(value);
}

// ---------------------------------------------------------------------------

bool is_unit(const RingElement& x) {
    return std::visit(
        overloaded{[](const Int& v) { return v == 1 || v == -1; },
                   [](const GaussianInt& v) { return v.is_unit(); },
                   [](const PolyFq& v) { return v.is_unit(); },
                   [](const TruncElem& v) { return v.is_unit(); }},
        x.payload());
}

CanonicalAssociate canonical_associate(const RingElement& x) {
    if (x.is_zero()) throw ZeroElement("canonical associate of zero");
    const RingDescriptor& ring = x.ring();
    return std::visit(
        overloaded{
            [&](const Int& v) {
                return CanonicalAssociate{RingElement::integer(v < 0 ? -1 : 1),
                                          RingElement::integer(abs(v))};
            },
            [&](const GaussianInt& v) {
                auto [u, can] = gaussian_canonical(v);
                return CanonicalAssociate{RingElement(ring, u), RingElement(ring, can)};
            },
            [&](const PolyFq& v) {
                auto [lead, monic] = poly_monic(v);
                return CanonicalAssociate{
                    RingElement(ring, PolyFq::constant(v.field(), lead)),
                    RingElement(ring, monic)};
            },
            [&](const TruncElem& v) {
                auto [u, can] = trunc_canonical_associate(v);
                return CanonicalAssociate{RingElement(ring, u), RingElement(ring, can)};
            }},
        x.payload());
}

int compare_elements(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return std::visit(
        overloaded{[&](const Int& v) {
                       const Int& w = b.as_int();
                       Int av = abs(v), aw = abs(w);
                       if (av != aw) return av < aw ? -1 : 1;
                       if (v != w) return v < w ? -1 : 1;
                       return 0;
                   },
                   [&](const GaussianInt& v) { return gaussian_compare(v, b.as_gaussian()); },
                   [&](const PolyFq& v) { return poly_compare(v, b.as_poly()); },
                   [&](const TruncElem& v) {
                       std::uint64_t ea = v.encode(), eb = b.as_trunc().encode();
                       if (ea != eb) return ea < eb ? -1 : 1;
                       return 0;
                   }},
        a.payload());
}

BezoutCertificate bezout(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    const RingDescriptor& ring = a.ring();
    return std::visit(
        overloaded{
            [&](const ZRing&) {
                Int x = a.as_int(), y = b.as_int();
                Int old_r = x, r = y, old_u = 1, u = 0, old_v = 0, v = 1;
                while (r != 0) {
                    Int q = old_r / r; // truncated division is fine for the identity
                    Int t;
                    t = old_r - q * r; old_r = r; r = t;
                    t = old_u - q * u; old_u = u; u = t;
                    t = old_v - q * v; old_v = v; v = t;
                }
                if (old_r < 0) { old_r = -old_r; old_u = -old_u; old_v = -old_v; }
                if (old_r != 1) throw NotComaximal("gcd is " + old_r.str());
                return BezoutCertificate{a, b, RingElement::integer(old_u),
                                         RingElement::integer(old_v)};
            },
            [&](const GaussRing&) {
                auto res = gaussian_xgcd(a.as_gaussian(), b.as_gaussian());
                if (!res.g.is_unit())
                    throw NotComaximal("gaussian gcd is a nonunit");
                // scale so u*a + v*b = 1 exactly; a unit's inverse is its conjugate
                GaussianInt ginv = res.g.conj();
                return BezoutCertificate{a, b, RingElement(ring, res.u * ginv),
                                         RingElement(ring, res.v * ginv)};
            },
            [&](const PolyRing&) {
                auto res = poly_xgcd(a.as_poly(), b.as_poly());
                if (res.g.degree() != 0)
                    throw NotComaximal("polynomial gcd is a nonunit");
                return BezoutCertificate{a, b, RingElement(ring, res.u),
                                         RingElement(ring, res.v)};
            },
            [&](const TruncRing&) -> BezoutCertificate {
                throw UnsupportedRing("bezout over a truncated subring");
            }},
        ring);
}

Factorization factor(const RingElement& x, const FactorConfig& cfg) {
    if (x.is_zero()) throw ZeroElement("factorization of zero");
    const RingDescriptor& ring = x.ring();
    return std::visit(
        overloaded{
            [&](const ZRing&) {
                IntFactorization f = factor_integer(x.as_int(), cfg);
                Factorization out;
                out.unit = RingElement::integer(f.sign);
                for (const auto& [p, e] : f.primes)
                    out.factors.emplace_back(RingElement::integer(p), e);
                return out;
            },
            [&](const GaussRing&) {
                GaussianFactorization f = gaussian_factor(x.as_gaussian(), cfg);
                Factorization out;
                out.unit = RingElement(ring, f.unit);
                for (const auto& [p, e] : f.factors)
                    out.factors.emplace_back(RingElement(ring, p), e);
                return out;
            },
            [&](const PolyRing& r) {
                PolyFactorization f = poly_factor(x.as_poly());
                Factorization out;
                out.unit = RingElement(ring, PolyFq::constant(poly_field(r.q), f.unit));
                for (const auto& [p, e] : f.factors)
                    out.factors.emplace_back(RingElement(ring, p), e);
                return out;
            },
            [&](const TruncRing&) -> Factorization {
                throw UnsupportedRing("factorization over a truncated subring");
            }},
        ring);
}

RingElement irreducible_divisor(const RingElement& x, const FactorConfig& cfg) {
    if (x.is_zero()) throw ZeroElement("irreducible divisor of zero");
    if (is_unit(x)) throw IsUnit("units have no irreducible divisor");
    if (const auto* tr = std::get_if<TruncRing>(&x.ring())) {
        // valuation rule: v in [e, 2e-1] is irreducible itself, otherwise
        // t^e splits off
        const TruncElem& v = x.as_trunc();
        const TruncCtx& ctx = tr->ctx();
        if (v.valuation() >= 2 * ctx.e)
            return RingElement::trunc(*tr, TruncElem::monomial(ctx, ctx.e));
        return canonical_associate(x).canonical;
    }
    Factorization f = factor(x, cfg);
    return f.factors.front().first;
}

ConditionEWitness condition_e_witness(const RingElement& x) {
    if (x.is_zero()) throw ZeroElement("condition (E) witness of zero");
    const RingDescriptor& ring = x.ring();
    RingElement y = std::visit(
        overloaded{[&](const ZRing&) {
                       return RingElement::integer(x.as_int() > 0 ? 1 : -1);
                   },
                   [&](const GaussRing&) {
                       return RingElement(ring, x.as_gaussian().conj());
                   },
                   [&](const PolyRing& r) {
                       return RingElement(ring, PolyFq::x(poly_field(r.q)));
                   },
                   [&](const TruncRing&) -> RingElement {
                       throw UnsupportedRing(
                           "condition (E) fails over a truncated subring");
                   }},
        ring);
    ConditionEWitness w{x, y, y * x + RingElement::one(ring)};
    if (is_unit(w.value) || w.value.is_zero())
        throw InvariantViolation("condition (E) witness produced a unit");
    return w;
}

bool is_irreducible(const RingElement& x, const FactorConfig& cfg) {
    if (x.is_zero() || is_unit(x)) return false;
    if (std::holds_alternative<TruncRing>(x.ring())) {
        const TruncElem& v = x.as_trunc();
        int e = v.ctx().e;
        int val = v.valuation();
        return val >= e && val <= 2 * e - 1;
    }
    Factorization f = factor(x, cfg);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

RingElement least_nonzero_nonunit(const RingDescriptor& ring) {
    return std::visit(
        overloaded{[](const ZRing&) { return RingElement::integer(2); },
                   [](const GaussRing&) { return RingElement::gaussian(1, 1); },
                   [](const PolyRing& r) {
                       return RingElement(RingDescriptor(r), PolyFq::x(poly_field(r.q)));
                   },
                   [](const TruncRing& r) {
                       return RingElement::trunc(r, TruncElem::monomial(r.ctx(), r.e));
                   }},
        ring);
}

RingElement least_irreducible(const RingDescriptor& ring) {
    if (std::holds_alternative<TruncRing>(ring)) {
        const auto& r = std::get<TruncRing>(ring);
        return RingElement::trunc(r, TruncElem::monomial(r.ctx(), r.e));
    }
    return least_nonzero_nonunit(ring); // 2, 1+i and t are irreducible
}

} // namespace atomforge

#include "atomforge/euclid.hpp"
#include "atomforge/errors.hpp"

#include <algorithm>
#include <numeric>

namespace atomforge {

EuclidState euclid_init(const RingDescriptor& ring) {
    if (std::holds_alternative<TruncRing>(ring))
        throw UnsupportedRing("condition (E) fails over a truncated subring");
    EuclidState s;
    s.ring = ring;
    return s;
}

EuclidState euclid_step(const EuclidState& state, const FactorConfig& cfg) {
    EuclidState next = state;
    EuclidStep step;

    if (state.chosen.empty()) {
        step.seeded = true;
        step.selected = least_irreducible(state.ring);
        next.chosen.push_back(step.selected);
        next.transcript.push_back(std::move(step));
        return next;
    }

    RingElement prod = RingElement::one(state.ring);
    for (const RingElement& f : state.chosen) prod = prod * f;

    ConditionEWitness w = condition_e_witness(prod);
    RingElement x = w.value; // y * prod + 1, a nonzero nonunit

    Factorization xf = factor(x, cfg); // FactorizationOverflow propagates here
    RingElement selected = xf.factors.front().first;

    step.y = w.y;
    step.x = x;
    step.x_factorization = xf;
    step.selected = selected;
    for (const RingElement& f : state.chosen) {
        BezoutCertificate cert = bezout(f, selected);
        if (!cert.verify())
            throw InvariantViolation("fresh certificate failed to verify");
        step.new_certificates.push_back(cert);
        next.certificates.push_back(cert);
    }
    for (const RingElement& f : state.chosen)
        if (f == selected)
            throw InvariantViolation("generator repeated an irreducible");

    next.chosen.push_back(selected);
    next.transcript.push_back(std::move(step));
    return next;
}

EuclidState euclid_run(const RingDescriptor& ring, unsigned count,
                       const FactorConfig& cfg) {
    EuclidState s = euclid_init(ring);
    while (s.chosen.size() < count) s = euclid_step(s, cfg);
    return s;
}

RingElement nonunit_specialization(const RingElement& a, const RingElement& b) {
    if (a.is_zero()) throw ZeroLeadingCoefficient("a must be nonzero");
    const RingDescriptor& ring = a.ring();
    if (b.is_zero()) return least_nonzero_nonunit(ring);
    if (is_unit(b)) {
        // b * (b^-1 a x + 1) is a nonzero nonunit when x witnesses b^-1 a.
        // unit inverses: +-1 over Z, conjugate over Z[i], constant over F_q[t]
        RingElement scaled;
        if (std::holds_alternative<ZRing>(ring)) {
            scaled = RingElement::integer(a.as_int() * b.as_int());
        } else if (std::holds_alternative<GaussRing>(ring)) {
            scaled = RingElement(ring, a.as_gaussian() * b.as_gaussian().conj());
        } else if (std::holds_alternative<PolyRing>(ring)) {
            const PolyFq& bp = b.as_poly();
            PolyFq inv = PolyFq::constant(bp.field(), bp.field().inv(bp.lead()));
            scaled = RingElement(ring, a.as_poly() * inv);
        } else {
            throw UnsupportedRing("specialization over a truncated subring");
        }
        return condition_e_witness(scaled).y;
    }
    return RingElement::zero(ring); // b itself is already a nonzero nonunit
}

// ---------------------------------------------------------------------------

namespace {

long mod_class(const Int& v, long N) {
    Int m = v % N;
    if (m < 0) m += N;
    return long(m);
}

void check_subgroup(long N, const std::set<long>& H) {
    if (N < 3) throw InvalidParameters("modulus must be >= 3");
    for (long h : H) {
        if (h < 1 || h >= N || std::gcd(h, N) != 1)
            throw InvalidParameters("subgroup elements must be units mod N");
    }
    if (!H.count(1)) throw InvalidParameters("subgroup must contain 1");
    for (long a : H)
        for (long b : H)
            if (!H.count((a * b) % N))
                throw InvalidParameters("subgroup not closed under multiplication");
    // closure + finiteness gives inverses; properness checked against phi(N)
    long units = 0;
    for (long a = 1; a < N; ++a)
        if (std::gcd(a, N) == 1) ++units;
    if (long(H.size()) == units)
        throw InvalidParameters("subgroup must be proper");
}

} // namespace

PollackState pollack_init(long modulus, const std::set<long>& subgroup) {
    check_subgroup(modulus, subgroup);
    PollackState s;
    s.modulus = modulus;
    s.subgroup = subgroup;
    for (long a = 2;; ++a) {
        if (std::gcd(a, modulus) != 1) continue;
        if (!subgroup.count(a % modulus)) { s.alpha = a; break; }
        if (a > 2 * modulus)
            throw InvalidParameters("no unit class outside the subgroup");
    }
    for (long b = 1;; ++b) {
        if (mod_class(s.alpha * b, modulus) == 1) { s.beta = b; break; }
    }
    return s;
}

PollackState pollack_step(const PollackState& state, const FactorConfig& cfg) {
    PollackState next = state;
    PollackStep step;

    Int prod = 1;
    for (const Int& f : state.chosen) prod *= f;

    Int ab1 = state.alpha * state.beta - 1; // in (N), nonzero
    step.poly_lead = state.alpha * ab1 * prod;
    step.poly_const = ab1 * prod + state.alpha;

    RingElement xr = nonunit_specialization(RingElement::integer(step.poly_lead),
                                            RingElement::integer(step.poly_const));
    step.x = xr.as_int();
    step.y = step.poly_lead * step.x + step.poly_const;

    Factorization yf = factor(RingElement::integer(step.y), cfg);
    step.y_factorization = yf;

    const long N = state.modulus;
    Int selected = 0;
    for (const auto& [p, e] : yf.factors) {
        long cls = mod_class(p.as_int(), N);
        if (!state.subgroup.count(cls)) { selected = p.as_int(); break; }
    }
    if (selected == 0)
        throw InvariantViolation("no factor class avoids the subgroup");

    step.selected = selected;
    step.selected_class = int(mod_class(selected, N));
    if (gcd(selected, Int(N)) != 1 || gcd(selected, state.alpha) != 1)
        throw InvariantViolation("emitted prime shares a factor with N or alpha");

    for (const Int& f : state.chosen) {
        BezoutCertificate cert =
            bezout(RingElement::integer(f), RingElement::integer(selected));
        if (!cert.verify())
            throw InvariantViolation("fresh certificate failed to verify");
        step.new_certificates.push_back(cert);
        next.certificates.push_back(cert);
    }
    next.chosen.push_back(selected);
    next.transcript.push_back(std::move(step));
    return next;
}

PollackState pollack_run(long modulus, const std::set<long>& subgroup, unsigned count,
                         const FactorConfig& cfg) {
    PollackState s = pollack_init(modulus, subgroup);
    while (s.chosen.size() < count) s = pollack_step(s, cfg);
    return s;
}

// ---------------------------------------------------------------------------

Int eval_int_poly(const std::vector<Int>& f, const Int& x) {
    Int acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

PolyValuePrime polyvalue_next_prime(const std::vector<Int>& f,
                                    const std::vector<Int>& known,
                                    const FactorConfig& cfg) {
    if (f.size() < 2 || f.back() == 0)
        throw InvalidParameters("polynomial must be nonconstant with exact degree");
    Int f0 = f.front();
    auto is_known = [&](const Int& p) {
        return std::find(known.begin(), known.end(), p) != known.end();
    };

    if (f0 == 0) {
        // trivial branch: every prime divides f(p) = p * (...)
        for (Int p = 2;; ++p) {
            if (!is_certified_prime(p, cfg) || is_known(p)) continue;
            return {p, p, eval_int_poly(f, p)};
        }
    }

    // base factor: prime divisors p_i of f(0) raised one past their exponent,
    // times the known primes q_j not dividing f(0)
    IntFactorization f0f = factor_integer(f0, cfg);
    Int base = 1;
    std::vector<Int> excluded;
    for (const auto& [p, e] : f0f.primes) {
        Int pw = 1;
        for (unsigned i = 0; i <= e; ++i) pw *= p;
        base *= pw;
        excluded.push_back(p);
    }
    for (const Int& q : known) {
        if (f0 % q != 0) {
            base *= q;
            excluded.push_back(q);
        }
    }

    for (Int m = 1;; ++m) {
        Int arg = m * base;
        Int val = eval_int_poly(f, arg);
        if (val == 0 || val == 1 || val == -1) continue;
        Factorization vf = factor(RingElement::integer(val), cfg);
        for (const auto& [p, e] : vf.factors) {
            const Int& prime = p.as_int();
            if (std::find(excluded.begin(), excluded.end(), prime) != excluded.end())
                continue;
            return {prime, arg, val};
        }
    }
}

std::vector<PolyValuePrime> polyvalue_run(const std::vector<Int>& f, unsigned count,
                                          const FactorConfig& cfg) {
    std::vector<PolyValuePrime> out;
    std::vector<Int> known;
    for (unsigned i = 0; i < count; ++i) {
        PolyValuePrime p = polyvalue_next_prime(f, known, cfg);
        known.push_back(p.prime);
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace atomforge

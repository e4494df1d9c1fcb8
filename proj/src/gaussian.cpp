#include "atomforge/gaussian.hpp"
#include "atomforge/errors.hpp"

#include <algorithm>

namespace atomforge {

namespace {

// nearest integer to u / n for n > 0 (ties rounded up)
Int round_div(const Int& u, const Int& n) {
    Int twice = 2 * u + n;
    Int q = twice / (2 * n);
    if (twice < 0 && twice % (2 * n) != 0) --q;
    return q;
}

} // namespace

std::pair<GaussianInt, GaussianInt> gaussian_divmod(const GaussianInt& z,
                                                    const GaussianInt& w) {
    if (w.is_zero()) throw ZeroElement("gaussian division by zero");
    Int n = w.norm();
    GaussianInt zw = z * w.conj(); // z/w = zw / n
    GaussianInt q{round_div(zw.re, n), round_div(zw.im, n)};
    GaussianInt r = z - q * w;
    return {q, r};
}

bool gaussian_divides(const GaussianInt& w, const GaussianInt& z, GaussianInt* quotient) {
    auto [q, r] = gaussian_divmod(z, w);
    if (!r.is_zero()) return false;
    if (quotient) *quotient = q;
    return true;
}

GaussianInt gaussian_gcd(GaussianInt z, GaussianInt w) {
    while (!w.is_zero()) {
        auto [q, r] = gaussian_divmod(z, w);
        z = w;
        w = r;
    }
    return z;
}

GaussianXgcd gaussian_xgcd(const GaussianInt& a, const GaussianInt& b) {
    GaussianInt old_r = a, r = b;
    GaussianInt old_u{1, 0}, u{0, 0};
    GaussianInt old_v{0, 0}, v{1, 0};
    while (!r.is_zero()) {
        auto [q, rem] = gaussian_divmod(old_r, r);
        old_r = r; r = rem;
        GaussianInt nu = old_u - q * u; old_u = u; u = nu;
        GaussianInt nv = old_v - q * v; old_v = v; v = nv;
    }
    return {old_r, old_u, old_v};
}

std::pair<GaussianInt, GaussianInt> gaussian_canonical(const GaussianInt& z) {
    if (z.is_zero()) throw ZeroElement("canonical associate of zero");
    GaussianInt cur = z;
    GaussianInt unit{1, 0};
    for (int k = 0; k < 4; ++k) {
        if (cur.re > 0 && cur.im >= 0) {
            // z = unit * cur with unit = i^-k = conj rotation
            return {unit, cur};
        }
        cur = GaussianInt{-cur.im, cur.re};          // i * cur
        unit = GaussianInt{unit.im, -unit.re};       // unit * (-i)
    }
    throw InvariantViolation("no first-quadrant associate");
}

int gaussian_compare(const GaussianInt& a, const GaussianInt& b) {
    Int na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb ? -1 : 1;
    if (a.re != b.re) return a.re < b.re ? -1 : 1;
    if (a.im != b.im) return a.im < b.im ? -1 : 1;
    return 0;
}

namespace {

// sqrt of -1 mod p for p = 1 (mod 4): n^((p-1)/4) for the least quadratic
// nonresidue n, found by sequential search (deterministic).
Int sqrt_minus_one(const Int& p) {
    Int exp = (p - 1) / 2;
    for (Int n = 2;; ++n) {
        if (powm(n, exp, p) == p - 1) return powm(n, (p - 1) / 4, p);
    }
}

} // namespace

GaussianFactorization gaussian_factor(const GaussianInt& z, const FactorConfig& cfg) {
    if (z.is_zero()) throw ZeroElement("factorization of zero");
    GaussianFactorization out;
    out.unit = GaussianInt{1, 0};
    if (z.is_unit()) {
        out.unit = z;
        return out;
    }
    IntFactorization nf = factor_integer(z.norm(), cfg);

    GaussianInt rem = z;
    GaussianInt unit_acc{1, 0};
    auto push = [&](const GaussianInt& raw) {
        auto [u, canon] = gaussian_canonical(raw);
        // raw = u * canon, so the product gains u per replacement
        unit_acc = unit_acc * u;
        for (auto& [f, e] : out.factors)
            if (f == canon) { ++e; return; }
        out.factors.emplace_back(canon, 1u);
    };

    for (const auto& [p, e] : nf.primes) {
        if (p == 2) {
            GaussianInt pi{1, 1};
            for (unsigned i = 0; i < e; ++i) {
                GaussianInt q;
                if (!gaussian_divides(pi, rem, &q))
                    throw InvariantViolation("norm factor 2 without (1+i) divisor");
                push(pi);
                rem = q;
            }
        } else if (p % 4 == 3) {
            // inert: norm exponent is even, contributes e/2 copies of p
            for (unsigned i = 0; i < e / 2; ++i) {
                GaussianInt q;
                if (!gaussian_divides(GaussianInt{p, 0}, rem, &q))
                    throw InvariantViolation("inert prime fails to divide");
                push(GaussianInt{p, 0});
                rem = q;
            }
        } else {
            Int r0 = sqrt_minus_one(p);
            GaussianInt pi = gaussian_gcd(GaussianInt{p, 0}, GaussianInt{r0, 1});
            for (GaussianInt f : {pi, pi.conj()}) {
                GaussianInt q;
                while (gaussian_divides(f, rem, &q)) {
                    push(f);
                    rem = q;
                }
            }
        }
    }
    if (!rem.is_unit())
        throw InvariantViolation("gaussian factorization left a nonunit");
    out.unit = rem * unit_acc;

    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  return gaussian_compare(a.first, b.first) < 0;
              });
    return out;
}

} // namespace atomforge

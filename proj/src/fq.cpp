#include "atomforge/fq.hpp"
#include "atomforge/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace atomforge {

namespace {

// Small dense polynomials over F_p (coefficients ascending), used only while
// building a context: modulus search and the multiplication table.

using Poly = std::vector<int>;

Poly normalized(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return normalized(r);
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
    a = normalized(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        int lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            int v = a[shift + i] - lead * b[i] % p;
            a[shift + i] = ((v % p) + p) % p;
        }
        a = normalized(a);
    }
    return a;
}

Poly decode(int code, int p) {
    Poly c;
    while (code) {
        c.push_back(code % p);
        code /= p;
    }
    return c;
}

int encode(const Poly& c, int p) {
    int v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

bool divides(const Poly& d, const Poly& a, int p) {
    return poly_mod(a, d, p).empty();
}

// Irreducibility over F_p by trial division; candidates are tiny (deg <= 9).
bool irreducible_fp(const Poly& f, int p) {
    int deg = int(f.size()) - 1;
    if (deg < 1) return false;
    for (int dd = 1; 2 * dd <= deg; ++dd) {
        int lo = 1;
        for (int i = 0; i < dd; ++i) lo *= p;
        // monic candidates of degree dd have codes in [lo, 2*lo)
        for (int code = lo; code < 2 * lo; ++code) {
            if (divides(decode(code, p), f, p)) return false;
        }
    }
    return true;
}

Poly least_irreducible(int p, int k) {
    if (k == 1) return {0, 1}; // x, unused as a modulus but keeps the invariant
    int lo = 1;
    for (int i = 0; i < k; ++i) lo *= p;
    for (int code = lo; code < 2 * lo; ++code) {
        Poly f = decode(code, p);
        if (irreducible_fp(f, p)) return f;
    }
    throw InvariantViolation("no irreducible modulus found");
}

} // namespace

bool prime_power_split(int q, int& p, int& k) {
    if (q < 2) return false;
    for (int cand : {2, 3, 5, 7}) {
        if (q % cand == 0) {
            p = cand;
            k = 0;
            int v = q;
            while (v % cand == 0) { v /= cand; ++k; }
            return v == 1;
        }
    }
    // q itself prime (> 7): still a prime power, but out of supported range
    p = q;
    k = 1;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

Fq::Fq(int p, int k) : p_(p), k_(k) {
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    if (q_ > 729) throw InvalidParameters("field order above supported range");
    modulus_ = least_irreducible(p, k);

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(a, p);
        Poly na(pa.size());
        for (std::size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
        neg_[a] = std::uint16_t(encode(normalized(na), p));
        for (int b = 0; b < q_; ++b) {
            Poly pb = decode(b, p);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < pa.size(); ++i) s[i] += pa[i];
            for (std::size_t i = 0; i < pb.size(); ++i) s[i] = (s[i] + pb[i]) % p;
            add_[idx(std::uint16_t(a), std::uint16_t(b))] =
                std::uint16_t(encode(normalized(s), p));
            Poly prod = k == 1 ? Poly{(a * b) % p}
                               : poly_mod(poly_mul(pa, pb, p), modulus_, p);
            mul_[idx(std::uint16_t(a), std::uint16_t(b))] =
                std::uint16_t(encode(normalized(prod), p));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul(std::uint16_t(a), std::uint16_t(b)) == 1) { inv_[a] = std::uint16_t(b); break; }
}

std::uint16_t Fq::inv(std::uint16_t a) const {
    if (a == 0) throw ZeroElement("inverse of zero field element");
    return inv_[a];
}

std::uint16_t Fq::pow(std::uint16_t a, long long e) const {
    if (e < 0) { a = inv(a); e = -e; }
    std::uint16_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool Fq::in_subfield(std::uint16_t a, int subq) const {
    return pow(a, subq) == a;
}

std::uint16_t Fq::orbit_transversal_rep(std::uint16_t a, int subq) const {
    if (a == 0) throw ZeroElement("transversal of zero");
    std::uint16_t best = a;
    for (int c = 1; c < q_; ++c) {
        if (!in_subfield(std::uint16_t(c), subq)) continue;
        std::uint16_t m = mul(std::uint16_t(c), a);
        if (m < best) best = m;
    }
    return best;
}

const Fq& Fq::get(int p, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Fq>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<Fq>(new Fq(p, k))).first;
    return *it->second;
}

const Fq& Fq::of_order(int q) {
    int p = 0, k = 0;
    if (!prime_power_split(q, p, k) || (p != 2 && p != 3 && p != 5 && p != 7))
        throw InvalidParameters("field order must be a prime power with p in {2,3,5,7}");
    return get(p, k);
}

} // namespace atomforge

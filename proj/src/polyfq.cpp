#include "atomforge/polyfq.hpp"
#include "atomforge/errors.hpp"

#include <algorithm>
#include <string>

namespace atomforge {

PolyFq::PolyFq(const Fq& F, std::vector<std::uint16_t> coeffs)
    : F_(&F), c_(std::move(coeffs)) {
    for (auto v : c_)
        if (v >= F.q()) throw InvalidInput("coefficient code out of range");
    normalize();
}

PolyFq PolyFq::constant(const Fq& F, std::uint16_t c) {
    PolyFq r(F);
    if (c != 0) r.c_ = {c};
    return r;
}

PolyFq PolyFq::x(const Fq& F) {
    PolyFq r(F);
    r.c_ = {0, 1};
    return r;
}

void PolyFq::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFq PolyFq::operator+(const PolyFq& o) const {
    PolyFq r(*F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = F_->add(coeff(int(i)), o.coeff(int(i)));
    r.normalize();
    return r;
}

PolyFq PolyFq::operator-(const PolyFq& o) const { return *this + (-o); }

PolyFq PolyFq::operator-() const {
    PolyFq r = *this;
    for (auto& v : r.c_) v = F_->neg(v);
    return r;
}

PolyFq PolyFq::operator*(const PolyFq& o) const {
    PolyFq r(*F_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
    }
    r.normalize();
    return r;
}

std::uint16_t PolyFq::eval(std::uint16_t a) const {
    std::uint16_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = F_->add(F_->mul(acc, a), c_[i]);
    return acc;
}

PolyFq PolyFq::derivative() const {
    PolyFq r(*F_);
    if (degree() < 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        // i * c_i, with i acting through the prime subfield
        std::uint16_t scaled = 0;
        for (std::size_t j = 0; j < i % F_->p(); ++j) scaled = F_->add(scaled, c_[i]);
        r.c_[i - 1] = scaled;
    }
    r.normalize();
    return r;
}

std::string PolyFq::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += "+";
        bool show_coeff = (c_[i] != 1) || i == 0;
        if (show_coeff) s += std::to_string(c_[i]);
        if (i > 0) {
            if (show_coeff) s += "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<PolyFq, PolyFq> poly_divmod(const PolyFq& a, const PolyFq& b) {
    if (b.is_zero()) throw ZeroElement("polynomial division by zero");
    const Fq& F = a.field();
    if (a.degree() < b.degree()) return {PolyFq::zero(F), a};
    std::vector<std::uint16_t> rem(a.coeffs());
    std::vector<std::uint16_t> quot(a.degree() - b.degree() + 1, 0);
    std::uint16_t invlead = F.inv(b.lead());
    for (int i = a.degree(); i >= b.degree(); --i) {
        std::uint16_t top = rem[i];
        if (top == 0) continue;
        std::uint16_t qc = F.mul(top, invlead);
        quot[i - b.degree()] = qc;
        for (int j = 0; j <= b.degree(); ++j) {
            int pos = i - b.degree() + j;
            rem[pos] = F.sub(rem[pos], F.mul(qc, b.coeff(j)));
        }
    }
    return {PolyFq(F, std::move(quot)), PolyFq(F, std::move(rem))};
}

std::pair<std::uint16_t, PolyFq> poly_monic(const PolyFq& a) {
    if (a.is_zero()) throw ZeroElement("monic form of zero");
    const Fq& F = a.field();
    std::uint16_t lead = a.lead();
    if (lead == 1) return {1, a};
    std::uint16_t inv = F.inv(lead);
    std::vector<std::uint16_t> c = a.coeffs();
    for (auto& v : c) v = F.mul(v, inv);
    return {lead, PolyFq(F, std::move(c))};
}

PolyFq poly_gcd(PolyFq a, PolyFq b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return poly_monic(a).second;
}

PolyXgcd poly_xgcd(const PolyFq& a, const PolyFq& b) {
    const Fq& F = a.field();
    PolyFq old_r = a, r = b;
    PolyFq old_u = PolyFq::constant(F, 1), u = PolyFq::zero(F);
    PolyFq old_v = PolyFq::zero(F), v = PolyFq::constant(F, 1);
    while (!r.is_zero()) {
        auto [q, rem] = poly_divmod(old_r, r);
        old_r = r; r = rem;
        PolyFq nu = old_u - q * u; old_u = u; u = nu;
        PolyFq nv = old_v - q * v; old_v = v; v = nv;
    }
    if (!old_r.is_zero()) {
        auto [lead, monic] = poly_monic(old_r);
        if (lead != 1) {
            PolyFq scale = PolyFq::constant(F, F.inv(lead));
            return {monic, old_u * scale, old_v * scale};
        }
    }
    return {old_r, old_u, old_v};
}

PolyFq poly_powmod(const PolyFq& base, long long e, const PolyFq& mod) {
    const Fq& F = base.field();
    PolyFq result = PolyFq::constant(F, 1);
    PolyFq acc = poly_divmod(base, mod).second;
    while (e) {
        if (e & 1) result = poly_divmod(result * acc, mod).second;
        acc = poly_divmod(acc * acc, mod).second;
        e >>= 1;
    }
    return result;
}

int poly_compare(const PolyFq& a, const PolyFq& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
    return 0;
}

namespace {

// coefficientwise p-th root; valid when f is a p-th power
PolyFq pth_root(const PolyFq& f) {
    const Fq& F = f.field();
    int p = F.p();
    long long root_exp = 1;
    for (int i = 1; i < F.k(); ++i) root_exp *= p; // Frobenius inverse: a -> a^(p^(k-1))
    std::vector<std::uint16_t> c(f.degree() / p + 1, 0);
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        if (i % p != 0) throw InvariantViolation("not a p-th power");
        c[i / p] = F.pow(f.coeff(i), root_exp);
    }
    return PolyFq(F, std::move(c));
}

// squarefree decomposition of a monic polynomial (char p)
void sff(const PolyFq& f, unsigned mult,
         std::vector<std::pair<PolyFq, unsigned>>& out) {
    const Fq& F = f.field();
    int p = F.p();
    if (f.degree() < 1) return;
    PolyFq d = f.derivative();
    if (d.is_zero()) {
        sff(pth_root(f), mult * p, out);
        return;
    }
    PolyFq c = poly_gcd(f, d);
    PolyFq w = poly_divmod(f, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        PolyFq y = poly_gcd(w, c);
        PolyFq z = poly_divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(z, mult * i);
        ++i;
        w = y;
        c = poly_divmod(c, y).first;
    }
    if (c.degree() > 0) sff(pth_root(c), mult * p, out);
}

// distinct-degree split of a monic squarefree polynomial:
// (product of all irreducible factors of degree d, d)
std::vector<std::pair<PolyFq, int>> ddf(PolyFq f) {
    const Fq& F = f.field();
    std::vector<std::pair<PolyFq, int>> out;
    PolyFq h = PolyFq::x(F);
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = poly_powmod(h, F.q(), f);
        PolyFq g = poly_gcd(h - PolyFq::x(F), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = poly_divmod(f, g).first;
            if (f.degree() == 0) break;
            h = poly_divmod(h, f).second;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// deterministic Berlekamp splitting of a monic squarefree product of
// irreducibles all of degree d
void edf(const PolyFq& f, int d, std::vector<PolyFq>& out) {
    const Fq& F = f.field();
    int n = f.degree();
    if (n == d) {
        out.push_back(f);
        return;
    }
    // frobenius matrix: row i = coefficients of x^(i*q) mod f
    std::vector<std::vector<std::uint16_t>> Q(n, std::vector<std::uint16_t>(n, 0));
    PolyFq xq = poly_powmod(PolyFq::x(F), F.q(), f);
    PolyFq row = PolyFq::constant(F, 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= row.degree(); ++j) Q[i][j] = row.coeff(j);
        row = poly_divmod(row * xq, f).second;
    }
    // B = Q - I, nullspace basis by Gaussian elimination on rows of B^T
    // (solve v*B = 0 working with columns as equations)
    std::vector<std::vector<std::uint16_t>> M(n, std::vector<std::uint16_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M[j][i] = i == j ? F.sub(Q[i][j], 1) : Q[i][j]; // transpose of Q - I
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int r = rank; r < n; ++r)
            if (M[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(M[sel], M[rank]);
        std::uint16_t inv = F.inv(M[rank][col]);
        for (int j = 0; j < n; ++j) M[rank][j] = F.mul(M[rank][j], inv);
        for (int r = 0; r < n; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            std::uint16_t factor = M[r][col];
            for (int j = 0; j < n; ++j)
                M[r][j] = F.sub(M[r][j], F.mul(factor, M[rank][j]));
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::vector<PolyFq> basis;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<std::uint16_t> v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = F.neg(M[r][col]);
        PolyFq vp(F, std::move(v));
        if (vp.degree() > 0) basis.push_back(vp); // skip the constants line
    }

    std::vector<PolyFq> work{f};
    const std::size_t target = std::size_t(n / d);
    for (const PolyFq& v : basis) {
        if (work.size() == target) break;
        std::vector<PolyFq> next;
        for (const PolyFq& u : work) {
            if (u.degree() == d) { next.push_back(u); continue; }
            PolyFq rest = u;
            for (int c = 0; c < F.q() && rest.degree() > d; ++c) {
                PolyFq g = poly_gcd(v - PolyFq::constant(F, std::uint16_t(c)), rest);
                if (g.degree() > 0 && g.degree() < rest.degree()) {
                    next.push_back(g);
                    rest = poly_divmod(rest, g).first;
                }
            }
            if (rest.degree() > 0) next.push_back(rest);
        }
        work = std::move(next);
    }
    if (work.size() != target)
        throw InvariantViolation("equal-degree splitting incomplete");
    for (auto& u : work) out.push_back(u);
}

} // namespace

PolyFactorization poly_factor(const PolyFq& f) {
    if (f.is_zero()) throw ZeroElement("factorization of zero polynomial");
    PolyFactorization out;
    auto [unit, monic] = poly_monic(f);
    out.unit = unit;
    if (monic.degree() == 0) return out;

    std::vector<std::pair<PolyFq, unsigned>> square_free;
    sff(monic, 1, square_free);
    for (const auto& [part, mult] : square_free) {
        for (const auto& [component, d] : ddf(part)) {
            std::vector<PolyFq> irr;
            edf(component, d, irr);
            for (const auto& g : irr) out.factors.emplace_back(g, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  return poly_compare(a.first, b.first) < 0;
              });
    return out;
}

bool poly_is_irreducible(const PolyFq& f) {
    if (f.degree() < 1) return false;
    PolyFactorization pf = poly_factor(f);
    return pf.factors.size() == 1 && pf.factors[0].second == 1;
}

} // namespace atomforge

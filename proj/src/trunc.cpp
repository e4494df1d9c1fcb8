#include "atomforge/trunc.hpp"
#include "atomforge/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

namespace atomforge {

namespace {

std::uint64_t enumeration_budget() {
    if (const char* env = std::getenv("ATOMFORGE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return std::min<std::uint64_t>(v, std::uint64_t(1) << 30);
    }
    return std::uint64_t(1) << 24;
}

} // namespace

TruncCtx::TruncCtx(int q_, int d_, int e_, int N_) : q(q_), d(d_), e(e_), N(N_) {
    int p = 0, k = 0;
    if (!prime_power_split(q, p, k) || (p != 2 && p != 3 && p != 5 && p != 7) || q > 9)
        throw InvalidParameters("q must be a prime power in {2,3,4,5,7,8,9}");
    if (d < 1 || d > 3) throw InvalidParameters("d must be in 1..3");
    if (e < 1 || e > 4) throw InvalidParameters("e must be in 1..4");
    if (N < 3 * e) throw InvalidParameters("truncation order must satisfy N >= 3e");
    K = &Fq::get(p, k * d);
    Kq = K->q();
    for (int c = 0; c < Kq; ++c)
        if (K->in_subfield(std::uint16_t(c), q)) subfield_.push_back(std::uint16_t(c));
}

const TruncCtx& TruncCtx::get(int q, int d, int e, int N) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int>, std::unique_ptr<TruncCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(q, d, e, N);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<TruncCtx>(new TruncCtx(q, d, e, N))).first;
    return *it->second;
}

std::uint64_t TruncCtx::element_count() const {
    unsigned __int128 n = q;
    for (int i = 0; i < N - e; ++i) {
        n *= Kq;
        if (n > (unsigned __int128)(1) << 62) return std::uint64_t(1) << 62;
    }
    return std::uint64_t(n);
}

std::uint64_t TruncCtx::unit_count() const {
    return element_count() / q * (q - 1);
}

void TruncCtx::check_budget() const {
    if (element_count() > enumeration_budget())
        throw BudgetExceeded("enumeration over " + std::to_string(q) + "," +
                             std::to_string(d) + "," + std::to_string(e) + "," +
                             std::to_string(N) + " exceeds the budget");
}

void TruncCtx::check_pair_budget() const {
    std::uint64_t n = element_count();
    if (n > (std::uint64_t(1) << 31) || n * n > enumeration_budget())
        throw BudgetExceeded("pairwise scan over " + std::to_string(q) + "," +
                             std::to_string(d) + "," + std::to_string(e) + "," +
                             std::to_string(N) + " exceeds the budget");
}

std::uint16_t TruncCtx::transversal(std::uint16_t lead) const {
    return K->orbit_transversal_rep(lead, q);
}

TruncElem::TruncElem(const TruncCtx& ctx, std::vector<std::uint16_t> coeffs)
    : ctx_(&ctx), c_(std::move(coeffs)) {
    if (int(c_.size()) != ctx.N) throw InvalidInput("coefficient vector length != N");
    for (auto v : c_)
        if (v >= ctx.Kq) throw InvalidInput("coefficient code out of range");
    if (!ctx.K->in_subfield(c_[0], ctx.q))
        throw InvalidInput("slot 0 must lie in F_q");
    for (int i = 1; i < ctx.e; ++i)
        if (c_[std::size_t(i)] != 0)
            throw InvalidInput("slots 1..e-1 must vanish");
}

TruncElem TruncElem::zero(const TruncCtx& ctx) {
    return TruncElem(ctx, std::vector<std::uint16_t>(ctx.N, 0));
}

TruncElem TruncElem::one(const TruncCtx& ctx) {
    std::vector<std::uint16_t> c(ctx.N, 0);
    c[0] = 1;
    return TruncElem(ctx, std::move(c));
}

TruncElem TruncElem::monomial(const TruncCtx& ctx, int k, std::uint16_t c) {
    if (k < 0 || k >= ctx.N) throw InvalidInput("monomial degree out of range");
    std::vector<std::uint16_t> v(ctx.N, 0);
    v[std::size_t(k)] = c;
    return TruncElem(ctx, std::move(v));
}

bool TruncElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint16_t v) { return v == 0; });
}

TruncElem TruncElem::operator+(const TruncElem& o) const {
    std::vector<std::uint16_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->K->add(c_[i], o.c_[i]);
    return TruncElem(*ctx_, std::move(r));
}

TruncElem TruncElem::operator-(const TruncElem& o) const { return *this + (-o); }

TruncElem TruncElem::operator-() const {
    std::vector<std::uint16_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->K->neg(c_[i]);
    return TruncElem(*ctx_, std::move(r));
}

TruncElem TruncElem::operator*(const TruncElem& o) const {
    const Fq& K = *ctx_->K;
    std::vector<std::uint16_t> r(c_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] = K.add(r[i + j], K.mul(c_[i], o.c_[j]));
        }
    }
    return TruncElem(*ctx_, std::move(r));
}

int TruncElem::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return int(i);
    throw ZeroElement("valuation of zero");
}

TruncElem TruncElem::inverse() const {
    if (!is_unit()) throw InvalidInput("inverse of a nonunit");
    const Fq& K = *ctx_->K;
    std::vector<std::uint16_t> b(c_.size(), 0);
    std::uint16_t a0inv = K.inv(c_[0]);
    b[0] = a0inv;
    for (std::size_t j = 1; j < c_.size(); ++j) {
        std::uint16_t acc = 0;
        for (std::size_t i = 1; i <= j; ++i)
            acc = K.add(acc, K.mul(c_[i], b[j - i]));
        b[j] = K.neg(K.mul(a0inv, acc));
    }
    // slots 1..e-1 of the inverse vanish automatically: the recursion only
    // pulls from c_i with i >= e
    return TruncElem(*ctx_, std::move(b));
}

std::uint64_t TruncElem::encode() const {
    std::uint64_t v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * ctx_->Kq + c_[i];
    return v;
}

std::string TruncElem::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += "+";
        bool show = (c_[i] != 1) || i == 0;
        if (show) s += std::to_string(c_[i]);
        if (i > 0) {
            if (show) s += "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

void enumerate_elements(const TruncCtx& ctx, TruncFilter filter,
                        const std::function<void(const TruncElem&)>& fn) {
    ctx.check_budget();
    const auto& sub = ctx.subfield_codes();
    std::vector<std::uint16_t> c(std::size_t(ctx.N), 0);
    // odometer over the free slots, slot 0 fastest: ascending encode order
    std::size_t sub_pos = 0;
    while (true) {
        c[0] = sub[sub_pos];
        TruncElem el(ctx, c);
        bool take = true;
        if (filter == TruncFilter::Units) take = el.is_unit();
        else if (filter == TruncFilter::NonzeroNonunits) take = !el.is_unit() && !el.is_zero();
        if (take) fn(el);
        // advance
        if (++sub_pos < sub.size()) continue;
        sub_pos = 0;
        int slot = ctx.e;
        while (slot < ctx.N) {
            if (++c[std::size_t(slot)] < ctx.Kq) break;
            c[std::size_t(slot)] = 0;
            ++slot;
        }
        if (slot == ctx.N) return;
    }
}

std::uint64_t enumerate_count(const TruncCtx& ctx, TruncFilter filter) {
    std::uint64_t n = 0;
    enumerate_elements(ctx, filter, [&n](const TruncElem&) { ++n; });
    return n;
}

std::optional<TruncElem> divides_model(const TruncElem& b, const TruncElem& a) {
    const TruncCtx& ctx = a.ctx();
    const Fq& K = *ctx.K;
    int va = a.valuation(), vb = b.valuation();
    if (vb > va) return std::nullopt;
    int vc = va - vb;
    // unique quotient digits from the K[[t]] division recursion; top slots
    // (>= N - vb) do not reach the truncated product and stay zero
    std::vector<std::uint16_t> c(std::size_t(ctx.N), 0);
    std::uint16_t lead_inv = K.inv(b.coeff(vb));
    for (int j = 0; vc + j + vb < ctx.N; ++j) {
        std::uint16_t acc = a.coeff(va + j);
        for (int i = 1; i <= j; ++i)
            acc = K.sub(acc, K.mul(b.coeff(vb + i), c[std::size_t(vc + j - i)]));
        c[std::size_t(vc + j)] = K.mul(lead_inv, acc);
    }
    // witness must live in the subring
    if (!K.in_subfield(c[0], ctx.q)) return std::nullopt;
    for (int i = 1; i < ctx.e; ++i)
        if (c[std::size_t(i)] != 0) return std::nullopt;
    TruncElem witness(ctx, std::move(c));
    if (!(b * witness == a)) return std::nullopt;
    return witness;
}

std::optional<TruncElem> divides_truncated(const TruncElem& b, const TruncElem& a) {
    const TruncCtx& ctx = a.ctx();
    if (a.is_zero() || b.is_zero()) throw ZeroElement("divisibility needs nonzero elements");
    if (b.valuation() > ctx.N - ctx.e - 1)
        throw OutsideSoundnessWindow("divisor valuation above N-e-1");
    return divides_model(b, a);
}

std::pair<TruncElem, TruncElem> trunc_canonical_associate(const TruncElem& x) {
    const TruncCtx& ctx = x.ctx();
    if (x.is_zero()) throw ZeroElement("canonical associate of zero");
    std::uint16_t target_lead = ctx.transversal(x.coeff(x.valuation()));
    std::optional<TruncElem> best;
    std::optional<TruncElem> best_unit;
    enumerate_elements(ctx, TruncFilter::Units, [&](const TruncElem& u) {
        TruncElem cand = u * x;
        if (cand.coeff(cand.valuation()) != target_lead) return;
        if (!best || cand.encode() < best->encode()) {
            best = cand;
            best_unit = u;
        }
    });
    // x = u^-1 * (u*x)
    return {best_unit->inverse(), *best};
}

} // namespace atomforge

#include "atomforge/intfactor.hpp"
#include "atomforge/errors.hpp"

#include <algorithm>
#include <map>

namespace atomforge {

const Int& mr_deterministic_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

Int IntFactorization::replay() const {
    Int v = sign;
    for (const auto& [p, e] : primes)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
}

Int isqrt(const Int& n) {
    if (n < 0) throw InvalidParameters("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

bool miller_rabin_witness(const Int& n, const Int& base) {
    // returns true if n passes (is a strong probable prime to this base)
    Int a = base % n;
    if (a == 0) return true;
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    Int x = powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

namespace {

const int kDeterministicBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool mr_all_bases(const Int& n) {
    for (int b : kDeterministicBases) {
        if (n == b) return true;
        if (!miller_rabin_witness(n, Int(b))) return false;
    }
    return true;
}

// one polynomial x^2 + c of Brent's cycle variant; T is the working integer
// type (fixed-width when n is small enough, which is several times faster
// than heap-allocated limbs)
template <typename T>
Int brent_rho_round(const Int& n_big, int c, std::uint64_t budget) {
    const T n = static_cast<T>(n_big);
    T y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    std::uint64_t spent = 0;
    const std::uint64_t batch = 128;
    while (g == 1 && spent < budget) {
        x = y;
        for (T i = 0; i < r; ++i) y = (y * y + c) % n;
        T k = 0;
        while (k < r && g == 1 && spent < budget) {
            ys = y;
            T m = std::min<T>(T(batch), r - k);
            for (T i = 0; i < m; ++i) {
                y = (y * y + c) % n;
                T diff = x > y ? x - y : y - x;
                q = (q * diff) % n;
            }
            spent += static_cast<std::uint64_t>(m);
            g = gcd(q, n);
            k += m;
        }
        r <<= 1;
    }
    if (g == n) {
        // backtrack one step at a time; rediscovers the divisor the batch
        // jumped over, or ends with g = n within one batch
        do {
            ys = (ys * ys + c) % n;
            T diff = x > ys ? x - ys : ys - x;
            g = gcd(diff, n);
        } while (g == 1);
    }
    if (g > 1 && g < n) return Int(g);
    return 0;
}

Int brent_rho(const Int& n, const FactorConfig& cfg) {
    // any returned d is a verified nontrivial divisor; throws
    // FactorizationOverflow if every polynomial exhausts its budget
    if ((n & 1) == 0) return 2;
    const bool fits256 = boost::multiprecision::msb(n) < 120; // squares stay in range
    for (int c = 1; c <= cfg.rho_polynomials; ++c) {
        Int g = fits256 ? brent_rho_round<boost::multiprecision::uint256_t>(
                              n, c, cfg.rho_iterations)
                        : brent_rho_round<Int>(n, c, cfg.rho_iterations);
        if (g != 0) return g;
    }
    throw FactorizationOverflow("rho budget exhausted on " + n.str());
}

// n = base^k with k maximal (k >= 2), if such a representation exists.
// rho degenerates on prime powers, so the stack peels them off first.
bool perfect_power_split(const Int& n, Int& base, unsigned& k) {
    if (n < 4) return false;
    unsigned bits = unsigned(boost::multiprecision::msb(n)) + 1;
    for (unsigned e = bits; e >= 2; --e) {
        // binary search the e-th root
        Int lo = 2, hi = Int(1) << (bits / e + 1);
        while (lo <= hi) {
            Int mid = (lo + hi) / 2;
            Int pw = 1;
            Int b = mid;
            unsigned r = e;
            bool over = false;
            while (r && !over) {
                if (r & 1) { pw *= b; if (pw > n) over = true; }
                r >>= 1;
                if (r) { b *= b; if (b > n && r) over = true; }
            }
            if (over || pw > n) hi = mid - 1;
            else if (pw < n) lo = mid + 1;
            else { base = mid; k = e; return true; }
        }
    }
    return false;
}

// forward
bool certified_prime_impl(const Int& n, const FactorConfig& cfg, int depth);

std::vector<std::pair<Int, unsigned>> factor_positive(Int n, const FactorConfig& cfg,
                                                      int depth) {
    std::vector<std::pair<Int, unsigned>> out;
    if (n == 1) return out;
    auto push = [&out](const Int& p, unsigned e) {
        for (auto& [q, f] : out)
            if (q == p) { f += e; return; }
        out.emplace_back(p, e);
    };

    // trial division: 2, 3, then 6k +- 1
    for (Int small : {Int(2), Int(3)}) {
        unsigned e = 0;
        while (n % small == 0) { n /= small; ++e; }
        if (e) push(small, e);
    }
    for (std::uint64_t d = 5; d <= cfg.trial_bound; d += 6) {
        for (std::uint64_t cand : {d, d + 2}) {
            if (Int(cand) * cand > n) break;
            unsigned e = 0;
            while (n % cand == 0) { n /= cand; ++e; }
            if (e) push(Int(cand), e);
        }
        if (Int(d) * d > n) break;
    }
    if (n == 1) {
        std::sort(out.begin(), out.end());
        return out;
    }
    if (Int(cfg.trial_bound) * cfg.trial_bound >= n) {
        // cofactor below the square of the trial bound is prime
        push(n, 1);
        std::sort(out.begin(), out.end());
        return out;
    }

    // split remaining cofactors
    std::vector<std::pair<Int, unsigned>> stack{{n, 1}};
    while (!stack.empty()) {
        auto [m, mult] = stack.back();
        stack.pop_back();
        if (certified_prime_impl(m, cfg, depth)) {
            push(m, mult);
            continue;
        }
        Int base;
        unsigned k = 0;
        if (perfect_power_split(m, base, k)) {
            stack.emplace_back(base, mult * k);
            continue;
        }
        Int d = brent_rho(m, cfg);
        stack.emplace_back(d, mult);
        stack.emplace_back(m / d, mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Pocklington-Lehmer: with n-1 fully factored, n is prime iff for every
// prime q | n-1 there is a with a^(n-1) = 1 (mod n) and
// gcd(a^((n-1)/q) - 1, n) = 1.
bool pocklington_prime(const Int& n, const FactorConfig& cfg, int depth) {
    auto nm1 = factor_positive(n - 1, cfg, depth + 1);
    for (const auto& [q, e] : nm1) {
        bool found = false;
        for (int a = 2; a <= 1000 && !found; ++a) {
            Int ai(a);
            if (gcd(ai, n) != 1) continue;
            if (powm(ai, n - 1, n) != 1) return false; // Fermat failure: composite
            Int w = powm(ai, (n - 1) / q, n);
            if (gcd(w - 1, n) == 1) found = true;
        }
        if (!found)
            throw FactorizationOverflow("no Pocklington witness for " + n.str());
    }
    return true;
}

bool certified_prime_impl(const Int& n, const FactorConfig& cfg, int depth) {
    if (n < 2) return false;
    if (depth > 8)
        throw FactorizationOverflow("certificate recursion too deep at " + n.str());
    for (int b : kDeterministicBases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    if (!mr_all_bases(n)) return false;
    if (n <= mr_deterministic_bound()) return true;
    return pocklington_prime(n, cfg, depth);
}

} // namespace

bool is_certified_prime(const Int& n, const FactorConfig& cfg) {
    return certified_prime_impl(n, cfg, 0);
}

IntFactorization factor_integer(const Int& n, const FactorConfig& cfg) {
    if (n == 0) throw ZeroElement("factorization of zero");
    IntFactorization f;
    f.sign = n < 0 ? -1 : 1;
    f.primes = factor_positive(abs(n), cfg, 0);
    return f;
}

} // namespace atomforge

#include "atomforge/atoms.hpp"
#include "atomforge/errors.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace atomforge {

bool is_irreducible_truncated(const TruncElem& x) {
    if (x.is_zero()) throw ZeroElement("irreducibility of zero");
    if (x.is_unit()) throw IsUnit("irreducibility of a unit");
    int v = x.valuation();
    int e = x.ctx().e;
    return v >= e && v <= 2 * e - 1;
}

std::uint64_t predicted_atom_count(int q, int d, int e) {
    std::uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= std::uint64_t(q);
    std::uint64_t count = std::uint64_t(e) * ((qd - 1) / std::uint64_t(q - 1));
    for (int i = 0; i < e - 1; ++i) count *= qd;
    return count;
}

namespace {

// orbit partition of the irreducible elements by exhaustive unit
// multiplication; returns representatives (canonical associates) with sizes
std::vector<AtomOrbit> orbit_partition(const TruncCtx& ctx, std::uint64_t& total) {
    ctx.check_pair_budget();
    std::vector<TruncElem> units;
    enumerate_elements(ctx, TruncFilter::Units,
                       [&](const TruncElem& u) { units.push_back(u); });

    std::map<std::uint64_t, AtomOrbit> orbits; // keyed by representative encode
    std::unordered_set<std::uint64_t> seen;

    total = 0;
    enumerate_elements(ctx, TruncFilter::NonzeroNonunits, [&](const TruncElem& x) {
        if (!is_irreducible_truncated(x)) return;
        ++total;
        if (seen.count(x.encode())) return;
        // walk the full unit orbit of x once
        AtomOrbit orbit;
        std::uint64_t best = ~std::uint64_t(0);
        std::optional<TruncElem> rep;
        std::uint16_t target = ctx.transversal(x.coeff(x.valuation()));
        for (const TruncElem& u : units) {
            TruncElem y = u * x;
            std::uint64_t enc = y.encode();
            if (seen.insert(enc).second) ++orbit.size;
            if (y.coeff(y.valuation()) == target && enc < best) {
                best = enc;
                rep = y;
            }
        }
        orbit.representative = *rep;
        orbits.emplace(best, std::move(orbit));
    });

    std::vector<AtomOrbit> out;
    for (auto& [enc, orbit] : orbits) out.push_back(std::move(orbit));
    return out;
}

} // namespace

AtomCensus atom_census(const TruncCtx& ctx) {
    AtomCensus census;
    census.q = ctx.q;
    census.d = ctx.d;
    census.e = ctx.e;
    census.N = ctx.N;
    census.predicted = predicted_atom_count(ctx.q, ctx.d, ctx.e);
    census.orbits = orbit_partition(ctx, census.irreducibles_total);

    const TruncCtx& wider = TruncCtx::get(ctx.q, ctx.d, ctx.e, ctx.N + 1);
    std::uint64_t wider_total = 0;
    auto wider_orbits = orbit_partition(wider, wider_total);
    census.truncation_stable = wider_orbits.size() == census.orbits.size();
    return census;
}

TruncElem association_canonical_form(const TruncElem& x) {
    const TruncCtx& ctx = x.ctx();
    if (ctx.d != 1 || ctx.e != 2)
        throw WrongRingShape("canonical form needs the (q, 1, 2) shape");
    if (!is_irreducible_truncated(x))
        throw InvalidInput("canonical form of a non-irreducible");
    const Fq& K = *ctx.K;
    int v = x.valuation(); // 2 or 3
    std::uint16_t lead_inv = K.inv(x.coeff(v));
    std::vector<std::uint16_t> c(std::size_t(ctx.N), 0);
    c[std::size_t(v)] = 1;
    c[std::size_t(v) + 1] = K.mul(lead_inv, x.coeff(v + 1));
    return TruncElem(ctx, std::move(c));
}

PrimeCheckResult prime_element_check(const TruncElem& p) {
    const TruncCtx& ctx = p.ctx();
    if (!is_irreducible_truncated(p))
        throw InvalidInput("prime check expects an irreducible");
    ctx.check_pair_budget();

    // an irreducible has v(p) <= 2e-1 <= N-e-1 (N >= 3e), so the divisor
    // window of divides_truncated always admits p
    const int window = ctx.N - ctx.e - 1;
    std::vector<TruncElem> candidates; // windowed elements not divisible by p
    enumerate_elements(ctx, TruncFilter::All, [&](const TruncElem& a) {
        if (a.is_zero() || a.valuation() > window) return;
        if (divides_truncated(p, a)) return;
        candidates.push_back(a);
    });

    PrimeCheckResult result;
    for (const TruncElem& a : candidates) {
        for (const TruncElem& b : candidates) {
            TruncElem ab = a * b;
            if (ab.is_zero()) {
                ++result.pairs_unverifiable;
                continue;
            }
            ++result.pairs_checked;
            if (divides_truncated(p, ab)) {
                result.is_prime = false;
                result.counterexample = {a, b};
                return result;
            }
        }
    }
    return result;
}

bool ck_min_atoms_check(const AtomCensus& census) {
    return census.orbits.size() >= 3;
}

} // namespace atomforge

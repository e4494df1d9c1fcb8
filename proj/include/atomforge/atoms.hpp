#pragma once

#include "atomforge/trunc.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace atomforge {

/// Irreducibility in the truncated local subring: true iff e <= v(x) <= 2e-1.
/// A product of two nonunits has valuation >= 2e, and anything with
/// v(x) >= 2e splits as t^e * (x/t^e), the cofactor staying inside the
/// subring because all its slots below e vanish.
/// Throws ZeroElement / IsUnit outside the domain.
bool is_irreducible_truncated(const TruncElem& x);

struct AtomOrbit {
    TruncElem representative; // canonical associate of the orbit
    std::uint64_t size = 0;   // number of irreducible elements in the orbit
};

struct AtomCensus {
    int q, d, e, N;
    std::uint64_t irreducibles_total = 0;
    std::vector<AtomOrbit> orbits;            // sorted by representative encode
    std::uint64_t predicted = 0;              // e (q^d-1)/(q-1) q^{d(e-1)}
    bool truncation_stable = false;           // orbit count equal at N and N+1
};

/// Exhaustive census of association orbits of irreducibles; recomputes at
/// N+1 for the stability flag. BudgetExceeded when either enumeration is too
/// large.
AtomCensus atom_census(const TruncCtx& ctx);

/// Closed-form Anderson-Mott irreducible (orbit) count.
std::uint64_t predicted_atom_count(int q, int d, int e);

/// Normal form t^2 + a3 t^3 (v = 2) or t^3 + a4 t^4 (v = 3) of an irreducible
/// in a (q, 1, 2, N) ring: scale the leading coefficient to 1 and keep the
/// single determining coefficient. Two irreducibles are associate iff their
/// forms coincide. WrongRingShape unless d = 1 and e = 2.
TruncElem association_canonical_form(const TruncElem& x);

struct PrimeCheckResult {
    bool is_prime = true;
    std::optional<std::pair<TruncElem, TruncElem>> counterexample;
    std::uint64_t pairs_checked = 0;
    std::uint64_t pairs_unverifiable = 0; // product vanished in the model
};

/// Searches pairs (a, b) with v(a), v(b) <= N-e-1 for p | ab, p !| a, p !| b
/// (least pair in enumeration order). Every irreducible of these rings fails
/// unless (d, e) = (1, 1).
PrimeCheckResult prime_element_check(const TruncElem& p);

/// Cohen-Kaplansky floor: at least 3 atoms once some irreducible fails the
/// prime test.
bool ck_min_atoms_check(const AtomCensus& census);

} // namespace atomforge

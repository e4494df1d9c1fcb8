#pragma once

#include "atomforge/bigint.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace atomforge {

// ---------------------------------------------------------------------------
// ordered-group components: Z, Q (exact stand-in for a real-valued factor),
// and lexicographic Z^eta with the most significant coordinate first

struct CompZ {
    bool operator==(const CompZ&) const = default;
};
struct CompQ {
    bool operator==(const CompQ&) const = default;
};
struct CompLex {
    int eta = 1;
    bool operator==(const CompLex&) const = default;
};
using GroupComponent = std::variant<CompZ, CompQ, CompLex>;

struct GroupSpec {
    std::vector<GroupComponent> components;
};

std::string component_to_string(const GroupComponent& c);

/// Exact rational, normalized (positive denominator, reduced).
struct Rational {
    Int num = 0, den = 1;
    Rational() = default;
    Rational(Int n, Int d);
    bool operator==(const Rational&) const = default;
    int sign() const { return num == 0 ? 0 : (num < 0 ? -1 : 1); }
};

/// One coordinate value: Int for Z, Rational for Q, Int vector for Lex(eta).
using GroupValue = std::variant<Int, Rational, std::vector<Int>>;

/// Sign of a component value in its component order (lex: first nonzero
/// coordinate decides).
int value_sign(const GroupValue& v);

/// Finite-support element of the direct sum.
struct OrderedGroupElement {
    std::map<std::size_t, GroupValue> entries; // component index -> value

    /// g >= 0 iff every entry is >= 0 in its component order.
    bool is_nonnegative() const;
    bool is_positive() const; // >= 0 and != 0
    bool is_zero() const {
        for (auto& [i, v] : entries) if (value_sign(v) != 0) return false;
        return true;
    }
};

struct GroupAtom {
    std::size_t component = 0;
    GroupValue value; // the least positive element of that component
};

/// One atom per component with a least positive element: 1 for Z,
/// (0,...,0,1) for Lex(eta), none for Q.
std::vector<GroupAtom> atoms_of(const GroupSpec& spec);

/// True iff every nonzero entry is a positive integer multiple of its
/// component's atom. NotPositive unless g > 0.
bool is_sum_of_atoms(const OrderedGroupElement& g, const GroupSpec& spec);

/// Proper convex subgroups: eta for Lex(eta) (the chain of coordinate-zero
/// prefixes), 1 for Z and for Q (only the trivial one).
int proper_convex_subgroup_count(const GroupComponent& component);

// ---------------------------------------------------------------------------
// divisibility-group census

struct DivisibilityCensus {
    int alpha = 0, beta = 0, gamma = 0;
    int eta = 0; // gamma - beta + 1
    GroupSpec spec;
    int atom_count = 0;
    int maximal_ideal_count = 0; // one per component
    int nonzero_prime_count = 0; // sum of proper convex subgroup counts
    bool atomic = false;         // every component isomorphic to Z
    bool furstenberg = false;    // every component has an atom
    // claims (i) Bezout and (vii) semiprimitive-iff-infinite are outside the
    // finite model
    std::vector<std::string> not_checkable;

    bool claims_hold() const {
        return atom_count == alpha && maximal_ideal_count == beta &&
               nonzero_prime_count == gamma &&
               atomic == (alpha == beta && beta == gamma) &&
               furstenberg == (alpha == beta);
    }
};

/// Builds the recipe spec for 1 <= alpha <= beta <= gamma (finite) and
/// reports the counted invariants. InvalidParameters outside that range.
DivisibilityCensus divisibility_census(int alpha, int beta, int gamma);

} // namespace atomforge

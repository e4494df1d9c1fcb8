#pragma once

#include "atomforge/ring.hpp"

#include <optional>
#include <vector>

namespace atomforge {

/// Element-wise Jacobson radical membership: y*x + 1 is a unit for every y,
/// checked exhaustively (truncated subrings only).
bool in_jacobson_radical(const TruncElem& x);

/// Least y with y*x + 1 a nonunit, when one exists.
std::optional<TruncElem> radical_counterexample(const TruncElem& x);

enum class ConditionEStatus { HoldsOnPanel, FailsWithWitness, ExhaustivelyHolds };

struct RadicalReport {
    int q = 0, d = 0, e = 0, N = 0;
    std::vector<TruncElem> members;        // enumeration order
    ConditionEStatus condition_e = ConditionEStatus::FailsWithWitness;
    std::optional<TruncElem> witness;      // least nonzero member: 1+(x) stays in units
    bool equals_nonunit_set = false;       // the local-ring identity J(R) = m
};

/// Exhaustive Prop.-3.2 scan of a truncated subring. These rings are local,
/// so the radical must coincide with the nonunit set; the report records the
/// cross-check rather than assuming it.
RadicalReport jacobson_radical(const TruncCtx& ctx);

struct PanelEntry {
    RingElement x;
    ConditionEWitness witness;
};

struct PanelReport {
    RingDescriptor ring;
    std::vector<PanelEntry> entries;
    ConditionEStatus status = ConditionEStatus::HoldsOnPanel;
};

/// Condition (E) on a finite sample of an infinite ring; every panel element
/// must be witnessed (Prop. 1.4 guarantees success on these rings).
PanelReport condition_e_panel(const RingDescriptor& ring,
                              const std::vector<RingElement>& panel);

} // namespace atomforge

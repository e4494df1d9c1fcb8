#include "atomforge/radical.hpp"
#include "atomforge/errors.hpp"

namespace atomforge {

std::optional<TruncElem> radical_counterexample(const TruncElem& x) {
    const TruncCtx& ctx = x.ctx();
    TruncElem one = TruncElem::one(ctx);
    std::optional<TruncElem> found;
    enumerate_elements(ctx, TruncFilter::All, [&](const TruncElem& y) {
        if (found) return;
        if (!(y * x + one).is_unit()) found = y;
    });
    return found;
}

bool in_jacobson_radical(const TruncElem& x) {
    return !radical_counterexample(x).has_value();
}

RadicalReport jacobson_radical(const TruncCtx& ctx) {
    ctx.check_pair_budget();
    RadicalReport report;
    report.q = ctx.q;
    report.d = ctx.d;
    report.e = ctx.e;
    report.N = ctx.N;

    bool matches_nonunits = true;
    enumerate_elements(ctx, TruncFilter::All, [&](const TruncElem& x) {
        bool member = in_jacobson_radical(x);
        if (member) report.members.push_back(x);
        if (member == x.is_unit()) matches_nonunits = false;
    });
    report.equals_nonunit_set = matches_nonunits;
    report.condition_e = ConditionEStatus::FailsWithWitness;
    for (const TruncElem& m : report.members) {
        if (!m.is_zero()) { report.witness = m; break; }
    }
    return report;
}

PanelReport condition_e_panel(const RingDescriptor& ring,
                              const std::vector<RingElement>& panel) {
    if (std::holds_alternative<TruncRing>(ring))
        throw UnsupportedRing("panel reports are for the infinite rings");
    PanelReport report;
    report.ring = ring;
    for (const RingElement& x : panel) {
        if (x.is_zero()) throw ZeroElement("panel elements must be nonzero");
        ConditionEWitness w = condition_e_witness(x);
        if (!w.verify())
            throw InvariantViolation("panel witness failed verification");
        report.entries.push_back({x, std::move(w)});
    }
    report.status = ConditionEStatus::HoldsOnPanel;
    return report;
}

} // namespace atomforge

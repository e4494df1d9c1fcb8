#pragma once

#include "atomforge/divgroup.hpp"
#include "atomforge/euclid.hpp"
#include "atomforge/atoms.hpp"
#include "atomforge/radical.hpp"
#include "atomforge/topo.hpp"

#include <json.hpp>

namespace atomforge {

using Json = nlohmann::json;

// elements: {"ring": "<descriptor>", "payload": <kind-specific>}
// integers as decimal strings, field elements as F_p digit arrays (ascending)
Json element_to_json(const RingElement& x);
RingElement element_from_json(const Json& j);

Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);
/// Bare factor array (the transcript schema keeps the unit as a sibling key).
Json factor_list_to_json(const Factorization& f);
Factorization factorization_from_parts(const Json& unit, const Json& factors);

Json certificate_to_json(const BezoutCertificate& c);
BezoutCertificate certificate_from_json(const Json& j);

// results payloads (the CLI wraps them in the envelope with command echo,
// verification summary and wall time)
Json euclid_results_json(const EuclidState& s);
Json pollack_results_json(const PollackState& s);
Json polyvalue_results_json(const std::vector<Int>& poly,
                            const std::vector<PolyValuePrime>& primes);
Json atoms_results_json(const AtomCensus& census,
                        const std::vector<std::pair<TruncElem, TruncElem>>& forms);
Json radical_results_json(const RadicalReport& r);
Json panel_results_json(const PanelReport& r);
Json periodicity_results_json(const PeriodicityReport& r);
Json closed_ideal_results_json(const ClosedIdealReport& r);
Json divgroup_results_json(const DivisibilityCensus& c);

struct VerifySummary {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> failures; // human-readable locations
};

/// Re-validates an emitted report (the full envelope): replays products,
/// Bezout identities and class conditions with no factoring work.
/// Supports the euclid, pollack, polyprimes and atoms commands.
VerifySummary verify_report(const Json& report);

} // namespace atomforge

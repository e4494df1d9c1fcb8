#include "atomforge/serialize.hpp"
#include "atomforge/errors.hpp"

#include <algorithm>

namespace atomforge {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

Json field_code_to_digits(std::uint16_t code, int p) {
    Json arr = Json::array();
    int v = code;
    while (v) {
        arr.push_back(v % p);
        v /= p;
    }
    return arr;
}

std::uint16_t digits_to_field_code(const Json& arr, int p, int q) {
    long v = 0;
    long w = 1;
    for (const auto& d : arr) {
        long digit = d.get<long>();
        if (digit < 0 || digit >= p) throw InvalidInput("field digit out of range");
        v += digit * w;
        w *= p;
    }
    if (v >= q) throw InvalidInput("field element out of range");
    return std::uint16_t(v);
}

} // namespace

Json element_to_json(const RingElement& x) {
    Json j;
    j["ring"] = ring_to_string(x.ring());
    std::visit(
        overloaded{
            [&](const Int& v) { j["payload"] = v.str(); },
            [&](const GaussianInt& v) {
                j["payload"] = Json{{"re", v.re.str()}, {"im", v.im.str()}};
            },
            [&](const PolyFq& v) {
                Json coeffs = Json::array();
                for (int i = 0; i <= v.degree(); ++i)
                    coeffs.push_back(field_code_to_digits(v.coeff(i), v.field().p()));
                j["payload"] = coeffs;
            },
            [&](const TruncElem& v) {
                Json coeffs = Json::array();
                for (int i = 0; i < v.ctx().N; ++i)
                    coeffs.push_back(field_code_to_digits(v.coeff(i), v.ctx().K->p()));
                j["payload"] = coeffs;
            }},
        x.payload());
    return j;
}

RingElement element_from_json(const Json& j) {
    RingDescriptor ring = parse_ring(j.at("ring").get<std::string>());
    const Json& payload = j.at("payload");
    return std::visit(
        overloaded{
            [&](const ZRing&) {
                return RingElement::integer(Int(payload.get<std::string>()));
            },
            [&](const GaussRing&) {
                return RingElement::gaussian(Int(payload.at("re").get<std::string>()),
                                             Int(payload.at("im").get<std::string>()));
            },
            [&](const PolyRing& r) {
                const Fq& F = Fq::of_order(r.q);
                std::vector<std::uint16_t> coeffs;
                for (const auto& c : payload)
                    coeffs.push_back(digits_to_field_code(c, F.p(), F.q()));
                return RingElement::poly(r.q, std::move(coeffs));
            },
            [&](const TruncRing& r) {
                const TruncCtx& ctx = r.ctx();
                std::vector<std::uint16_t> coeffs;
                for (const auto& c : payload)
                    coeffs.push_back(digits_to_field_code(c, ctx.K->p(), ctx.Kq));
                return RingElement::trunc(r, TruncElem(ctx, std::move(coeffs)));
            }},
        ring);
}

Json factorization_to_json(const Factorization& f) {
    Json j;
    j["unit"] = element_to_json(f.unit);
    j["factors"] = factor_list_to_json(f);
    return j;
}

Json factor_list_to_json(const Factorization& f) {
    Json factors = Json::array();
    for (const auto& [p, e] : f.factors)
        factors.push_back(Json{{"factor", element_to_json(p)}, {"multiplicity", e}});
    return factors;
}

Factorization factorization_from_json(const Json& j) {
    Factorization f;
    f.unit = element_from_json(j.at("unit"));
    for (const auto& entry : j.at("factors"))
        f.factors.emplace_back(element_from_json(entry.at("factor")),
                               entry.at("multiplicity").get<unsigned>());
    return f;
}

Factorization factorization_from_parts(const Json& unit, const Json& factors) {
    Factorization f;
    f.unit = element_from_json(unit);
    for (const auto& entry : factors)
        f.factors.emplace_back(element_from_json(entry.at("factor")),
                               entry.at("multiplicity").get<unsigned>());
    return f;
}

Json certificate_to_json(const BezoutCertificate& c) {
    return Json{{"a", element_to_json(c.a)},
                {"b", element_to_json(c.b)},
                {"u", element_to_json(c.u)},
                {"v", element_to_json(c.v)}};
}

BezoutCertificate certificate_from_json(const Json& j) {
    return {element_from_json(j.at("a")), element_from_json(j.at("b")),
            element_from_json(j.at("u")), element_from_json(j.at("v"))};
}

Json euclid_results_json(const EuclidState& s) {
    Json j;
    j["ring"] = ring_to_string(s.ring);
    Json irr = Json::array();
    for (const RingElement& f : s.chosen) irr.push_back(element_to_json(f));
    j["irreducibles"] = irr;
    Json steps = Json::array();
    for (const EuclidStep& st : s.transcript) {
        Json step;
        step["y"] = st.y ? element_to_json(*st.y) : Json(nullptr);
        step["x"] = st.x ? element_to_json(*st.x) : Json(nullptr);
        step["factors"] =
            st.x_factorization ? factor_list_to_json(*st.x_factorization) : Json(nullptr);
        step["unit"] =
            st.x_factorization ? element_to_json(st.x_factorization->unit) : Json(nullptr);
        step["selected"] = element_to_json(st.selected);
        Json certs = Json::array();
        for (const auto& c : st.new_certificates) certs.push_back(certificate_to_json(c));
        step["certificates"] = certs;
        steps.push_back(step);
    }
    j["steps"] = steps;
    return j;
}

Json pollack_results_json(const PollackState& s) {
    Json j;
    j["modulus"] = s.modulus;
    Json sub = Json::array();
    for (long h : s.subgroup) sub.push_back(h);
    j["subgroup"] = sub;
    j["alpha"] = s.alpha.str();
    j["beta"] = s.beta.str();
    Json irr = Json::array();
    for (const Int& f : s.chosen) irr.push_back(f.str());
    j["irreducibles"] = irr;
    Json steps = Json::array();
    for (const PollackStep& st : s.transcript) {
        Json step;
        step["poly_lead"] = st.poly_lead.str();
        step["poly_const"] = st.poly_const.str();
        step["x"] = st.x.str();
        step["y"] = st.y.str();
        step["factors"] = factor_list_to_json(st.y_factorization);
        step["unit"] = element_to_json(st.y_factorization.unit);
        step["selected"] = st.selected.str();
        step["selected_class"] = st.selected_class;
        Json certs = Json::array();
        for (const auto& c : st.new_certificates) certs.push_back(certificate_to_json(c));
        step["certificates"] = certs;
        steps.push_back(step);
    }
    j["steps"] = steps;
    return j;
}

Json polyvalue_results_json(const std::vector<Int>& poly,
                            const std::vector<PolyValuePrime>& primes) {
    Json j;
    Json coeffs = Json::array();
    for (const Int& c : poly) coeffs.push_back(c.str());
    j["poly"] = coeffs;
    Json out = Json::array();
    for (const auto& p : primes)
        out.push_back(Json{{"prime", p.prime.str()},
                           {"argument", p.argument.str()},
                           {"value", p.value.str()}});
    j["primes"] = out;
    return j;
}

Json atoms_results_json(const AtomCensus& census,
                        const std::vector<std::pair<TruncElem, TruncElem>>& forms) {
    Json j;
    j["ring"] = "trunc:" + std::to_string(census.q) + ":" + std::to_string(census.d) +
                ":" + std::to_string(census.e) + ":" + std::to_string(census.N);
    j["irreducibles_total"] = census.irreducibles_total;
    j["predicted"] = census.predicted;
    j["observed_orbits"] = census.orbits.size();
    j["truncation_stable"] = census.truncation_stable;
    TruncRing ring{census.q, census.d, census.e, census.N};
    Json orbits = Json::array();
    for (const auto& orbit : census.orbits)
        orbits.push_back(
            Json{{"representative", element_to_json(RingElement::trunc(ring, orbit.representative))},
                 {"size", orbit.size}});
    j["orbits"] = orbits;
    if (!forms.empty()) {
        Json fj = Json::array();
        for (const auto& [x, form] : forms)
            fj.push_back(Json{{"irreducible", element_to_json(RingElement::trunc(ring, x))},
                              {"canonical_form", element_to_json(RingElement::trunc(ring, form))}});
        j["canonical_forms"] = fj;
    }
    return j;
}

Json radical_results_json(const RadicalReport& r) {
    Json j;
    TruncRing ring{r.q, r.d, r.e, r.N};
    j["ring"] = ring_to_string(RingDescriptor(ring));
    j["member_count"] = r.members.size();
    Json members = Json::array();
    for (const TruncElem& m : r.members)
        members.push_back(element_to_json(RingElement::trunc(ring, m)));
    j["members"] = members;
    j["equals_nonunit_set"] = r.equals_nonunit_set;
    j["condition_e"] = "fails-with-witness";
    if (r.witness)
        j["witness"] = element_to_json(RingElement::trunc(ring, *r.witness));
    return j;
}

Json panel_results_json(const PanelReport& r) {
    Json j;
    j["ring"] = ring_to_string(r.ring);
    j["condition_e"] = "holds-on-panel";
    Json entries = Json::array();
    for (const auto& entry : r.entries)
        entries.push_back(Json{{"x", element_to_json(entry.x)},
                               {"y", element_to_json(entry.witness.y)},
                               {"value", element_to_json(entry.witness.value)}});
    j["entries"] = entries;
    return j;
}

Json periodicity_results_json(const PeriodicityReport& r) {
    Json j;
    j["primes"] = r.primes;
    j["period"] = r.period;
    j["window_radius"] = r.window_radius;
    j["verified"] = r.verified;
    j["coset_check"] = r.coset_check;
    Json w = Json::array();
    for (const auto& [x, p] : r.euclid_witnesses)
        w.push_back(Json{{"x", x}, {"external_prime", p}});
    j["euclid_witnesses"] = w;
    return j;
}

Json closed_ideal_results_json(const ClosedIdealReport& r) {
    return Json{{"prime", r.prime},
                {"window_radius", r.window_radius},
                {"points_checked", r.points_checked},
                {"points_skipped", r.points_skipped},
                {"all_neighborhoods_disjoint", r.all_neighborhoods_disjoint}};
}

Json divgroup_results_json(const DivisibilityCensus& c) {
    Json j;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["gamma"] = c.gamma;
    j["eta"] = c.eta;
    Json comps = Json::array();
    for (const auto& comp : c.spec.components) comps.push_back(component_to_string(comp));
    j["components"] = comps;
    j["atom_count"] = c.atom_count;
    j["maximal_ideal_count"] = c.maximal_ideal_count;
    j["nonzero_prime_count"] = c.nonzero_prime_count;
    j["atomic"] = c.atomic;
    j["furstenberg"] = c.furstenberg;
    j["claims_hold"] = c.claims_hold();
    j["not_checkable"] = c.not_checkable;
    return j;
}

// ---------------------------------------------------------------------------
// verification (multiplication-only replay)

namespace {

void check(VerifySummary& vs, bool ok, const std::string& what) {
    ++vs.checked;
    if (!ok) {
        ++vs.failed;
        vs.failures.push_back(what);
    }
}

void verify_euclid(const Json& results, VerifySummary& vs) {
    RingDescriptor ring = parse_ring(results.at("ring").get<std::string>());
    std::vector<RingElement> chosen;
    for (const auto& e : results.at("irreducibles"))
        chosen.push_back(element_from_json(e));

    const Json& steps = results.at("steps");
    check(vs, steps.size() == chosen.size(), "one transcript step per irreducible");

    RingElement prod = RingElement::one(ring);
    for (std::size_t i = 0; i < steps.size() && i < chosen.size(); ++i) {
        const Json& st = steps[i];
        RingElement selected = element_from_json(st.at("selected"));
        check(vs, selected == chosen[i], "step " + std::to_string(i) + " selected = chosen");
        if (i == 0) {
            check(vs, selected == least_irreducible(ring), "seed is the least irreducible");
        }
        if (!st.at("x").is_null()) {
            RingElement x = element_from_json(st.at("x"));
            RingElement y = element_from_json(st.at("y"));
            check(vs, y == condition_e_witness(prod).y,
                  "step " + std::to_string(i) + " witness rule");
            check(vs, x == y * prod + RingElement::one(ring),
                  "step " + std::to_string(i) + " replay x = y*prod+1");
            Factorization f = factorization_from_parts(st.at("unit"), st.at("factors"));
            check(vs, f.replay() == x, "step " + std::to_string(i) + " factor replay");
            bool found = false, least = true;
            for (const auto& [p, e] : f.factors) {
                if (p == selected) found = true;
                if (compare_elements(p, selected) < 0) least = false;
            }
            check(vs, found && least,
                  "step " + std::to_string(i) + " selected is the least factor");
        }
        const Json& certs = st.at("certificates");
        check(vs, certs.size() == i, "step " + std::to_string(i) + " one certificate per pair");
        for (std::size_t k = 0; k < certs.size(); ++k) {
            BezoutCertificate cert = certificate_from_json(certs[k]);
            check(vs, cert.verify(), "step " + std::to_string(i) + " certificate identity");
            check(vs, k < chosen.size() && cert.a == chosen[k] && cert.b == selected,
                  "step " + std::to_string(i) + " certificate pairs chain elements");
        }
        prod = prod * chosen[i];
    }
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = i + 1; j < chosen.size(); ++j)
            check(vs, !(chosen[i] == chosen[j]), "distinct canonical irreducibles");
}

void verify_pollack(const Json& results, VerifySummary& vs) {
    long N = results.at("modulus").get<long>();
    std::set<long> H;
    for (const auto& h : results.at("subgroup")) H.insert(h.get<long>());
    Int alpha(results.at("alpha").get<std::string>());
    Int beta(results.at("beta").get<std::string>());
    check(vs, (alpha * beta) % N == 1, "alpha*beta = 1 (mod N)");

    std::vector<Int> chosen;
    for (const auto& f : results.at("irreducibles"))
        chosen.push_back(Int(f.get<std::string>()));

    Int prod = 1;
    const Json& steps = results.at("steps");
    check(vs, steps.size() == chosen.size(), "one transcript step per emission");
    for (std::size_t i = 0; i < steps.size() && i < chosen.size(); ++i) {
        const Json& st = steps[i];
        Int lead(st.at("poly_lead").get<std::string>());
        Int cst(st.at("poly_const").get<std::string>());
        Int x(st.at("x").get<std::string>());
        Int y(st.at("y").get<std::string>());
        Int ab1 = alpha * beta - 1;
        check(vs, lead == alpha * ab1 * prod && cst == ab1 * prod + alpha,
              "step " + std::to_string(i) + " polynomial coefficients");
        check(vs, y == lead * x + cst, "step " + std::to_string(i) + " replay y = P(x)");
        Factorization f = factorization_from_parts(st.at("unit"), st.at("factors"));
        check(vs, f.replay() == RingElement::integer(y),
              "step " + std::to_string(i) + " factor replay");
        Int selected(st.at("selected").get<std::string>());
        check(vs, selected == chosen[i], "step " + std::to_string(i) + " selected = chosen");
        Int cls = selected % N;
        if (cls < 0) cls += N;
        check(vs, !H.count(cls.convert_to<long>()),
              "step " + std::to_string(i) + " class avoids H");
        check(vs, gcd(selected, Int(N)) == 1 && gcd(selected, alpha) == 1,
              "step " + std::to_string(i) + " coprime to N and alpha");
        // selection rule: the least listed factor whose class avoids H
        bool found = false, least_avoiding = true;
        for (const auto& [p, e] : f.factors) {
            const Int& pv = p.as_int();
            if (pv == selected) found = true;
            Int pc = pv % N;
            if (pc < 0) pc += N;
            if (pv < selected && !H.count(pc.convert_to<long>())) least_avoiding = false;
        }
        check(vs, found && least_avoiding,
              "step " + std::to_string(i) + " selected is the least factor avoiding H");
        const Json& certs = st.at("certificates");
        check(vs, certs.size() == i, "step " + std::to_string(i) + " one certificate per pair");
        for (std::size_t k = 0; k < certs.size(); ++k) {
            BezoutCertificate cert = certificate_from_json(certs[k]);
            check(vs, cert.verify(), "step " + std::to_string(i) + " certificate identity");
            check(vs, cert.a == RingElement::integer(chosen[k]) &&
                          cert.b == RingElement::integer(selected),
                  "step " + std::to_string(i) + " certificate pairs chain elements");
        }
        prod *= chosen[i];
    }
}

void verify_polyvalue(const Json& results, VerifySummary& vs) {
    std::vector<Int> poly;
    for (const auto& c : results.at("poly")) poly.push_back(Int(c.get<std::string>()));
    std::vector<Int> seen;
    for (const auto& rec : results.at("primes")) {
        Int p(rec.at("prime").get<std::string>());
        Int arg(rec.at("argument").get<std::string>());
        Int val(rec.at("value").get<std::string>());
        check(vs, eval_int_poly(poly, arg) == val, "value replay f(n)");
        check(vs, val % p == 0, "prime divides the recorded value");
        check(vs, std::find(seen.begin(), seen.end(), p) == seen.end(),
              "prime outside the known set");
        seen.push_back(p);
    }
}

void verify_atoms(const Json& results, VerifySummary& vs) {
    std::uint64_t total = results.at("irreducibles_total").get<std::uint64_t>();
    std::uint64_t sum = 0;
    for (const auto& orbit : results.at("orbits"))
        sum += orbit.at("size").get<std::uint64_t>();
    check(vs, sum == total, "orbit sizes sum to the irreducible count");
    RingDescriptor rd = parse_ring(results.at("ring").get<std::string>());
    const auto& tr = std::get<TruncRing>(rd);
    check(vs,
          results.at("predicted").get<std::uint64_t>() ==
              predicted_atom_count(tr.q, tr.d, tr.e),
          "predicted count matches the closed form");
}

} // namespace

VerifySummary verify_report(const Json& report) {
    VerifySummary vs;
    std::string command = report.at("command").get<std::string>();
    const Json& results = report.at("results");
    if (command == "euclid") verify_euclid(results, vs);
    else if (command == "pollack") verify_pollack(results, vs);
    else if (command == "polyprimes") verify_polyvalue(results, vs);
    else if (command == "atoms") verify_atoms(results, vs);
    else throw InvalidInput("no verifier for command '" + command + "'");
    return vs;
}

} // namespace atomforge

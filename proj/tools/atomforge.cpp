#include "atomforge/serialize.hpp"
#include "atomforge/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace atomforge;

using Clock = std::chrono::steady_clock;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep))
        if (!part.empty()) out.push_back(part);
    return out;
}

// factorization limits, overridable for stress runs and tests
FactorConfig env_factor_config() {
    FactorConfig cfg;
    if (const char* v = std::getenv("ATOMFORGE_TRIAL_BOUND"))
        cfg.trial_bound = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("ATOMFORGE_RHO_BUDGET")) {
        cfg.rho_iterations = std::strtoull(v, nullptr, 10);
        cfg.rho_polynomials = 1;
    }
    return cfg;
}

struct Output {
    std::string command;
    Json results;
    VerifySummary verification;
    bool json = false;
    std::string human; // preformatted table for the non-JSON path
};

int emit(const Output& out, Clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    if (out.json) {
        Json envelope;
        envelope["command"] = out.command;
        envelope["results"] = out.results;
        envelope["verification"] =
            Json{{"checked", out.verification.checked}, {"failed", out.verification.failed}};
        envelope["wall_time_ms"] = ms.count();
        std::cout << envelope.dump(2) << "\n";
    } else {
        std::cout << out.human;
        std::cout << "verification: " << out.verification.checked << " checked, "
                  << out.verification.failed << " failed\n";
    }
    if (out.verification.failed > 0) {
        for (const auto& f : out.verification.failures)
            std::cerr << "FAILED: " << f << "\n";
        return 1;
    }
    return 0;
}

VerifySummary self_verify(const std::string& command, const Json& results) {
    Json envelope;
    envelope["command"] = command;
    envelope["results"] = results;
    return verify_report(envelope);
}

// ---------------------------------------------------------------------------

int run_euclid(const std::string& ring_text, unsigned count, bool json,
               Clock::time_point start) {
    RingDescriptor ring = parse_ring(ring_text);
    EuclidState s = euclid_run(ring, count, env_factor_config());
    Output out;
    out.command = "euclid";
    out.json = json;
    out.results = euclid_results_json(s);
    out.verification = self_verify("euclid", out.results);
    std::ostringstream os;
    os << "euclid over " << ring_to_string(ring) << ": " << s.chosen.size()
       << " pairwise comaximal irreducibles\n";
    for (std::size_t i = 0; i < s.chosen.size(); ++i)
        os << "  f_" << i + 1 << " = " << s.chosen[i].to_string() << "\n";
    os << "certificates: " << s.certificates.size() << "\n";
    out.human = os.str();
    return emit(out, start);
}

int run_pollack(long modulus, const std::string& subgroup_text, unsigned count, bool json,
                Clock::time_point start) {
    std::set<long> H;
    for (const auto& part : split(subgroup_text, ',')) H.insert(std::stol(part));
    PollackState s = pollack_run(modulus, H, count, env_factor_config());
    Output out;
    out.command = "pollack";
    out.json = json;
    out.results = pollack_results_json(s);
    out.verification = self_verify("pollack", out.results);
    std::ostringstream os;
    os << "pollack modulus " << modulus << ", subgroup {" << subgroup_text
       << "}, alpha " << s.alpha << ", beta " << s.beta << "\n";
    for (std::size_t i = 0; i < s.chosen.size(); ++i)
        os << "  g_" << i + 1 << " = " << s.chosen[i] << " (class "
           << s.transcript[i].selected_class << ")\n";
    os << "certificates: " << s.certificates.size() << "\n";
    out.human = os.str();
    return emit(out, start);
}

int run_polyprimes(const std::string& poly_text, unsigned count, bool json,
                   Clock::time_point start) {
    std::vector<Int> poly;
    for (const auto& part : split(poly_text, ',')) poly.push_back(Int(part));
    auto primes = polyvalue_run(poly, count, env_factor_config());
    Output out;
    out.command = "polyprimes";
    out.json = json;
    out.results = polyvalue_results_json(poly, primes);
    out.verification = self_verify("polyprimes", out.results);
    std::ostringstream os;
    os << "primes dividing values of the polynomial (constant term first: " << poly_text
       << ")\n";
    for (const auto& p : primes)
        os << "  " << p.prime << " | f(" << p.argument << ") = " << p.value << "\n";
    out.human = os.str();
    return emit(out, start);
}

int run_atoms(const std::string& ring_text, bool stability, bool json, bool csv,
              Clock::time_point start) {
    RingDescriptor rd = parse_ring(ring_text);
    const auto* tr = std::get_if<TruncRing>(&rd);
    if (!tr) throw InvalidInput("atoms needs a trunc:q:d:e:N ring");
    const TruncCtx& ctx = tr->ctx();
    AtomCensus census = atom_census(ctx);

    std::vector<std::pair<TruncElem, TruncElem>> forms;
    if (ctx.d == 1 && ctx.e == 2) {
        enumerate_elements(ctx, TruncFilter::NonzeroNonunits, [&](const TruncElem& x) {
            if (is_irreducible_truncated(x))
                forms.emplace_back(x, association_canonical_form(x));
        });
    }

    Output out;
    out.command = "atoms";
    out.json = json;
    out.results = atoms_results_json(census, forms);
    out.verification = self_verify("atoms", out.results);
    if (census.orbits.size() != census.predicted) {
        ++out.verification.failed;
        out.verification.failures.push_back("observed orbit count != predicted");
    }
    ++out.verification.checked;
    if (stability) {
        ++out.verification.checked;
        if (!census.truncation_stable) {
            ++out.verification.failed;
            out.verification.failures.push_back("census not stable at N+1");
        }
    }
    std::ostringstream os;
    os << "atom census of " << ring_text << "\n";
    os << "  irreducible elements: " << census.irreducibles_total << "\n";
    os << "  association orbits:   " << census.orbits.size()
       << " (predicted " << census.predicted << ")\n";
    os << "  stable at N+1:        " << (census.truncation_stable ? "yes" : "no") << "\n";
    if (csv) {
        os << "representative,orbit_size\n";
        TruncRing ring = *tr;
        for (const auto& orbit : census.orbits)
            os << RingElement::trunc(ring, orbit.representative).to_string() << ","
               << orbit.size << "\n";
    }
    out.human = os.str();
    return emit(out, start);
}

int run_radical(const std::string& ring_text, const std::string& panel_text, bool json,
                Clock::time_point start) {
    RingDescriptor rd = parse_ring(ring_text);
    Output out;
    out.command = "radical";
    out.json = json;
    std::ostringstream os;
    if (const auto* tr = std::get_if<TruncRing>(&rd)) {
        RadicalReport report = jacobson_radical(tr->ctx());
        out.results = radical_results_json(report);
        out.verification.checked = report.members.size() + 1;
        if (!report.equals_nonunit_set) {
            ++out.verification.failed;
            out.verification.failures.push_back("radical differs from the nonunit set");
        }
        os << "jacobson radical of " << ring_text << ": " << report.members.size()
           << " members\n";
        if (report.witness)
            os << "  condition (E) fails; witness "
               << report.witness->to_string() << "\n";
    } else {
        if (panel_text.empty())
            throw InvalidInput("infinite rings need --panel");
        std::vector<RingElement> panel;
        for (const auto& part : split(panel_text, ',')) {
            if (std::holds_alternative<ZRing>(rd))
                panel.push_back(RingElement::integer(Int(part)));
            else
                throw InvalidInput("--panel parsing is supported for ring z");
        }
        PanelReport report = condition_e_panel(rd, panel);
        out.results = panel_results_json(report);
        out.verification.checked = report.entries.size();
        os << "condition (E) on " << ring_text << ": " << report.entries.size()
           << " panel elements witnessed\n";
    }
    out.human = os.str();
    return emit(out, start);
}

int run_topo_periodicity(const std::string& primes_text, long radius, bool json,
                         Clock::time_point start) {
    std::vector<std::int64_t> primes;
    for (const auto& part : split(primes_text, ',')) primes.push_back(std::stoll(part));
    PeriodicityReport report = periodic_char_check(primes, radius);
    Output out;
    out.command = "topo-periodicity";
    out.json = json;
    out.results = periodicity_results_json(report);
    out.verification.checked = 2 + report.euclid_witnesses.size();
    if (!report.verified) {
        ++out.verification.failed;
        out.verification.failures.push_back("periodicity violated in the window");
    }
    if (!report.coset_check) {
        ++out.verification.failed;
        out.verification.failures.push_back("1 + period Z left the chi = 1 set");
    }
    std::ostringstream os;
    os << "chi over {" << primes_text << "}: period " << report.period << ", radius "
       << report.window_radius << "\n";
    os << "  periodic: " << (report.verified ? "yes" : "no")
       << ", coset check: " << (report.coset_check ? "yes" : "no") << "\n";
    for (const auto& [x, p] : report.euclid_witnesses)
        os << "  x = " << x << " has external prime " << p << "\n";
    out.human = os.str();
    return emit(out, start);
}

int run_topo_golomb(long prime, long radius, bool json, Clock::time_point start) {
    ClosedIdealReport report = maximal_ideal_closed_check(prime, radius);
    Output out;
    out.command = "topo-golomb";
    out.json = json;
    out.results = closed_ideal_results_json(report);
    out.verification.checked = report.points_checked;
    if (!report.all_neighborhoods_disjoint) {
        ++out.verification.failed;
        out.verification.failures.push_back("a neighborhood met the ideal");
    }
    std::ostringstream os;
    os << "golomb closedness of (" << prime << "), radius " << radius << ": "
       << report.points_checked << " points verified, " << report.points_skipped
       << " skipped\n";
    out.human = os.str();
    return emit(out, start);
}

int run_divgroup(int alpha, int beta, int gamma, int grid, bool json,
                 Clock::time_point start) {
    Output out;
    out.command = "divgroup";
    out.json = json;
    std::ostringstream os;
    if (grid > 0) {
        Json all = Json::array();
        std::uint64_t failures = 0, total = 0;
        for (int a = 1; a <= grid; ++a)
            for (int b = a; b <= grid; ++b)
                for (int c = b; c <= grid; ++c) {
                    DivisibilityCensus census = divisibility_census(a, b, c);
                    ++total;
                    if (!census.claims_hold()) ++failures;
                    all.push_back(divgroup_results_json(census));
                }
        out.results = Json{{"grid", grid}, {"triples", all}};
        out.verification.checked = total;
        out.verification.failed = failures;
        os << "theorem grid up to " << grid << ": " << total << " triples, " << failures
           << " failures\n";
    } else {
        DivisibilityCensus census = divisibility_census(alpha, beta, gamma);
        out.results = divgroup_results_json(census);
        out.verification.checked = 1;
        if (!census.claims_hold()) {
            ++out.verification.failed;
            out.verification.failures.push_back("census disagrees with the theorem");
        }
        os << "divisibility census (" << alpha << "," << beta << "," << gamma << "): "
           << census.atom_count << " atoms, " << census.maximal_ideal_count
           << " maximal ideals, " << census.nonzero_prime_count << " nonzero primes\n";
        os << "  atomic: " << (census.atomic ? "yes" : "no")
           << ", furstenberg: " << (census.furstenberg ? "yes" : "no") << "\n";
    }
    out.human = os.str();
    return emit(out, start);
}

int run_verify(const std::string& path, Clock::time_point start) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    Json report = Json::parse(in);
    VerifySummary vs = verify_report(report);
    Output out;
    out.command = "verify";
    out.json = false;
    out.verification = vs;
    std::ostringstream os;
    os << "verify " << path << " (" << report.at("command").get<std::string>() << ")\n";
    out.human = os.str();
    return emit(out, start);
}

} // namespace

int main(int argc, char** argv) {
    auto start = Clock::now();
    CLI::App app{"constructive factorization toolkit"};
    app.require_subcommand(1);

    std::string ring = "z", subgroup, poly = "1,0,1", panel, primes = "2,3", path;
    unsigned count = 5;
    long modulus = 5, radius = 36, prime = 5;
    int alpha = 1, beta = 1, gamma = 1, grid = 0;
    bool json = false, stability = false, csv = false;

    auto* euclid_cmd = app.add_subcommand("euclid", "Euclidean Criterion generator");
    euclid_cmd->add_option("--ring", ring);
    euclid_cmd->add_option("--count", count);
    euclid_cmd->add_flag("--json", json);

    auto* pollack_cmd = app.add_subcommand("pollack", "residue-class generator over Z");
    pollack_cmd->add_option("--modulus", modulus)->required();
    pollack_cmd->add_option("--subgroup", subgroup)->required();
    pollack_cmd->add_option("--count", count);
    pollack_cmd->add_flag("--json", json);

    auto* poly_cmd = app.add_subcommand("polyprimes", "primes dividing polynomial values");
    poly_cmd->add_option("--poly", poly);
    poly_cmd->add_option("--count", count);
    poly_cmd->add_flag("--json", json);

    auto* atoms_cmd = app.add_subcommand("atoms", "atom census of a truncated subring");
    atoms_cmd->add_option("--ring", ring)->required();
    atoms_cmd->add_flag("--stability", stability);
    atoms_cmd->add_flag("--json", json);
    atoms_cmd->add_flag("--csv", csv);

    auto* radical_cmd = app.add_subcommand("radical", "jacobson radical diagnostics");
    radical_cmd->add_option("--ring", ring)->required();
    radical_cmd->add_option("--panel", panel);
    radical_cmd->add_flag("--json", json);

    auto* topo_cmd = app.add_subcommand("topo", "finite-window topology checks");
    topo_cmd->require_subcommand(1);
    auto* per_cmd = topo_cmd->add_subcommand("periodicity", "periodic characteristic function");
    per_cmd->add_option("--primes", primes)->required();
    per_cmd->add_option("--radius", radius)->required();
    per_cmd->add_flag("--json", json);
    auto* gol_cmd = topo_cmd->add_subcommand("golomb", "closedness of a maximal ideal");
    gol_cmd->add_option("--prime", prime)->required();
    gol_cmd->add_option("--radius", radius)->required();
    gol_cmd->add_flag("--json", json);

    auto* div_cmd = app.add_subcommand("divgroup", "value-group census");
    div_cmd->add_option("--alpha", alpha);
    div_cmd->add_option("--beta", beta);
    div_cmd->add_option("--gamma", gamma);
    div_cmd->add_option("--grid", grid);
    div_cmd->add_flag("--json", json);

    auto* verify_cmd = app.add_subcommand("verify", "re-check an emitted transcript");
    verify_cmd->add_option("file", path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(euclid_cmd)) return run_euclid(ring, count, json, start);
        if (app.got_subcommand(pollack_cmd))
            return run_pollack(modulus, subgroup, count, json, start);
        if (app.got_subcommand(poly_cmd)) return run_polyprimes(poly, count, json, start);
        if (app.got_subcommand(atoms_cmd))
            return run_atoms(ring, stability, json, csv, start);
        if (app.got_subcommand(radical_cmd)) return run_radical(ring, panel, json, start);
        if (app.got_subcommand(topo_cmd)) {
            if (topo_cmd->got_subcommand(per_cmd))
                return run_topo_periodicity(primes, radius, json, start);
            return run_topo_golomb(prime, radius, json, start);
        }
        if (app.got_subcommand(div_cmd))
            return run_divgroup(alpha, beta, gamma, grid, json, start);
        if (app.got_subcommand(verify_cmd)) return run_verify(path, start);
    } catch (const FactorizationOverflow& e) {
        std::cerr << "factorization overflow: " << e.what() << "\n";
        return 3;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

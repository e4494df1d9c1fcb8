#include "atomforge/divgroup.hpp"
#include "atomforge/errors.hpp"

namespace atomforge {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

std::string component_to_string(const GroupComponent& c) {
    return std::visit(overloaded{[](const CompZ&) { return std::string("Z"); },
                                 [](const CompQ&) { return std::string("Q"); },
                                 [](const CompLex& l) {
                                     return "Lex(" + std::to_string(l.eta) + ")";
                                 }},
                      c);
}

Rational::Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw InvalidParameters("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int g = gcd(abs(num), den);
    if (g > 1) { num /= g; den /= g; }
}

int value_sign(const GroupValue& v) {
    return std::visit(
        overloaded{[](const Int& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); },
                   [](const Rational& x) { return x.sign(); },
                   [](const std::vector<Int>& x) {
                       for (const Int& c : x) {
                           if (c != 0) return c < 0 ? -1 : 1;
                       }
                       return 0;
                   }},
        v);
}

bool OrderedGroupElement::is_nonnegative() const {
    for (const auto& [i, v] : entries)
        if (value_sign(v) < 0) return false;
    return true;
}

bool OrderedGroupElement::is_positive() const { return is_nonnegative() && !is_zero(); }

std::vector<GroupAtom> atoms_of(const GroupSpec& spec) {
    std::vector<GroupAtom> out;
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const GroupComponent& c = spec.components[i];
        if (std::holds_alternative<CompZ>(c)) {
            out.push_back({i, GroupValue(Int(1))});
        } else if (const auto* lex = std::get_if<CompLex>(&c)) {
            std::vector<Int> v(std::size_t(lex->eta), 0);
            v.back() = 1;
            out.push_back({i, GroupValue(std::move(v))});
        }
        // Q contributes nothing: no least positive rational
    }
    return out;
}

bool is_sum_of_atoms(const OrderedGroupElement& g, const GroupSpec& spec) {
    if (!g.is_positive()) throw NotPositive("element must be positive");
    for (const auto& [i, v] : g.entries) {
        if (value_sign(v) == 0) continue;
        if (i >= spec.components.size()) throw InvalidParameters("entry outside spec");
        const GroupComponent& c = spec.components[i];
        bool ok = std::visit(
            overloaded{[&](const CompZ&) { return std::get<Int>(v) > 0; },
                       [&](const CompQ&) { return false; }, // no atom at all
                       [&](const CompLex& lex) {
                           // positive multiples of (0,...,0,1): all leading
                           // coordinates zero, last positive
                           const auto& vec = std::get<std::vector<Int>>(v);
                           if (int(vec.size()) != lex.eta)
                               throw InvalidParameters("lex arity mismatch");
                           for (std::size_t j = 0; j + 1 < vec.size(); ++j)
                               if (vec[j] != 0) return false;
                           return vec.back() > 0;
                       }},
            c);
        if (!ok) return false;
    }
    return true;
}

int proper_convex_subgroup_count(const GroupComponent& component) {
    return std::visit(overloaded{[](const CompZ&) { return 1; },
                                 [](const CompQ&) { return 1; },
                                 [](const CompLex& lex) { return lex.eta; }},
                      component);
}

DivisibilityCensus divisibility_census(int alpha, int beta, int gamma) {
    if (alpha < 1 || alpha > beta || beta > gamma)
        throw InvalidParameters("need 1 <= alpha <= beta <= gamma");

    DivisibilityCensus census;
    census.alpha = alpha;
    census.beta = beta;
    census.gamma = gamma;
    census.eta = gamma - beta + 1;

    GroupSpec spec;
    if (alpha == beta && beta == gamma) {
        // PID shape: beta copies of Z
        for (int i = 0; i < beta; ++i) spec.components.push_back(CompZ{});
    } else if (alpha == beta) {
        spec.components.push_back(CompLex{census.eta});
        for (int i = 1; i < beta; ++i) spec.components.push_back(CompZ{});
    } else {
        spec.components.push_back(CompLex{census.eta});
        for (int i = 1; i < alpha; ++i) spec.components.push_back(CompZ{});
        for (int i = alpha; i < beta; ++i) spec.components.push_back(CompQ{});
    }
    census.spec = spec;

    census.atom_count = int(atoms_of(spec).size());
    census.maximal_ideal_count = int(spec.components.size());
    census.nonzero_prime_count = 0;
    census.atomic = true;
    census.furstenberg = true;
    for (const GroupComponent& c : spec.components) {
        census.nonzero_prime_count += proper_convex_subgroup_count(c);
        if (!std::holds_alternative<CompZ>(c) &&
            !(std::holds_alternative<CompLex>(c) && std::get<CompLex>(c).eta == 1))
            census.atomic = false;
        if (std::holds_alternative<CompQ>(c)) census.furstenberg = false;
    }
    census.not_checkable = {"claim (i): Bezout property of the realizing domain",
                            "claim (vii): semiprimitive iff beta infinite"};
    return census;
}

} // namespace atomforge

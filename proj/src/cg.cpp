#include "ecj/cg.hpp"

#include <algorithm>
#include <sstream>

namespace ecj {

CausalValue lambda_c(const CausalValue& v) {
    std::vector<Justification> out;
    for (const auto& e : v.addends()) {
        if (!e.inhibitors().empty()) continue;  // ~l -> 0
        out.push_back(*Justification::make(e.vertices(), e.edges(), {}, {}));  // ~~l -> 1
    }
    return CausalValue::make(std::move(out));
}

CausalValue term_of_graph(const CausalGraphView& g) {
    return CausalValue::make({*Justification::make(g.vertices, g.edges, {}, {})});
}

CausalGraphView graph_of_term(const CausalValue& v) {
    if (v.addends().size() != 1)
        throw GraphArityError("graph_of_term needs a single-addend value, got " +
                              std::to_string(v.addends().size()));
    const Justification& e = v.addends()[0];
    if (!e.inhibitors().empty() || !e.enablers().empty())
        throw GraphArityError("graph_of_term needs a negation-free value");
    return CausalGraphView{e.vertices(), e.edges()};
}

namespace {

std::set<Atom> support(const Interpretation& i) {
    std::set<Atom> s;
    for (const auto& [a, v] : i)
        if (!v.is_zero()) s.insert(a);
    return s;
}

// CG reduct for a candidate support: a negative literal counts as
// satisfied iff its atom is outside the support; satisfied literals are
// deleted, the rest drop their rule.
LabelledProgram cg_reduct(const LabelledProgram& p, const std::set<Atom>& s) {
    LabelledProgram out;
    out.atoms = p.atoms;
    out.labels = p.labels;
    for (const auto& r : p.rules) {
        bool blocked = false;
        for (const auto& c : r.negative)
            if (s.count(c)) {
                blocked = true;
                break;
            }
        if (blocked) continue;
        Rule rr = r;
        rr.negative.clear();
        out.rules.push_back(std::move(rr));
    }
    return out;
}

std::optional<CGInterpretation> check_support(const LabelledProgram& p,
                                              const std::set<Atom>& s) {
    Interpretation least = least_model(cg_reduct(p, s));
    if (support(least) != s) return std::nullopt;
    CGInterpretation m;
    for (const auto& a : p.atoms) m[a] = value_of(least, a);
    return m;
}

}  // namespace

std::vector<CGInterpretation> cg_stable_models(const LabelledProgram& p,
                                               std::size_t max_atoms_enum) {
    std::vector<CGInterpretation> models;

    ThreeValuedModel std_wfm = standard_wfm(p);
    if (std_wfm.undef_atoms.empty()) {
        // Total WFM: its true set is the unique stable-model candidate.
        if (auto m = check_support(p, std_wfm.true_atoms)) models.push_back(std::move(*m));
        return models;
    }

    std::vector<Atom> atoms(p.atoms.begin(), p.atoms.end());
    if (atoms.size() > max_atoms_enum)
        throw ResourceLimitError("stable-model enumeration over " +
                                 std::to_string(atoms.size()) +
                                 " atoms exceeds the guard of " +
                                 std::to_string(max_atoms_enum));
    for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
        std::set<Atom> s;
        for (std::size_t bit = 0; bit < atoms.size(); ++bit)
            if (mask & (std::size_t{1} << bit)) s.insert(atoms[bit]);
        if (auto m = check_support(p, s)) models.push_back(std::move(*m));
    }
    std::sort(models.begin(), models.end());
    return models;
}

std::vector<CausalGraphView> cg_justifications(const CGInterpretation& m, const Atom& a) {
    auto it = m.find(a);
    if (it == m.end()) throw UnknownAtomError(a);
    std::vector<CausalGraphView> out;
    for (const auto& e : it->second.addends())
        out.push_back(CausalGraphView{e.vertices(), e.edges()});
    return out;
}

namespace {

bool two_cycle_free(const EdgeSet& es) {
    for (const auto& [u, v] : es)
        if (es.count({v, u})) return false;
    return true;
}

EdgeSet transitive_reduction(const LabelSet& vs, const EdgeSet& es) {
    if (!two_cycle_free(es)) return es;  // closed graphs are cyclic iff a 2-cycle exists
    EdgeSet out;
    for (const auto& [u, v] : es) {
        bool redundant = false;
        for (const auto& w : vs) {
            if (w == u || w == v) continue;
            if (es.count({u, w}) && es.count({w, v})) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.insert({u, v});
    }
    return out;
}

}  // namespace

std::string to_dot(const CausalGraphView& g) {
    std::ostringstream out;
    out << "digraph causal_graph {\n";
    for (const auto& v : g.vertices) out << "  \"" << v << "\";\n";
    for (const auto& [u, v] : transitive_reduction(g.vertices, g.edges))
        out << "  \"" << u << "\" -> \"" << v << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ecj

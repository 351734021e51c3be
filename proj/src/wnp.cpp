#include "ecj/wnp.hpp"

#include <algorithm>

#include "lexing.hpp"

namespace ecj {

namespace {

// C1 subsumes C2 when C1's literals all occur in C2 (C2 implies C1).
bool subsumes(const ProvConjunction& c1, const ProvConjunction& c2) {
    if (c1.size() > c2.size()) return false;
    for (const auto& [var, pos] : c1) {
        auto it = c2.find(var);
        if (it == c2.end() || it->second != pos) return false;
    }
    return true;
}

// Merge two conjunctions; nullopt when they clash on some variable.
std::optional<ProvConjunction> merge(const ProvConjunction& a, const ProvConjunction& b) {
    ProvConjunction out = a;
    for (const auto& [var, pos] : b) {
        auto [it, fresh] = out.emplace(var, pos);
        if (!fresh && it->second != pos) return std::nullopt;
    }
    return out;
}

// Consensus of (x & rest1) and (-x & rest2) on x, when the rests agree.
std::optional<ProvConjunction> consensus(const ProvConjunction& a,
                                         const ProvConjunction& b,
                                         const std::string& var) {
    ProvConjunction a2 = a, b2 = b;
    a2.erase(var);
    b2.erase(var);
    return merge(a2, b2);
}

// Blake canonical form: close under consensus, then keep the minimal
// (prime) implicants.
std::set<ProvConjunction> blake(std::vector<ProvConjunction> in) {
    std::set<ProvConjunction> seen(in.begin(), in.end());
    std::vector<ProvConjunction> pool(seen.begin(), seen.end());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            for (const auto& [var, pos] : pool[i]) {
                auto it = pool[k].find(var);
                if (it == pool[k].end() || it->second == pos) continue;
                auto c = consensus(pool[i], pool[k], var);
                if (c && seen.insert(*c).second) {
                    pool.push_back(*c);
                    if (pool.size() > max_addends())
                        throw ResourceLimitError("provenance value exceeded max size");
                }
            }
        }
    }
    std::set<ProvConjunction> out;
    for (const auto& c : pool) {
        bool prime = true;
        for (const auto& d : pool)
            if (d != c && subsumes(d, c)) {
                prime = false;
                break;
            }
        if (prime) out.insert(c);
    }
    return out;
}

}  // namespace

ProvenanceValue ProvenanceValue::verum() { return make({ProvConjunction{}}); }

ProvenanceValue ProvenanceValue::literal(const std::string& var, bool positive) {
    return make({ProvConjunction{{var, positive}}});
}

ProvenanceValue ProvenanceValue::make(std::vector<ProvConjunction> conjunctions) {
    ProvenanceValue v;
    v.dnf_ = blake(std::move(conjunctions));
    return v;
}

bool ProvenanceValue::eval(const std::map<std::string, bool>& assignment) const {
    for (const auto& c : dnf_) {
        bool sat = true;
        for (const auto& [var, pos] : c) {
            auto it = assignment.find(var);
            bool val = it != assignment.end() && it->second;
            if (val != pos) {
                sat = false;
                break;
            }
        }
        if (sat) return true;
    }
    return false;
}

ProvenanceValue prov_and(const ProvenanceValue& a, const ProvenanceValue& b) {
    std::vector<ProvConjunction> out;
    for (const auto& x : a.dnf())
        for (const auto& y : b.dnf())
            if (auto m = merge(x, y)) out.push_back(*m);
    return ProvenanceValue::make(std::move(out));
}

ProvenanceValue prov_or(const ProvenanceValue& a, const ProvenanceValue& b) {
    std::vector<ProvConjunction> out(a.dnf().begin(), a.dnf().end());
    out.insert(out.end(), b.dnf().begin(), b.dnf().end());
    return ProvenanceValue::make(std::move(out));
}

ProvenanceValue prov_not(const ProvenanceValue& a) {
    ProvenanceValue acc = ProvenanceValue::verum();
    for (const auto& c : a.dnf()) {
        std::vector<ProvConjunction> flipped;
        for (const auto& [var, pos] : c) flipped.push_back({{var, !pos}});
        acc = prov_and(acc, ProvenanceValue::make(std::move(flipped)));
        if (acc.is_false()) break;
    }
    return acc;
}

std::string not_marker(const Atom& a) { return "not(" + a + ")"; }

bool is_not_marker(const std::string& var) {
    return var.size() > 5 && var.rfind("not(", 0) == 0 && var.back() == ')';
}

std::string marker_atom(const std::string& var) {
    return var.substr(4, var.size() - 5);
}

std::string to_string(const ProvenanceValue& v) {
    if (v.is_false()) return "false";
    if (v.is_true()) return "true";
    std::string out;
    bool first_conj = true;
    for (const auto& c : v.dnf()) {
        if (!first_conj) out += " | ";
        first_conj = false;
        bool first_lit = true;
        for (const auto& [var, pos] : c) {
            if (!first_lit) out += " & ";
            first_lit = false;
            if (!pos) out += "-";
            out += var;
        }
    }
    return out;
}

ProvenanceValue parse_provenance(const std::string& text) {
    // Test/CLI helper for the '&', '|', '-' rendering. A leading '-' always
    // reads as negation, so variables that themselves start with '-' cannot
    // be written back; the engine compares values, not strings.
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
    };
    std::vector<ProvConjunction> dnf;
    ProvConjunction current;
    bool contradictory = false;
    bool any = false;
    skip();
    while (pos < text.size()) {
        bool positive = true;
        if (text[pos] == '-') {
            positive = false;
            ++pos;
        }
        std::string var = detail::lex_ident(text, pos);
        if (var.empty()) throw TermParseError("expected a provenance literal", pos + 1);
        if (var == "false") {
            contradictory = contradictory || positive;
        } else if (var != "true") {
            auto [it, fresh] = current.emplace(var, positive);
            if (!fresh && it->second != positive) contradictory = true;
        }
        any = true;
        skip();
        if (pos < text.size() && text[pos] == '&') {
            ++pos;
            skip();
            continue;
        }
        if (!contradictory) dnf.push_back(current);
        current.clear();
        contradictory = false;
        if (pos < text.size() && text[pos] == '|') {
            ++pos;
            skip();
            continue;
        }
        break;
    }
    if (!any) throw TermParseError("empty provenance expression", 1);
    if (pos != text.size()) throw TermParseError("trailing input", pos + 1);
    return ProvenanceValue::make(std::move(dnf));
}

ProvenanceValue lambda_p(const CausalValue& v) {
    std::vector<ProvConjunction> out;
    for (const auto& e : v.addends()) {
        ProvConjunction c;
        for (const auto& x : e.vertices()) c[x] = true;
        for (const auto& x : e.enablers()) c[x] = true;   // ~~l -> l
        for (const auto& x : e.inhibitors()) c[x] = false;  // ~l -> -l
        out.push_back(std::move(c));
    }
    return ProvenanceValue::make(std::move(out));
}

LabelledProgram augment(const LabelledProgram& p) {
    LabelledProgram out = p;
    for (const auto& a : p.atoms) {
        if (p.has_fact(a)) continue;
        Rule r;
        r.head = a;
        r.label_value = CausalValue::make(
            {*Justification::make({}, {}, {not_marker(a)}, {})});  // ~not(A)
        out.rules.push_back(std::move(r));
    }
    return out;
}

ProvenanceValue why(const LabelledProgram& p, const QLiteral& l) {
    if (!p.atoms.count(l.atom)) throw UnknownAtomError(l.atom);
    return lambda_p(query(causal_wfm(augment(p)), l));
}

bool hypothetical(const ProvConjunction& c) {
    for (const auto& [var, pos] : c)
        if (!pos && is_not_marker(var)) return true;
    return false;
}

ProvenanceValue strip_not_markers(const ProvenanceValue& v) {
    std::vector<ProvConjunction> out;
    for (const auto& c : v.dnf()) {
        if (hypothetical(c)) continue;  // -not(A) -> 0
        ProvConjunction kept;
        for (const auto& [var, pos] : c)
            if (!is_not_marker(var)) kept.emplace(var, pos);
        out.push_back(std::move(kept));
    }
    return ProvenanceValue::make(std::move(out));
}

CausalValue strip_not_markers(const CausalValue& v, const std::set<Atom>& atoms) {
    CausalValue out = v;
    for (const auto& a : atoms)
        out = remove_elementary(ElementaryTerm{not_marker(a), 0}, out);
    return out;
}

// -- Independent WnP fixpoint ------------------------------------------------

namespace {

using WnpInterpretation = std::map<Atom, ProvenanceValue>;

ProvenanceValue wnp_value(const WnpInterpretation& i, const Atom& a) {
    auto it = i.find(a);
    return it == i.end() ? ProvenanceValue::falsum() : it->second;
}

struct WnpRule {
    Atom head;
    std::vector<Atom> body;
    std::vector<Atom> negative;
    ProvenanceValue label;  // positive label literal, true, or -not(A)
};

std::vector<WnpRule> wnp_program(const LabelledProgram& p) {
    std::vector<WnpRule> rules;
    for (const auto& r : p.rules) {
        WnpRule wr;
        wr.head = r.head;
        for (const auto& b : r.body) wr.body.push_back(std::get<Atom>(b));
        wr.negative = r.negative;
        wr.label = r.label ? ProvenanceValue::literal(*r.label, true)
                           : ProvenanceValue::verum();
        rules.push_back(std::move(wr));
    }
    for (const auto& a : p.atoms) {
        if (p.has_fact(a)) continue;
        rules.push_back(
            WnpRule{a, {}, {}, ProvenanceValue::literal(not_marker(a), false)});
    }
    return rules;
}

// Least model of the reduct by outer interpretation `outer`: negative
// literals evaluate to the complement of their outer value.
WnpInterpretation wnp_gamma(const std::vector<WnpRule>& rules,
                            const WnpInterpretation& outer) {
    WnpInterpretation i;
    for (;;) {
        WnpInterpretation next;
        for (const auto& r : rules) {
            ProvenanceValue body = r.label;
            for (const auto& b : r.body) {
                body = prov_and(body, wnp_value(i, b));
                if (body.is_false()) break;
            }
            if (body.is_false()) continue;
            for (const auto& c : r.negative) {
                body = prov_and(body, prov_not(wnp_value(outer, c)));
                if (body.is_false()) break;
            }
            if (body.is_false()) continue;
            auto [it, fresh] = next.emplace(r.head, body);
            if (!fresh) it->second = prov_or(it->second, body);
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_false(); });
        if (next == i) return i;
        i = std::move(next);
    }
}

}  // namespace

ProvenanceValue why_oracle(const LabelledProgram& p, const QLiteral& l) {
    if (!p.atoms.count(l.atom)) throw UnknownAtomError(l.atom);
    std::vector<WnpRule> rules = wnp_program(p);
    WnpInterpretation lfp;
    for (;;) {
        WnpInterpretation next = wnp_gamma(rules, wnp_gamma(rules, lfp));
        if (next == lfp) break;
        lfp = std::move(next);
    }
    WnpInterpretation gfp = wnp_gamma(rules, lfp);
    switch (l.kind) {
        case QLiteral::Kind::plain: return wnp_value(lfp, l.atom);
        case QLiteral::Kind::negated: return prov_not(wnp_value(gfp, l.atom));
        case QLiteral::Kind::undefined:
            return prov_and(prov_not(wnp_value(lfp, l.atom)), wnp_value(gfp, l.atom));
    }
    return ProvenanceValue::falsum();
}

}  // namespace ecj

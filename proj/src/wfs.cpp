#include "ecj/wfs.hpp"

namespace ecj {

const CausalValue& value_of(const Interpretation& i, const Atom& a) {
    static const CausalValue zero;
    auto it = i.find(a);
    return it == i.end() ? zero : it->second;
}

bool leq(const Interpretation& a, const Interpretation& b) {
    for (const auto& [atom, v] : a)
        if (!leq(v, value_of(b, atom))) return false;
    return true;
}

LabelledProgram reduct(const LabelledProgram& p, const Interpretation& i) {
    LabelledProgram out;
    out.atoms = p.atoms;
    out.labels = p.labels;
    for (const auto& r : p.rules) {
        Rule rr = r;
        for (const auto& c : r.negative) rr.body.emplace_back(neg(value_of(i, c)));
        rr.negative.clear();
        out.rules.push_back(std::move(rr));
    }
    return out;
}

Interpretation direct_consequences(const LabelledProgram& positive,
                                   const Interpretation& i) {
    Interpretation out;
    for (const auto& r : positive.rules) {
        CausalValue body = CausalValue::one();
        for (const auto& b : r.body) {
            if (const Atom* a = std::get_if<Atom>(&b))
                body = prod(body, value_of(i, *a));
            else
                body = prod(body, std::get<CausalValue>(b));
            if (body.is_zero()) break;
        }
        if (body.is_zero()) continue;
        CausalValue contribution = app(body, r.label_value);
        auto [it, fresh] = out.emplace(r.head, contribution);
        if (!fresh) it->second = sum(it->second, contribution);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Interpretation least_model(const LabelledProgram& positive) {
    Interpretation i;
    for (;;) {
        Interpretation next = direct_consequences(positive, i);
        if (next == i) return i;
        i = std::move(next);
    }
}

Interpretation gamma(const LabelledProgram& p, const Interpretation& i) {
    return least_model(reduct(p, i));
}

QLiteral QLiteral::parse(const std::string& text) {
    auto strip = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        std::size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string s = strip(text);
    QLiteral l;
    for (auto [prefix, kind] : {std::pair{std::string("not "), Kind::negated},
                                std::pair{std::string("undef "), Kind::undefined}}) {
        if (s.rfind(prefix, 0) == 0) {
            l.kind = kind;
            l.atom = strip(s.substr(prefix.size()));
            return l;
        }
    }
    l.atom = s;
    return l;
}

std::string to_string(const QLiteral& l) {
    switch (l.kind) {
        case QLiteral::Kind::plain: return l.atom;
        case QLiteral::Kind::negated: return "not " + l.atom;
        case QLiteral::Kind::undefined: return "undef " + l.atom;
    }
    return l.atom;
}

CausalWfm causal_wfm(const LabelledProgram& p) {
    Interpretation lfp;
    for (;;) {
        Interpretation next = gamma(p, gamma(p, lfp));
        if (next == lfp) break;
        lfp = std::move(next);
    }
    CausalWfm w;
    w.gfp = gamma(p, lfp);
    w.lfp = std::move(lfp);
    w.atoms = p.atoms;
    return w;
}

CausalValue query(const CausalWfm& w, const QLiteral& l) {
    if (!w.atoms.count(l.atom)) throw UnknownAtomError(l.atom);
    switch (l.kind) {
        case QLiteral::Kind::plain: return value_of(w.lfp, l.atom);
        case QLiteral::Kind::negated: return neg(value_of(w.gfp, l.atom));
        case QLiteral::Kind::undefined:
            return prod(neg(value_of(w.lfp, l.atom)),
                        neg(neg(value_of(w.gfp, l.atom))));
    }
    return CausalValue::zero();
}

bool ThreeValuedModel::holds(const QLiteral& l) const {
    switch (l.kind) {
        case QLiteral::Kind::plain: return true_atoms.count(l.atom) != 0;
        case QLiteral::Kind::negated: return false_atoms.count(l.atom) != 0;
        case QLiteral::Kind::undefined: return undef_atoms.count(l.atom) != 0;
    }
    return false;
}

namespace {

// Boolean Gelfond-Lifschitz step: drop rules with a negative literal in s,
// then take the least model of what remains.
std::set<Atom> bool_gamma(const LabelledProgram& p, const std::set<Atom>& s) {
    std::set<Atom> model;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : p.rules) {
            if (model.count(r.head)) continue;
            bool applicable = true;
            for (const auto& c : r.negative)
                if (s.count(c)) {
                    applicable = false;
                    break;
                }
            if (!applicable) continue;
            for (const auto& b : r.body) {
                if (const Atom* a = std::get_if<Atom>(&b)) {
                    if (!model.count(*a)) {
                        applicable = false;
                        break;
                    }
                } else if (std::get<CausalValue>(b).is_zero()) {
                    applicable = false;
                    break;
                }
            }
            if (applicable) {
                model.insert(r.head);
                changed = true;
            }
        }
    }
    return model;
}

}  // namespace

ThreeValuedModel standard_wfm(const LabelledProgram& p) {
    std::set<Atom> lfp;
    for (;;) {
        std::set<Atom> next = bool_gamma(p, bool_gamma(p, lfp));
        if (next == lfp) break;
        lfp = std::move(next);
    }
    std::set<Atom> nonfalse = bool_gamma(p, lfp);

    ThreeValuedModel m;
    m.true_atoms = lfp;
    for (const auto& a : p.atoms) {
        if (lfp.count(a)) continue;
        if (nonfalse.count(a))
            m.undef_atoms.insert(a);
        else
            m.false_atoms.insert(a);
    }
    return m;
}

}  // namespace ecj

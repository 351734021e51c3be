#include "ecj/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lexing.hpp"

namespace ecj {

namespace {

std::atomic<std::size_t> g_max_addends{4096};

void close_transitively(EdgeSet& edges) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [u, v] : EdgeSet(edges)) {
            for (const auto& [v2, w] : edges) {
                if (v2 != v || u == w) continue;
                if (edges.insert({u, w}).second) changed = true;
            }
        }
    }
}

bool intersects(const LabelSet& a, const LabelSet& b) {
    const LabelSet& small = a.size() <= b.size() ? a : b;
    const LabelSet& big = a.size() <= b.size() ? b : a;
    for (const auto& x : small)
        if (big.count(x)) return true;
    return false;
}

}  // namespace

std::size_t max_addends() { return g_max_addends.load(); }
void set_max_addends(std::size_t cap) { g_max_addends.store(cap); }

std::optional<Justification> Justification::make(LabelSet vertices, EdgeSet edges,
                                                 LabelSet inhibitors, LabelSet enablers) {
    for (const auto& [u, v] : edges) {
        vertices.insert(u);
        vertices.insert(v);
    }
    std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
    close_transitively(edges);
    for (const auto& v : vertices) enablers.erase(v);  // l * ~~l = l
    if (intersects(inhibitors, vertices) || intersects(inhibitors, enablers))
        return std::nullopt;  // t * ~t = 0
    Justification j;
    j.vertices_ = std::move(vertices);
    j.edges_ = std::move(edges);
    j.inhibitors_ = std::move(inhibitors);
    j.enablers_ = std::move(enablers);
    return j;
}

bool Justification::mentions(const ElementaryTerm& x) const {
    switch (x.sign) {
        case 0: return vertices_.count(x.base) != 0;
        case 1: return inhibitors_.count(x.base) != 0;
        default: return enablers_.count(x.base) != 0;
    }
}

std::optional<Justification> prod(const Justification& a, const Justification& b) {
    LabelSet vs = a.vertices();
    vs.insert(b.vertices().begin(), b.vertices().end());
    EdgeSet es = a.edges();
    es.insert(b.edges().begin(), b.edges().end());
    LabelSet inh = a.inhibitors();
    inh.insert(b.inhibitors().begin(), b.inhibitors().end());
    LabelSet enb = a.enablers();
    enb.insert(b.enablers().begin(), b.enablers().end());
    return Justification::make(std::move(vs), std::move(es), std::move(inh), std::move(enb));
}

std::optional<Justification> app(const Justification& a, const Justification& b) {
    LabelSet vs = a.vertices();
    vs.insert(b.vertices().begin(), b.vertices().end());
    EdgeSet es = a.edges();
    es.insert(b.edges().begin(), b.edges().end());
    for (const auto& u : a.vertices())
        for (const auto& v : b.vertices())
            if (u != v) es.insert({u, v});
    LabelSet inh = a.inhibitors();
    inh.insert(b.inhibitors().begin(), b.inhibitors().end());
    LabelSet enb = a.enablers();
    enb.insert(b.enablers().begin(), b.enablers().end());
    return Justification::make(std::move(vs), std::move(es), std::move(inh), std::move(enb));
}

bool leq(const Justification& a, const Justification& b) {
    auto p = prod(a, b);
    return p && *p == a;
}

namespace {

Justification without_inhibitor(const Justification& j, const Label& x) {
    LabelSet inh = j.inhibitors();
    inh.erase(x);
    return *Justification::make(j.vertices(), j.edges(), std::move(inh), j.enablers());
}

Justification without_enabler(const Justification& j, const Label& x) {
    LabelSet enb = j.enablers();
    enb.erase(x);
    return *Justification::make(j.vertices(), j.edges(), j.inhibitors(), std::move(enb));
}

/// Consensus closure plus antichain reduction. Consensus instance: for
/// addends A*~x and B*~~x the value also lies above prod(A, B), by
/// distributivity and ~x + ~~x = 1. Iterating to closure and keeping the
/// maximal addends yields the canonical representation.
std::vector<Justification> canonicalize(std::vector<Justification> in) {
    std::set<Justification> seen(in.begin(), in.end());
    std::vector<Justification> pool(seen.begin(), seen.end());

    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            for (int dir = 0; dir < 2; ++dir) {
                const Justification& a = dir == 0 ? pool[i] : pool[k];
                const Justification& b = dir == 0 ? pool[k] : pool[i];
                for (const auto& x : a.inhibitors()) {
                    if (!b.enablers().count(x)) continue;
                    auto c = prod(without_inhibitor(a, x), without_enabler(b, x));
                    if (c && seen.insert(*c).second) {
                        pool.push_back(*c);
                        if (pool.size() > max_addends())
                            throw ResourceLimitError("value exceeded max addend count");
                    }
                }
            }
        }
    }

    std::vector<Justification> out;
    for (const auto& j : pool) {
        bool maximal = true;
        for (const auto& k : pool) {
            if (k != j && leq(j, k)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CausalValue CausalValue::one() { return make({Justification()}); }

CausalValue CausalValue::label(const Label& l) {
    return make({*Justification::make({l}, {}, {}, {})});
}

CausalValue CausalValue::elementary(const ElementaryTerm& x) {
    switch (x.sign) {
        case 0: return label(x.base);
        case 1: return make({*Justification::make({}, {}, {x.base}, {})});
        default: return make({*Justification::make({}, {}, {}, {x.base})});
    }
}

CausalValue CausalValue::make(std::vector<Justification> addends) {
    CausalValue v;
    v.addends_ = canonicalize(std::move(addends));
    return v;
}

bool CausalValue::sign_free() const {
    for (const auto& j : addends_)
        if (!j.inhibitors().empty() || !j.enablers().empty()) return false;
    return true;
}

CausalValue prod(const CausalValue& a, const CausalValue& b) {
    std::vector<Justification> out;
    for (const auto& x : a.addends())
        for (const auto& y : b.addends())
            if (auto p = prod(x, y)) out.push_back(*p);
    return CausalValue::make(std::move(out));
}

CausalValue sum(const CausalValue& a, const CausalValue& b) {
    std::vector<Justification> out = a.addends();
    out.insert(out.end(), b.addends().begin(), b.addends().end());
    return CausalValue::make(std::move(out));
}

CausalValue app(const CausalValue& a, const CausalValue& b) {
    std::vector<Justification> out;
    for (const auto& x : a.addends())
        for (const auto& y : b.addends())
            if (auto p = app(x, y)) out.push_back(*p);
    return CausalValue::make(std::move(out));
}

CausalValue neg(const CausalValue& v) {
    // ~(sum E_i) = prod ~E_i, and ~E negates each elementary occurrence:
    // causes become inhibitors, inhibitors enablers, enablers inhibitors.
    CausalValue acc = CausalValue::one();
    for (const auto& e : v.addends()) {
        std::vector<Justification> parts;
        for (const auto& x : e.vertices())
            parts.push_back(*Justification::make({}, {}, {x}, {}));
        for (const auto& x : e.inhibitors())
            parts.push_back(*Justification::make({}, {}, {}, {x}));
        for (const auto& x : e.enablers())
            parts.push_back(*Justification::make({}, {}, {x}, {}));
        acc = prod(acc, CausalValue::make(std::move(parts)));
        if (acc.is_zero()) break;
    }
    return acc;
}

bool leq(const CausalValue& a, const CausalValue& b) { return prod(a, b) == a; }

CausalValue remove_elementary(const ElementaryTerm& x, const CausalValue& v) {
    const bool even = x.sign != 1;
    std::vector<Justification> out;
    for (const auto& e : v.addends()) {
        if (even) {
            if (e.inhibitors().count(x.base)) continue;  // ~x occurrence -> 0
            LabelSet vs = e.vertices();
            vs.erase(x.base);
            EdgeSet es;
            for (const auto& ed : e.edges())
                if (ed.first != x.base && ed.second != x.base) es.insert(ed);
            LabelSet enb = e.enablers();
            enb.erase(x.base);
            out.push_back(*Justification::make(std::move(vs), std::move(es),
                                               e.inhibitors(), std::move(enb)));
        } else {
            if (e.enablers().count(x.base)) continue;  // ~~x == ~(~x) -> 0
            out.push_back(without_inhibitor(e, x.base));
        }
    }
    return CausalValue::make(std::move(out));
}

JustificationClass classify(const Justification& e) {
    return JustificationClass{e.vertices(), e.enablers(), e.inhibitors(),
                              e.inhibitors().empty()};
}

// -- Terms ------------------------------------------------------------------

TermPtr CausalTerm::make_label(Label l) {
    auto t = std::make_shared<CausalTerm>();
    t->kind = Kind::label;
    t->name = std::move(l);
    return t;
}

TermPtr CausalTerm::make_product(std::vector<TermPtr> ts) {
    auto t = std::make_shared<CausalTerm>();
    t->kind = Kind::product;
    t->children = std::move(ts);
    return t;
}

TermPtr CausalTerm::make_sum(std::vector<TermPtr> ts) {
    auto t = std::make_shared<CausalTerm>();
    t->kind = Kind::sum;
    t->children = std::move(ts);
    return t;
}

TermPtr CausalTerm::make_application(TermPtr a, TermPtr b) {
    auto t = std::make_shared<CausalTerm>();
    t->kind = Kind::application;
    t->children = {std::move(a), std::move(b)};
    return t;
}

TermPtr CausalTerm::make_negation(TermPtr inner) {
    auto t = std::make_shared<CausalTerm>();
    t->kind = Kind::negation;
    t->children = {std::move(inner)};
    return t;
}

namespace {

class TermParser {
public:
    explicit TermParser(const std::string& text) : text_(text) {}

    TermPtr parse() {
        auto t = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after term");
        return t;
    }

private:
    TermPtr parse_sum() {
        std::vector<TermPtr> parts{parse_product()};
        while (eat('+')) parts.push_back(parse_product());
        return parts.size() == 1 ? parts[0] : CausalTerm::make_sum(std::move(parts));
    }

    TermPtr parse_product() {
        std::vector<TermPtr> parts{parse_application()};
        while (eat('*')) parts.push_back(parse_application());
        return parts.size() == 1 ? parts[0] : CausalTerm::make_product(std::move(parts));
    }

    TermPtr parse_application() {
        TermPtr t = parse_unary();
        while (eat('.')) t = CausalTerm::make_application(t, parse_unary());
        return t;
    }

    TermPtr parse_unary() {
        skip_ws();
        if (eat('~')) return CausalTerm::make_negation(parse_unary());
        if (eat('(')) {
            auto t = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return t;
        }
        if (pos_ < text_.size() && text_[pos_] == '0') {
            ++pos_;
            return CausalTerm::make_zero();
        }
        if (pos_ < text_.size() && text_[pos_] == '1') {
            ++pos_;
            return CausalTerm::make_one();
        }
        if (pos_ < text_.size() && detail::ident_start(text_[pos_])) {
            return CausalTerm::make_label(detail::lex_ident(text_, pos_));
        }
        fail("expected a label, 0, 1, '~' or '('");
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw TermParseError(msg, pos_ + 1); }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(const std::string& text) { return TermParser(text).parse(); }

ElementaryTerm parse_elementary(const std::string& text) {
    std::size_t pos = 0;
    int sign = 0;
    while (pos < text.size() && text[pos] == '~') {
        ++sign;
        ++pos;
    }
    if (sign > 2) sign = (sign % 2 == 0) ? 2 : 1;  // ~~~t = ~t
    std::string base = detail::lex_ident(text, pos);
    if (base.empty() || pos != text.size())
        throw TermParseError("expected an elementary term", pos + 1);
    return ElementaryTerm{base, sign};
}

CausalValue normalize(const TermPtr& t) {
    switch (t->kind) {
        case CausalTerm::Kind::label:
            return CausalValue::label(t->name);
        case CausalTerm::Kind::product: {
            CausalValue acc = CausalValue::one();
            for (const auto& c : t->children) acc = prod(acc, normalize(c));
            return acc;
        }
        case CausalTerm::Kind::sum: {
            CausalValue acc = CausalValue::zero();
            for (const auto& c : t->children) acc = sum(acc, normalize(c));
            return acc;
        }
        case CausalTerm::Kind::application:
            return app(normalize(t->children[0]), normalize(t->children[1]));
        case CausalTerm::Kind::negation:
            return neg(normalize(t->children[0]));
    }
    return CausalValue::zero();
}

CausalValue normalize(const std::string& term_text) {
    return normalize(parse_term(term_text));
}

std::string to_string(const ElementaryTerm& x) {
    std::string s;
    for (int i = 0; i < x.sign; ++i) s.push_back('~');
    return s + x.base;
}

namespace {

bool has_cycle(const LabelSet& vs, const EdgeSet& es) {
    for (const auto& [u, v] : es)
        if (es.count({v, u})) return true;
    (void)vs;
    return false;
}

/// Transitive reduction of a closed acyclic edge set; cyclic graphs are
/// rendered with their full closed edge set.
EdgeSet reduction_edges(const LabelSet& vs, const EdgeSet& es) {
    if (has_cycle(vs, es)) return es;
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

std::string to_string(const Justification& e) {
    if (e.is_one()) return "1";

    std::vector<std::string> factors;
    EdgeSet remaining = reduction_edges(e.vertices(), e.edges());
    LabelSet covered;
    while (!remaining.empty()) {
        Edge start = *remaining.begin();
        remaining.erase(remaining.begin());
        std::string chain = start.first + "." + start.second;
        covered.insert(start.first);
        covered.insert(start.second);
        Label tail = start.second;
        for (;;) {
            auto it = remaining.lower_bound({tail, ""});
            if (it == remaining.end() || it->first != tail) break;
            chain += "." + it->second;
            covered.insert(it->second);
            tail = it->second;
            remaining.erase(it);
        }
        factors.push_back(std::move(chain));
    }
    for (const auto& v : e.vertices())
        if (!covered.count(v)) factors.push_back(v);
    for (const auto& x : e.inhibitors()) factors.push_back("~" + x);
    for (const auto& x : e.enablers()) factors.push_back("~~" + x);
    std::sort(factors.begin(), factors.end());

    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " * ";
        out += factors[i];
    }
    return out;
}

std::string to_string(const CausalValue& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < v.addends().size(); ++i) {
        if (i) out += " + ";
        out += to_string(v.addends()[i]);
    }
    return out;
}

}  // namespace ecj

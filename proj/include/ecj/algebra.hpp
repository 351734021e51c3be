#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ecj {

using Label = std::string;
using Edge = std::pair<Label, Label>;
using EdgeSet = std::set<Edge>;
using LabelSet = std::set<Label>;

/// An elementary term is a label under at most two negations: l, ~l or ~~l.
/// Deeper nesting collapses through ~~~t = ~t, so sign is always 0, 1 or 2.
struct ElementaryTerm {
    Label base;
    int sign = 0;

    bool operator==(const ElementaryTerm&) const = default;
    auto operator<=>(const ElementaryTerm&) const = default;
};

/// Thrown when normalization exceeds the configured addend cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Global cap on the number of addends a value may reach during
/// normalization. Sums of justification graphs can grow exponentially
/// (negation of large products); exceeding the cap aborts with
/// ResourceLimitError instead of truncating silently.
std::size_t max_addends();
void set_max_addends(std::size_t cap);

/// One sum-free addend of a causal value: a transitively closed graph of
/// rule applications over plain labels, together with the signed labels
/// occurring in it.
///
/// Edges incident to a negated label carry no information (~x.a = ~x * a
/// follows from the axioms), so singly and doubly negated labels are kept
/// as plain sets and only the sign-0 part has graph structure. Reflexive
/// edges are implicit; the stored edge set is irreflexive and transitively
/// closed.
///
/// Invariants:
///   - enablers() is disjoint from vertices()        (l * ~~l = l)
///   - inhibitors() is disjoint from both            (t * ~t = 0; a graph
///     violating this denotes 0 and cannot be constructed)
class Justification {
public:
    /// The empty graph, i.e. the constant 1.
    Justification() = default;

    /// Builds a closed graph from the pieces, applying absorption.
    /// Returns nullopt when the product annihilates to 0.
    static std::optional<Justification> make(LabelSet vertices, EdgeSet edges,
                                             LabelSet inhibitors, LabelSet enablers);

    const LabelSet& vertices() const { return vertices_; }
    const EdgeSet& edges() const { return edges_; }
    const LabelSet& inhibitors() const { return inhibitors_; }
    const LabelSet& enablers() const { return enablers_; }

    bool is_one() const {
        return vertices_.empty() && inhibitors_.empty() && enablers_.empty();
    }
    bool enabled() const { return inhibitors_.empty(); }

    /// True iff the elementary term occurs in this graph.
    bool mentions(const ElementaryTerm& x) const;

    bool operator==(const Justification&) const = default;
    auto operator<=>(const Justification&) const = default;

private:
    LabelSet vertices_;
    EdgeSet edges_;
    LabelSet inhibitors_;
    LabelSet enablers_;
};

/// Graph product: union of both graphs, closed, with absorption and
/// annihilation applied. nullopt encodes the zero value.
std::optional<Justification> prod(const Justification& a, const Justification& b);

/// Graph application a.b: the product plus an edge from every vertex of a
/// to every vertex of b. Signed labels take no edges.
std::optional<Justification> app(const Justification& a, const Justification& b);

/// Order on addends: a <= b iff prod(a, b) == a (b is a subgraph of a up
/// to absorption).
bool leq(const Justification& a, const Justification& b);

/// A canonical causal value: the antichain of maximal justifications below
/// it. 0 is the empty sum and 1 the sum containing just the empty graph.
/// Construction normalizes: per-addend closure, subsumption removal, and
/// consensus on ~x / ~~x pairs (from the weak excluded middle axiom), so
/// equal values have identical representations.
class CausalValue {
public:
    CausalValue() = default;  // 0

    static CausalValue zero() { return CausalValue(); }
    static CausalValue one();
    static CausalValue label(const Label& l);
    static CausalValue elementary(const ElementaryTerm& x);
    static CausalValue make(std::vector<Justification> addends);

    const std::vector<Justification>& addends() const { return addends_; }
    bool is_zero() const { return addends_.empty(); }
    bool is_one() const { return addends_.size() == 1 && addends_[0].is_one(); }

    /// True iff no negated label occurs (a pure causal-graph value).
    bool sign_free() const;

    bool operator==(const CausalValue&) const = default;
    auto operator<=>(const CausalValue&) const = default;

private:
    std::vector<Justification> addends_;  // sorted, consensus-closed antichain
};

CausalValue prod(const CausalValue& a, const CausalValue& b);
CausalValue sum(const CausalValue& a, const CausalValue& b);
CausalValue app(const CausalValue& a, const CausalValue& b);
CausalValue neg(const CausalValue& v);
bool leq(const CausalValue& a, const CausalValue& b);

/// Removal function: deletes the elementary term x from every addend.
/// Occurrences of the same parity as x become 1, occurrences of the
/// opposite (negated) parity annihilate the addend.
CausalValue remove_elementary(const ElementaryTerm& x, const CausalValue& v);

/// Role of each label in one justification: plain labels are productive
/// causes, singly negated ones inhibitors, doubly negated ones enablers.
/// A justification is enabled iff it has no inhibitor.
struct JustificationClass {
    LabelSet causes;
    LabelSet enablers;
    LabelSet inhibitors;
    bool enabled = true;
};

JustificationClass classify(const Justification& e);

// -- Term syntax -----------------------------------------------------------
//
// Causal terms as written: `~` negation, `*` product, `+` sum,
// `.` application, parentheses; `.` binds tighter than `*`, `*` tighter
// than `+`. `0` and `1` are the empty sum and empty product.

struct CausalTerm;
using TermPtr = std::shared_ptr<const CausalTerm>;

struct CausalTerm {
    enum class Kind { label, product, sum, application, negation };

    Kind kind = Kind::product;
    Label name;                     // Kind::label only
    std::vector<TermPtr> children;  // application: exactly 2; negation: 1

    static TermPtr make_label(Label l);
    static TermPtr make_product(std::vector<TermPtr> ts);
    static TermPtr make_sum(std::vector<TermPtr> ts);
    static TermPtr make_application(TermPtr a, TermPtr b);
    static TermPtr make_negation(TermPtr t);
    static TermPtr make_zero() { return make_sum({}); }
    static TermPtr make_one() { return make_product({}); }
};

class TermParseError : public std::runtime_error {
public:
    TermParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what), column(column) {}
    std::size_t column;
};

TermPtr parse_term(const std::string& text);
ElementaryTerm parse_elementary(const std::string& text);

/// Evaluates a term into its canonical value. Total; respects every axiom
/// of the algebra, and is a fixpoint: normalizing a rendering of the
/// result yields an equal value.
CausalValue normalize(const TermPtr& t);
CausalValue normalize(const std::string& term_text);

std::string to_string(const ElementaryTerm& x);

/// Deterministic rendering: each addend as a product of application
/// chains taken from the transitive reduction of its graph, plus its
/// signed labels; addends joined by " + ". Parsing the rendering back
/// normalizes to an equal value.
std::string to_string(const Justification& e);
std::string to_string(const CausalValue& v);

}  // namespace ecj

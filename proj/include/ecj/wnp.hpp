#pragma once

#include <map>
#include <set>
#include <string>

#include "ecj/wfs.hpp"

namespace ecj {

/// A provenance conjunction maps each variable to its polarity; variables
/// are rule labels or markers of the form "not(A)". The map representation
/// rules out complementary literals inside one conjunction.
using ProvConjunction = std::map<std::string, bool>;

/// Boolean provenance value in Blake canonical form: the set of all prime
/// implicants (consensus-closed, subsumption-free DNF). Two values denote
/// the same Boolean function iff their representations are equal.
/// 0 is the empty set and 1 the set holding the empty conjunction.
class ProvenanceValue {
public:
    ProvenanceValue() = default;  // false

    static ProvenanceValue falsum() { return ProvenanceValue(); }
    static ProvenanceValue verum();
    static ProvenanceValue literal(const std::string& var, bool positive);
    static ProvenanceValue make(std::vector<ProvConjunction> conjunctions);

    const std::set<ProvConjunction>& dnf() const { return dnf_; }
    bool is_false() const { return dnf_.empty(); }
    bool is_true() const { return dnf_.size() == 1 && dnf_.begin()->empty(); }

    /// Truth under an assignment (unmapped variables read as false).
    bool eval(const std::map<std::string, bool>& assignment) const;

    bool operator==(const ProvenanceValue&) const = default;
    auto operator<=>(const ProvenanceValue&) const = default;

private:
    std::set<ProvConjunction> dnf_;
};

ProvenanceValue prov_and(const ProvenanceValue& a, const ProvenanceValue& b);
ProvenanceValue prov_or(const ProvenanceValue& a, const ProvenanceValue& b);
ProvenanceValue prov_not(const ProvenanceValue& a);

std::string not_marker(const Atom& a);                      // "not(a)"
bool is_not_marker(const std::string& var);
std::string marker_atom(const std::string& var);            // "not(a)" -> "a"

/// Rendered with '&', '|' and '-'; "true"/"false" for the constants.
std::string to_string(const ProvenanceValue& v);
ProvenanceValue parse_provenance(const std::string& text);

/// Flattening onto the Boolean algebra: '.' becomes conjunction and '~'
/// classical negation, so causes and enablers map to positive literals and
/// inhibitors to negated ones.
ProvenanceValue lambda_p(const CausalValue& v);

/// The why-not provenance program: adds a fact labelled ~not(A) for every
/// atom A that does not occur in p as a fact.
LabelledProgram augment(const LabelledProgram& p);

/// Why(L) = lambda_p of the causal well-founded model of augment(p) at L.
ProvenanceValue why(const LabelledProgram& p, const QLiteral& l);

/// Independent route to the same function: a Boolean alternating fixpoint
/// over the why-not program, with conjunction in place of application.
/// Exists to cross-check `why`; never used by it.
ProvenanceValue why_oracle(const LabelledProgram& p, const QLiteral& l);

/// Hypothetical conjunctions require adding a fact: some not(A) occurs
/// negated.
bool hypothetical(const ProvConjunction& c);

/// Removal of every not(A) marker: positive occurrences disappear,
/// negated ones annihilate their conjunction.
ProvenanceValue strip_not_markers(const ProvenanceValue& v);

/// Same removal at the causal level, as the composition of the removal
/// function over not(A) for every atom of the signature.
CausalValue strip_not_markers(const CausalValue& v, const std::set<Atom>& atoms);

}  // namespace ecj

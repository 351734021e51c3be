#pragma once

#include <map>
#include <set>
#include <string>

#include "ecj/program.hpp"

namespace ecj {

/// Atom-to-value mapping with finite support; unmapped atoms are 0 and
/// zero values are never stored, so map equality is pointwise equality.
using Interpretation = std::map<Atom, CausalValue>;

const CausalValue& value_of(const Interpretation& i, const Atom& a);
bool leq(const Interpretation& a, const Interpretation& b);

class UnknownAtomError : public std::runtime_error {
public:
    explicit UnknownAtomError(const Atom& a)
        : std::runtime_error("unknown atom: " + a), atom(a) {}
    Atom atom;
};

/// The reduct P^I: every negative literal `not C` is replaced by the
/// constant value ~I(C) in the positive body. The result has no negative
/// literals.
LabelledProgram reduct(const LabelledProgram& p, const Interpretation& i);

/// One step of the direct-consequence operator on a positive program:
/// each rule contributes (product of its body values) . label to its head,
/// heads summing over rules.
Interpretation direct_consequences(const LabelledProgram& positive,
                                   const Interpretation& i);

/// Least fixpoint of direct_consequences from the bottom interpretation;
/// reached within n steps for n rules.
Interpretation least_model(const LabelledProgram& positive);

/// gamma(p, i) = least model of the reduct P^i. Anti-monotonic in i.
Interpretation gamma(const LabelledProgram& p, const Interpretation& i);

struct QLiteral {
    enum class Kind { plain, negated, undefined };
    Kind kind = Kind::plain;
    Atom atom;

    /// Accepts "a", "not a" and "undef a".
    static QLiteral parse(const std::string& text);
};

std::string to_string(const QLiteral& l);

struct CausalWfm {
    Interpretation lfp;  // justifications of true atoms
    Interpretation gfp;  // justifications of non-false atoms; gfp = gamma(lfp)
    std::set<Atom> atoms;
};

/// Iterates gamma^2 from bottom until the least fixpoint is reached (the
/// lattice over the program's labels is finite), then takes the greatest
/// fixpoint as gamma(lfp).
CausalWfm causal_wfm(const LabelledProgram& p);

/// W(A) = lfp(A);  W(not A) = ~gfp(A);  W(undef A) = ~W(A) * ~W(not A).
CausalValue query(const CausalWfm& w, const QLiteral& l);

struct ThreeValuedModel {
    std::set<Atom> true_atoms;
    std::set<Atom> undef_atoms;
    std::set<Atom> false_atoms;

    bool holds(const QLiteral& l) const;
};

/// Standard well-founded model by the classic two-valued alternating
/// fixpoint on the unlabelled program. Shares nothing with the causal
/// algebra; serves as the independent oracle.
ThreeValuedModel standard_wfm(const LabelledProgram& p);

}  // namespace ecj

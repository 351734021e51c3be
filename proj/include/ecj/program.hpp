#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ecj/algebra.hpp"

namespace ecj {

using Atom = std::string;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line(line), column(column) {}
    int line;
    int column;
};

struct Diagnostic {
    std::string code;  // e.g. "duplicate-label"
    std::string message;
    int line = 0;
};

/// Positive body elements are atoms in surface programs; reducts replace
/// resolved negative literals by constant values, so both are admitted.
using BodyElement = std::variant<Atom, CausalValue>;

struct Rule {
    std::optional<Label> label;  // nullopt = unlabelled (the constant 1)
    CausalValue label_value;     // 1, a single label, or a synthetic term
    Atom head;
    std::vector<BodyElement> body;
    std::vector<Atom> negative;
    int line = 0;

    bool is_fact() const { return body.empty() && negative.empty(); }
};

struct LabelledProgram {
    std::vector<Rule> rules;
    std::set<Atom> atoms;
    std::set<Label> labels;

    /// True iff the atom occurs in the program as a fact.
    bool has_fact(const Atom& a) const;
    void add_rule(Rule r);
};

/// Builds a rule with a plain named label (or none) and recomputes nothing;
/// call LabelledProgram::add_rule to keep the signature in sync.
Rule make_rule(std::optional<Label> label, Atom head, std::vector<Atom> body,
               std::vector<Atom> negative);

/// Parses the rule language. Facts `a.` stand for the labelled rule
/// `(a: a <-)`; rules without a label get the constant 1. Statements end
/// with '.', bodies use ',' and `not`, the arrow is `:-` or `<-`, and `%`
/// starts a comment. Throws ParseError with line/column on bad input.
LabelledProgram parse_program(const std::string& text);

std::string to_string(const LabelledProgram& p);

/// Non-throwing well-formedness checks: currently duplicate rule labels.
/// The engine still evaluates programs with shared labels (sharing merges
/// their traces), so these are diagnostics rather than parse errors.
std::vector<Diagnostic> validate(const LabelledProgram& p);

LabelledProgram remove_rules_labelled(const LabelledProgram& p, const Label& l);
LabelledProgram with_fact(const LabelledProgram& p, const Atom& a);

}  // namespace ecj

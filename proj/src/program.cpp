#include "ecj/program.hpp"

#include <map>
#include <sstream>

#include "lexing.hpp"

namespace ecj {

bool LabelledProgram::has_fact(const Atom& a) const {
    for (const auto& r : rules)
        if (r.is_fact() && r.head == a) return true;
    return false;
}

void LabelledProgram::add_rule(Rule r) {
    atoms.insert(r.head);
    for (const auto& b : r.body)
        if (const Atom* a = std::get_if<Atom>(&b)) atoms.insert(*a);
    for (const auto& c : r.negative) atoms.insert(c);
    if (r.label) labels.insert(*r.label);
    rules.push_back(std::move(r));
}

Rule make_rule(std::optional<Label> label, Atom head, std::vector<Atom> body,
               std::vector<Atom> negative) {
    Rule r;
    r.label = std::move(label);
    r.label_value = r.label ? CausalValue::label(*r.label) : CausalValue::one();
    r.head = std::move(head);
    for (auto& a : body) r.body.emplace_back(std::move(a));
    r.negative = std::move(negative);
    return r;
}

namespace {

class ProgramParser {
public:
    explicit ProgramParser(const std::string& text) : text_(text) {}

    LabelledProgram parse() {
        LabelledProgram p;
        skip_trivia();
        while (pos_ < text_.size()) {
            parse_statement(p);
            skip_trivia();
        }
        return p;
    }

private:
    void parse_statement(LabelledProgram& p) {
        int line = line_;
        std::string first = expect_ident("atom or label");

        std::optional<Label> label;
        Atom head;
        if (eat_label_colon()) {
            label = first;
            head = expect_ident("head atom");
        } else {
            head = first;
        }

        std::vector<Atom> body;
        std::vector<Atom> negative;
        bool has_arrow = eat_arrow();
        if (has_arrow) {
            for (;;) {
                bool negated = eat_keyword_not();
                std::string a = expect_ident(negated ? "atom after 'not'" : "body atom");
                (negated ? negative : body).push_back(std::move(a));
                skip_trivia();
                if (!eat_char(',')) break;
            }
        }
        if (!eat_char('.')) fail("expected '.' at end of statement");

        // A bare fact abbreviates the homonymously labelled rule.
        if (!label && !has_arrow) label = head;

        Rule r = make_rule(std::move(label), std::move(head), std::move(body),
                           std::move(negative));
        r.line = line;
        p.add_rule(std::move(r));
    }

    std::string expect_ident(const std::string& what) {
        skip_trivia();
        if (pos_ >= text_.size() || !detail::ident_start(text_[pos_]))
            fail("expected " + what);
        int col = col_;
        std::string id = lex_ident_tracked();
        if (id == "not") throw ParseError("'not' is reserved and cannot name an atom",
                                          line_, col);
        if (id.rfind("not(", 0) == 0)
            throw ParseError("names with the reserved prefix 'not(' are not allowed",
                             line_, col);
        return id;
    }

    bool eat_label_colon() {
        skip_trivia();
        // ':' starts a label separator unless it opens the ':-' arrow.
        if (pos_ < text_.size() && text_[pos_] == ':' &&
            (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '-')) {
            advance();
            return true;
        }
        return false;
    }

    bool eat_arrow() {
        skip_trivia();
        if (pos_ + 1 < text_.size() && text_[pos_] == ':' && text_[pos_ + 1] == '-') {
            advance();
            advance();
            return true;
        }
        if (pos_ + 1 < text_.size() && text_[pos_] == '<' && text_[pos_ + 1] == '-') {
            advance();
            advance();
            return true;
        }
        return false;
    }

    bool eat_keyword_not() {
        skip_trivia();
        std::size_t save_pos = pos_;
        int save_line = line_, save_col = col_;
        if (pos_ < text_.size() && detail::ident_start(text_[pos_])) {
            std::string id = lex_ident_tracked();
            if (id == "not") return true;
        }
        pos_ = save_pos;
        line_ = save_line;
        col_ = save_col;
        return false;
    }

    bool eat_char(char c) {
        skip_trivia();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string lex_ident_tracked() {
        std::size_t before = pos_;
        std::string id = detail::lex_ident(text_, pos_);
        col_ += static_cast<int>(pos_ - before);
        return id;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

LabelledProgram parse_program(const std::string& text) {
    return ProgramParser(text).parse();
}

std::string to_string(const LabelledProgram& p) {
    std::ostringstream out;
    for (const auto& r : p.rules) {
        if (r.is_fact() && r.label && *r.label == r.head) {
            out << r.head << ".\n";
            continue;
        }
        if (r.label) out << *r.label << ": ";
        out << r.head;
        if (!r.body.empty() || !r.negative.empty()) {
            out << " :- ";
            bool first = true;
            for (const auto& b : r.body) {
                if (!first) out << ", ";
                first = false;
                if (const Atom* a = std::get_if<Atom>(&b))
                    out << *a;
                else
                    out << "(" << to_string(std::get<CausalValue>(b)) << ")";
            }
            for (const auto& c : r.negative) {
                if (!first) out << ", ";
                first = false;
                out << "not " << c;
            }
        }
        out << ".\n";
    }
    return out.str();
}

std::vector<Diagnostic> validate(const LabelledProgram& p) {
    std::vector<Diagnostic> out;
    std::map<Label, int> first_line;
    for (const auto& r : p.rules) {
        if (!r.label) continue;
        auto [it, fresh] = first_line.emplace(*r.label, r.line);
        if (!fresh) {
            out.push_back({"duplicate-label",
                           "label '" + *r.label + "' already used on line " +
                               std::to_string(it->second),
                           r.line});
        }
    }
    return out;
}

LabelledProgram remove_rules_labelled(const LabelledProgram& p, const Label& l) {
    LabelledProgram q;
    for (const auto& r : p.rules)
        if (!r.label || *r.label != l) q.add_rule(r);
    q.atoms = p.atoms;  // keep the signature
    return q;
}

LabelledProgram with_fact(const LabelledProgram& p, const Atom& a) {
    LabelledProgram q = p;
    if (!q.has_fact(a)) q.add_rule(make_rule(a, a, {}, {}));
    return q;
}

}  // namespace ecj

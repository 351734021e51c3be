#pragma once

#include <cstddef>
#include <string>

namespace ecj::detail {

inline bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '-';
}

inline bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '_' || c == '(' ||
           c == ')' || c == ',';
}

/// Scans an identifier at `pos`. Atom and label tokens may embed argument
/// tuples, so ',' and ')' belong to the token only while inside an open
/// '(' of the same token; otherwise they end it.
inline std::string lex_ident(const std::string& text, std::size_t& pos) {
    std::string out;
    int depth = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (!ident_char(c)) break;
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            if (depth == 0) break;
            --depth;
        } else if (c == ',') {
            if (depth == 0) break;
        }
        out.push_back(c);
        ++pos;
    }
    return out;
}

}  // namespace ecj::detail

#pragma once

#include <string>
#include <vector>

#include "lcf/syntax.hpp"

namespace lcf::detail {

struct Token {
    enum class Kind { Ident, Sym, End };
    Kind kind;
    std::string text;  // Unicode aliases already mapped to their ASCII spelling
    SourceSpan span;
};

std::vector<Token> lex(const std::string& src, const std::string& file);

bool isKeyword(const std::string& s);
bool isIdentStart(char c);
bool isIdentChar(char c);

}  // namespace lcf::detail

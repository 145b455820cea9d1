#include "lexer.hpp"

#include <array>
#include <cctype>

namespace lcf::detail {

namespace {

struct Alias {
    const char* utf8;
    const char* ascii;
    Token::Kind kind;
};

const std::array<Alias, 13> aliases = {{
    {"∀", "forall", Token::Kind::Ident},
    {"∃", "exists", Token::Kind::Ident},
    {"λ", "fun", Token::Kind::Ident},
    {"¬", "~", Token::Kind::Sym},
    {"∧", "/\\", Token::Kind::Sym},
    {"∨", "\\/", Token::Kind::Sym},
    {"→", "->", Token::Kind::Sym},
    {"∈", "in", Token::Kind::Ident},
    {"⊆", "subseteq", Token::Kind::Ident},
    {"∅", "emptyset", Token::Kind::Ident},
    {"\U0001D4AB", "Pow", Token::Kind::Ident},
    {"ℙ", "P", Token::Kind::Ident},
    {"\U0001D4B0", "U", Token::Kind::Ident},
}};

const std::array<const char*, 9> symbols = {"->", "=>", "/\\", "\\/", "(", ")", ":", ".", ","};

}  // namespace

bool isKeyword(const std::string& s) {
    return s == "forall" || s == "exists" || s == "fun" || s == "in" || s == "subseteq" || s == "by" ||
           s == "const" || s == "axiom" || s == "let" || s == "theorem";
}

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

std::vector<Token> lex(const std::string& src, const std::string& file) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1, col = 1;
    auto span = [&](int l0, int c0) { return SourceSpan{file, l0, c0, line, col}; };
    auto advance = [&](std::size_t bytes, int cols) {
        i += bytes;
        col += cols;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1, 1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        int l0 = line, c0 = col;
        if (isIdentStart(c)) {
            std::size_t j = i;
            while (j < src.size() && isIdentChar(src[j])) ++j;
            std::string text = src.substr(i, j - i);
            advance(j - i, static_cast<int>(j - i));
            out.push_back({Token::Kind::Ident, text, span(l0, c0)});
            continue;
        }
        bool matched = false;
        for (const auto& a : aliases) {
            std::string u = a.utf8;
            if (src.compare(i, u.size(), u) == 0) {
                advance(u.size(), 1);
                out.push_back({a.kind, a.ascii, span(l0, c0)});
                matched = true;
                break;
            }
        }
        if (matched) continue;
        for (const char* s : symbols) {
            std::string sym = s;
            if (src.compare(i, sym.size(), sym) == 0) {
                advance(sym.size(), static_cast<int>(sym.size()));
                out.push_back({Token::Kind::Sym, sym, span(l0, c0)});
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (c == '=' || c == '~' || c == '[' || c == ']' || c == '\'') {
            advance(1, 1);
            out.push_back({Token::Kind::Sym, std::string(1, c), span(l0, c0)});
            continue;
        }
        int cols = 1;
        std::size_t bytes = 1;
        if (static_cast<unsigned char>(c) >= 0x80) {
            unsigned char u = static_cast<unsigned char>(c);
            bytes = u >= 0xF0 ? 4 : u >= 0xE0 ? 3 : 2;
        }
        std::string bad = src.substr(i, bytes);
        advance(bytes, cols);
        throw ParseError(span(l0, c0), "unexpected character '" + bad + "'");
    }
    out.push_back({Token::Kind::End, "", SourceSpan{file, line, col, line, col}});
    return out;
}

}  // namespace lcf::detail

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tptl/formula.hpp"

namespace tptl {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// ============================================================================
// Lexer shared by the TPTL and MITL front ends
// ============================================================================

enum class Tok {
    Ident,
    Number,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Dot,
    Bang,
    Amp,
    Bar,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Minus,
    End
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(const std::string& text);

/// Words with fixed meaning in the grammar; not usable as atoms or clocks.
bool is_reserved(const std::string& word);

/// Parses the ASCII TPTL grammar. `!` may be applied to any subformula and
/// is pushed down to atoms.
Formula parse_tptl(const std::string& text);

}  // namespace tptl

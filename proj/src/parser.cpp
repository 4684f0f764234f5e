#include "tptl/parser.hpp"

#include <cctype>
#include <limits>

namespace tptl {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

bool is_reserved(const std::string& w) {
    return w == "U" || w == "G" || w == "F" || w == "X" || w == "T" || w == "true" || w == "false" ||
           w == "in" || w == "inf";
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string s, int c) { out.push_back({k, std::move(s), line, c}); };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            ++col;
            continue;
        }
        int start = col;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            push(Tok::Ident, text.substr(i, j - i), start);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) {
                // a '.' only belongs to the number when a digit follows
                if (text[j] == '.' && !(j + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[j + 1]))))
                    break;
                ++j;
            }
            push(Tok::Number, text.substr(i, j - i), start);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        auto two = [&](char next) { return i + 1 < text.size() && text[i + 1] == next; };
        switch (ch) {
            case '(': push(Tok::LParen, "(", start); break;
            case ')': push(Tok::RParen, ")", start); break;
            case '[': push(Tok::LBracket, "[", start); break;
            case ']': push(Tok::RBracket, "]", start); break;
            case '{': push(Tok::LBrace, "{", start); break;
            case '}': push(Tok::RBrace, "}", start); break;
            case ',': push(Tok::Comma, ",", start); break;
            case '.': push(Tok::Dot, ".", start); break;
            case '!': push(Tok::Bang, "!", start); break;
            case '&':
                if (two('&')) {
                    ++i;
                    ++col;
                }
                push(Tok::Amp, "&", start);
                break;
            case '|':
                if (two('|')) {
                    ++i;
                    ++col;
                }
                push(Tok::Bar, "|", start);
                break;
            case '-': push(Tok::Minus, "-", start); break;
            case '=':
                if (two('=')) {
                    ++i;
                    ++col;
                }
                push(Tok::Eq, "=", start);
                break;
            case '<':
                if (two('=')) {
                    ++i;
                    ++col;
                    push(Tok::Le, "<=", start);
                } else {
                    push(Tok::Lt, "<", start);
                }
                break;
            case '>':
                if (two('=')) {
                    ++i;
                    ++col;
                    push(Tok::Ge, ">=", start);
                } else {
                    push(Tok::Gt, ">", start);
                }
                break;
            default: throw ParseError(std::string("unexpected character '") + ch + "'", line, start);
        }
        ++i;
        ++col;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    Formula parse() {
        Formula f = parse_or();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        advance();
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }
    void expect(Tok k, const char* what) {
        if (!accept(k)) fail(std::string("expected ") + what + (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
    }
    bool at_keyword(const char* kw, std::size_t k = 0) const {
        return peek(k).kind == Tok::Ident && peek(k).text == kw;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (accept(Tok::Bar)) f = Formula::disj(f, parse_and());
        return f;
    }

    Formula parse_and() {
        Formula f = parse_until();
        while (accept(Tok::Amp)) f = Formula::conj(f, parse_until());
        return f;
    }

    Formula parse_until() {
        Formula f = parse_unary();
        if (at_keyword("U")) {
            advance();
            f = Formula::until(f, parse_unary());
            if (at_keyword("U")) fail("nested U requires parentheses");
        }
        return f;
    }

    std::int64_t parse_number() {
        const Token& t = peek();
        if (t.kind != Tok::Number) fail("expected an integer constant");
        if (t.text.find('.') != std::string::npos) fail("constants must be integers");
        advance();
        try {
            return std::stoll(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError("constant out of range", t.line, t.column);
        }
    }

    Interval parse_interval() {
        bool lc;
        if (accept(Tok::LBracket)) {
            lc = true;
        } else if (accept(Tok::LParen)) {
            lc = false;
        } else {
            fail("expected '[' or '(' opening an interval");
        }
        std::int64_t l = parse_number();
        expect(Tok::Comma, "','");
        std::optional<std::int64_t> u;
        if (at_keyword("inf")) {
            advance();
        } else {
            u = parse_number();
        }
        bool uc;
        const Token& close = peek();
        if (accept(Tok::RBracket)) {
            uc = true;
        } else if (accept(Tok::RParen)) {
            uc = false;
        } else {
            fail("expected ']' or ')' closing an interval");
        }
        if (!u && uc) throw ParseError("malformed interval: infinite endpoint must be open", close.line, close.column);
        if (u && *u < l) throw ParseError("malformed interval: lower endpoint exceeds upper", close.line, close.column);
        return Interval(l, u, lc, uc);
    }

    Formula parse_constraint_rest(const std::string& clock) {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Le: advance(); return Formula::constraint(clock, Interval::at_most(parse_number()));
            case Tok::Lt: advance(); return Formula::constraint(clock, Interval::below(parse_number()));
            case Tok::Ge: advance(); return Formula::constraint(clock, Interval::at_least(parse_number()));
            case Tok::Gt: advance(); return Formula::constraint(clock, Interval::above(parse_number()));
            case Tok::Eq: {
                advance();
                std::int64_t k = parse_number();
                return Formula::constraint(clock, Interval::closed(k, k));
            }
            default:
                if (at_keyword("in")) {
                    advance();
                    return Formula::constraint(clock, parse_interval());
                }
                fail("expected a comparison or 'in' after clock '" + clock + "'");
        }
    }

    std::string parse_name(const char* what) {
        const Token& t = peek();
        if (t.kind != Tok::Ident) fail(std::string("expected ") + what);
        if (is_reserved(t.text)) fail("reserved word '" + t.text + "' used as " + what);
        advance();
        return t.text;
    }

    Formula parse_unary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Bang: advance(); return negate(parse_unary());
            case Tok::LParen: {
                advance();
                Formula f = parse_or();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::LBrace: {
                advance();
                ClockSet ys{parse_name("clock")};
                while (accept(Tok::Comma)) ys.push_back(parse_name("clock"));
                expect(Tok::RBrace, "'}'");
                expect(Tok::Dot, "'.' after freeze clocks");
                return Formula::freeze(ys, parse_unary());
            }
            case Tok::Ident: break;
            case Tok::End: fail("unexpected end of input");
            default: fail("unexpected '" + t.text + "'");
        }
        const std::string& w = t.text;
        if (w == "true") {
            advance();
            return Formula::top();
        }
        if (w == "false") {
            advance();
            return Formula::bottom();
        }
        if (w == "G" || w == "F" || w == "X") {
            advance();
            Formula c = parse_unary();
            if (w == "G") return Formula::globally(c);
            if (w == "F") return Formula::finally(c);
            return Formula::next(c);
        }
        if (w == "T") {
            advance();
            if (peek().kind != Tok::Minus) fail("'T' may only appear as 'T - x' inside a constraint");
            advance();
            std::string clock = parse_name("clock");
            return parse_constraint_rest(clock);
        }
        if (is_reserved(w)) fail("unexpected reserved word '" + w + "'");
        std::string name = w;
        advance();
        if (accept(Tok::Dot)) return Formula::freeze(name, parse_unary());
        switch (peek().kind) {
            case Tok::Le:
            case Tok::Lt:
            case Tok::Ge:
            case Tok::Gt:
            case Tok::Eq: return parse_constraint_rest(name);
            default:
                if (at_keyword("in")) return parse_constraint_rest(name);
        }
        return Formula::atom(name);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_tptl(const std::string& text) { return Parser(text).parse(); }

}  // namespace tptl

#include "tptl/mitl.hpp"

#include <unordered_map>

#include "tptl/errors.hpp"
#include "tptl/parser.hpp"

namespace tptl {

// ============================================================================
// AST
// ============================================================================

MitlFormula MitlFormula::make(MitlOp op, std::string name, Interval i, std::vector<MitlFormula> kids) {
    return MitlFormula(std::make_shared<const MitlNode>(MitlNode{op, std::move(name), i, std::move(kids)}));
}

MitlFormula MitlFormula::atom(std::string a) { return make(MitlOp::Atom, std::move(a), {}, {}); }
MitlFormula MitlFormula::top() { return make(MitlOp::Top, {}, {}, {}); }
MitlFormula MitlFormula::negation(MitlFormula c) { return make(MitlOp::Not, {}, {}, {std::move(c)}); }
MitlFormula MitlFormula::conj(MitlFormula l, MitlFormula r) {
    return make(MitlOp::And, {}, {}, {std::move(l), std::move(r)});
}
MitlFormula MitlFormula::disj(MitlFormula l, MitlFormula r) {
    return make(MitlOp::Or, {}, {}, {std::move(l), std::move(r)});
}
MitlFormula MitlFormula::until(Interval i, MitlFormula l, MitlFormula r) {
    return make(MitlOp::Until, {}, i, {std::move(l), std::move(r)});
}
MitlFormula MitlFormula::finally(Interval i, MitlFormula c) { return make(MitlOp::Finally, {}, i, {std::move(c)}); }
MitlFormula MitlFormula::globally(Interval i, MitlFormula c) {
    return make(MitlOp::Globally, {}, i, {std::move(c)});
}

MitlOp MitlFormula::op() const { return node_->op; }
const std::string& MitlFormula::name() const { return node_->name; }
const Interval& MitlFormula::interval() const { return node_->interval; }
const std::vector<MitlFormula>& MitlFormula::kids() const { return node_->kids; }

namespace {

std::string suffix(const Interval& i) { return i.is_everything() ? "" : i.to_string(); }

enum Level { LOr = 0, LAnd = 1, LUntil = 2, LUnary = 3 };

Level level_of(const MitlFormula& f) {
    switch (f.op()) {
        case MitlOp::Or: return LOr;
        case MitlOp::And: return LAnd;
        case MitlOp::Until: return LUntil;
        default: return LUnary;
    }
}

std::string print(const MitlFormula& f, Level need) {
    std::string s;
    auto unary = [](const std::string& prefix, const MitlFormula& c) {
        if (level_of(c) < LUnary) return prefix + "(" + print(c, LOr) + ")";
        return prefix + " " + print(c, LUnary);
    };
    switch (f.op()) {
        case MitlOp::Atom: s = f.name(); break;
        case MitlOp::Top: s = "true"; break;
        case MitlOp::Not: s = level_of(f.child()) < LUnary ? "!(" + print(f.child(), LOr) + ")" : "!" + print(f.child(), LUnary); break;
        case MitlOp::And: s = print(f.lhs(), LAnd) + " & " + print(f.rhs(), LUntil); break;
        case MitlOp::Or: s = print(f.lhs(), LOr) + " | " + print(f.rhs(), LAnd); break;
        case MitlOp::Until: s = print(f.lhs(), LUnary) + " U" + suffix(f.interval()) + " " + print(f.rhs(), LUnary); break;
        case MitlOp::Finally: s = unary("F" + suffix(f.interval()), f.child()); break;
        case MitlOp::Globally: s = unary("G" + suffix(f.interval()), f.child()); break;
    }
    return level_of(f) < need ? "(" + s + ")" : s;
}

}  // namespace

std::string MitlFormula::to_string() const { return print(*this, LOr); }

// ============================================================================
// Parser
// ============================================================================

namespace {

class MitlParser {
public:
    explicit MitlParser(const std::string& text) : toks_(tokenize(text)) {}

    MitlFormula parse() {
        MitlFormula f = parse_or();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    void advance() {
        if (pos_ < toks_.size() - 1) ++pos_;
    }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        advance();
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }
    bool at_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

    MitlFormula parse_or() {
        MitlFormula f = parse_and();
        while (accept(Tok::Bar)) f = MitlFormula::disj(f, parse_and());
        return f;
    }
    MitlFormula parse_and() {
        MitlFormula f = parse_until();
        while (accept(Tok::Amp)) f = MitlFormula::conj(f, parse_until());
        return f;
    }
    MitlFormula parse_until() {
        MitlFormula f = parse_unary();
        if (at_keyword("U")) {
            advance();
            Interval i = parse_suffix();
            f = MitlFormula::until(i, f, parse_unary());
            if (at_keyword("U")) fail("nested U requires parentheses");
        }
        return f;
    }

    std::int64_t bound() {
        const Token& t = peek();
        if (t.kind != Tok::Number) fail("expected an interval bound");
        if (t.text.find('.') != std::string::npos)
            throw NonIntegerBound("line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                                  ": interval bound '" + t.text + "' is not an integer");
        advance();
        return std::stoll(t.text);
    }

    // An interval follows directly when '[' or '(' is followed by a number.
    Interval parse_suffix() {
        bool bracket = peek().kind == Tok::LBracket;
        bool paren = peek().kind == Tok::LParen && peek(1).kind == Tok::Number;
        if (!bracket && !paren) return Interval::everything();
        advance();
        std::int64_t l = bound();
        if (!accept(Tok::Comma)) fail("expected ','");
        std::optional<std::int64_t> u;
        if (at_keyword("inf")) {
            advance();
        } else {
            u = bound();
        }
        bool uc;
        if (accept(Tok::RBracket)) {
            uc = true;
        } else if (accept(Tok::RParen)) {
            uc = false;
        } else {
            fail("expected ']' or ')'");
        }
        if (!u && uc) fail("infinite endpoint must be open");
        if (u && *u < l) fail("lower endpoint exceeds upper");
        Interval i(l, u, bracket, uc);
        if (interval_class(i) == IntervalClass::Punctual || i.is_empty())
            throw PunctualInterval("punctual interval " + i.to_string() + " is outside MITL");
        return i;
    }

    MitlFormula parse_unary() {
        const Token& t = peek();
        if (accept(Tok::Bang)) return MitlFormula::negation(parse_unary());
        if (accept(Tok::LParen)) {
            MitlFormula f = parse_or();
            if (!accept(Tok::RParen)) fail("expected ')'");
            return f;
        }
        if (t.kind != Tok::Ident) fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
        std::string w = t.text;
        advance();
        if (w == "true") return MitlFormula::top();
        if (w == "false") return MitlFormula::negation(MitlFormula::top());
        if (w == "F" || w == "G") {
            Interval i = parse_suffix();
            MitlFormula c = parse_unary();
            return w == "F" ? MitlFormula::finally(i, c) : MitlFormula::globally(i, c);
        }
        if (is_reserved(w)) fail("unexpected reserved word '" + w + "'");
        return MitlFormula::atom(w);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

MitlFormula parse_mitl(const std::string& text) { return MitlParser(text).parse(); }

// ============================================================================
// Semantics
// ============================================================================

namespace {

class MitlEvaluator {
public:
    explicit MitlEvaluator(const TimedWord& w) : w_(w) {}

    bool eval(std::size_t i, const MitlFormula& f) {
        switch (f.op()) {
            case MitlOp::Atom: return w_.at(i).symbol == f.name();
            case MitlOp::Top: return true;
            case MitlOp::Not: return !eval(i, f.child());
            case MitlOp::And: return eval(i, f.lhs()) && eval(i, f.rhs());
            case MitlOp::Or: return eval(i, f.lhs()) || eval(i, f.rhs());
            default: break;
        }
        auto key = std::make_pair(f.node(), i);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool r = modal(i, f);
        memo_[key] = r;
        return r;
    }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<const MitlNode*, std::size_t>& k) const noexcept {
            return std::hash<const void*>{}(k.first) * 31 + k.second;
        }
    };

    bool modal(std::size_t i, const MitlFormula& f) {
        const Interval& iv = f.interval();
        const Rational& ti = w_.at(i).time;
        switch (f.op()) {
            case MitlOp::Until:
                for (std::size_t j = i + 1; j <= w_.size(); ++j) {
                    if (iv.contains(w_.at(j).time - ti) && eval(j, f.rhs())) return true;
                    if (!eval(j, f.lhs())) return false;
                }
                return false;
            case MitlOp::Finally:
                for (std::size_t j = i + 1; j <= w_.size(); ++j)
                    if (iv.contains(w_.at(j).time - ti) && eval(j, f.child())) return true;
                return false;
            case MitlOp::Globally:
                for (std::size_t j = i + 1; j <= w_.size(); ++j)
                    if (iv.contains(w_.at(j).time - ti) && !eval(j, f.child())) return false;
                return true;
            default: throw std::logic_error("not a modality");
        }
    }

    const TimedWord& w_;
    std::unordered_map<std::pair<const MitlNode*, std::size_t>, bool, KeyHash> memo_;
};

}  // namespace

bool eval_mitl(const TimedWord& w, std::size_t pos, const MitlFormula& f) {
    w.at(pos);
    return MitlEvaluator(w).eval(pos, f);
}

// ============================================================================
// Translations
// ============================================================================

namespace {

const std::string kClock = "x";

Formula within(const Formula& body, const Interval& i) {
    return Formula::mk_and(body, Formula::constraint(kClock, i));
}

// x.F(phi & x in I), or F phi when I is [0,inf)
Formula eventually_in(const Interval& i, const Formula& phi) {
    if (i.is_everything()) return Formula::finally(phi);
    return Formula::freeze(kClock, Formula::finally(within(phi, i)));
}

Formula always_in(const Interval& i, const Formula& phi) { return negate(eventually_in(i, negate(phi))); }

// Intervals a single freeze and constraint can express without mixing sides.
bool direct(const Interval& i) { return i.is_ge_type() || (i.lower == 0 && i.lower_closed); }

// [0,a) or [0,a]: the delays that come before the lower end of i.
Interval before(const Interval& i) { return Interval(0, i.lower, true, !i.lower_closed); }

// (not app) U (app & ... (not app) U (app & tail)), n layers
Formula nest(int n, const Formula& app, const Formula& tail) {
    if (n == 0) return tail;
    return Formula::until(negate(app), Formula::mk_and(app, nest(n - 1, app, tail)));
}

// F_P phi for a piece P = <a,a+1> that does not start at a closed 0.
Formula eventually_piece(const Interval& p, const Formula& phi) {
    if (direct(p)) return eventually_in(p, phi);
    const std::int64_t a = p.lower;
    const Interval pre = before(p);
    const Interval upto(0, *p.upper, true, p.upper_closed);
    const Formula app = approach_formula(phi);

    Formula phi0 = eventually_in(Interval(a, std::nullopt, p.lower_closed, false), phi);
    Formula phi1 = Formula::mk_and(negate(eventually_in(pre, phi)), eventually_in(upto, phi));

    auto at_least = [&](int n) { return Formula::freeze(kClock, nest(n, app, Formula::constraint(kClock, pre))); };
    auto count = [&](int n) {
        Formula more = negate(at_least(n + 1));
        return n == 0 ? more : Formula::mk_and(at_least(n), more);
    };
    Formula phi2 = Formula::mk_and(count(0), eventually_in(pre, phi));

    // approach points in pre are a unit apart, so there are at most this many
    const int most = static_cast<int>(p.lower_closed ? a : a + 1);
    std::vector<Formula> cases;
    for (int n = 1; n <= most; ++n) {
        Formula gamma = Formula::freeze(kClock, nest(n, app, Formula::finally(within(phi, upto))));
        cases.push_back(Formula::mk_and(count(n), gamma));
    }
    Formula phi3 = Formula::mk_or(cases);
    return Formula::mk_and(phi0, Formula::mk_or({phi1, phi2, phi3}));
}

// F_I phi for bounded I, split into unit pieces
Formula eventually_bounded(const Interval& i, const Formula& phi) {
    const std::int64_t l = i.lower;
    const std::int64_t u = *i.upper;
    if (u - l <= 1) return eventually_piece(i, phi);
    std::vector<Formula> parts;
    parts.push_back(eventually_piece(Interval(l, l + 1, i.lower_closed, false), phi));
    for (std::int64_t k = l + 1; k + 1 < u; ++k) parts.push_back(eventually_piece(Interval(k, k + 1, true, false), phi));
    parts.push_back(eventually_piece(Interval(u - 1, u, true, i.upper_closed), phi));
    return Formula::mk_or(parts);
}

Formula eventually_any(const Interval& i, const Formula& phi) {
    return direct(i) ? eventually_in(i, phi) : eventually_bounded(i, phi);
}

Formula to0inf(const MitlFormula& f) {
    switch (f.op()) {
        case MitlOp::Atom: return Formula::atom(f.name());
        case MitlOp::Top: return Formula::top();
        case MitlOp::Not: return negate(to0inf(f.child()));
        case MitlOp::And: return Formula::mk_and(to0inf(f.lhs()), to0inf(f.rhs()));
        case MitlOp::Or: return Formula::mk_or(to0inf(f.lhs()), to0inf(f.rhs()));
        default: break;
    }
    const Interval& i = f.interval();
    if (interval_class(i) == IntervalClass::Punctual || i.is_empty())
        throw PunctualInterval("punctual interval " + i.to_string() + " is outside MITL");
    switch (f.op()) {
        case MitlOp::Until: {
            Formula a = to0inf(f.lhs());
            Formula b = to0inf(f.rhs());
            if (i.is_everything()) return Formula::until(a, b);
            if (direct(i)) return Formula::freeze(kClock, Formula::until(a, within(b, i)));
            Formula plain = Formula::until(a, b);
            return Formula::mk_and({always_in(before(i), Formula::mk_and(a, plain)), plain, eventually_bounded(i, b)});
        }
        case MitlOp::Finally: return eventually_any(i, to0inf(f.child()));
        case MitlOp::Globally: return negate(eventually_any(i, negate(to0inf(f.child()))));
        default: throw std::logic_error("unhandled MITL operator");
    }
}

Formula naive(const MitlFormula& f) {
    switch (f.op()) {
        case MitlOp::Atom: return Formula::atom(f.name());
        case MitlOp::Top: return Formula::top();
        case MitlOp::Not: return negate(naive(f.child()));
        case MitlOp::And: return Formula::conj(naive(f.lhs()), naive(f.rhs()));
        case MitlOp::Or: return Formula::disj(naive(f.lhs()), naive(f.rhs()));
        case MitlOp::Until:
            return Formula::freeze(kClock, Formula::until(naive(f.lhs()), within(naive(f.rhs()), f.interval())));
        case MitlOp::Finally:
            return Formula::freeze(kClock, Formula::until(Formula::top(), within(naive(f.child()), f.interval())));
        case MitlOp::Globally: {
            Formula ev = Formula::freeze(kClock, Formula::until(Formula::top(), within(negate(naive(f.child())), f.interval())));
            return negate(ev);
        }
    }
    throw std::logic_error("unhandled MITL operator");
}

}  // namespace

Formula approach_formula(const Formula& phi) {
    return Formula::mk_and(phi, negate(eventually_in(Interval::below(1), phi)));
}

Formula mtl_to_tptl(const MitlFormula& f) { return naive(f); }

Formula mitl_to_tptl0inf(const MitlFormula& f) { return to0inf(f); }

}  // namespace tptl

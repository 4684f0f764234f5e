#include "tptl/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tptl {

ClockSet clock_union(const ClockSet& a, const ClockSet& b) {
    ClockSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

static ClockSet clock_minus(const ClockSet& a, const ClockSet& b) {
    ClockSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Formula Formula::make(FormulaNode n) {
    switch (n.op) {
        case Op::Constraint: n.free_clocks = {n.name}; break;
        case Op::Freeze: n.free_clocks = clock_minus(n.kids[0].free_clocks(), n.clocks); break;
        default:
            for (const auto& k : n.kids) n.free_clocks = clock_union(n.free_clocks, k.free_clocks());
    }
    return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

Formula Formula::atom(std::string a) { return make({Op::Atom, std::move(a), {}, {}, {}, {}}); }
Formula Formula::neg_atom(std::string a) { return make({Op::NegAtom, std::move(a), {}, {}, {}, {}}); }
Formula Formula::top() {
    static const Formula t = make({Op::Top, {}, {}, {}, {}, {}});
    return t;
}
Formula Formula::bottom() {
    static const Formula b = make({Op::Bottom, {}, {}, {}, {}, {}});
    return b;
}
Formula Formula::freeze(ClockSet ys, Formula child) {
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    if (ys.empty()) throw std::invalid_argument("freeze over an empty clock set");
    return make({Op::Freeze, {}, std::move(ys), {}, {std::move(child)}, {}});
}
Formula Formula::constraint(std::string clock, Interval i) {
    return make({Op::Constraint, std::move(clock), {}, i, {}, {}});
}
Formula Formula::conj(Formula l, Formula r) { return make({Op::And, {}, {}, {}, {std::move(l), std::move(r)}, {}}); }
Formula Formula::disj(Formula l, Formula r) { return make({Op::Or, {}, {}, {}, {std::move(l), std::move(r)}, {}}); }
Formula Formula::until(Formula l, Formula r) { return make({Op::Until, {}, {}, {}, {std::move(l), std::move(r)}, {}}); }
Formula Formula::globally(Formula c) { return make({Op::Globally, {}, {}, {}, {std::move(c)}, {}}); }
Formula Formula::next(Formula c) { return make({Op::Next, {}, {}, {}, {std::move(c)}, {}}); }
Formula Formula::finally(Formula c) { return make({Op::Finally, {}, {}, {}, {std::move(c)}, {}}); }

Formula Formula::mk_and(Formula l, Formula r) {
    if (l.op() == Op::Bottom || r.op() == Op::Bottom) return bottom();
    if (l.op() == Op::Top) return r;
    if (r.op() == Op::Top) return l;
    return conj(std::move(l), std::move(r));
}

Formula Formula::mk_or(Formula l, Formula r) {
    if (l.op() == Op::Top || r.op() == Op::Top) return top();
    if (l.op() == Op::Bottom) return r;
    if (r.op() == Op::Bottom) return l;
    return disj(std::move(l), std::move(r));
}

Formula Formula::mk_and(const std::vector<Formula>& parts) {
    Formula acc = top();
    for (const auto& p : parts) acc = mk_and(acc, p);
    return acc;
}

Formula Formula::mk_or(const std::vector<Formula>& parts) {
    Formula acc = bottom();
    for (const auto& p : parts) acc = mk_or(acc, p);
    return acc;
}

bool Formula::is_temporal() const {
    switch (op()) {
        case Op::Until:
        case Op::Globally:
        case Op::Next:
        case Op::Finally: return true;
        default: return false;
    }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const FormulaNode& x = *a.node_;
    const FormulaNode& y = *b.node_;
    if (auto c = static_cast<int>(x.op) <=> static_cast<int>(y.op); c != 0) return c;
    if (auto c = x.name <=> y.name; c != 0) return c;
    if (auto c = x.clocks <=> y.clocks; c != 0) return c;
    if (x.op == Op::Constraint) {
        if (x.interval < y.interval) return std::strong_ordering::less;
        if (y.interval < x.interval) return std::strong_ordering::greater;
    }
    if (auto c = x.kids.size() <=> y.kids.size(); c != 0) return c;
    for (std::size_t i = 0; i < x.kids.size(); ++i)
        if (auto c = x.kids[i] <=> y.kids[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

std::string to_string(Op op) {
    switch (op) {
        case Op::Atom: return "Atom";
        case Op::NegAtom: return "NegAtom";
        case Op::Top: return "Top";
        case Op::Bottom: return "Bottom";
        case Op::Freeze: return "Freeze";
        case Op::Constraint: return "Constraint";
        case Op::And: return "And";
        case Op::Or: return "Or";
        case Op::Until: return "Until";
        case Op::Globally: return "Globally";
        case Op::Next: return "Next";
        case Op::Finally: return "Finally";
    }
    return "?";
}

// ============================================================================
// Printer
// ============================================================================

namespace {

// binding strength: Or < And < Until < unary
enum Level { LOr = 0, LAnd = 1, LUntil = 2, LUnary = 3 };

Level level_of(const Formula& f) {
    switch (f.op()) {
        case Op::Or: return LOr;
        case Op::And: return LAnd;
        case Op::Until: return LUntil;
        default: return LUnary;
    }
}

std::string constraint_text(const std::string& x, const Interval& i) {
    if (i.lower == 0 && i.lower_closed && i.upper) return x + (i.upper_closed ? " <= " : " < ") + std::to_string(*i.upper);
    if (!i.upper) return x + (i.lower_closed ? " >= " : " > ") + std::to_string(i.lower);
    return x + " in " + i.to_string();
}

std::string print(const Formula& f, Level need);

std::string print_unary_operand(const std::string& prefix, const Formula& c) {
    if (level_of(c) < LUnary) return prefix + "(" + print(c, LOr) + ")";
    return prefix + " " + print(c, LUnary);
}

std::string print(const Formula& f, Level need) {
    std::string s;
    switch (f.op()) {
        case Op::Atom: s = f.name(); break;
        case Op::NegAtom: s = "!" + f.name(); break;
        case Op::Top: s = "true"; break;
        case Op::Bottom: s = "false"; break;
        case Op::Constraint: s = constraint_text(f.clock(), f.interval()); break;
        case Op::Freeze: {
            std::string q;
            if (f.clocks().size() == 1) {
                q = f.clocks()[0] + ".";
            } else {
                q = "{";
                for (std::size_t i = 0; i < f.clocks().size(); ++i) q += (i ? "," : "") + f.clocks()[i];
                q += "}.";
            }
            const Formula& c = f.child();
            s = level_of(c) < LUnary ? q + "(" + print(c, LOr) + ")" : q + print(c, LUnary);
            break;
        }
        case Op::And: s = print(f.lhs(), LAnd) + " & " + print(f.rhs(), LUntil); break;
        case Op::Or: s = print(f.lhs(), LOr) + " | " + print(f.rhs(), LAnd); break;
        case Op::Until: s = print(f.lhs(), LUnary) + " U " + print(f.rhs(), LUnary); break;
        case Op::Globally: s = print_unary_operand("G", f.child()); break;
        case Op::Finally: s = print_unary_operand("F", f.child()); break;
        case Op::Next: s = print_unary_operand("X", f.child()); break;
    }
    if (level_of(f) < need) return "(" + s + ")";
    return s;
}

void collect(const Formula& f, std::set<std::string>* atoms, std::set<std::string>* clocks,
             std::int64_t* cmax, std::size_t* ncons) {
    switch (f.op()) {
        case Op::Atom:
        case Op::NegAtom:
            if (atoms) atoms->insert(f.name());
            break;
        case Op::Constraint:
            if (clocks) clocks->insert(f.clock());
            if (cmax) *cmax = std::max(*cmax, f.interval().max_constant());
            if (ncons) ++*ncons;
            break;
        case Op::Freeze:
            if (clocks) clocks->insert(f.clocks().begin(), f.clocks().end());
            break;
        default: break;
    }
    for (const auto& k : f.kids()) collect(k, atoms, clocks, cmax, ncons);
}

}  // namespace

std::string Formula::to_string() const { return print(*this, LOr); }

std::set<std::string> atoms_of(const Formula& f) {
    std::set<std::string> out;
    collect(f, &out, nullptr, nullptr, nullptr);
    return out;
}

std::set<std::string> clocks_of(const Formula& f) {
    std::set<std::string> out;
    collect(f, nullptr, &out, nullptr, nullptr);
    return out;
}

std::int64_t max_constant(const Formula& f) {
    std::int64_t c = 0;
    collect(f, nullptr, nullptr, &c, nullptr);
    return c;
}

std::size_t constraint_count(const Formula& f) {
    std::size_t n = 0;
    collect(f, nullptr, nullptr, nullptr, &n);
    return n;
}

std::size_t formula_size(const Formula& f) {
    std::size_t bm = 0;
    auto walk = [&](auto&& self, const Formula& g) -> void {
        switch (g.op()) {
            case Op::And:
            case Op::Or:
            case Op::NegAtom:
            case Op::Until:
            case Op::Globally:
            case Op::Next:
            case Op::Finally: ++bm; break;
            case Op::Freeze: bm += g.clocks().size(); break;
            default: break;
        }
        for (const auto& k : g.kids()) self(self, k);
    };
    walk(walk, f);
    std::size_t n = constraint_count(f);
    if (n == 0) return bm;
    std::int64_t c = max_constant(f);
    std::size_t bits = 1;
    while (c > 1) {
        c >>= 1;
        ++bits;
    }
    return bm + n * 2 * bits;
}

namespace {

// Memoized on node identity so shared subformulas stay shared.
Formula negate_rec(const Formula& f, std::unordered_map<const FormulaNode*, Formula>& memo) {
    if (auto it = memo.find(f.node()); it != memo.end()) return it->second;
    auto neg = [&](const Formula& g) { return negate_rec(g, memo); };
    Formula r = [&]() -> Formula {
        switch (f.op()) {
            case Op::Atom: return Formula::neg_atom(f.name());
            case Op::NegAtom: return Formula::atom(f.name());
            case Op::Top: return Formula::bottom();
            case Op::Bottom: return Formula::top();
            case Op::Freeze: return Formula::freeze(f.clocks(), neg(f.child()));
            case Op::Constraint: {
                std::vector<Formula> parts;
                for (const auto& piece : f.interval().complement())
                    parts.push_back(Formula::constraint(f.clock(), piece));
                return Formula::mk_or(parts);
            }
            case Op::And: return Formula::mk_or(neg(f.lhs()), neg(f.rhs()));
            case Op::Or: return Formula::mk_and(neg(f.lhs()), neg(f.rhs()));
            case Op::Until: {
                Formula n1 = neg(f.lhs());
                Formula n2 = neg(f.rhs());
                return Formula::mk_or(Formula::globally(n2), Formula::until(n2, Formula::mk_and(n1, n2)));
            }
            case Op::Globally: return Formula::finally(neg(f.child()));
            case Op::Finally: return Formula::globally(neg(f.child()));
            case Op::Next: return Formula::mk_or(Formula::globally(Formula::bottom()), Formula::next(neg(f.child())));
        }
        throw std::logic_error("negate: unknown operator");
    }();
    memo.emplace(f.node(), r);
    return r;
}

}  // namespace

Formula negate(const Formula& f) {
    std::unordered_map<const FormulaNode*, Formula> memo;
    return negate_rec(f, memo);
}

}  // namespace tptl

#include "tptl/normalize.hpp"

#include <algorithm>

#include "tptl/errors.hpp"

namespace tptl {

namespace {

ClockSet intersect(const ClockSet& a, const ClockSet& b) {
    ClockSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Formula scope(const ClockSet& ys, const Formula& h) {
    ClockSet used = intersect(ys, h.free_clocks());
    if (used.empty()) return h;
    return Formula::freeze(used, h);
}

// h is already pushed
Formula distribute(const ClockSet& ys, const Formula& h) {
    switch (h.op()) {
        case Op::And: return Formula::mk_and(distribute(ys, h.lhs()), distribute(ys, h.rhs()));
        case Op::Or: return Formula::mk_or(distribute(ys, h.lhs()), distribute(ys, h.rhs()));
        case Op::Freeze: return scope(clock_union(ys, h.clocks()), h.child());
        case Op::Constraint:
            if (std::binary_search(ys.begin(), ys.end(), h.clock()))
                return h.interval().contains(Rational(0)) ? Formula::top() : Formula::bottom();
            return h;
        case Op::Until:
        case Op::Globally:
        case Op::Next:
        case Op::Finally: return scope(ys, h);
        default: return h;
    }
}

Formula rebuild(const Formula& f, const std::vector<Formula>& kids) {
    switch (f.op()) {
        case Op::And: return Formula::mk_and(kids[0], kids[1]);
        case Op::Or: return Formula::mk_or(kids[0], kids[1]);
        case Op::Until: return Formula::until(kids[0], kids[1]);
        case Op::Globally: return Formula::globally(kids[0]);
        case Op::Next: return Formula::next(kids[0]);
        case Op::Finally: return Formula::finally(kids[0]);
        case Op::Freeze: return Formula::freeze(f.clocks(), kids[0]);
        default: return f;
    }
}

Formula close_rec(const Formula& f, const ClockSet& xs);

Formula close_kids(const Formula& f, const ClockSet& xs) {
    std::vector<Formula> kids;
    for (const auto& k : f.kids()) kids.push_back(close_rec(k, xs));
    return rebuild(f, kids);
}

Formula close_rec(const Formula& f, const ClockSet& xs) {
    if (f.is_temporal() && f.is_closed() && !xs.empty()) return Formula::freeze(xs, close_kids(f, xs));
    if (f.op() == Op::Freeze && f.child().is_temporal() && f.is_closed() && !xs.empty())
        return Formula::freeze(xs, close_kids(f.child(), xs));
    return close_kids(f, xs);
}

bool normalized_rec(const Formula& f, const ClockSet& xs, bool under_freeze) {
    if (f.op() == Op::Freeze) {
        if (!f.child().is_temporal()) return false;
        if (f.is_closed() && f.clocks() != xs) return false;
        return normalized_rec(f.child(), xs, true);
    }
    if (f.is_temporal() && f.is_closed() && !xs.empty() && !under_freeze) return false;
    for (const auto& k : f.kids())
        if (!normalized_rec(k, xs, false)) return false;
    return true;
}

}  // namespace

Formula push_freezes(const Formula& f) {
    std::vector<Formula> kids;
    for (const auto& k : f.kids()) kids.push_back(push_freezes(k));
    if (f.op() == Op::Freeze) return distribute(f.clocks(), kids[0]);
    return rebuild(f, kids);
}

Formula strictly_close(const Formula& f, const ClockSet& xs) { return close_rec(f, xs); }

Formula normalize(const Formula& f) {
    if (!f.is_closed()) throw OpenFormula("formula has free clocks: " + f.to_string());
    Formula pushed = push_freezes(f);
    auto cs = clocks_of(pushed);
    return strictly_close(pushed, ClockSet(cs.begin(), cs.end()));
}

bool is_normalized(const Formula& f) {
    auto cs = clocks_of(f);
    return normalized_rec(f, ClockSet(cs.begin(), cs.end()), false);
}

}  // namespace tptl

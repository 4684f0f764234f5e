#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

bool naive_eval(const TimedWord& w, std::size_t i, const ClockValuation& nu, const Formula& f) {
    const std::size_t n = w.size();
    switch (f.op()) {
        case Op::Atom: return w.at(i).symbol == f.name();
        case Op::NegAtom: return w.at(i).symbol != f.name();
        case Op::Top: return true;
        case Op::Bottom: return false;
        case Op::Constraint: return f.interval().contains(w.at(i).time - nu.at(f.clock()));
        case Op::Freeze: {
            ClockValuation v = nu;
            for (const auto& y : f.clocks()) v[y] = w.at(i).time;
            return naive_eval(w, i, v, f.child());
        }
        case Op::And: return naive_eval(w, i, nu, f.lhs()) && naive_eval(w, i, nu, f.rhs());
        case Op::Or: return naive_eval(w, i, nu, f.lhs()) || naive_eval(w, i, nu, f.rhs());
        case Op::Next: return i + 1 <= n && naive_eval(w, i + 1, nu, f.child());
        case Op::Finally:
            for (std::size_t j = i + 1; j <= n; ++j)
                if (naive_eval(w, j, nu, f.child())) return true;
            return false;
        case Op::Globally:
            for (std::size_t j = i + 1; j <= n; ++j)
                if (!naive_eval(w, j, nu, f.child())) return false;
            return true;
        case Op::Until:
            for (std::size_t j = i + 1; j <= n; ++j) {
                if (naive_eval(w, j, nu, f.rhs())) {
                    bool ok = true;
                    for (std::size_t k = i + 1; k < j && ok; ++k) ok = naive_eval(w, k, nu, f.lhs());
                    if (ok) return true;
                }
            }
            return false;
    }
    return false;
}

namespace {

void leaves(const TransitionFormula& tf, const Valuation& nu, std::set<AtaState>& out) {
    switch (tf.kind) {
        case TfKind::Loc: out.insert({tf.loc, nu}); break;
        case TfKind::Bind: out.insert({tf.loc, with_resets(nu, tf.resets)}); break;
        case TfKind::And:
        case TfKind::Or:
            for (const auto& a : tf.args) leaves(a, nu, out);
            break;
        default: break;
    }
}

bool holds(const TransitionFormula& tf, const Valuation& nu, const std::set<AtaState>& c) {
    switch (tf.kind) {
        case TfKind::Top: return true;
        case TfKind::Bottom: return false;
        case TfKind::Loc: return c.count({tf.loc, nu}) > 0;
        case TfKind::Bind: return c.count({tf.loc, with_resets(nu, tf.resets)}) > 0;
        case TfKind::Guard: return tf.interval.contains(nu.at(tf.clock));
        case TfKind::And:
            return std::all_of(tf.args.begin(), tf.args.end(), [&](const auto& a) { return holds(a, nu, c); });
        case TfKind::Or:
            return std::any_of(tf.args.begin(), tf.args.end(), [&](const auto& a) { return holds(a, nu, c); });
    }
    return false;
}

}  // namespace

std::vector<Configuration> brute_minimal_models(const TransitionFormula& tf, const Valuation& nu) {
    std::set<AtaState> atoms;
    leaves(tf, nu, atoms);
    std::vector<AtaState> v(atoms.begin(), atoms.end());
    std::vector<std::set<AtaState>> sat;
    for (std::uint64_t m = 0; m < (1ull << v.size()); ++m) {
        std::set<AtaState> c;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (m & (1ull << i)) c.insert(v[i]);
        if (holds(tf, nu, c)) sat.push_back(std::move(c));
    }
    std::vector<Configuration> out;
    for (const auto& c : sat) {
        bool minimal = true;
        for (const auto& d : sat)
            if (d.size() < c.size() && std::includes(c.begin(), c.end(), d.begin(), d.end())) minimal = false;
        if (minimal) out.push_back(Configuration(c.begin(), c.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool for_each_grid_word(const std::vector<std::string>& letters, const GridOptions& opts,
                        const std::function<bool(const TimedWord&)>& visit) {
    const std::int64_t top = opts.max_time * opts.denominator;
    std::vector<TimedEntry> cur;
    std::function<bool(std::int64_t)> rec = [&](std::int64_t lo) -> bool {
        if (!cur.empty() && visit(TimedWord(cur))) return true;
        if (cur.size() == opts.max_length) return false;
        std::int64_t hi = (cur.empty() && opts.first_at_zero) ? 0 : top;
        for (std::int64_t k = lo; k <= hi; ++k)
            for (const auto& a : letters) {
                cur.push_back({a, Rational(k, opts.denominator)});
                if (rec(k)) return true;
                cur.pop_back();
            }
        return false;
    };
    return rec(0);
}

std::optional<TimedWord> grid_model(const Formula& f, const std::vector<std::string>& letters, const GridOptions& opts) {
    std::optional<TimedWord> found;
    for_each_grid_word(letters, opts, [&](const TimedWord& w) {
        if (naive_eval(w, 1, {}, f)) {
            found = w;
            return true;
        }
        return false;
    });
    return found;
}

}  // namespace oracle

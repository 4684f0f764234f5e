#include "tptl/semantics.hpp"

#include <unordered_map>

#include "tptl/errors.hpp"

namespace tptl {

namespace {

struct MemoKey {
    const FormulaNode* node;
    std::size_t pos;
    std::vector<Rational> values;  // free clocks of node, in order
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        std::size_t h = std::hash<const void*>{}(k.node) * 31 + k.pos;
        for (const auto& v : k.values) h = h * 1000003 ^ RationalHash{}(v);
        return h;
    }
};

class Evaluator {
public:
    explicit Evaluator(const TimedWord& w) : w_(w) {}

    bool eval(std::size_t pos, const ClockValuation& nu, const Formula& f) {
        switch (f.op()) {
            case Op::Atom: return w_.at(pos).symbol == f.name();
            case Op::NegAtom: return w_.at(pos).symbol != f.name();
            case Op::Top: return true;
            case Op::Bottom: return false;
            case Op::Constraint: {
                auto it = nu.find(f.clock());
                if (it == nu.end()) throw std::invalid_argument("clock '" + f.clock() + "' has no value");
                return f.interval().contains(w_.at(pos).time - it->second);
            }
            case Op::Freeze: {
                ClockValuation inner = nu;
                for (const auto& y : f.clocks()) inner[y] = w_.at(pos).time;
                return eval(pos, inner, f.child());
            }
            case Op::And: return eval(pos, nu, f.lhs()) && eval(pos, nu, f.rhs());
            case Op::Or: return eval(pos, nu, f.lhs()) || eval(pos, nu, f.rhs());
            case Op::Next: return pos + 1 <= w_.size() && eval(pos + 1, nu, f.child());
            default: break;
        }
        MemoKey key{f.node(), pos, {}};
        for (const auto& c : f.free_clocks()) {
            auto it = nu.find(c);
            if (it == nu.end()) throw std::invalid_argument("clock '" + c + "' has no value");
            key.values.push_back(it->second);
        }
        if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;
        bool r = temporal(pos, nu, f);
        memo_.emplace(std::move(key), r);
        return r;
    }

private:
    bool temporal(std::size_t pos, const ClockValuation& nu, const Formula& f) {
        std::size_t n = w_.size();
        switch (f.op()) {
            case Op::Until:
                for (std::size_t j = pos + 1; j <= n; ++j) {
                    if (eval(j, nu, f.rhs())) return true;
                    if (!eval(j, nu, f.lhs())) return false;
                }
                return false;
            case Op::Globally:
                for (std::size_t j = pos + 1; j <= n; ++j)
                    if (!eval(j, nu, f.child())) return false;
                return true;
            case Op::Finally:
                for (std::size_t j = pos + 1; j <= n; ++j)
                    if (eval(j, nu, f.child())) return true;
                return false;
            default: throw std::logic_error("not a temporal operator");
        }
    }

    const TimedWord& w_;
    std::unordered_map<MemoKey, bool, MemoKeyHash> memo_;
};

}  // namespace

bool eval_tptl(const TimedWord& w, std::size_t pos, const ClockValuation& nu, const Formula& f) {
    w.at(pos);
    return Evaluator(w).eval(pos, nu, f);
}

bool language_member(const TimedWord& w, const Formula& f) {
    if (!f.is_closed()) throw OpenFormula("formula has free clocks: " + f.to_string());
    if (w.empty()) throw EmptyWord("membership is undefined on the empty word");
    ClockValuation zero;
    for (const auto& c : clocks_of(f)) zero[c] = Rational(0);
    return eval_tptl(w, 1, zero, f);
}

}  // namespace tptl

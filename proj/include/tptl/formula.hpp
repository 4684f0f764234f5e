#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tptl/interval.hpp"

namespace tptl {

// ============================================================================
// TPTL formulas (negation normal form)
// ============================================================================

enum class Op {
    Atom,
    NegAtom,
    Top,
    Bottom,
    Freeze,
    Constraint,
    And,
    Or,
    Until,
    Globally,
    Next,
    Finally
};

using ClockSet = std::vector<std::string>;  // sorted, duplicate-free

class Formula;

struct FormulaNode {
    Op op;
    std::string name;  // atom letter or constrained clock
    ClockSet clocks;   // freeze set
    Interval interval;
    std::vector<Formula> kids;
    ClockSet free_clocks;
};

/// Immutable, structurally compared formula handle.
class Formula {
public:
    static Formula atom(std::string a);
    static Formula neg_atom(std::string a);
    static Formula top();
    static Formula bottom();
    static Formula freeze(ClockSet ys, Formula child);
    static Formula freeze(std::string y, Formula child) { return freeze(ClockSet{std::move(y)}, std::move(child)); }
    static Formula constraint(std::string clock, Interval i);
    static Formula conj(Formula l, Formula r);
    static Formula disj(Formula l, Formula r);
    static Formula until(Formula l, Formula r);
    static Formula globally(Formula c);
    static Formula next(Formula c);
    static Formula finally(Formula c);

    /// Smart constructors that fold Top/Bottom.
    static Formula mk_and(Formula l, Formula r);
    static Formula mk_or(Formula l, Formula r);
    static Formula mk_and(const std::vector<Formula>& parts);
    static Formula mk_or(const std::vector<Formula>& parts);

    Op op() const { return node_->op; }
    const std::string& name() const { return node_->name; }
    const std::string& clock() const { return node_->name; }
    const ClockSet& clocks() const { return node_->clocks; }
    const Interval& interval() const { return node_->interval; }
    const Formula& lhs() const { return node_->kids.at(0); }
    const Formula& rhs() const { return node_->kids.at(1); }
    const Formula& child() const { return node_->kids.at(0); }
    const std::vector<Formula>& kids() const { return node_->kids; }
    const ClockSet& free_clocks() const { return node_->free_clocks; }
    const FormulaNode* node() const { return node_.get(); }

    bool is_closed() const { return node_->free_clocks.empty(); }
    bool is_temporal() const;
    bool is_boolean() const { return op() == Op::And || op() == Op::Or; }

    friend bool operator==(const Formula& a, const Formula& b);
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

    std::string to_string() const;

private:
    explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
    static Formula make(FormulaNode n);
    std::shared_ptr<const FormulaNode> node_;
};

std::string to_string(Op op);

/// Atomic propositions occurring in f (sorted).
std::set<std::string> atoms_of(const Formula& f);
/// Clocks occurring in f, bound or constrained (sorted).
std::set<std::string> clocks_of(const Formula& f);
/// Largest constant in f's constraints, 0 when there are none.
std::int64_t max_constant(const Formula& f);
std::size_t constraint_count(const Formula& f);

/// B + M + C: Boolean operators, modalities plus freeze quantifiers, and the
/// bit cost 2*(floor(log2 c_max)+1) of each constraint.
std::size_t formula_size(const Formula& f);

/// Negation pushed to atoms.
Formula negate(const Formula& f);

ClockSet clock_union(const ClockSet& a, const ClockSet& b);

}  // namespace tptl

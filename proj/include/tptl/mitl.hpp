#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tptl/formula.hpp"
#include "tptl/timed_word.hpp"

namespace tptl {

// ============================================================================
// MITL
// ============================================================================

enum class MitlOp { Atom, Top, Not, And, Or, Until, Finally, Globally };

struct MitlNode;

class MitlFormula {
public:
    static MitlFormula atom(std::string a);
    static MitlFormula top();
    static MitlFormula negation(MitlFormula c);
    static MitlFormula conj(MitlFormula l, MitlFormula r);
    static MitlFormula disj(MitlFormula l, MitlFormula r);
    static MitlFormula until(Interval i, MitlFormula l, MitlFormula r);
    static MitlFormula finally(Interval i, MitlFormula c);
    static MitlFormula globally(Interval i, MitlFormula c);

    MitlOp op() const;
    const std::string& name() const;
    const Interval& interval() const;
    const std::vector<MitlFormula>& kids() const;
    const MitlFormula& lhs() const { return kids().at(0); }
    const MitlFormula& rhs() const { return kids().at(1); }
    const MitlFormula& child() const { return kids().at(0); }
    const MitlNode* node() const { return node_.get(); }

    std::string to_string() const;

private:
    explicit MitlFormula(std::shared_ptr<const MitlNode> n) : node_(std::move(n)) {}
    static MitlFormula make(MitlOp op, std::string name, Interval i, std::vector<MitlFormula> kids);
    std::shared_ptr<const MitlNode> node_;
};

struct MitlNode {
    MitlOp op;
    std::string name;
    Interval interval;
    std::vector<MitlFormula> kids;
};

/// Grammar of the TPTL front end without clocks, with interval suffixes
/// `U[l,u)`, `F[l,u)`, `G[l,u)`; `!` is general negation. Unsuffixed
/// modalities use [0,inf). Non-integer bounds raise NonIntegerBound.
MitlFormula parse_mitl(const std::string& text);

/// Strict-future pointwise semantics. Throws PositionOutOfRange.
bool eval_mitl(const TimedWord& w, std::size_t pos, const MitlFormula& f);

/// phi1 U_I phi2 as x.(phi1 U (phi2 & x in I)), recursively, clock "x".
Formula mtl_to_tptl(const MitlFormula& f);

/// Equivalent closed 1-clock formula in which every subformula's open
/// constraints are all upper-bounded-from-zero or all lower-bounded.
/// Throws PunctualInterval.
Formula mitl_to_tptl0inf(const MitlFormula& f);

/// phi & G_[0,1) !phi: positions satisfying it lie at least one time unit apart.
Formula approach_formula(const Formula& phi);

}  // namespace tptl

#pragma once

#include "tptl/formula.hpp"
#include "tptl/timed_word.hpp"

namespace tptl {

/// Pointwise satisfaction rho, pos, nu |= f with strict-future Until and
/// Globally. Positions are 1-based. Throws PositionOutOfRange.
bool eval_tptl(const TimedWord& w, std::size_t pos, const ClockValuation& nu, const Formula& f);

/// w, 1, 0 |= f for closed f. Throws OpenFormula and EmptyWord.
bool language_member(const TimedWord& w, const Formula& f);

}  // namespace tptl

#pragma once

#include "tptl/formula.hpp"

namespace tptl {

/// Distributes freeze quantifiers over Boolean connectives until each one
/// scopes a single temporal formula, dropping clocks the scope never reads
/// and evaluating constraints frozen at the current position. Top/Bottom
/// are folded away.
Formula push_freezes(const Formula& f);

/// Rebinds every closed temporal subformula to the clock set xs.
Formula strictly_close(const Formula& f, const ClockSet& xs);

/// push_freezes then strictly_close over the clocks of the pushed formula.
/// Throws OpenFormula when f has free clocks.
Formula normalize(const Formula& f);

/// True when f has the shape produced by normalize: every freeze scopes a
/// temporal formula and every closed temporal subformula is bound to the
/// full clock set.
bool is_normalized(const Formula& f);

}  // namespace tptl

#pragma once

#include <vector>

#include "tptl/ata.hpp"
#include "tptl/formula.hpp"
#include "tptl/timed_word.hpp"

namespace tptl {

struct CompileOutput {
    Ata ata;
    /// Formula each location stands for; the initial location maps to the
    /// whole input.
    std::vector<Formula> location_formula;
};

/// One location per temporal subformula occurrence plus an initial copy of
/// the formula. Alphabet: the formula's atoms plus the catch-all letter.
/// The side partition is filled in when one exists. Throws OpenFormula and
/// NotNormalized.
CompileOutput compile_tptl_to_vwata(const Formula& f);

/// Renames each symbol to the automaton letter that reads it.
TimedWord alphabet_projection(const Ata& a, const TimedWord& w);

}  // namespace tptl

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tptl/ata.hpp"
#include "tptl/ata_semantics.hpp"
#include "tptl/formula.hpp"
#include "tptl/timed_word.hpp"

namespace oracle {

using namespace tptl;

/// Direct recursive reading of the satisfaction relation, no memoization.
bool naive_eval(const TimedWord& w, std::size_t pos, const ClockValuation& nu, const Formula& f);

/// All subset-minimal configurations satisfying tf under nu, by enumerating
/// subsets of the states tf mentions.
std::vector<Configuration> brute_minimal_models(const TransitionFormula& tf, const Valuation& nu);

struct GridOptions {
    std::size_t max_length = 4;
    std::int64_t denominator = 4;
    std::int64_t max_time = 4;
    bool first_at_zero = true;
};

/// Calls visit on every word of length 1..max_length over letters with
/// timestamps on the grid; stops when visit returns true.
bool for_each_grid_word(const std::vector<std::string>& letters, const GridOptions& opts,
                        const std::function<bool(const TimedWord&)>& visit);

std::optional<TimedWord> grid_model(const Formula& f, const std::vector<std::string>& letters, const GridOptions& opts);

}  // namespace oracle

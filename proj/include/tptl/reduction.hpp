#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tptl/ata_semantics.hpp"

namespace tptl {

/// s precedes s2 when both sit in location q and s2's valuation is pointwise
/// at most s's (q on the Le side) or at least s's (q on the Ge side); s2 can
/// then be dropped in favour of s.
bool state_preceq(const AtaState& s, const AtaState& s2, const std::vector<Side>& partition);

/// Drops every state preceded by a different state of c.
Configuration reduce_config(const Configuration& c, const std::vector<Side>& partition);

std::vector<Configuration> reduced_successors(const Ata& a, const Configuration& c, const Rational& t, int letter,
                                              const std::vector<Side>& partition);

/// Acceptance search that steps through reduced successors only.
bool reduced_accepts(const Ata& a, const Configuration& c0, const TimedWord& w, const std::vector<Side>& partition);

struct BoundedRunViolation {
    std::size_t step;
    Configuration config;
    int location;
};

struct BoundedRunReport {
    std::vector<BoundedRunViolation> violations;
    std::size_t max_cardinality = 0;
    std::size_t configs_explored = 0;
    nlohmann::json to_json(const Ata& a) const;
};

/// Explores every reduced run of a on w from its initial configuration and
/// records configurations (after the first step) holding a location twice.
/// Throws NotUnilateral when no side partition exists and NotVeryWeak when
/// the automaton is neither very weak nor single-clock.
BoundedRunReport check_bounded_run(const Ata& a, const TimedWord& w);

}  // namespace tptl

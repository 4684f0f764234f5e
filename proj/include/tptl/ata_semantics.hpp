#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tptl/ata.hpp"
#include "tptl/timed_word.hpp"

namespace tptl {

// ============================================================================
// Configurations and successors
// ============================================================================

using Valuation = std::vector<Rational>;  // indexed by clock

Valuation delayed(const Valuation& nu, const Rational& t);
Valuation with_resets(Valuation nu, ClockMask ys);

struct AtaState {
    int loc = 0;
    Valuation nu;
    friend bool operator==(const AtaState&, const AtaState&) = default;
    friend auto operator<=>(const AtaState&, const AtaState&) = default;
};

/// Sorted, duplicate-free set of states.
using Configuration = std::vector<AtaState>;

Configuration make_configuration(std::vector<AtaState> states);
Configuration initial_configuration(const Ata& a);
bool is_accepting(const Ata& a, const Configuration& c);
std::string to_string(const Configuration& c, const Ata& a);

/// All subset-minimal configurations satisfying tf when guards read nu and
/// Y.q yields (q, nu[Y<-0]).
std::vector<Configuration> minimal_models(const TransitionFormula& tf, const Valuation& nu);

/// Every union of one minimal model of delta(q, letter) at nu+t per state.
std::vector<Configuration> successors(const Ata& a, const Configuration& c, const Rational& t, int letter);

/// A successor together with the model chosen for each source state.
struct SuccessorChoice {
    Configuration result;
    std::vector<Configuration> per_state;  // aligned with the source configuration
};
std::vector<SuccessorChoice> successor_choices(const Ata& a, const Configuration& c, const Rational& t, int letter);

// ============================================================================
// Runs
// ============================================================================

struct RunDag {
    struct Node {
        int level;
        AtaState state;
    };
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;
    /// (delay, symbol) labelling the edges from level i to level i+1.
    std::vector<std::pair<Rational, std::string>> steps;

    std::vector<Configuration> levels() const;
};

struct AcceptResult {
    bool accepted = false;
    std::optional<RunDag> run;
};

/// Exhaustive search for a run from c0 over w ending in an accepting
/// configuration.
AcceptResult ata_accepts(const Ata& a, const Configuration& c0, const TimedWord& w);

/// The run obtained by always taking each state's first minimal model; stops
/// early when some state has none.
RunDag first_choice_run(const Ata& a, const Configuration& c0, const TimedWord& w);

std::string export_run_dag(const RunDag& r, const Ata& a);

/// Letter index for a word symbol; throws when the automaton cannot read it.
int letter_for(const Ata& a, const std::string& sym);

}  // namespace tptl

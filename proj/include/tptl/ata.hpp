#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tptl/interval.hpp"

namespace tptl {

// ============================================================================
// Alternating timed automata with binding constructs
// ============================================================================

using ClockMask = std::uint32_t;  // bit i = clock i
constexpr int kMaxClocks = 32;

enum class TfKind { Top, Bottom, Loc, Bind, Guard, And, Or };

/// Positive Boolean combination of locations, bindings Y.q and guards x in I.
struct TransitionFormula {
    TfKind kind = TfKind::Top;
    int loc = -1;
    ClockMask resets = 0;
    int clock = -1;
    Interval interval;
    std::vector<TransitionFormula> args;

    static TransitionFormula top();
    static TransitionFormula bottom();
    static TransitionFormula location(int q);
    static TransitionFormula bind(ClockMask ys, int q);
    static TransitionFormula guard(int x, Interval i);
    /// Flattening, Top/Bottom-folding conjunction and disjunction.
    static TransitionFormula conj(std::vector<TransitionFormula> parts);
    static TransitionFormula disj(std::vector<TransitionFormula> parts);

    friend bool operator==(const TransitionFormula&, const TransitionFormula&);
    friend std::strong_ordering operator<=>(const TransitionFormula&, const TransitionFormula&);
};

/// Which way a location's guards face: Le locations only test x <= c style
/// guards, Ge locations only x >= c style guards.
enum class Side { Ge, Le };

struct Ata {
    std::vector<std::string> locations;
    std::vector<std::string> alphabet;
    std::vector<std::string> clocks;
    int initial = 0;
    std::vector<bool> accepting;
    std::vector<std::vector<TransitionFormula>> delta;  // [location][letter]
    std::optional<std::vector<Side>> partition;

    int num_locations() const { return static_cast<int>(locations.size()); }
    int num_clocks() const { return static_cast<int>(clocks.size()); }
    int location_index(const std::string& name) const;
    int clock_index(const std::string& name) const;
    /// Index of sym, or of the catch-all letter "_" when sym is not a letter.
    /// -1 when neither exists.
    int letter_index(const std::string& sym) const;
    /// Distinct guards appearing in delta.
    std::vector<std::pair<int, Interval>> guards() const;
    /// Largest guard constant per clock.
    std::vector<std::int64_t> max_constants() const;

    friend bool operator==(const Ata&, const Ata&) = default;
};

/// Name of the letter standing for every symbol outside a compiled formula.
inline const std::string kOtherLetter = "_";

std::string to_string(const TransitionFormula& tf, const Ata& a);

/// Disjunctive normal form clause: guards plus (resets, location) targets.
struct Clause {
    std::vector<std::pair<int, Interval>> guards;      // sorted, unique
    std::vector<std::pair<int, ClockMask>> targets;    // (location, resets), sorted, unique
    friend bool operator==(const Clause&, const Clause&) = default;
    friend auto operator<=>(const Clause&, const Clause&) = default;
};

/// DNF with clauses in canonical order; clauses with contradictory guards on
/// one clock and clauses subsumed by another are dropped. Throws
/// DnfBlowupLimit when more than `cap` clauses arise.
std::vector<Clause> to_dnf(const TransitionFormula& tf, std::size_t cap = 100000);

// ----------------------------------------------------------------------------
// Validation
// ----------------------------------------------------------------------------

struct VwataReport {
    bool ok = true;
    int violated_condition = 0;  // 1 partial order, 2 reset-free self-loops, 3 tree shape
    std::string detail;
    std::vector<std::string> witnesses;
};

VwataReport validate_vwata(const Ata& a);

/// Side of every location such that exit guards match the side and every
/// transition crossing sides resets all clocks. Throws NoValidPartition.
std::vector<Side> validate_unilateral(const Ata& a);

// ----------------------------------------------------------------------------
// Serialization
// ----------------------------------------------------------------------------

nlohmann::json ata_to_json(const Ata& a);
Ata ata_from_json(const nlohmann::json& j);
std::string ata_to_dot(const Ata& a);

}  // namespace tptl

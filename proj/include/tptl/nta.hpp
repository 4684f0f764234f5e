#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tptl/ata.hpp"
#include "tptl/timed_word.hpp"

namespace tptl {

// ============================================================================
// Timed automata over clock copies
// ============================================================================

/// A set of ATA locations, each holding one copy index per base clock, and
/// per base clock the live copies ordered from least to most recently reset.
struct NtaLocation {
    std::vector<std::optional<std::vector<int>>> L;  // [ata location] -> copy per clock
    std::vector<std::vector<int>> act;               // [clock] -> live copies, oldest first

    bool is_empty() const;
    friend bool operator==(const NtaLocation&, const NtaLocation&) = default;
    friend auto operator<=>(const NtaLocation&, const NtaLocation&) = default;
};

struct CopyGuard {
    int clock;
    int copy;
    Interval interval;
    friend bool operator==(const CopyGuard&, const CopyGuard&) = default;
    friend auto operator<=>(const CopyGuard&, const CopyGuard&) = default;
};

struct NtaTransition {
    int source;
    int letter;
    std::vector<CopyGuard> guards;
    std::vector<std::pair<int, int>> resets;  // (clock, copy)
    int target;
    friend bool operator==(const NtaTransition&, const NtaTransition&) = default;
    friend auto operator<=>(const NtaTransition&, const NtaTransition&) = default;
};

struct Nta {
    std::vector<std::string> clocks;
    std::vector<std::string> alphabet;
    std::vector<std::string> ata_locations;
    int copies_per_clock = 1;  // |Q| of the source automaton
    std::vector<NtaLocation> locations;
    std::vector<bool> accepting;
    std::vector<NtaTransition> transitions;
    std::vector<std::vector<int>> outgoing;  // [location] -> transition ids
    int initial = 0;

    int num_clocks() const { return static_cast<int>(clocks.size()); }
    /// Flat index of copy (x, i).
    int copy_id(int clock, int index) const { return clock * copies_per_clock + index; }
    int num_copies() const { return num_clocks() * copies_per_clock; }
    std::vector<std::int64_t> max_constants() const;
    int letter_index(const std::string& sym) const;

    friend bool operator==(const Nta&, const Nta&) = default;
};

struct SubsetizeOptions {
    std::size_t location_cap = 200000;
    std::size_t clause_cap = 100000;
};

/// Builds the reachable part of the timed automaton whose locations are
/// reduced configurations of a. Requires a very weak (or single-clock)
/// automaton with a side partition.
Nta subsetize(const Ata& a, const SubsetizeOptions& opts = {});

bool nta_accepts(const Nta& n, const TimedWord& w);

struct NtaStats {
    std::size_t locations = 0;
    std::size_t transitions = 0;
    std::size_t copies_used = 0;
    std::size_t max_active = 0;
    std::size_t copy_bound = 0;  // |X| * |Q|
    long double worst_case_locations = 0;
    long double region_bound = 0;
    nlohmann::json to_json() const;
};

NtaStats nta_stats(const Nta& n);

std::string to_string(const NtaLocation& l, const Nta& n);
nlohmann::json nta_to_json(const Nta& n);
Nta nta_from_json(const nlohmann::json& j);
std::string nta_to_dot(const Nta& n);

}  // namespace tptl

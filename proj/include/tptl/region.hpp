#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tptl/nta.hpp"
#include "tptl/timed_word.hpp"

namespace tptl {

// ============================================================================
// Regions over clock copies
// ============================================================================

/// Region over a flat vector of clock copies. Inactive copies have
/// int_part -1. A copy with int_part == cap+1 is above its constant and
/// carries no fraction information. frac_rank is 0 for a zero fraction and
/// 1..m for the ordered classes of nonzero fractions.
struct Region {
    std::vector<int> int_part;
    std::vector<int> frac_rank;

    friend bool operator==(const Region&, const Region&) = default;
    friend auto operator<=>(const Region&, const Region&) = default;
};

/// caps[i] is the largest constant compared against copy i; copies with
/// active[i] == false are ignored.
Region region_of(const std::vector<Rational>& nu, const std::vector<std::int64_t>& caps,
                 const std::vector<bool>& active);
Region region_of(const std::vector<Rational>& nu, std::int64_t c_max);

/// The next region reached by letting time elapse, or nullopt when every
/// active copy is above its constant.
std::optional<Region> time_successor(const Region& r, const std::vector<std::int64_t>& caps);

/// Guard satisfaction for one copy; all valuations in the region agree.
bool region_satisfies(const Region& r, int copy, const Interval& iv);

std::string to_string(const Region& r);

struct RegionNode {
    int location;
    Region region;
};

struct RegionEdge {
    int from;
    int to;
    int transition;  // -1 for a time step
};

struct RegionGraph {
    std::vector<RegionNode> nodes;
    std::vector<RegionEdge> edges;
    std::vector<std::int64_t> caps;  // per flat copy
    int initial = 0;
};

struct RegionOptions {
    std::size_t state_cap = 0;  // 0: TPTL_STATE_CAP or the built-in default
};

std::size_t default_state_cap();

RegionGraph build_region_graph(const Nta& n, const RegionOptions& opts = {});

struct EmptinessResult {
    bool sat = false;
    std::optional<TimedWord> witness;
    std::size_t nodes_explored = 0;
};

/// Nonempty finite words only.
EmptinessResult check_emptiness(const Nta& n, const RegionOptions& opts = {});

/// Concretizes a path of edge ids that starts at the initial node.
TimedWord extract_witness(const Nta& n, const RegionGraph& g, const std::vector<int>& path);

std::string region_graph_to_dot(const Nta& n, const RegionGraph& g);

}  // namespace tptl

#include "tptl/region.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "tptl/errors.hpp"

namespace tptl {

namespace {

void renumber(Region& r) {
    std::set<int> ranks;
    for (std::size_t i = 0; i < r.frac_rank.size(); ++i)
        if (r.frac_rank[i] > 0) ranks.insert(r.frac_rank[i]);
    std::map<int, int> to;
    int k = 0;
    for (int x : ranks) to[x] = ++k;
    for (auto& f : r.frac_rank)
        if (f > 0) f = to[f];
}

std::vector<std::int64_t> copy_caps(const Nta& n) {
    std::vector<std::int64_t> per_clock = n.max_constants();
    std::vector<std::int64_t> caps(n.num_copies());
    for (int x = 0; x < n.num_clocks(); ++x)
        for (int i = 0; i < n.copies_per_clock; ++i) caps[n.copy_id(x, i)] = per_clock[x];
    return caps;
}

std::vector<bool> active_mask(const Nta& n, const NtaLocation& l) {
    std::vector<bool> m(n.num_copies(), false);
    for (int x = 0; x < n.num_clocks(); ++x)
        for (int i : l.act[x]) m[n.copy_id(x, i)] = true;
    return m;
}

Region apply_transition(const Nta& n, const Region& r, const NtaTransition& t) {
    Region out = r;
    for (const auto& [x, i] : t.resets) {
        out.int_part[n.copy_id(x, i)] = 0;
        out.frac_rank[n.copy_id(x, i)] = 0;
    }
    std::vector<bool> act = active_mask(n, n.locations[t.target]);
    for (std::size_t c = 0; c < act.size(); ++c)
        if (!act[c]) {
            out.int_part[c] = -1;
            out.frac_rank[c] = 0;
        }
    renumber(out);
    return out;
}

bool enabled(const Nta& n, const Region& r, const NtaTransition& t) {
    for (const auto& g : t.guards)
        if (!region_satisfies(r, n.copy_id(g.clock, g.copy), g.interval)) return false;
    return true;
}

}  // namespace

Region region_of(const std::vector<Rational>& nu, const std::vector<std::int64_t>& caps,
                 const std::vector<bool>& active) {
    Region r;
    r.int_part.assign(nu.size(), -1);
    r.frac_rank.assign(nu.size(), 0);
    std::vector<Rational> fracs;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (!active[i]) continue;
        if (nu[i] > Rational(caps[i])) {
            r.int_part[i] = static_cast<int>(caps[i] + 1);
            continue;
        }
        r.int_part[i] = static_cast<int>(nu[i].floor());
        if (!nu[i].is_integer()) fracs.push_back(nu[i].frac());
    }
    std::sort(fracs.begin(), fracs.end());
    fracs.erase(std::unique(fracs.begin(), fracs.end()), fracs.end());
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (r.int_part[i] < 0 || r.int_part[i] > caps[i] || nu[i].is_integer()) continue;
        r.frac_rank[i] = static_cast<int>(std::lower_bound(fracs.begin(), fracs.end(), nu[i].frac()) - fracs.begin()) + 1;
    }
    return r;
}

Region region_of(const std::vector<Rational>& nu, std::int64_t c_max) {
    return region_of(nu, std::vector<std::int64_t>(nu.size(), c_max), std::vector<bool>(nu.size(), true));
}

std::optional<Region> time_successor(const Region& r, const std::vector<std::int64_t>& caps) {
    std::vector<std::size_t> bounded;
    for (std::size_t i = 0; i < r.int_part.size(); ++i)
        if (r.int_part[i] >= 0 && r.int_part[i] <= caps[i]) bounded.push_back(i);
    if (bounded.empty()) return std::nullopt;
    Region s = r;
    bool any_zero = std::any_of(bounded.begin(), bounded.end(), [&](std::size_t i) { return r.frac_rank[i] == 0; });
    if (any_zero) {
        for (std::size_t i : bounded) {
            if (r.frac_rank[i] == 0 && r.int_part[i] == caps[i]) {
                s.int_part[i] = static_cast<int>(caps[i] + 1);
                continue;
            }
            s.frac_rank[i] = r.frac_rank[i] + 1;
        }
    } else {
        int top = 0;
        for (std::size_t i : bounded) top = std::max(top, r.frac_rank[i]);
        for (std::size_t i : bounded) {
            if (r.frac_rank[i] != top) continue;
            s.frac_rank[i] = 0;
            s.int_part[i] = r.int_part[i] + 1;
        }
    }
    renumber(s);
    return s;
}

bool region_satisfies(const Region& r, int copy, const Interval& iv) {
    const int k = r.int_part[copy];
    if (k < 0) throw std::logic_error("guard on an inactive clock copy");
    Rational v = r.frac_rank[copy] == 0 ? Rational(k) : Rational(2 * k + 1, 2);
    return iv.contains(v);
}

std::string to_string(const Region& r) {
    std::string s = "<";
    bool first = true;
    for (std::size_t i = 0; i < r.int_part.size(); ++i) {
        if (r.int_part[i] < 0) continue;
        s += first ? "" : " ";
        first = false;
        s += std::to_string(i) + ":" + std::to_string(r.int_part[i]);
        if (r.frac_rank[i] > 0) s += "+f" + std::to_string(r.frac_rank[i]);
    }
    return s + ">";
}

std::size_t default_state_cap() {
    if (const char* env = std::getenv("TPTL_STATE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 2000000;
}

// ============================================================================
// Region graph exploration
// ============================================================================

namespace {

class Explorer {
public:
    Explorer(const Nta& n, const RegionOptions& opts) : n_(n) {
        cap_ = opts.state_cap ? opts.state_cap : default_state_cap();
        g_.caps = copy_caps(n);
        const NtaLocation& l0 = n.locations[n.initial];
        Region r0 = region_of(std::vector<Rational>(n.num_copies(), Rational(0)), g_.caps, active_mask(n, l0));
        g_.initial = intern(n.initial, r0, -1);
    }

    // Returns the edge reaching an accepting location after at least one letter.
    std::optional<int> run(bool stop_at_accept) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(g_.nodes.size()); ++i) {
            const int id = static_cast<int>(i);
            const RegionNode node = g_.nodes[i];
            if (auto s = time_successor(node.region, g_.caps); s && *s != node.region) {
                int to = intern(node.location, *s, static_cast<int>(g_.edges.size()));
                g_.edges.push_back({id, to, -1});
            }
            for (int ti : n_.outgoing[node.location]) {
                const NtaTransition& t = n_.transitions[ti];
                if (!enabled(n_, node.region, t)) continue;
                int eid = static_cast<int>(g_.edges.size());
                int to = intern(t.target, apply_transition(n_, node.region, t), eid);
                g_.edges.push_back({id, to, ti});
                if (n_.accepting[t.target] && !accept_edge_) accept_edge_ = eid;
                if (stop_at_accept && accept_edge_) return accept_edge_;
            }
        }
        return accept_edge_;
    }

    std::vector<int> path_to(int edge) const {
        std::vector<int> path{edge};
        int node = g_.edges[edge].from;
        while (parent_[node] >= 0) {
            path.push_back(parent_[node]);
            node = g_.edges[parent_[node]].from;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    RegionGraph& graph() { return g_; }

private:
    int intern(int loc, const Region& r, int via) {
        auto key = std::make_pair(loc, r);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        if (g_.nodes.size() >= cap_)
            throw StateCapExceeded("region graph exceeds the state cap of " + std::to_string(cap_) + " nodes");
        int id = static_cast<int>(g_.nodes.size());
        g_.nodes.push_back({loc, r});
        parent_.push_back(via);
        index_.emplace(std::move(key), id);
        return id;
    }

    const Nta& n_;
    std::size_t cap_;
    RegionGraph g_;
    std::map<std::pair<int, Region>, int> index_;
    std::vector<int> parent_;
    std::optional<int> accept_edge_;
};

}  // namespace

RegionGraph build_region_graph(const Nta& n, const RegionOptions& opts) {
    Explorer e(n, opts);
    e.run(false);
    return std::move(e.graph());
}

EmptinessResult check_emptiness(const Nta& n, const RegionOptions& opts) {
    Explorer e(n, opts);
    auto edge = e.run(true);
    EmptinessResult res;
    res.nodes_explored = e.graph().nodes.size();
    if (!edge) return res;
    TimedWord w = extract_witness(n, e.graph(), e.path_to(*edge));
    if (!nta_accepts(n, w)) throw Infeasible("extracted witness is rejected by the timed automaton");
    res.sat = true;
    res.witness = std::move(w);
    return res;
}

TimedWord extract_witness(const Nta& n, const RegionGraph& g, const std::vector<int>& path) {
    if (path.empty() || g.edges.at(path.front()).from != g.initial)
        throw Infeasible("witness path must start at the initial node");
    std::vector<Rational> nu(n.num_copies(), Rational(0));
    std::vector<bool> act = active_mask(n, n.locations[n.initial]);
    Rational now(0);
    TimedWord w;
    for (int eid : path) {
        const RegionEdge& e = g.edges.at(eid);
        if (e.transition < 0) continue;
        const Region& want = g.nodes[e.from].region;
        // delays at which some active copy crosses an integer, then the open gaps between them
        std::vector<Rational> points{Rational(0)};
        for (std::size_t c = 0; c < nu.size(); ++c) {
            if (!act[c]) continue;
            for (std::int64_t m = nu[c].floor() + 1; m <= g.caps[c] + 1; ++m) points.push_back(Rational(m) - nu[c]);
        }
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        std::vector<Rational> candidates;
        for (std::size_t k = 0; k < points.size(); ++k) {
            candidates.push_back(points[k]);
            candidates.push_back(k + 1 < points.size() ? simplest_between(points[k], points[k + 1]) : points[k] + Rational(1));
        }
        std::optional<Rational> delay;
        for (const auto& d : candidates) {
            std::vector<Rational> moved = nu;
            for (std::size_t c = 0; c < nu.size(); ++c)
                if (act[c]) moved[c] = nu[c] + d;
            if (region_of(moved, g.caps, act) == want) {
                delay = d;
                nu = moved;
                break;
            }
        }
        if (!delay) throw Infeasible("no delay realizes region " + to_string(want));
        const NtaTransition& t = n.transitions[e.transition];
        for (const auto& gd : t.guards)
            if (!gd.interval.contains(nu[n.copy_id(gd.clock, gd.copy)]))
                throw Infeasible("guard violated while concretizing the witness");
        now = now + *delay;
        w.push_back({n.alphabet[t.letter], now});
        for (const auto& [x, i] : t.resets) nu[n.copy_id(x, i)] = Rational(0);
        act = active_mask(n, n.locations[t.target]);
        for (std::size_t c = 0; c < nu.size(); ++c)
            if (!act[c]) nu[c] = Rational(0);
    }
    return w;
}

std::string region_graph_to_dot(const Nta& n, const RegionGraph& g) {
    std::ostringstream out;
    out << "digraph regions {\n  node [shape=box];\n  init [shape=point];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out << "  r" << i << " [label=\"l" << g.nodes[i].location << " " << to_string(g.nodes[i].region) << "\"";
        if (n.accepting[g.nodes[i].location]) out << ", peripheries=2";
        out << "];\n";
    }
    out << "  init -> r" << g.initial << ";\n";
    for (const auto& e : g.edges) {
        out << "  r" << e.from << " -> r" << e.to;
        if (e.transition < 0)
            out << " [style=dashed]";
        else
            out << " [label=\"" << n.alphabet[n.transitions[e.transition].letter] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace tptl

#include "tptl/nta.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "tptl/errors.hpp"

namespace tptl {

bool NtaLocation::is_empty() const {
    return std::none_of(L.begin(), L.end(), [](const auto& e) { return e.has_value(); });
}

std::vector<std::int64_t> Nta::max_constants() const {
    std::vector<std::int64_t> c(clocks.size(), 0);
    for (const auto& t : transitions)
        for (const auto& g : t.guards) c[g.clock] = std::max(c[g.clock], g.interval.max_constant());
    return c;
}

int Nta::letter_index(const std::string& sym) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), sym);
    if (it != alphabet.end()) return static_cast<int>(it - alphabet.begin());
    it = std::find(alphabet.begin(), alphabet.end(), kOtherLetter);
    return it == alphabet.end() ? -1 : static_cast<int>(it - alphabet.begin());
}

// ============================================================================
// Construction
// ============================================================================

namespace {

struct Candidate {
    int origin;  // ATA location whose clause spawned it
    ClockMask resets;
};

class Subsetizer {
public:
    Subsetizer(const Ata& a, const SubsetizeOptions& opts) : a_(a), opts_(opts) {
        if (a.partition) {
            side_ = *a.partition;
        } else {
            try {
                side_ = validate_unilateral(a);
            } catch (const NoValidPartition& e) {
                throw NotUnilateral(e.what());
            }
        }
        VwataReport vw = validate_vwata(a);
        if (!vw.ok && a.num_clocks() > 1) throw NotVeryWeak("automaton is not very weak: " + vw.detail);
        dnf_.resize(a.num_locations());
        for (int q = 0; q < a.num_locations(); ++q)
            for (const auto& tf : a.delta[q]) dnf_[q].push_back(to_dnf(tf, opts.clause_cap));
        n_.clocks = a.clocks;
        n_.alphabet = a.alphabet;
        n_.ata_locations = a.locations;
        n_.copies_per_clock = std::max(1, a.num_locations());
    }

    Nta run() {
        NtaLocation init;
        init.L.assign(a_.num_locations(), std::nullopt);
        init.L[a_.initial] = std::vector<int>(a_.num_clocks(), 0);
        init.act.assign(a_.num_clocks(), std::vector<int>{0});
        n_.initial = intern(init);
        std::set<NtaTransition> seen;
        for (std::size_t i = 0; i < queue_.size(); ++i) {
            const int src = queue_[i];
            for (int l = 0; l < static_cast<int>(a_.alphabet.size()); ++l) {
                for (auto& t : expand(src, l))
                    if (seen.insert(t).second) n_.transitions.push_back(std::move(t));
            }
        }
        std::sort(n_.transitions.begin(), n_.transitions.end());
        n_.outgoing.assign(n_.locations.size(), {});
        for (std::size_t t = 0; t < n_.transitions.size(); ++t)
            n_.outgoing[n_.transitions[t].source].push_back(static_cast<int>(t));
        return std::move(n_);
    }

private:
    int intern(const NtaLocation& loc) {
        auto it = index_.find(loc);
        if (it != index_.end()) return it->second;
        if (n_.locations.size() >= opts_.location_cap)
            throw StateCapExceeded("timed automaton exceeds " + std::to_string(opts_.location_cap) + " locations");
        int id = static_cast<int>(n_.locations.size());
        n_.locations.push_back(loc);
        bool acc = true;
        for (int q = 0; q < a_.num_locations(); ++q)
            if (loc.L[q] && !a_.accepting[q]) acc = false;
        n_.accepting.push_back(acc);
        index_.emplace(loc, id);
        queue_.push_back(id);
        return id;
    }

    // position of a copy in Act(x); fresh copies come after every live one
    static std::size_t age_rank(const NtaLocation& src, int x, const std::optional<int>& copy) {
        if (!copy) return src.act[x].size();
        auto it = std::find(src.act[x].begin(), src.act[x].end(), *copy);
        return static_cast<std::size_t>(it - src.act[x].begin());
    }

    std::vector<std::size_t> ranks(const NtaLocation& src, const Candidate& c) const {
        std::vector<std::size_t> r;
        for (int x = 0; x < a_.num_clocks(); ++x) {
            std::optional<int> copy;
            if (!(c.resets & (1u << x))) copy = (*src.L[c.origin])[x];
            r.push_back(age_rank(src, x, copy));
        }
        return r;
    }

    // Of several candidates for one location keep the one the reduction keeps:
    // the largest valuation on the Le side, the smallest on the Ge side.
    Candidate resolve(const NtaLocation& src, int p, const std::vector<Candidate>& cands) const {
        if (cands.size() == 1) return cands[0];
        // a smaller rank means an older copy, hence a value at least as large
        auto larger_eq = [&](const std::vector<std::size_t>& u, const std::vector<std::size_t>& v) {
            for (std::size_t i = 0; i < u.size(); ++i)
                if (u[i] > v[i]) return false;
            return true;
        };
        std::vector<std::vector<std::size_t>> rs;
        for (const auto& c : cands) rs.push_back(ranks(src, c));
        for (std::size_t i = 0; i < cands.size(); ++i) {
            bool best = true;
            for (std::size_t j = 0; j < cands.size() && best; ++j) {
                if (i == j) continue;
                best = side_[p] == Side::Le ? larger_eq(rs[i], rs[j]) : larger_eq(rs[j], rs[i]);
            }
            if (best) return cands[i];
        }
        throw std::logic_error("incomparable copies of location " + a_.locations[p] + " in one configuration");
    }

    std::vector<NtaTransition> expand(int src_id, int letter) {
        const NtaLocation src = n_.locations[src_id];
        std::vector<int> present;
        for (int q = 0; q < a_.num_locations(); ++q)
            if (src.L[q]) present.push_back(q);
        std::vector<const std::vector<Clause>*> options;
        for (int q : present) {
            options.push_back(&dnf_[q][letter]);
            if (options.back()->empty()) return {};
        }
        std::vector<NtaTransition> out;
        std::vector<std::size_t> pick(present.size(), 0);
        while (true) {
            if (auto t = combine(src_id, src, present, options, pick, letter)) out.push_back(std::move(*t));
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < options[i]->size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
        return out;
    }

    std::optional<NtaTransition> combine(int src_id, const NtaLocation& src, const std::vector<int>& present,
                                         const std::vector<const std::vector<Clause>*>& options,
                                         const std::vector<std::size_t>& pick, int letter) {
        const int nx = a_.num_clocks();
        NtaTransition t{src_id, letter, {}, {}, -1};
        std::map<int, std::vector<Candidate>> cands;
        for (std::size_t i = 0; i < present.size(); ++i) {
            const int q = present[i];
            const Clause& c = (*options[i])[pick[i]];
            for (const auto& [x, iv] : c.guards) t.guards.push_back({x, (*src.L[q])[x], iv});
            for (const auto& [p, m] : c.targets) cands[p].push_back({q, m});
        }
        std::sort(t.guards.begin(), t.guards.end());
        t.guards.erase(std::unique(t.guards.begin(), t.guards.end()), t.guards.end());
        std::map<std::pair<int, int>, Interval> meet;
        for (const auto& g : t.guards) {
            auto key = std::make_pair(g.clock, g.copy);
            auto it = meet.find(key);
            if (it == meet.end()) {
                meet.emplace(key, g.interval);
            } else {
                auto both = it->second.intersect(g.interval);
                if (!both) return std::nullopt;
                it->second = *both;
            }
        }

        std::map<int, Candidate> chosen;
        for (const auto& [p, cs] : cands) chosen.emplace(p, resolve(src, p, cs));

        NtaLocation dst;
        dst.L.assign(a_.num_locations(), std::nullopt);
        dst.act.assign(nx, {});
        for (const auto& [p, c] : chosen) dst.L[p] = std::vector<int>(nx, -1);
        for (int x = 0; x < nx; ++x) {
            std::set<int> kept;
            std::set<int> reusable;
            bool fresh = false;
            for (const auto& [p, c] : chosen) {
                int parent_copy = (*src.L[c.origin])[x];
                if (c.resets & (1u << x)) {
                    fresh = true;
                    reusable.insert(parent_copy);
                } else {
                    kept.insert(parent_copy);
                }
            }
            int fresh_copy = -1;
            if (fresh) {
                if (kept.empty()) {
                    fresh_copy = 0;
                } else {
                    for (int r : reusable)
                        if (!kept.count(r)) {
                            fresh_copy = r;
                            break;
                        }
                    if (fresh_copy < 0) {
                        fresh_copy = 0;
                        while (kept.count(fresh_copy)) ++fresh_copy;
                    }
                }
                t.resets.push_back({x, fresh_copy});
            }
            for (int i : src.act[x])
                if (kept.count(i)) dst.act[x].push_back(i);
            if (fresh) dst.act[x].push_back(fresh_copy);
            for (const auto& [p, c] : chosen)
                (*dst.L[p])[x] = (c.resets & (1u << x)) ? fresh_copy : (*src.L[c.origin])[x];
        }
        t.target = intern(dst);
        return t;
    }

    const Ata& a_;
    SubsetizeOptions opts_;
    std::vector<Side> side_;
    std::vector<std::vector<std::vector<Clause>>> dnf_;
    Nta n_;
    std::map<NtaLocation, int> index_;
    std::vector<int> queue_;
};

}  // namespace

Nta subsetize(const Ata& a, const SubsetizeOptions& opts) { return Subsetizer(a, opts).run(); }

// ============================================================================
// Acceptance
// ============================================================================

namespace {

class NtaSearch {
public:
    NtaSearch(const Nta& n, const TimedWord& w) : n_(n), w_(w) {
        for (const auto& e : w.entries()) {
            int l = n.letter_index(e.symbol);
            if (l < 0) throw std::invalid_argument("symbol '" + e.symbol + "' is not in the automaton's alphabet");
            letters_.push_back(l);
        }
    }

    bool search(std::size_t pos, int loc, const std::vector<Rational>& v) {
        if (pos == w_.size()) return n_.accepting[loc];
        auto key = std::make_tuple(pos, loc, v);
        if (failed_.count(key)) return false;
        const Rational d = w_.delay(pos + 1);
        for (int ti : n_.outgoing[loc]) {
            const NtaTransition& t = n_.transitions[ti];
            if (t.letter != letters_[pos]) continue;
            bool ok = true;
            for (const auto& g : t.guards)
                if (!g.interval.contains(v[n_.copy_id(g.clock, g.copy)] + d)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<Rational> next(v.size(), Rational(0));
            const NtaLocation& dst = n_.locations[t.target];
            for (int x = 0; x < n_.num_clocks(); ++x)
                for (int i : dst.act[x]) next[n_.copy_id(x, i)] = v[n_.copy_id(x, i)] + d;
            for (const auto& [x, i] : t.resets) next[n_.copy_id(x, i)] = Rational(0);
            if (search(pos + 1, t.target, next)) return true;
        }
        failed_.insert(key);
        return false;
    }

private:
    const Nta& n_;
    const TimedWord& w_;
    std::vector<int> letters_;
    std::set<std::tuple<std::size_t, int, std::vector<Rational>>> failed_;
};

long double saturating_pow(long double b, long double e) {
    long double r = std::pow(b, e);
    return std::isfinite(r) ? r : std::numeric_limits<long double>::max();
}

long double factorial(std::size_t n) {
    long double r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= static_cast<long double>(i);
    return std::isfinite(r) ? r : std::numeric_limits<long double>::max();
}

long double saturating_mul(long double a, long double b) {
    long double r = a * b;
    return std::isfinite(r) ? r : std::numeric_limits<long double>::max();
}

}  // namespace

bool nta_accepts(const Nta& n, const TimedWord& w) {
    NtaSearch s(n, w);
    return s.search(0, n.initial, std::vector<Rational>(n.num_copies(), Rational(0)));
}

// ============================================================================
// Statistics and serialization
// ============================================================================

NtaStats nta_stats(const Nta& n) {
    NtaStats s;
    s.locations = n.locations.size();
    s.transitions = n.transitions.size();
    std::set<std::pair<int, int>> used;
    for (const auto& l : n.locations)
        for (int x = 0; x < n.num_clocks(); ++x) {
            s.max_active = std::max(s.max_active, l.act[x].size());
            for (int i : l.act[x]) used.insert({x, i});
        }
    s.copies_used = used.size();
    const std::size_t q = n.ata_locations.size();
    const std::size_t x = n.clocks.size();
    s.copy_bound = q * x;
    long double per = saturating_mul(saturating_pow(static_cast<long double>(x), static_cast<long double>(q)) + 1,
                                     saturating_pow(factorial(q), static_cast<long double>(x)));
    s.worst_case_locations = saturating_mul(static_cast<long double>(q), per);
    std::int64_t cmax = 0;
    for (auto c : n.max_constants()) cmax = std::max(cmax, c);
    s.region_bound = saturating_mul(saturating_mul(s.worst_case_locations, factorial(q * x)),
                                    2.0L * static_cast<long double>(cmax + 1));
    return s;
}

nlohmann::json NtaStats::to_json() const {
    return {{"locations", locations},
            {"transitions", transitions},
            {"copies_used", copies_used},
            {"max_active", max_active},
            {"copy_bound", copy_bound},
            {"worst_case_locations", static_cast<double>(worst_case_locations)},
            {"region_bound", static_cast<double>(region_bound)}};
}

std::string to_string(const NtaLocation& l, const Nta& n) {
    std::string s = "{";
    bool first = true;
    for (std::size_t q = 0; q < l.L.size(); ++q) {
        if (!l.L[q]) continue;
        s += first ? "" : ", ";
        first = false;
        s += "(" + n.ata_locations.at(q);
        for (int x = 0; x < n.num_clocks(); ++x) s += ", (" + n.clocks[x] + "," + std::to_string((*l.L[q])[x]) + ")";
        s += ")";
    }
    for (int x = 0; x < n.num_clocks(); ++x) {
        s += "; Act(" + n.clocks[x] + ")=[";
        for (std::size_t i = 0; i < l.act[x].size(); ++i) s += (i ? "," : "") + std::to_string(l.act[x][i]);
        s += "]";
    }
    return s + "}";
}

nlohmann::json nta_to_json(const Nta& n) {
    nlohmann::json j;
    j["clocks"] = n.clocks;
    j["alphabet"] = n.alphabet;
    j["ata_locations"] = n.ata_locations;
    j["copies_per_clock"] = n.copies_per_clock;
    j["initial"] = n.initial;
    nlohmann::json locs = nlohmann::json::array();
    for (std::size_t i = 0; i < n.locations.size(); ++i) {
        const auto& l = n.locations[i];
        nlohmann::json entries = nlohmann::json::array();
        for (std::size_t q = 0; q < l.L.size(); ++q)
            if (l.L[q]) entries.push_back({{"loc", n.ata_locations[q]}, {"copies", *l.L[q]}});
        nlohmann::json act = nlohmann::json::object();
        for (int x = 0; x < n.num_clocks(); ++x) act[n.clocks[x]] = l.act[x];
        locs.push_back({{"id", i}, {"L", entries}, {"act", act}, {"accepting", static_cast<bool>(n.accepting[i])}});
    }
    j["locations"] = locs;
    nlohmann::json tr = nlohmann::json::array();
    for (const auto& t : n.transitions) {
        nlohmann::json guards = nlohmann::json::array();
        for (const auto& g : t.guards)
            guards.push_back({{"clock", n.clocks[g.clock]}, {"copy", g.copy}, {"interval", g.interval.to_string()}});
        nlohmann::json resets = nlohmann::json::array();
        for (const auto& [x, i] : t.resets) resets.push_back({{"clock", n.clocks[x]}, {"copy", i}});
        tr.push_back({{"source", t.source},
                      {"letter", n.alphabet[t.letter]},
                      {"guards", guards},
                      {"resets", resets},
                      {"target", t.target}});
    }
    j["transitions"] = tr;
    return j;
}

Nta nta_from_json(const nlohmann::json& j) {
    Nta n;
    n.clocks = j.at("clocks").get<std::vector<std::string>>();
    n.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    n.ata_locations = j.at("ata_locations").get<std::vector<std::string>>();
    n.copies_per_clock = j.at("copies_per_clock").get<int>();
    n.initial = j.at("initial").get<int>();
    auto index_of = [](const std::vector<std::string>& v, const std::string& s) {
        auto it = std::find(v.begin(), v.end(), s);
        if (it == v.end()) throw std::invalid_argument("unknown name '" + s + "'");
        return static_cast<int>(it - v.begin());
    };
    for (const auto& lj : j.at("locations")) {
        NtaLocation l;
        l.L.assign(n.ata_locations.size(), std::nullopt);
        for (const auto& e : lj.at("L")) l.L[index_of(n.ata_locations, e.at("loc").get<std::string>())] = e.at("copies").get<std::vector<int>>();
        l.act.assign(n.clocks.size(), {});
        for (std::size_t x = 0; x < n.clocks.size(); ++x) l.act[x] = lj.at("act").at(n.clocks[x]).get<std::vector<int>>();
        n.locations.push_back(std::move(l));
        n.accepting.push_back(lj.at("accepting").get<bool>());
    }
    for (const auto& tj : j.at("transitions")) {
        NtaTransition t{tj.at("source").get<int>(), index_of(n.alphabet, tj.at("letter").get<std::string>()), {}, {},
                        tj.at("target").get<int>()};
        for (const auto& g : tj.at("guards"))
            t.guards.push_back({index_of(n.clocks, g.at("clock").get<std::string>()), g.at("copy").get<int>(),
                                Interval::parse(g.at("interval").get<std::string>())});
        for (const auto& r : tj.at("resets"))
            t.resets.push_back({index_of(n.clocks, r.at("clock").get<std::string>()), r.at("copy").get<int>()});
        n.transitions.push_back(std::move(t));
    }
    n.outgoing.assign(n.locations.size(), {});
    for (std::size_t t = 0; t < n.transitions.size(); ++t) n.outgoing[n.transitions[t].source].push_back(static_cast<int>(t));
    return n;
}

std::string nta_to_dot(const Nta& n) {
    std::ostringstream out;
    out << "digraph nta {\n  rankdir=LR;\n  node [shape=box];\n  init [shape=point];\n";
    for (std::size_t i = 0; i < n.locations.size(); ++i) {
        out << "  l" << i << " [label=\"" << i << ": " << to_string(n.locations[i], n) << "\"";
        if (n.accepting[i]) out << ", peripheries=2";
        out << "];\n";
    }
    out << "  init -> l" << n.initial << ";\n";
    for (const auto& t : n.transitions) {
        std::string label = n.alphabet[t.letter];
        for (const auto& g : t.guards)
            label += ", (" + n.clocks[g.clock] + "," + std::to_string(g.copy) + ") in " + g.interval.to_string();
        if (!t.resets.empty()) {
            label += " / {";
            for (std::size_t k = 0; k < t.resets.size(); ++k)
                label += (k ? "," : "") + std::string("(") + n.clocks[t.resets[k].first] + "," + std::to_string(t.resets[k].second) + ")";
            label += "}";
        }
        out << "  l" << t.source << " -> l" << t.target << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace tptl

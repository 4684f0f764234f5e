#include "tptl/ata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tptl/errors.hpp"

namespace tptl {

bool operator==(const TransitionFormula& a, const TransitionFormula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const TransitionFormula& a, const TransitionFormula& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.loc <=> b.loc; c != 0) return c;
    if (auto c = a.resets <=> b.resets; c != 0) return c;
    if (auto c = a.clock <=> b.clock; c != 0) return c;
    if (auto c = a.interval <=> b.interval; c != 0) return c;
    return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
}

// ============================================================================
// Transition formulas
// ============================================================================

TransitionFormula TransitionFormula::top() { return {}; }

TransitionFormula TransitionFormula::bottom() {
    TransitionFormula t;
    t.kind = TfKind::Bottom;
    return t;
}

TransitionFormula TransitionFormula::location(int q) {
    TransitionFormula t;
    t.kind = TfKind::Loc;
    t.loc = q;
    return t;
}

TransitionFormula TransitionFormula::bind(ClockMask ys, int q) {
    if (ys == 0) return location(q);
    TransitionFormula t;
    t.kind = TfKind::Bind;
    t.loc = q;
    t.resets = ys;
    return t;
}

TransitionFormula TransitionFormula::guard(int x, Interval i) {
    TransitionFormula t;
    t.kind = TfKind::Guard;
    t.clock = x;
    t.interval = i;
    return t;
}

namespace {

TransitionFormula junction(TfKind kind, std::vector<TransitionFormula> parts) {
    const TfKind unit = kind == TfKind::And ? TfKind::Top : TfKind::Bottom;
    const TfKind zero = kind == TfKind::And ? TfKind::Bottom : TfKind::Top;
    std::vector<TransitionFormula> flat;
    for (auto& p : parts) {
        if (p.kind == unit) continue;
        if (p.kind == zero) return zero == TfKind::Top ? TransitionFormula::top() : TransitionFormula::bottom();
        if (p.kind == kind) {
            for (auto& q : p.args) flat.push_back(std::move(q));
        } else {
            flat.push_back(std::move(p));
        }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return unit == TfKind::Top ? TransitionFormula::top() : TransitionFormula::bottom();
    if (flat.size() == 1) return flat[0];
    TransitionFormula t;
    t.kind = kind;
    t.args = std::move(flat);
    return t;
}

void visit_atoms(const TransitionFormula& tf, const std::function<void(const TransitionFormula&)>& fn) {
    if (tf.kind == TfKind::And || tf.kind == TfKind::Or) {
        for (const auto& a : tf.args) visit_atoms(a, fn);
    } else {
        fn(tf);
    }
}

std::string mask_names(ClockMask m, const Ata& a) {
    std::string s;
    for (int i = 0; i < a.num_clocks(); ++i)
        if (m & (1u << i)) s += (s.empty() ? "" : ",") + a.clocks[i];
    return s;
}

}  // namespace

TransitionFormula TransitionFormula::conj(std::vector<TransitionFormula> parts) {
    return junction(TfKind::And, std::move(parts));
}

TransitionFormula TransitionFormula::disj(std::vector<TransitionFormula> parts) {
    return junction(TfKind::Or, std::move(parts));
}

std::string to_string(const TransitionFormula& tf, const Ata& a) {
    switch (tf.kind) {
        case TfKind::Top: return "true";
        case TfKind::Bottom: return "false";
        case TfKind::Loc: return a.locations.at(tf.loc);
        case TfKind::Bind: return "{" + mask_names(tf.resets, a) + "}." + a.locations.at(tf.loc);
        case TfKind::Guard: return a.clocks.at(tf.clock) + " in " + tf.interval.to_string();
        case TfKind::And:
        case TfKind::Or: {
            std::string s = "(";
            for (std::size_t i = 0; i < tf.args.size(); ++i) {
                if (i) s += tf.kind == TfKind::And ? " & " : " | ";
                s += to_string(tf.args[i], a);
            }
            return s + ")";
        }
    }
    return "?";
}

// ============================================================================
// Automaton helpers
// ============================================================================

int Ata::location_index(const std::string& name) const {
    auto it = std::find(locations.begin(), locations.end(), name);
    return it == locations.end() ? -1 : static_cast<int>(it - locations.begin());
}

int Ata::clock_index(const std::string& name) const {
    auto it = std::find(clocks.begin(), clocks.end(), name);
    return it == clocks.end() ? -1 : static_cast<int>(it - clocks.begin());
}

int Ata::letter_index(const std::string& sym) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), sym);
    if (it != alphabet.end()) return static_cast<int>(it - alphabet.begin());
    it = std::find(alphabet.begin(), alphabet.end(), kOtherLetter);
    return it == alphabet.end() ? -1 : static_cast<int>(it - alphabet.begin());
}

std::vector<std::pair<int, Interval>> Ata::guards() const {
    std::set<std::pair<int, Interval>> out;
    for (const auto& row : delta)
        for (const auto& tf : row)
            visit_atoms(tf, [&](const TransitionFormula& t) {
                if (t.kind == TfKind::Guard) out.insert({t.clock, t.interval});
            });
    return {out.begin(), out.end()};
}

std::vector<std::int64_t> Ata::max_constants() const {
    std::vector<std::int64_t> c(clocks.size(), 0);
    for (const auto& [x, i] : guards()) c[x] = std::max(c[x], i.max_constant());
    return c;
}

// ============================================================================
// DNF
// ============================================================================

namespace {

using ClauseList = std::vector<Clause>;

void canonicalize(Clause& c) {
    std::sort(c.guards.begin(), c.guards.end());
    c.guards.erase(std::unique(c.guards.begin(), c.guards.end()), c.guards.end());
    std::sort(c.targets.begin(), c.targets.end());
    c.targets.erase(std::unique(c.targets.begin(), c.targets.end()), c.targets.end());
}

bool satisfiable(const Clause& c) {
    std::map<int, Interval> meet;
    for (const auto& [x, i] : c.guards) {
        if (i.is_empty()) return false;
        auto it = meet.find(x);
        if (it == meet.end()) {
            meet.emplace(x, i);
        } else {
            auto both = it->second.intersect(i);
            if (!both) return false;
            it->second = *both;
        }
    }
    return true;
}

bool subsumes(const Clause& small, const Clause& big) {
    return std::includes(big.guards.begin(), big.guards.end(), small.guards.begin(), small.guards.end()) &&
           std::includes(big.targets.begin(), big.targets.end(), small.targets.begin(), small.targets.end());
}

ClauseList dnf_rec(const TransitionFormula& tf, std::size_t cap) {
    switch (tf.kind) {
        case TfKind::Top: return {Clause{}};
        case TfKind::Bottom: return {};
        case TfKind::Loc:
        case TfKind::Bind: return {Clause{{}, {{tf.loc, tf.resets}}}};
        case TfKind::Guard: return {Clause{{{tf.clock, tf.interval}}, {}}};
        case TfKind::Or: {
            ClauseList out;
            for (const auto& a : tf.args) {
                ClauseList part = dnf_rec(a, cap);
                out.insert(out.end(), part.begin(), part.end());
                if (out.size() > cap) throw DnfBlowupLimit("DNF exceeds " + std::to_string(cap) + " clauses");
            }
            return out;
        }
        case TfKind::And: {
            ClauseList acc{Clause{}};
            for (const auto& a : tf.args) {
                ClauseList part = dnf_rec(a, cap);
                ClauseList next;
                for (const auto& l : acc)
                    for (const auto& r : part) {
                        Clause c = l;
                        c.guards.insert(c.guards.end(), r.guards.begin(), r.guards.end());
                        c.targets.insert(c.targets.end(), r.targets.begin(), r.targets.end());
                        canonicalize(c);
                        if (!satisfiable(c)) continue;
                        next.push_back(std::move(c));
                        if (next.size() > cap) throw DnfBlowupLimit("DNF exceeds " + std::to_string(cap) + " clauses");
                    }
                acc = std::move(next);
            }
            return acc;
        }
    }
    return {};
}

}  // namespace

std::vector<Clause> to_dnf(const TransitionFormula& tf, std::size_t cap) {
    ClauseList raw = dnf_rec(tf, cap);
    for (auto& c : raw) canonicalize(c);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    ClauseList out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!satisfiable(raw[i])) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < raw.size() && !dominated; ++j)
            if (j != i && satisfiable(raw[j]) && subsumes(raw[j], raw[i])) dominated = true;
        if (!dominated) out.push_back(raw[i]);
    }
    return out;
}

// ============================================================================
// Validation
// ============================================================================

namespace {

struct Edge {
    int from;
    int to;
    ClockMask resets;
    bool bind;
    int letter;
};

std::vector<Edge> edges_of(const Ata& a) {
    std::vector<Edge> out;
    for (int q = 0; q < a.num_locations(); ++q)
        for (std::size_t l = 0; l < a.delta[q].size(); ++l)
            visit_atoms(a.delta[q][l], [&](const TransitionFormula& t) {
                if (t.kind == TfKind::Loc || t.kind == TfKind::Bind)
                    out.push_back({q, t.loc, t.resets, t.kind == TfKind::Bind, static_cast<int>(l)});
            });
    return out;
}

}  // namespace

VwataReport validate_vwata(const Ata& a) {
    VwataReport rep;
    const int n = a.num_locations();
    auto edges = edges_of(a);

    // (1) acyclic apart from self-loops
    std::vector<std::vector<int>> succ(n);
    for (const auto& e : edges)
        if (e.from != e.to) succ[e.from].push_back(e.to);
    std::vector<int> color(n, 0);
    std::vector<int> stack;
    std::function<bool(int)> dfs = [&](int v) {
        color[v] = 1;
        stack.push_back(v);
        for (int w : succ[v]) {
            if (color[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                for (; it != stack.end(); ++it) rep.witnesses.push_back(a.locations[*it]);
                rep.witnesses.push_back(a.locations[w]);
                return true;
            }
            if (color[w] == 0 && dfs(w)) return true;
        }
        stack.pop_back();
        color[v] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v) {
        if (color[v] == 0 && dfs(v)) {
            rep.ok = false;
            rep.violated_condition = 1;
            rep.detail = "transition graph has a cycle through distinct locations";
            return rep;
        }
    }

    // (2) self-loops reset nothing
    for (const auto& e : edges) {
        if (e.from == e.to && e.bind) {
            rep.ok = false;
            rep.violated_condition = 2;
            rep.detail = "self-loop on " + a.locations[e.from] + " resets clocks";
            rep.witnesses = {a.locations[e.from], a.alphabet.at(e.letter)};
            return rep;
        }
    }

    // (3) one parent per location, one reset set per parent edge
    std::vector<std::set<int>> parents(n);
    std::vector<std::set<ClockMask>> resets(n);
    for (const auto& e : edges) {
        if (e.from == e.to) continue;
        parents[e.to].insert(e.from);
        resets[e.to].insert(e.resets);
    }
    for (int q = 0; q < n; ++q) {
        if (parents[q].size() > 1) {
            rep.ok = false;
            rep.violated_condition = 3;
            rep.detail = "location " + a.locations[q] + " has several parents";
            rep.witnesses.push_back(a.locations[q]);
            for (int p : parents[q]) rep.witnesses.push_back(a.locations[p]);
            return rep;
        }
        if (resets[q].size() > 1) {
            rep.ok = false;
            rep.violated_condition = 3;
            rep.detail = "transitions into " + a.locations[q] + " reset different clock sets";
            rep.witnesses.push_back(a.locations[q]);
            return rep;
        }
    }
    return rep;
}

std::vector<Side> validate_unilateral(const Ata& a) {
    const int n = a.num_locations();
    std::vector<std::optional<Side>> forced(n);
    for (int q = 0; q < n; ++q) {
        for (std::size_t l = 0; l < a.delta[q].size(); ++l) {
            visit_atoms(a.delta[q][l], [&](const TransitionFormula& t) {
                if (t.kind != TfKind::Guard) return;
                std::string where = "guard " + a.clocks.at(t.clock) + " in " + t.interval.to_string() + " leaving " +
                                    a.locations[q] + " on " + a.alphabet.at(l);
                Side s;
                if (t.interval.is_ge_type()) {
                    s = Side::Ge;
                } else if (t.interval.is_le_type()) {
                    s = Side::Le;
                } else {
                    throw NoValidPartition(where + " is neither upper-bounded from 0 nor unbounded");
                }
                if (forced[q] && *forced[q] != s) throw NoValidPartition(where + " conflicts with another guard of opposite side");
                forced[q] = s;
            });
        }
    }
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    const ClockMask all = a.num_clocks() == 0 ? 0 : (a.num_clocks() == 32 ? ~0u : (1u << a.num_clocks()) - 1);
    std::vector<Edge> weak;
    for (const auto& e : edges_of(a)) {
        if (e.from == e.to || e.resets == all) continue;
        weak.push_back(e);
        parent[find(e.from)] = find(e.to);
    }
    std::vector<std::optional<Side>> comp(n);
    std::vector<int> witness(n, -1);
    for (int q = 0; q < n; ++q) {
        if (!forced[q]) continue;
        int r = find(q);
        if (comp[r] && *comp[r] != *forced[q]) {
            throw NoValidPartition("locations " + a.locations[witness[r]] + " and " + a.locations[q] +
                                   " need opposite sides but are joined by transitions that do not reset every clock");
        }
        comp[r] = forced[q];
        witness[r] = q;
    }
    std::vector<Side> out(n);
    for (int q = 0; q < n; ++q) out[q] = comp[find(q)].value_or(Side::Ge);
    return out;
}

// ============================================================================
// JSON and DOT
// ============================================================================

namespace {

nlohmann::json clocks_json(ClockMask m, const Ata& a) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < a.num_clocks(); ++i)
        if (m & (1u << i)) j.push_back(a.clocks[i]);
    return j;
}

nlohmann::json tf_to_json(const TransitionFormula& tf, const Ata& a) {
    switch (tf.kind) {
        case TfKind::Top: return {{"op", "true"}};
        case TfKind::Bottom: return {{"op", "false"}};
        case TfKind::Loc: return {{"op", "loc"}, {"loc", a.locations.at(tf.loc)}};
        case TfKind::Bind: return {{"op", "bind"}, {"clocks", clocks_json(tf.resets, a)}, {"loc", a.locations.at(tf.loc)}};
        case TfKind::Guard:
            return {{"op", "guard"}, {"clock", a.clocks.at(tf.clock)}, {"interval", tf.interval.to_string()}};
        case TfKind::And:
        case TfKind::Or: {
            nlohmann::json args = nlohmann::json::array();
            for (const auto& x : tf.args) args.push_back(tf_to_json(x, a));
            return {{"op", tf.kind == TfKind::And ? "and" : "or"}, {"args", args}};
        }
    }
    return {};
}

int lookup(const std::vector<std::string>& names, const std::string& n, const char* what) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw std::invalid_argument(std::string("unknown ") + what + " '" + n + "'");
    return static_cast<int>(it - names.begin());
}

TransitionFormula tf_from_json(const nlohmann::json& j, const Ata& a) {
    std::string op = j.at("op").get<std::string>();
    if (op == "true") return TransitionFormula::top();
    if (op == "false") return TransitionFormula::bottom();
    if (op == "loc") return TransitionFormula::location(lookup(a.locations, j.at("loc").get<std::string>(), "location"));
    if (op == "bind") {
        ClockMask m = 0;
        for (const auto& c : j.at("clocks")) m |= 1u << lookup(a.clocks, c.get<std::string>(), "clock");
        TransitionFormula t;
        t.kind = TfKind::Bind;
        t.loc = lookup(a.locations, j.at("loc").get<std::string>(), "location");
        t.resets = m;
        if (m == 0) throw std::invalid_argument("bind with an empty clock set");
        return t;
    }
    if (op == "guard")
        return TransitionFormula::guard(lookup(a.clocks, j.at("clock").get<std::string>(), "clock"),
                                        Interval::parse(j.at("interval").get<std::string>()));
    if (op == "and" || op == "or") {
        TransitionFormula t;
        t.kind = op == "and" ? TfKind::And : TfKind::Or;
        for (const auto& x : j.at("args")) t.args.push_back(tf_from_json(x, a));
        return t;
    }
    throw std::invalid_argument("unknown transition formula op '" + op + "'");
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

nlohmann::json ata_to_json(const Ata& a) {
    nlohmann::json j;
    j["locations"] = a.locations;
    j["alphabet"] = a.alphabet;
    j["clocks"] = a.clocks;
    j["initial"] = a.locations.at(a.initial);
    nlohmann::json acc = nlohmann::json::array();
    for (int q = 0; q < a.num_locations(); ++q)
        if (a.accepting[q]) acc.push_back(a.locations[q]);
    j["accepting"] = acc;
    if (a.partition) {
        nlohmann::json ge = nlohmann::json::array(), le = nlohmann::json::array();
        for (int q = 0; q < a.num_locations(); ++q) ((*a.partition)[q] == Side::Ge ? ge : le).push_back(a.locations[q]);
        j["partition"] = {{"ge", ge}, {"le", le}};
    } else {
        j["partition"] = nullptr;
    }
    nlohmann::json tr = nlohmann::json::array();
    for (int q = 0; q < a.num_locations(); ++q)
        for (std::size_t l = 0; l < a.alphabet.size(); ++l)
            tr.push_back({{"loc", a.locations[q]}, {"sym", a.alphabet[l]}, {"formula", tf_to_json(a.delta[q][l], a)}});
    j["transitions"] = tr;
    return j;
}

Ata ata_from_json(const nlohmann::json& j) {
    Ata a;
    a.locations = j.at("locations").get<std::vector<std::string>>();
    a.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    a.clocks = j.at("clocks").get<std::vector<std::string>>();
    if (a.clocks.size() > kMaxClocks) throw std::invalid_argument("too many clocks");
    a.initial = lookup(a.locations, j.at("initial").get<std::string>(), "location");
    a.accepting.assign(a.locations.size(), false);
    for (const auto& q : j.at("accepting")) a.accepting[lookup(a.locations, q.get<std::string>(), "location")] = true;
    if (j.contains("partition") && !j["partition"].is_null()) {
        std::vector<Side> p(a.locations.size(), Side::Ge);
        for (const auto& q : j["partition"].at("le")) p[lookup(a.locations, q.get<std::string>(), "location")] = Side::Le;
        a.partition = p;
    }
    a.delta.assign(a.locations.size(), std::vector<TransitionFormula>(a.alphabet.size(), TransitionFormula::bottom()));
    for (const auto& t : j.at("transitions")) {
        int q = lookup(a.locations, t.at("loc").get<std::string>(), "location");
        int l = lookup(a.alphabet, t.at("sym").get<std::string>(), "letter");
        a.delta[q][l] = tf_from_json(t.at("formula"), a);
    }
    return a;
}

std::string ata_to_dot(const Ata& a) {
    std::ostringstream out;
    out << "digraph ata {\n  rankdir=LR;\n  init [shape=point];\n";
    for (int q = 0; q < a.num_locations(); ++q) {
        out << "  q" << q << " [label=\"" << dot_escape(a.locations[q]) << "\", shape="
            << (a.accepting[q] ? "doublecircle" : "circle");
        if (a.partition) out << ", xlabel=\"" << ((*a.partition)[q] == Side::Le ? "<=" : ">=") << "\"";
        out << "];\n";
    }
    out << "  init -> q" << a.initial << ";\n";
    int junction = 0;
    for (int q = 0; q < a.num_locations(); ++q) {
        for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
            for (const auto& c : to_dnf(a.delta[q][l])) {
                std::string label = a.alphabet[l];
                for (const auto& [x, i] : c.guards) label += ", " + a.clocks[x] + " in " + i.to_string();
                if (c.targets.size() == 1) {
                    auto [p, m] = c.targets[0];
                    if (m) label += " / {" + mask_names(m, a) + "}";
                    out << "  q" << q << " -> q" << p << " [label=\"" << dot_escape(label) << "\"];\n";
                    continue;
                }
                if (c.targets.empty()) {
                    out << "  t" << junction << " [shape=box, label=\"true\"];\n";
                    out << "  q" << q << " -> t" << junction << " [label=\"" << dot_escape(label) << "\"];\n";
                    ++junction;
                    continue;
                }
                out << "  j" << junction << " [shape=point];\n";
                out << "  q" << q << " -> j" << junction << " [arrowhead=none, label=\"" << dot_escape(label) << "\"];\n";
                for (const auto& [p, m] : c.targets) {
                    out << "  j" << junction << " -> q" << p;
                    if (m) out << " [label=\"{" << dot_escape(mask_names(m, a)) << "}\"]";
                    out << ";\n";
                }
                ++junction;
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace tptl

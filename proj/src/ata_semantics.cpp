#include "tptl/ata_semantics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tptl {

Valuation delayed(const Valuation& nu, const Rational& t) {
    Valuation out = nu;
    for (auto& v : out) v += t;
    return out;
}

Valuation with_resets(Valuation nu, ClockMask ys) {
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (ys & (1u << i)) nu[i] = Rational(0);
    return nu;
}

Configuration make_configuration(std::vector<AtaState> states) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return states;
}

Configuration initial_configuration(const Ata& a) {
    return {AtaState{a.initial, Valuation(a.clocks.size(), Rational(0))}};
}

bool is_accepting(const Ata& a, const Configuration& c) {
    return std::all_of(c.begin(), c.end(), [&](const AtaState& s) { return a.accepting[s.loc]; });
}

std::string to_string(const Configuration& c, const Ata& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += "(" + a.locations.at(c[i].loc);
        for (std::size_t x = 0; x < c[i].nu.size(); ++x) out += ", " + a.clocks[x] + "=" + c[i].nu[x].to_string();
        out += ")";
    }
    return out + "}";
}

int letter_for(const Ata& a, const std::string& sym) {
    int l = a.letter_index(sym);
    if (l < 0) throw std::invalid_argument("symbol '" + sym + "' is not in the automaton's alphabet");
    return l;
}

// ============================================================================
// Minimal models
// ============================================================================

namespace {

using Models = std::vector<Configuration>;

bool subset_of(const Configuration& a, const Configuration& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Models antichain(Models ms) {
    std::sort(ms.begin(), ms.end(), [](const Configuration& x, const Configuration& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    Models out;
    for (auto& m : ms) {
        bool covered = false;
        for (const auto& k : out)
            if (subset_of(k, m)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Configuration merge(const Configuration& a, const Configuration& b) {
    Configuration out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<Configuration> minimal_models(const TransitionFormula& tf, const Valuation& nu) {
    switch (tf.kind) {
        case TfKind::Top: return {Configuration{}};
        case TfKind::Bottom: return {};
        case TfKind::Loc: return {Configuration{AtaState{tf.loc, nu}}};
        case TfKind::Bind: return {Configuration{AtaState{tf.loc, with_resets(nu, tf.resets)}}};
        case TfKind::Guard:
            if (tf.interval.contains(nu.at(tf.clock))) return {Configuration{}};
            return {};
        case TfKind::Or: {
            Models out;
            for (const auto& a : tf.args) {
                Models m = minimal_models(a, nu);
                out.insert(out.end(), m.begin(), m.end());
            }
            return antichain(std::move(out));
        }
        case TfKind::And: {
            Models acc{Configuration{}};
            for (const auto& a : tf.args) {
                Models m = minimal_models(a, nu);
                Models next;
                for (const auto& l : acc)
                    for (const auto& r : m) next.push_back(merge(l, r));
                acc = antichain(std::move(next));
                if (acc.empty()) break;
            }
            return acc;
        }
    }
    return {};
}

std::vector<SuccessorChoice> successor_choices(const Ata& a, const Configuration& c, const Rational& t, int letter) {
    std::vector<Models> options;
    for (const auto& s : c) {
        options.push_back(minimal_models(a.delta.at(s.loc).at(letter), delayed(s.nu, t)));
        if (options.back().empty()) return {};
    }
    std::vector<SuccessorChoice> out;
    std::vector<std::size_t> pick(c.size(), 0);
    while (true) {
        SuccessorChoice sc;
        for (std::size_t i = 0; i < c.size(); ++i) {
            sc.per_state.push_back(options[i][pick[i]]);
            sc.result = merge(sc.result, options[i][pick[i]]);
        }
        out.push_back(std::move(sc));
        std::size_t i = 0;
        for (; i < c.size(); ++i) {
            if (++pick[i] < options[i].size()) break;
            pick[i] = 0;
        }
        if (i == c.size()) break;
    }
    return out;
}

std::vector<Configuration> successors(const Ata& a, const Configuration& c, const Rational& t, int letter) {
    std::set<Configuration> seen;
    for (auto& sc : successor_choices(a, c, t, letter)) seen.insert(std::move(sc.result));
    return {seen.begin(), seen.end()};
}

// ============================================================================
// Acceptance
// ============================================================================

std::vector<Configuration> RunDag::levels() const {
    std::map<int, std::vector<AtaState>> by_level;
    int top = static_cast<int>(steps.size());
    for (const auto& n : nodes) by_level[n.level].push_back(n.state);
    std::vector<Configuration> out;
    for (int l = 0; l <= top; ++l) out.push_back(make_configuration(by_level[l]));
    return out;
}

namespace {

struct Step {
    Configuration from;
    SuccessorChoice choice;
};

RunDag build_dag(const Configuration& c0, const std::vector<Step>& steps, const TimedWord& w) {
    RunDag dag;
    std::map<AtaState, int> level_ids;
    for (const auto& s : c0) {
        level_ids[s] = static_cast<int>(dag.nodes.size());
        dag.nodes.push_back({0, s});
    }
    for (std::size_t k = 0; k < steps.size(); ++k) {
        std::map<AtaState, int> next_ids;
        const Step& st = steps[k];
        for (std::size_t i = 0; i < st.from.size(); ++i) {
            int parent = level_ids.at(st.from[i]);
            for (const auto& child : st.choice.per_state[i]) {
                auto it = next_ids.find(child);
                if (it == next_ids.end()) {
                    it = next_ids.emplace(child, static_cast<int>(dag.nodes.size())).first;
                    dag.nodes.push_back({static_cast<int>(k + 1), child});
                }
                dag.edges.push_back({parent, it->second});
            }
        }
        dag.steps.push_back({w.delay(k + 1), w.at(k + 1).symbol});
        level_ids = std::move(next_ids);
    }
    return dag;
}

class AcceptSearch {
public:
    AcceptSearch(const Ata& a, const TimedWord& w) : a_(a), w_(w) {
        for (const auto& e : w.entries()) letters_.push_back(letter_for(a, e.symbol));
    }

    bool search(std::size_t pos, const Configuration& c) {
        if (pos == w_.size()) return is_accepting(a_, c);
        if (failed_.count({pos, c})) return false;
        std::set<Configuration> tried;
        for (auto& sc : successor_choices(a_, c, w_.delay(pos + 1), letters_[pos])) {
            if (!tried.insert(sc.result).second) continue;
            Configuration next = sc.result;
            path_.push_back({c, std::move(sc)});
            if (search(pos + 1, next)) return true;
            path_.pop_back();
        }
        failed_.insert({pos, c});
        return false;
    }

    const std::vector<Step>& path() const { return path_; }

private:
    const Ata& a_;
    const TimedWord& w_;
    std::vector<int> letters_;
    std::set<std::pair<std::size_t, Configuration>> failed_;
    std::vector<Step> path_;
};

}  // namespace

AcceptResult ata_accepts(const Ata& a, const Configuration& c0, const TimedWord& w) {
    AcceptSearch s(a, w);
    AcceptResult r;
    Configuration start = make_configuration(c0);
    r.accepted = s.search(0, start);
    if (r.accepted) r.run = build_dag(start, s.path(), w);
    return r;
}

RunDag first_choice_run(const Ata& a, const Configuration& c0, const TimedWord& w) {
    std::vector<Step> steps;
    Configuration c = make_configuration(c0);
    for (std::size_t k = 1; k <= w.size(); ++k) {
        auto choices = successor_choices(a, c, w.delay(k), letter_for(a, w.at(k).symbol));
        if (choices.empty()) break;
        Configuration next = choices.front().result;
        steps.push_back({c, std::move(choices.front())});
        c = std::move(next);
    }
    return build_dag(make_configuration(c0), steps, w);
}

std::string export_run_dag(const RunDag& r, const Ata& a) {
    std::ostringstream out;
    out << "digraph run {\n  rankdir=TB;\n";
    std::map<int, std::vector<int>> by_level;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        const auto& n = r.nodes[i];
        by_level[n.level].push_back(static_cast<int>(i));
        out << "  n" << i << " [label=\"" << a.locations.at(n.state.loc);
        for (std::size_t x = 0; x < n.state.nu.size(); ++x)
            out << "\\n" << a.clocks.at(x) << "=" << n.state.nu[x].to_string();
        out << "\"];\n";
    }
    for (const auto& [level, ids] : by_level) {
        out << "  { rank=same;";
        for (int id : ids) out << " n" << id << ";";
        out << " }\n";
    }
    for (const auto& [from, to] : r.edges) {
        const auto& step = r.steps.at(r.nodes[from].level);
        out << "  n" << from << " -> n" << to << " [label=\"(" << step.first.to_string() << "," << step.second
            << ")\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace tptl

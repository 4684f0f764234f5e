#include "tptl/reduction.hpp"

#include <set>

#include "tptl/errors.hpp"

namespace tptl {

namespace {

bool pointwise_le(const Valuation& a, const Valuation& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

bool state_preceq(const AtaState& s, const AtaState& s2, const std::vector<Side>& partition) {
    if (s.loc != s2.loc) return false;
    return partition.at(s.loc) == Side::Le ? pointwise_le(s2.nu, s.nu) : pointwise_le(s.nu, s2.nu);
}

Configuration reduce_config(const Configuration& c, const std::vector<Side>& partition) {
    Configuration out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        bool dropped = false;
        for (std::size_t j = 0; j < c.size() && !dropped; ++j)
            if (i != j && state_preceq(c[j], c[i], partition)) dropped = true;
        if (!dropped) out.push_back(c[i]);
    }
    return out;
}

std::vector<Configuration> reduced_successors(const Ata& a, const Configuration& c, const Rational& t, int letter,
                                              const std::vector<Side>& partition) {
    std::set<Configuration> out;
    for (const auto& n : successors(a, c, t, letter)) out.insert(reduce_config(n, partition));
    return {out.begin(), out.end()};
}

bool reduced_accepts(const Ata& a, const Configuration& c0, const TimedWord& w, const std::vector<Side>& partition) {
    std::vector<int> letters;
    for (const auto& e : w.entries()) letters.push_back(letter_for(a, e.symbol));
    std::set<Configuration> layer{reduce_config(make_configuration(c0), partition)};
    for (std::size_t k = 0; k < w.size() && !layer.empty(); ++k) {
        std::set<Configuration> next;
        for (const auto& c : layer)
            for (auto& n : reduced_successors(a, c, w.delay(k + 1), letters[k], partition)) next.insert(std::move(n));
        layer = std::move(next);
    }
    for (const auto& c : layer)
        if (is_accepting(a, c)) return true;
    return false;
}

nlohmann::json BoundedRunReport::to_json(const Ata& a) const {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : violations)
        v.push_back({{"step", x.step}, {"location", a.locations.at(x.location)}, {"configuration", tptl::to_string(x.config, a)}});
    return {{"violations", v}, {"max_cardinality", max_cardinality}, {"configs_explored", configs_explored}};
}

BoundedRunReport check_bounded_run(const Ata& a, const TimedWord& w) {
    std::vector<Side> partition;
    try {
        partition = a.partition ? *a.partition : validate_unilateral(a);
    } catch (const NoValidPartition& e) {
        throw NotUnilateral(e.what());
    }
    VwataReport vw = validate_vwata(a);
    if (!vw.ok && a.num_clocks() > 1) throw NotVeryWeak("automaton is not very weak: " + vw.detail);

    BoundedRunReport rep;
    std::vector<int> letters;
    for (const auto& e : w.entries()) letters.push_back(letter_for(a, e.symbol));
    std::set<Configuration> layer{reduce_config(initial_configuration(a), partition)};
    rep.configs_explored = 1;
    rep.max_cardinality = layer.begin()->size();
    for (std::size_t k = 0; k < w.size() && !layer.empty(); ++k) {
        std::set<Configuration> next;
        for (const auto& c : layer)
            for (auto& n : reduced_successors(a, c, w.delay(k + 1), letters[k], partition)) next.insert(std::move(n));
        for (const auto& c : next) {
            ++rep.configs_explored;
            rep.max_cardinality = std::max(rep.max_cardinality, c.size());
            for (std::size_t i = 1; i < c.size(); ++i)
                if (c[i].loc == c[i - 1].loc) {
                    rep.violations.push_back({k + 1, c, c[i].loc});
                    break;
                }
        }
        layer = std::move(next);
    }
    return rep;
}

}  // namespace tptl

#include "tptl/fragment.hpp"

#include <map>

namespace tptl {

namespace {

enum Side : unsigned { kLe = 1, kGe = 2, kOther = 4 };

using OpenSides = std::map<std::string, unsigned>;

FragmentTag tag_of(const OpenSides& open) {
    unsigned all = 0;
    for (const auto& [clock, sides] : open) all |= sides;
    if (all == 0) return FragmentTag::Both;
    if (all == kLe) return FragmentTag::TypeLe;
    if (all == kGe) return FragmentTag::TypeGe;
    return FragmentTag::Neither;
}

OpenSides walk(const Formula& f, const std::string& path, FragmentReport& rep) {
    std::size_t slot = rep.entries.size();
    rep.entries.push_back({path, f, FragmentTag::Both});
    OpenSides open;
    bool child_neither = false;
    for (std::size_t i = 0; i < f.kids().size(); ++i) {
        std::size_t child_slot = rep.entries.size();
        OpenSides k = walk(f.kids()[i], path + "." + std::to_string(i), rep);
        if (rep.entries[child_slot].tag == FragmentTag::Neither) child_neither = true;
        for (const auto& [c, s] : k) open[c] |= s;
    }
    if (f.op() == Op::Constraint) {
        const Interval& iv = f.interval();
        open[f.clock()] |= iv.is_le_type() ? kLe : iv.is_ge_type() ? kGe : kOther;
    } else if (f.op() == Op::Freeze) {
        for (const auto& y : f.clocks()) open.erase(y);
    }
    FragmentTag t = tag_of(open);
    rep.entries[slot].tag = t;
    if (t == FragmentTag::Neither) {
        rep.in_fragment = false;
        if (!child_neither) rep.offenders.push_back(rep.entries[slot]);
    }
    return open;
}

}  // namespace

std::string to_string(FragmentTag t) {
    switch (t) {
        case FragmentTag::Both: return "Both";
        case FragmentTag::TypeLe: return "TypeLe";
        case FragmentTag::TypeGe: return "TypeGe";
        case FragmentTag::Neither: return "Neither";
    }
    return "?";
}

FragmentReport classify(const Formula& f) {
    FragmentReport rep;
    walk(f, "root", rep);
    return rep;
}

}  // namespace tptl

#pragma once

#include <string>
#include <vector>

#include "tptl/formula.hpp"

namespace tptl {

enum class FragmentTag { Both, TypeLe, TypeGe, Neither };

std::string to_string(FragmentTag t);

struct FragmentEntry {
    std::string path;  // "root", "root.0", "root.0.1", ...
    Formula subformula;
    FragmentTag tag;
};

struct FragmentReport {
    std::vector<FragmentEntry> entries;  // preorder
    bool in_fragment = true;
    /// Neither-tagged subformulas none of whose children is Neither.
    std::vector<FragmentEntry> offenders;
};

/// Tags each subformula by the sides of its open constraints (constraints on
/// clocks not bound inside it).
FragmentReport classify(const Formula& f);

}  // namespace tptl

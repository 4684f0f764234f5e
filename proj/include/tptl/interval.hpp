#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tptl/rational.hpp"

namespace tptl {

// ============================================================================
// Intervals with integer endpoints
// ============================================================================

enum class IntervalClass { RightSided, LeftSided, Punctual, BoundedNonUnilateral };

/// <l,u> with integer endpoints, u possibly infinite.
struct Interval {
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;  // nullopt = infinity
    bool lower_closed = true;
    bool upper_closed = false;

    Interval() = default;
    Interval(std::int64_t l, std::optional<std::int64_t> u, bool lc, bool uc);

    static Interval closed(std::int64_t l, std::int64_t u) { return {l, u, true, true}; }
    static Interval open(std::int64_t l, std::int64_t u) { return {l, u, false, false}; }
    static Interval at_most(std::int64_t u) { return {0, u, true, true}; }
    static Interval below(std::int64_t u) { return {0, u, true, false}; }
    static Interval at_least(std::int64_t l) { return {l, std::nullopt, true, false}; }
    static Interval above(std::int64_t l) { return {l, std::nullopt, false, false}; }
    static Interval everything() { return at_least(0); }

    bool is_infinite() const { return !upper.has_value(); }
    bool contains(const Rational& r) const;
    bool is_empty() const;
    bool is_everything() const { return lower == 0 && lower_closed && !upper; }
    /// Upper-bounded interval starting at 0 (<0,u>, including [0,0]); the
    /// constraint side usable in a <=-typed subformula.
    bool is_le_type() const { return lower == 0 && upper.has_value(); }
    /// Interval <l,inf); the constraint side usable in a >=-typed subformula.
    bool is_ge_type() const { return !upper.has_value(); }
    /// Largest finite endpoint.
    std::int64_t max_constant() const { return upper ? std::max(lower, *upper) : lower; }

    /// Pieces of [0,inf) \ this, at most two.
    std::vector<Interval> complement() const;
    std::optional<Interval> intersect(const Interval& o) const;

    /// "[1,2)", "(3,inf)".
    std::string to_string() const;
    static Interval parse(const std::string& text);

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

bool interval_contains(const Interval& i, const Rational& r);
IntervalClass interval_class(const Interval& i);
std::string to_string(IntervalClass c);

}  // namespace tptl

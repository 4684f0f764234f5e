#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tptl/rational.hpp"

namespace tptl {

// ============================================================================
// Timed words and clock valuations
// ============================================================================

using ClockValuation = std::map<std::string, Rational>;

struct TimedEntry {
    std::string symbol;
    Rational time;
    friend bool operator==(const TimedEntry&, const TimedEntry&) = default;
};

/// Finite, weakly monotone, non-negative timed word. Positions are 1-based.
class TimedWord {
public:
    TimedWord() = default;
    explicit TimedWord(std::vector<TimedEntry> entries);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const TimedEntry& at(std::size_t pos) const;  // 1-based
    const std::vector<TimedEntry>& entries() const { return entries_; }
    /// Delay before position pos, measured from tau_0 = 0.
    Rational delay(std::size_t pos) const;
    void push_back(TimedEntry e);

    /// One entry per line, "symbol@num/den". Blank lines and '#' comments ignored.
    static TimedWord parse_text(const std::string& text);
    std::string to_text() const;
    static TimedWord from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    friend bool operator==(const TimedWord&, const TimedWord&) = default;

private:
    std::vector<TimedEntry> entries_;
};

class PositionOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace tptl

#include "tptl/timed_word.hpp"

#include <sstream>

namespace tptl {

TimedWord::TimedWord(std::vector<TimedEntry> entries) {
    for (auto& e : entries) push_back(std::move(e));
}

void TimedWord::push_back(TimedEntry e) {
    if (e.symbol.empty()) throw std::invalid_argument("timed word: empty symbol");
    if (e.time < Rational(0)) throw std::invalid_argument("timed word: negative timestamp");
    if (!entries_.empty() && e.time < entries_.back().time)
        throw std::invalid_argument("timed word: timestamps must be weakly monotone");
    entries_.push_back(std::move(e));
}

const TimedEntry& TimedWord::at(std::size_t pos) const {
    if (pos < 1 || pos > entries_.size())
        throw PositionOutOfRange("position " + std::to_string(pos) + " outside 1.." +
                                 std::to_string(entries_.size()));
    return entries_[pos - 1];
}

Rational TimedWord::delay(std::size_t pos) const {
    const Rational& t = at(pos).time;
    return pos == 1 ? t : t - entries_[pos - 2].time;
}

TimedWord TimedWord::parse_text(const std::string& text) {
    TimedWord w;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        auto at = line.find('@');
        if (at == std::string::npos || at == 0 || at + 1 == line.size())
            throw std::invalid_argument("timed word line " + std::to_string(lineno) +
                                        ": expected symbol@num/den");
        try {
            w.push_back({line.substr(0, at), Rational::parse(line.substr(at + 1))});
        } catch (const std::invalid_argument& ex) {
            throw std::invalid_argument("timed word line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    return w;
}

std::string TimedWord::to_text() const {
    std::string out;
    for (const auto& e : entries_) out += e.symbol + "@" + std::to_string(e.time.num()) + "/" + std::to_string(e.time.den()) + "\n";
    return out;
}

TimedWord TimedWord::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("timed word JSON must be an array");
    TimedWord w;
    for (const auto& e : j) {
        const auto& t = e.at("t");
        w.push_back({e.at("sym").get<std::string>(), Rational(t.at(0).get<std::int64_t>(), t.at(1).get<std::int64_t>())});
    }
    return w;
}

nlohmann::json TimedWord::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries_) j.push_back({{"sym", e.symbol}, {"t", {e.time.num(), e.time.den()}}});
    return j;
}

}  // namespace tptl

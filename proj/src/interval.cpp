#include "tptl/interval.hpp"

#include <cctype>
#include <stdexcept>

namespace tptl {

Interval::Interval(std::int64_t l, std::optional<std::int64_t> u, bool lc, bool uc)
    : lower(l), upper(u), lower_closed(lc), upper_closed(uc) {
    if (l < 0 || (u && *u < 0)) throw std::invalid_argument("interval endpoints must be non-negative");
    if (u && *u < l) throw std::invalid_argument("interval lower endpoint exceeds upper");
    if (!u) upper_closed = false;
}

bool Interval::contains(const Rational& r) const {
    Rational lo(lower);
    if (lower_closed ? r < lo : r <= lo) return false;
    if (upper) {
        Rational hi(*upper);
        if (upper_closed ? r > hi : r >= hi) return false;
    }
    return true;
}

bool Interval::is_empty() const {
    return upper && *upper == lower && !(lower_closed && upper_closed);
}

std::vector<Interval> Interval::complement() const {
    std::vector<Interval> out;
    if (is_empty()) {
        out.push_back(everything());
        return out;
    }
    if (lower > 0 || !lower_closed) out.emplace_back(0, lower, true, !lower_closed);
    if (upper) out.emplace_back(*upper, std::nullopt, !upper_closed, false);
    return out;
}

std::optional<Interval> Interval::intersect(const Interval& o) const {
    std::int64_t lo = lower;
    bool lc = lower_closed;
    if (o.lower > lo || (o.lower == lo && !o.lower_closed)) {
        lo = o.lower;
        lc = o.lower_closed;
    }
    std::optional<std::int64_t> hi = upper;
    bool hc = upper_closed;
    if (o.upper && (!hi || *o.upper < *hi || (*o.upper == *hi && !o.upper_closed))) {
        hi = o.upper;
        hc = o.upper_closed;
    }
    if (hi && (*hi < lo || (*hi == lo && !(lc && hc)))) return std::nullopt;
    return Interval(lo, hi, lc, hc);
}

std::string Interval::to_string() const {
    std::string s = lower_closed ? "[" : "(";
    s += std::to_string(lower) + ",";
    s += upper ? std::to_string(*upper) : "inf";
    s += upper_closed ? "]" : ")";
    return s;
}

Interval Interval::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    auto bad = [&]() { return std::invalid_argument("malformed interval '" + text + "'"); };
    if (t.size() < 5) throw bad();
    bool lc = t.front() == '[';
    if (!lc && t.front() != '(') throw bad();
    bool uc = t.back() == ']';
    if (!uc && t.back() != ')') throw bad();
    auto comma = t.find(',');
    if (comma == std::string::npos) throw bad();
    std::string ls = t.substr(1, comma - 1);
    std::string us = t.substr(comma + 1, t.size() - comma - 2);
    auto num = [&](const std::string& s) -> std::int64_t {
        if (s.empty()) throw bad();
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        return std::stoll(s);
    };
    std::int64_t l = num(ls);
    if (us == "inf") {
        if (uc) throw bad();
        return Interval(l, std::nullopt, lc, false);
    }
    return Interval(l, num(us), lc, uc);
}

bool interval_contains(const Interval& i, const Rational& r) { return i.contains(r); }

IntervalClass interval_class(const Interval& i) {
    if (!i.upper) return IntervalClass::LeftSided;
    if (i.lower == *i.upper && i.lower_closed && i.upper_closed) return IntervalClass::Punctual;
    if (i.lower == 0 && *i.upper > 0) return IntervalClass::RightSided;
    return IntervalClass::BoundedNonUnilateral;
}

std::string to_string(IntervalClass c) {
    switch (c) {
        case IntervalClass::RightSided: return "RightSided";
        case IntervalClass::LeftSided: return "LeftSided";
        case IntervalClass::Punctual: return "Punctual";
        case IntervalClass::BoundedNonUnilateral: return "BoundedNonUnilateral";
    }
    return "?";
}

}  // namespace tptl

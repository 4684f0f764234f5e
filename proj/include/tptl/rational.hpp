#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tptl {

// ============================================================================
// Exact rationals
// ============================================================================

class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Exact rational in lowest terms with a positive denominator.
/// Intermediate products use 128-bit integers; results that do not fit
/// 64 bits throw ArithmeticOverflow.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    /// Largest integer <= this.
    std::int64_t floor() const;
    /// this - floor(this), in [0,1).
    Rational frac() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n/d", or "n" for integers.
    std::string to_string() const;
    /// Accepts "n", "n/d" and finite decimals such as "1.91".
    static Rational parse(std::string_view text);

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Simplest rational (smallest denominator, then smallest numerator) strictly
/// between lo and hi. Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

struct RationalHash {
    std::size_t operator()(const Rational& r) const noexcept {
        std::size_t h = std::hash<std::int64_t>{}(r.num());
        return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

}  // namespace tptl

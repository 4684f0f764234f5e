#include "tptl/rational.hpp"

#include <cctype>
#include <limits>

namespace tptl {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

// floor division for a possibly negative numerator and positive denominator
__int128 floor_div(__int128 n, __int128 d) {
    __int128 q = n / d;
    if ((n % d != 0) && (n < 0)) --q;
    return q;
}

}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits(n) || !fits(d)) throw ArithmeticOverflow("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

std::int64_t Rational::floor() const {
    return static_cast<std::int64_t>(floor_div(num_, den_));
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return *this = from_wide(n, d);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                               static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&]() { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s, bool allow_sign) -> __int128 {
        if (s.empty()) throw bad();
        bool neg = false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw bad();
        __int128 v = 0;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
            v = v * 10 + (s[i] - '0');
            if (v > std::numeric_limits<std::int64_t>::max()) throw ArithmeticOverflow("rational literal too large");
        }
        return neg ? -v : v;
    };
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        return from_wide(parse_int(text.substr(0, slash), true), parse_int(text.substr(slash + 1), false));
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        __int128 whole = (ip.empty() || ip == "-" || ip == "+") ? 0 : parse_int(ip, true);
        if (whole < 0) whole = -whole;
        __int128 scale = 1;
        __int128 f = 0;
        if (!fp.empty()) {
            f = parse_int(fp, false);
            for (std::size_t i = 0; i < fp.size(); ++i) {
                scale *= 10;
                if (scale > std::numeric_limits<std::int64_t>::max()) throw ArithmeticOverflow("decimal too long");
            }
        }
        __int128 n = whole * scale + f;
        return from_wide(neg ? -n : n, scale);
    }
    return from_wide(parse_int(text, true), 1);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
    // Smallest denominator d admitting an integer n with lo < n/d < hi.
    for (std::int64_t d = 1;; ++d) {
        Rational scaled = lo * Rational(d);
        std::int64_t n = scaled.floor() + 1;
        if (Rational(n, d) < hi) return Rational(n, d);
    }
}

}  // namespace tptl

#include "numev/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "numev/error.hpp"

namespace numev {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
}

std::int64_t parse_digits(std::string_view s, std::string_view whole) {
    if (s.empty()) throw ValidationError("malformed rational '" + std::string(whole) + "'");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range)
        throw std::overflow_error("rational component too large in '" + std::string(whole) + "'");
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
        throw ValidationError("malformed rational '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0) throw std::invalid_argument("rational denominator must be positive");
    if (numerator < 0) throw RangeError("rational must be nonnegative");
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_digits(text, text));
    const auto n = parse_digits(text.substr(0, slash), text);
    const auto d = parse_digits(text.substr(slash + 1), text);
    if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(checked_add(a.num_, b.num_), a.den_);
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t l = checked_mul(a.den_ / g, b.den_);
    return Rational(checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_)), l);
}

Rational operator-(const Rational& a, const Rational& b) {
    if (a < b) throw RangeError("rational subtraction " + a.str() + " - " + b.str() + " is negative");
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t l = checked_mul(a.den_ / g, b.den_);
    return Rational(checked_mul(a.num_, l / a.den_) - checked_mul(b.num_, l / b.den_), l);
}

Rational operator*(const Rational& a, const Rational& b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace numev

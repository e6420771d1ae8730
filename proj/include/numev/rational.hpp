#pragma once

/**
 * Exact nonnegative rationals.
 *
 * Every value is kept in lowest terms with a positive denominator, so two
 * rationals are equal iff their fields are equal. Arithmetic is checked:
 * overflow throws std::overflow_error and a subtraction that would go
 * negative throws RangeError.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace numev {

class Rational {
public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    static Rational zero() noexcept { return {}; }
    static Rational one() noexcept { return Rational(1); }
    static Rational half() noexcept { return Rational(1, 2); }

    /// Accepts "a/b" or "a" with decimal digits only.
    static Rational parse(std::string_view text);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_one() const noexcept { return num_ == 1 && den_ == 1; }

    /// "a/b", or "a" when the denominator is 1.
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    friend bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace numev

// Exact arithmetic in Q and Q(sqrt 2).

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace gradedlie {

/// Reduced fraction with positive denominator, backed by boost::rational over an
/// overflow-checked fixed 64-bit cpp_int. A result outside the int64 range throws
/// Error(Overflow).
class Rational {
public:
    using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
        64, 64, boost::multiprecision::signed_magnitude, boost::multiprecision::checked, void>>;

    Rational() = default;
    Rational(std::int64_t n) : value_(Int(n)) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return value_.numerator().convert_to<std::int64_t>(); }
    std::int64_t den() const { return value_.denominator().convert_to<std::int64_t>(); }
    bool is_zero() const noexcept { return value_.numerator().is_zero(); }
    bool is_integer() const noexcept { return value_.denominator() == 1; }
    int sign() const noexcept { return value_.numerator().sign(); }

    Rational inverse() const;

    /// "p/q"; zero is "0/1".
    std::string to_fraction() const;
    /// Accepts "p/q" or "p".
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    using Value = boost::rational<Int>;
    explicit Rational(Value v);

    Value value_;
};

/// r + s*sqrt(2) with rational r, s.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t r) : r_(r) {}
    Scalar(Rational r) noexcept : r_(r) {}
    Scalar(Rational r, Rational s) noexcept : r_(r), s_(s) {}

    static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }

    const Rational& r() const noexcept { return r_; }
    const Rational& s() const noexcept { return s_; }
    bool is_zero() const noexcept { return r_.is_zero() && s_.is_zero(); }
    bool is_rational() const noexcept { return s_.is_zero(); }

    /// (r - s sqrt2) / (r^2 - 2 s^2); throws Error(DivisionByZero) on zero.
    Scalar inverse() const;

    /// Human-readable, e.g. "2", "-sqrt2", "1/2+3*sqrt2".
    std::string to_string() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        return {a.r_ + b.r_, a.s_ + b.s_};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (b.is_zero())
            return a;
        return {a.r_ - b.r_, a.s_ - b.s_};
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar operator-() const { return {-r_, -s_}; }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar&, const Scalar&) noexcept = default;
    /// Lexicographic on (r, s); not the field order.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

private:
    Rational r_;
    Rational s_;
};

} // namespace gradedlie

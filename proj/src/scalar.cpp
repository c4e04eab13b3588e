#include "gradedlie/scalar.hpp"

#include "gradedlie/error.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace gradedlie {

namespace {

using Int = Rational::Int;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

std::int64_t parse_int(std::string_view text) {
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
        throw Error(ErrorKind::Parse, "bad integer '" + std::string(text) + "'");
    return v;
}

// Int is sign-magnitude and reaches 2^64 - 1 in magnitude, so clamp
// stored values to the int64 range that num() and den() report.
bool fits(const Int& v) { return v <= Int(INT64_MAX) && v >= Int(kMin); }

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const std::overflow_error&) {
        throw Error(ErrorKind::Overflow, "rational overflow");
    } catch (const std::range_error&) {
        throw Error(ErrorKind::Overflow, "rational overflow");
    }
}

} // namespace

Rational::Rational(Value v) : value_(std::move(v)) {
    if (!fits(value_.numerator()) || !fits(value_.denominator()))
        throw Error(ErrorKind::Overflow, "rational overflow");
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0)
        throw Error(ErrorKind::DivisionByZero, "zero denominator");
    *this = Rational(guarded([&] { return Value(Int(n), Int(d)); }));
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    return Rational(guarded([&] { return a.value_ + b.value_; }));
}

Rational operator-(const Rational& a, const Rational& b) {
    if (b.is_zero())
        return a;
    return Rational(guarded([&] { return a.value_ - b.value_; }));
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero())
        return Rational();
    return Rational(guarded([&] { return a.value_ * b.value_; }));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

Rational Rational::operator-() const { return Rational(guarded([&] { return -value_; })); }

Rational Rational::inverse() const {
    if (is_zero())
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(guarded([&] { return Value(value_.denominator(), value_.numerator()); }));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    bool lt = guarded([&] { return a.value_ < b.value_; });
    if (lt)
        return std::strong_ordering::less;
    return a.value_ == b.value_ ? std::strong_ordering::equal : std::strong_ordering::greater;
}

std::string Rational::to_fraction() const {
    return std::to_string(num()) + "/" + std::to_string(den());
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero())
        return Scalar();
    if (a.is_rational() && b.is_rational())
        return Scalar(a.r_ * b.r_);
    return {a.r_ * b.r_ + Rational(2) * a.s_ * b.s_, a.r_ * b.s_ + a.s_ * b.r_};
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
    // r^2 - 2 s^2 vanishes only for r = s = 0 because sqrt(2) is irrational.
    Rational norm = r_ * r_ - Rational(2) * s_ * s_;
    return {r_ / norm, -s_ / norm};
}

std::string Scalar::to_string() const {
    auto rat = [](const Rational& q) {
        return q.is_integer() ? std::to_string(q.num()) : q.to_fraction();
    };
    if (s_.is_zero())
        return rat(r_);
    std::string irr;
    if (s_ == Rational(1))
        irr = "sqrt2";
    else if (s_ == Rational(-1))
        irr = "-sqrt2";
    else
        irr = rat(s_) + "*sqrt2";
    if (r_.is_zero())
        return irr;
    return rat(r_) + (s_.sign() > 0 ? "+" : "") + irr;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (auto c = a.r_ <=> b.r_; c != 0)
        return c;
    return a.s_ <=> b.s_;
}

} // namespace gradedlie

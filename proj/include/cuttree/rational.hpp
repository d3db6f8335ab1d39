#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cuttree {

/// Exact arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Accepts integers ("12"), decimals ("0.125", "-3.5") and fractions ("7/4").
    static Rational parse(std::string_view text);

    /// Integers print bare, everything else as p/q. parse(to_string()) == *this.
    std::string to_string() const;
    /// Rounded half away from zero to `places` digits after the point.
    std::string to_decimal(int places) const;

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    const mpq_class& raw() const { return q_; }
    std::string numerator() const { return q_.get_num().get_str(); }
    std::string denominator() const { return q_.get_den().get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

/// A Rational or +infinity. Infinity compares above every finite value and is
/// absorbing under addition.
class ExtRational {
public:
    ExtRational() : value_(Rational{}) {}
    ExtRational(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    ExtRational(long v) : value_(Rational(v)) {}       // NOLINT(google-explicit-constructor)

    static ExtRational infinity() {
        ExtRational e;
        e.value_.reset();
        return e;
    }
    /// "inf" or anything Rational::parse accepts.
    static ExtRational parse(std::string_view text);

    bool is_infinite() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }
    /// Throws InputError when infinite.
    const Rational& finite() const;

    std::string to_string() const;
    std::string to_decimal(int places) const;

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return ExtRational(*a.value_ + *b.value_);
    }
    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
        return *a.value_ == *b.value_;
    }
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
        if (a.is_infinite() || b.is_infinite()) {
            if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
            return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return *a.value_ <=> *b.value_;
    }

private:
    std::optional<Rational> value_;
};

}  // namespace cuttree

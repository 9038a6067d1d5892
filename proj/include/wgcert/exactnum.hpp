#pragma once

// Exact rational arithmetic for the certificate path.
//
// Every scalar that feeds a certificate (theta, phi, the lambda ladder, Lambda,
// eta*, sigma_k) is a Rational. Values are always kept in canonical form:
// positive denominator, numerator and denominator coprime.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace wgcert {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<I>) {
            value_ = mpz_class(static_cast<long>(n));
        } else {
            value_ = mpz_class(static_cast<unsigned long>(n));
        }
    }

    Rational(const BigInt& n) : value_(n) {} // NOLINT(google-explicit-constructor)

    /// Throws std::domain_error when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    /// Accepts "p", "p/q", decimal ("-1.25e-7") and binary-exponent notation
    /// ("3p-20" meaning 3*2^-20, "0x1.8p-3"). Every accepted form is an exact
    /// rational; throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Integer power; negative exponents require a nonzero base.
    [[nodiscard]] Rational pow(long exponent) const;
    [[nodiscard]] BigInt floor() const;
    [[nodiscard]] BigInt ceil() const;
    [[nodiscard]] Rational abs() const;

    /// Exact "numerator/denominator" form; the denominator is always written.
    [[nodiscard]] std::string str() const;
    /// Nearest double (approximate, for display only).
    [[nodiscard]] double approx() const;
    /// Decimal rendering with the given number of significant digits (approximate).
    [[nodiscard]] std::string approx_str(int significant = 15) const;

private:
    mpq_class value_{0};
};

/// Smallest decimal with exactly `digits` fractional digits that is >= x.
/// Requires x >= 0 and digits >= 1; throws std::invalid_argument otherwise.
std::string ceil_decimals(const Rational& x, int digits);

/// Nearest decimal with `digits` fractional digits, ties rounded up. Used only
/// to flag cells where the two rounding readings of a table disagree.
std::string round_half_up_decimals(const Rational& x, int digits);

/// floor(num / den). Throws std::invalid_argument unless den > 0.
BigInt floor_ratio(const Rational& num, const Rational& den);

} // namespace wgcert

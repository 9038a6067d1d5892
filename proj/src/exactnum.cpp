#include "wgcert/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wgcert {

namespace {

BigInt pow10(unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

BigInt parse_integer(std::string_view s, int base, std::string_view whole)
{
    if (s.empty()) {
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    for (char c : s) {
        const bool ok = base == 16 ? std::isxdigit(static_cast<unsigned char>(c)) != 0
                                   : std::isdigit(static_cast<unsigned char>(c)) != 0;
        if (!ok) {
            throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
        }
    }
    return BigInt(std::string(s), base);
}

long parse_exponent(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const BigInt e = parse_integer(s, 10, whole);
    if (!e.fits_slong_p() || abs(e) > 100000) {
        throw std::invalid_argument("exponent out of range: '" + std::string(whole) + "'");
    }
    return negative ? -e.get_si() : e.get_si();
}

// Mantissa "ddd.fff" in the given base, as an exact rational.
Rational parse_mantissa(std::string_view s, int base, std::string_view whole)
{
    const auto dot = s.find('.');
    std::string digits(s.substr(0, dot));
    std::size_t frac_len = 0;
    if (dot != std::string_view::npos) {
        const auto frac = s.substr(dot + 1);
        digits += frac;
        frac_len = frac.size();
    }
    const BigInt num = parse_integer(digits, base, whole);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(base), frac_len);
    return {num, den};
}

Rational scale_pow(const Rational& m, unsigned long base, long e)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? m / Rational(p) : m * Rational(p);
}

std::string render_fixed(const BigInt& scaled, int digits)
{
    const BigInt scale = pow10(static_cast<unsigned long>(digits));
    BigInt ip;
    BigInt fp;
    mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    return ip.get_str() + "." + frac;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }

    Rational r;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash), 10, whole);
        const BigInt den = parse_integer(text.substr(slash + 1), 10, whole);
        if (den == 0) {
            throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
        }
        r = Rational(num, den);
    } else if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text.remove_prefix(2);
        const auto p = text.find_first_of("pP");
        const Rational m = parse_mantissa(text.substr(0, p), 16, whole);
        const long e = p == std::string_view::npos ? 0 : parse_exponent(text.substr(p + 1), whole);
        r = scale_pow(m, 2, e);
    } else if (const auto p = text.find_first_of("pP"); p != std::string_view::npos) {
        const Rational m = parse_mantissa(text.substr(0, p), 10, whole);
        r = scale_pow(m, 2, parse_exponent(text.substr(p + 1), whole));
    } else {
        const auto e = text.find_first_of("eE");
        const Rational m = parse_mantissa(text.substr(0, e), 10, whole);
        const long ex = e == std::string_view::npos ? 0 : parse_exponent(text.substr(e + 1), whole);
        r = scale_pow(m, 10, ex);
    }
    return negative ? -r : r;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.sign() == 0) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        if (sign() == 0) {
            throw std::domain_error("zero raised to a negative power");
        }
        return (Rational(1) / *this).pow(-exponent);
    }
    const auto e = static_cast<unsigned long>(exponent);
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    // Powers of coprime integers stay coprime; no canonicalization needed.
    Rational r;
    r.value_ = mpq_class(num, den);
    return r;
}

BigInt Rational::floor() const
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

BigInt Rational::ceil() const
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::abs() const
{
    return sign() < 0 ? -*this : *this;
}

std::string Rational::str() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double Rational::approx() const
{
    return value_.get_d();
}

std::string Rational::approx_str(int significant) const
{
    // mpq_get_d truncates; good enough for a display value flagged approximate.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, approx());
    return buf;
}

std::string ceil_decimals(const Rational& x, int digits)
{
    if (digits < 1) {
        throw std::invalid_argument("ceil_decimals: digit count must be >= 1");
    }
    if (x.sign() < 0) {
        throw std::invalid_argument("ceil_decimals: negative value " + x.str());
    }
    const Rational scaled = x * Rational(pow10(static_cast<unsigned long>(digits)));
    return render_fixed(scaled.ceil(), digits);
}

std::string round_half_up_decimals(const Rational& x, int digits)
{
    if (digits < 1) {
        throw std::invalid_argument("round_half_up_decimals: digit count must be >= 1");
    }
    if (x.sign() < 0) {
        throw std::invalid_argument("round_half_up_decimals: negative value " + x.str());
    }
    const Rational scaled = x * Rational(pow10(static_cast<unsigned long>(digits))) + Rational(1, 2);
    return render_fixed(scaled.floor(), digits);
}

BigInt floor_ratio(const Rational& num, const Rational& den)
{
    if (den.sign() <= 0) {
        throw std::invalid_argument("floor_ratio: denominator must be positive, got " + den.str());
    }
    return (num / den).floor();
}

} // namespace wgcert

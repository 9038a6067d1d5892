#include "wgcert/hpreal.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace wgcert {

Precision default_precision()
{
    if (const char* env = std::getenv("WGCERT_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 64 && v <= kPrecisionCap) {
            return static_cast<Precision>(v);
        }
    }
    return kDefaultPrecision;
}

MpFloat::MpFloat(Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

MpFloat::MpFloat(const MpFloat& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpFloat::MpFloat(MpFloat&& other) noexcept
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

MpFloat& MpFloat::operator=(MpFloat other) noexcept
{
    swap(*this, other);
    return *this;
}

MpFloat::~MpFloat()
{
    mpfr_clear(value_);
}

std::string MpFloat::str(int digits) const
{
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", digits, value_);
    std::string s(raw);
    mpfr_free_str(raw);
    return s;
}

HighPrecisionReal HighPrecisionReal::from_rational(const Rational& x, Precision prec)
{
    MpFloat lo(prec);
    MpFloat hi(prec);
    mpfr_set_q(lo.get(), x.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), x.raw().get_mpq_t(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), prec};
}

double HighPrecisionReal::midpoint() const
{
    MpFloat m(precision_ + 1);
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m.to_double();
}

double HighPrecisionReal::width() const
{
    MpFloat w(precision_);
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return mpfr_get_d(w.get(), MPFR_RNDU);
}

bool HighPrecisionReal::contains(const Rational& x) const
{
    return mpfr_cmp_q(lo_.get(), x.raw().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), x.raw().get_mpq_t()) >= 0;
}

HighPrecisionReal operator+(const HighPrecisionReal& a, const HighPrecisionReal& b)
{
    const Precision prec = std::max(a.precision_, b.precision_);
    MpFloat lo(prec);
    MpFloat hi(prec);
    mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), prec};
}

HighPrecisionReal operator-(const HighPrecisionReal& a, const HighPrecisionReal& b)
{
    const Precision prec = std::max(a.precision_, b.precision_);
    MpFloat lo(prec);
    MpFloat hi(prec);
    mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), prec};
}

HighPrecisionReal operator*(const HighPrecisionReal& a, const HighPrecisionReal& b)
{
    const Precision prec = std::max(a.precision_, b.precision_);
    MpFloat lo(prec);
    MpFloat hi(prec);
    MpFloat tmp(prec);
    const mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
    const mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
    mpfr_mul(lo.get(), as[0], bs[0], MPFR_RNDD);
    mpfr_mul(hi.get(), as[0], bs[0], MPFR_RNDU);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(tmp.get(), as[i], bs[j], MPFR_RNDD);
            mpfr_min(lo.get(), lo.get(), tmp.get(), MPFR_RNDD);
            mpfr_mul(tmp.get(), as[i], bs[j], MPFR_RNDU);
            mpfr_max(hi.get(), hi.get(), tmp.get(), MPFR_RNDU);
        }
    }
    return {std::move(lo), std::move(hi), prec};
}

HighPrecisionReal HighPrecisionReal::scaled(const Rational& factor) const
{
    return *this * from_rational(factor, precision_);
}

std::optional<BigInt> HighPrecisionReal::certified_ceil() const
{
    BigInt a;
    BigInt b;
    mpfr_get_z(a.get_mpz_t(), lo_.get(), MPFR_RNDU);
    mpfr_get_z(b.get_mpz_t(), hi_.get(), MPFR_RNDU);
    if (a != b) {
        return std::nullopt;
    }
    return a;
}

std::optional<BigInt> HighPrecisionReal::certified_floor() const
{
    BigInt a;
    BigInt b;
    mpfr_get_z(a.get_mpz_t(), lo_.get(), MPFR_RNDD);
    mpfr_get_z(b.get_mpz_t(), hi_.get(), MPFR_RNDD);
    if (a != b) {
        return std::nullopt;
    }
    return a;
}

std::optional<std::strong_ordering> HighPrecisionReal::compare(const BigInt& n) const
{
    if (mpfr_cmp_z(hi_.get(), n.get_mpz_t()) < 0) {
        return std::strong_ordering::less;
    }
    if (mpfr_cmp_z(lo_.get(), n.get_mpz_t()) > 0) {
        return std::strong_ordering::greater;
    }
    if (mpfr_cmp_z(lo_.get(), n.get_mpz_t()) == 0 && mpfr_cmp_z(hi_.get(), n.get_mpz_t()) == 0) {
        return std::strong_ordering::equal;
    }
    return std::nullopt;
}

std::string HighPrecisionReal::str(int digits) const
{
    return "[" + lo_.str(digits) + ", " + hi_.str(digits) + "]";
}

HighPrecisionReal hp_log(unsigned long n, Precision prec)
{
    if (n == 0) {
        throw std::invalid_argument("hp_log: log 0 is undefined");
    }
    MpFloat arg(prec);
    MpFloat lo(prec);
    MpFloat hi(prec);
    // n may need more than prec bits; round it outward first.
    mpfr_set_ui(arg.get(), n, MPFR_RNDD);
    mpfr_log(lo.get(), arg.get(), MPFR_RNDD);
    mpfr_set_ui(arg.get(), n, MPFR_RNDU);
    mpfr_log(hi.get(), arg.get(), MPFR_RNDU);
    return {std::move(lo), std::move(hi), prec};
}

} // namespace wgcert

#pragma once

// Certified real enclosures over MPFR.
//
// A HighPrecisionReal is an interval [lower, upper] guaranteed to contain the
// true value. Endpoints are rounded outward on every operation, so ceilings and
// comparisons decided from an enclosure are provably correct. When an
// enclosure is too wide to decide, callers escalate precision through
// with_precision_escalation().

#include "wgcert/exactnum.hpp"

#include <mpfr.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>

namespace wgcert {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kPrecisionCap = 1 << 16;

/// Working precision: WGCERT_PRECISION from the environment if set and valid,
/// otherwise kDefaultPrecision.
Precision default_precision();

/// Owning RAII wrapper for an mpfr_t.
class MpFloat {
public:
    explicit MpFloat(Precision prec);
    MpFloat(const MpFloat& other);
    MpFloat(MpFloat&& other) noexcept;
    MpFloat& operator=(MpFloat other) noexcept;
    ~MpFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    Precision precision() const { return mpfr_get_prec(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Decimal rendering with `digits` significant digits, round-to-nearest.
    std::string str(int digits = 20) const;

    friend void swap(MpFloat& a, MpFloat& b) noexcept { mpfr_swap(a.value_, b.value_); }

private:
    mpfr_t value_;
};

class HighPrecisionReal {
public:
    /// Enclosure of an exact rational.
    static HighPrecisionReal from_rational(const Rational& x, Precision prec);

    Precision precision() const { return precision_; }
    const MpFloat& lower() const { return lo_; }
    const MpFloat& upper() const { return hi_; }
    double midpoint() const;
    double width() const;

    bool contains(const Rational& x) const;

    friend HighPrecisionReal operator+(const HighPrecisionReal& a, const HighPrecisionReal& b);
    friend HighPrecisionReal operator-(const HighPrecisionReal& a, const HighPrecisionReal& b);
    friend HighPrecisionReal operator*(const HighPrecisionReal& a, const HighPrecisionReal& b);
    HighPrecisionReal scaled(const Rational& factor) const;

    /// ceil of the enclosed value when both endpoints agree, otherwise nullopt.
    std::optional<BigInt> certified_ceil() const;
    std::optional<BigInt> certified_floor() const;
    /// Ordering of the enclosed value against n, or nullopt when undecided.
    std::optional<std::strong_ordering> compare(const BigInt& n) const;

    /// "[lo, hi]" with the given significant digits.
    std::string str(int digits = 20) const;

private:
    HighPrecisionReal(MpFloat lo, MpFloat hi, Precision prec)
        : lo_(std::move(lo)), hi_(std::move(hi)), precision_(prec) {}

    MpFloat lo_;
    MpFloat hi_;
    Precision precision_;

    friend HighPrecisionReal hp_log(unsigned long n, Precision prec);
};

/// Enclosure of the natural logarithm of n. Throws std::invalid_argument for n == 0.
HighPrecisionReal hp_log(unsigned long n, Precision prec = default_precision());

class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Calls attempt(prec) with prec doubling from `start` until it returns a value
/// or prec would exceed `cap`; then throws PrecisionExhausted naming `what`.
template <class Attempt>
auto with_precision_escalation(Attempt&& attempt, const std::string& what,
                               Precision start = default_precision(), Precision cap = kPrecisionCap)
    -> typename std::invoke_result_t<Attempt&, Precision>::value_type
{
    Precision prec = start;
    for (;;) {
        if (auto r = attempt(prec)) {
            return *std::move(r);
        }
        if (prec * 2 > cap) {
            throw PrecisionExhausted(what + ": enclosure still undecided at " + std::to_string(prec) +
                                     " bits (cap " + std::to_string(cap) + ")");
        }
        prec *= 2;
    }
}

} // namespace wgcert

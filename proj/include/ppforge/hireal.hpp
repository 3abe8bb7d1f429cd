#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace ppforge {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Arbitrary-precision real. Precision is tracked in requested decimal
// digits; the underlying binary precision carries 15 guard digits beyond
// the request. All arithmetic results take the smaller digit count of
// their operands, so the stated relative error stays <= 10^(1-digits).
class HiReal {
  public:
    static constexpr long kGuardDigits = 15;

    HiReal();
    explicit HiReal(long digits);
    HiReal(const HiReal& o);
    HiReal(HiReal&& o) noexcept;
    HiReal& operator=(const HiReal& o);
    HiReal& operator=(HiReal&& o) noexcept;
    ~HiReal();

    static HiReal of(long v, long digits);
    static HiReal of(const BigInt& v, long digits);
    static HiReal of(const BigRational& v, long digits);
    static HiReal of_double(double v, long digits);
    // Parses a plain or scientific decimal literal.
    static HiReal parse(const std::string& text, long digits);

    long digits() const { return digits_; }
    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }
    // Same value re-rounded to a different stated precision.
    HiReal with_digits(long digits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // floor(log10 |x|); requires x != 0.
    long ilog10() const;
    // Nearest integer (ties to even).
    BigInt round_to_int() const;

    HiReal operator-() const;
    HiReal operator+(const HiReal& o) const;
    HiReal operator-(const HiReal& o) const;
    HiReal operator*(const HiReal& o) const;
    HiReal operator/(const HiReal& o) const;
    HiReal& operator+=(const HiReal& o) { return *this = *this + o; }
    HiReal& operator-=(const HiReal& o) { return *this = *this - o; }
    HiReal& operator*=(const HiReal& o) { return *this = *this * o; }
    HiReal& operator/=(const HiReal& o) { return *this = *this / o; }

    HiReal operator*(long k) const;
    HiReal operator/(long k) const;
    HiReal operator+(long k) const;
    HiReal operator-(long k) const;

    int cmp(const HiReal& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const HiReal& o) const { return cmp(o) < 0; }
    bool operator>(const HiReal& o) const { return cmp(o) > 0; }
    bool operator<=(const HiReal& o) const { return cmp(o) <= 0; }
    bool operator>=(const HiReal& o) const { return cmp(o) >= 0; }
    bool operator==(const HiReal& o) const { return cmp(o) == 0; }

    // Decimal rendering, round-half-even at `sig` significant digits.
    // Uses positional notation for moderate exponents, otherwise d.dd...e+xx.
    std::string str(long sig) const;
    // Canonical scientific form with exactly `sig` mantissa digits
    // ("d.dd...de+xx"), round-half-even; zero prints as 0e+0.
    std::string sci(long sig) const;
    // First `n` significant decimal digits (truncated, no sign/point) plus the
    // decimal exponent e with value = 0.digits * 10^e. Zero yields ("0", 0).
    std::pair<std::string, long> sig_digits(long n) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    static mpfr_prec_t bits_for(long digits);

  private:
    mpfr_t v_;
    long digits_;
};

HiReal abs(const HiReal& x);
HiReal sqrt(const HiReal& x);
HiReal exp(const HiReal& x);
HiReal ln(const HiReal& x);
// x^k for integer k (k may be negative; x != 0 then).
HiReal pow(const HiReal& x, long k);
// k-th root, k >= 1; x >= 0 for even k.
HiReal rootn(const HiReal& x, unsigned long k);
HiReal agm(const HiReal& a, const HiReal& b);

}  // namespace ppforge

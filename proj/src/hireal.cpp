#include "ppforge/hireal.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace ppforge {

mpfr_prec_t HiReal::bits_for(long digits) {
    if (digits < 1) digits = 1;
    const double log2_10 = 3.321928094887362;
    return static_cast<mpfr_prec_t>(std::ceil((digits + kGuardDigits) * log2_10)) + 8;
}

HiReal::HiReal() : digits_(10) { mpfr_init2(v_, bits_for(digits_)); mpfr_set_zero(v_, 1); }

HiReal::HiReal(long digits) : digits_(digits) {
    mpfr_init2(v_, bits_for(digits_));
    mpfr_set_zero(v_, 1);
}

HiReal::HiReal(const HiReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HiReal::HiReal(HiReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, 8);
    mpfr_swap(v_, o.v_);
}

HiReal& HiReal::operator=(const HiReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

HiReal& HiReal::operator=(HiReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

HiReal::~HiReal() { mpfr_clear(v_); }

HiReal HiReal::of(long v, long digits) {
    HiReal r(digits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

HiReal HiReal::of(const BigInt& v, long digits) {
    HiReal r(digits);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

HiReal HiReal::of(const BigRational& v, long digits) {
    HiReal r(digits);
    mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

HiReal HiReal::of_double(double v, long digits) {
    HiReal r(digits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

HiReal HiReal::parse(const std::string& text, long digits) {
    HiReal r(digits);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("HiReal::parse: bad decimal literal: " + text);
    return r;
}

HiReal HiReal::with_digits(long digits) const {
    HiReal r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long HiReal::ilog10() const {
    if (is_zero()) throw std::domain_error("ilog10 of zero");
    // exponent in base 2 -> base 10 estimate, then correct by comparison
    mpfr_exp_t e2 = mpfr_get_exp(v_);
    long e10 = static_cast<long>(std::floor((static_cast<double>(e2) - 1) * 0.30102999566398120));
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_) + 16);
    for (;;) {
        mpfr_set_ui(t, 10, MPFR_RNDN);
        mpfr_pow_si(t, t, e10 + 1, MPFR_RNDN);
        if (mpfr_cmpabs(v_, t) >= 0) { e10++; continue; }
        mpfr_set_ui(t, 10, MPFR_RNDN);
        mpfr_pow_si(t, t, e10, MPFR_RNDN);
        if (mpfr_cmpabs(v_, t) < 0) { e10--; continue; }
        break;
    }
    mpfr_clear(t);
    return e10;
}

BigInt HiReal::round_to_int() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_rint(t, v_, MPFR_RNDN);
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

namespace {
inline long res_digits(const HiReal& a, const HiReal& b) {
    return a.digits() < b.digits() ? a.digits() : b.digits();
}
}  // namespace

HiReal HiReal::operator-() const {
    HiReal r(digits_);
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    return r;
}

#define PPFORGE_BINOP(op, fn)                                   \
    HiReal HiReal::operator op(const HiReal& o) const {         \
        HiReal r(res_digits(*this, o));                         \
        mpfr_prec_t p = std::max(prec_bits(), o.prec_bits());   \
        mpfr_set_prec(r.raw(), p);                              \
        fn(r.raw(), v_, o.v_, MPFR_RNDN);                       \
        return r;                                               \
    }

PPFORGE_BINOP(+, mpfr_add)
PPFORGE_BINOP(-, mpfr_sub)
PPFORGE_BINOP(*, mpfr_mul)
PPFORGE_BINOP(/, mpfr_div)
#undef PPFORGE_BINOP

HiReal HiReal::operator*(long k) const {
    HiReal r(*this);
    mpfr_mul_si(r.raw(), v_, k, MPFR_RNDN);
    return r;
}

HiReal HiReal::operator/(long k) const {
    HiReal r(*this);
    mpfr_div_si(r.raw(), v_, k, MPFR_RNDN);
    return r;
}

HiReal HiReal::operator+(long k) const {
    HiReal r(*this);
    mpfr_add_si(r.raw(), v_, k, MPFR_RNDN);
    return r;
}

HiReal HiReal::operator-(long k) const {
    HiReal r(*this);
    mpfr_sub_si(r.raw(), v_, k, MPFR_RNDN);
    return r;
}

std::pair<std::string, long> HiReal::sig_digits(long n) const {
    if (is_zero()) return {"0", 0};
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(n), v_, MPFR_RNDZ);
    std::string d(s);
    mpfr_free_str(s);
    if (!d.empty() && d[0] == '-') d.erase(0, 1);
    return {d, static_cast<long>(e)};
}

std::string HiReal::str(long sig) const {
    if (sig < 1) sig = 1;
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* cs = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
    std::string m(cs);
    mpfr_free_str(cs);
    bool neg = !m.empty() && m[0] == '-';
    if (neg) m.erase(0, 1);
    // value = 0.m * 10^e
    std::string out;
    if (e >= -4 && e <= 21) {
        if (e <= 0) {
            out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
        } else if (static_cast<size_t>(e) >= m.size()) {
            out = m + std::string(static_cast<size_t>(e) - m.size(), '0');
        } else {
            out = m.substr(0, static_cast<size_t>(e)) + "." + m.substr(static_cast<size_t>(e));
        }
        // trim trailing zeros after a decimal point, but keep at least one digit
        if (out.find('.') != std::string::npos) {
            size_t last = out.find_last_not_of('0');
            if (out[last] == '.') last--;
            out.erase(last + 1);
        }
    } else {
        out = m.substr(0, 1);
        if (m.size() > 1) {
            std::string frac = m.substr(1);
            size_t last = frac.find_last_not_of('0');
            if (last != std::string::npos)
                out += "." + frac.substr(0, last + 1);
        }
        out += "e" + std::to_string(e - 1);
    }
    return neg ? "-" + out : out;
}

std::string HiReal::sci(long sig) const {
    if (sig < 1) sig = 1;
    if (is_zero()) return "0e+0";
    mpfr_exp_t e;
    char* cs = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
    std::string m(cs);
    mpfr_free_str(cs);
    bool neg = !m.empty() && m[0] == '-';
    if (neg) m.erase(0, 1);
    std::string out = m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    long de = static_cast<long>(e) - 1;
    out += "e";
    out += (de < 0 ? "-" : "+") + std::to_string(de < 0 ? -de : de);
    return neg ? "-" + out : out;
}

HiReal abs(const HiReal& x) {
    HiReal r(x);
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HiReal sqrt(const HiReal& x) {
    HiReal r(x);
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HiReal exp(const HiReal& x) {
    HiReal r(x);
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HiReal ln(const HiReal& x) {
    HiReal r(x);
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HiReal pow(const HiReal& x, long k) {
    HiReal r(x);
    mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}

HiReal rootn(const HiReal& x, unsigned long k) {
    HiReal r(x);
    mpfr_rootn_ui(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}

HiReal agm(const HiReal& a, const HiReal& b) {
    HiReal r(res_digits(a, b));
    mpfr_prec_t p = std::max(a.prec_bits(), b.prec_bits());
    mpfr_set_prec(r.raw(), p);
    mpfr_agm(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

}  // namespace ppforge

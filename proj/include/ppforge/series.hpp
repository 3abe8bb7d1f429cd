#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppforge/hireal.hpp"

namespace ppforge::series {

// S(k, r) = sum_{n>=1} n^k / (e^(r pi n) - 1)

struct SeriesKey {
    long k;
    BigRational r;  // canonical reduced, > 0

    SeriesKey(long k_, BigRational r_);
    bool operator<(const SeriesKey& o) const {
        if (k != o.k) return k < o.k;
        return cmp(r, o.r) < 0;
    }
    bool operator==(const SeriesKey& o) const { return k == o.k && r == o.r; }
};

struct SeriesValue {
    SeriesKey key;
    long digits;
    HiReal value;
    long terms_used;
};

// Direct summation with the first-term tail bound
//   (N+1)^k e^(-r pi (N+1)) / (1 - e^(-r pi)) < 10^(-digits-5),
// N minimal, found by fixed-point iteration. Incremental powers of
// e^(-r pi); working precision digits + 10 + ceil(log10 N).
SeriesValue eval_S(long k, const BigRational& r, long digits);

// Eq. (3): S(k,r) ~ u / pi^e with u = k!/r^(k+1), e = k+1.
std::pair<BigRational, long> approx_eq3(long k, const BigRational& r);

// Eq. (8): exact rational k! zeta(k+1) / (r pi)^(k+1) stripped of pi powers,
// i.e. k! Z(k+1) / r^(k+1); odd k only.
BigRational approx_eq8_rational(long k, const BigRational& r);

// Eq. (2): exact S(k,2) = B_{k+1}/(2(k+1)) for k ≡ 1 (mod 4).
BigRational ramanujan_value(long k);

// Closed form S(k,r) = A pi^((k+1)/2) / Gamma(3/4)^(2(k+1)) + B for the
// (k, r) table, k in {3,5,...,13}, r in {1,2,4}. Validated values are
// returned; the verbatim printed values ride along with erratum notes.
struct ClosedForm {
    long k = 0;
    long r = 0;
    BigRational A, B;                // validated
    BigRational paper_A, paper_B;    // as printed
    BigRational approx_u;            // Eq. (3) coefficient (approximation column)
    long approx_pi_exp = 0;          // validated exponent
    long paper_approx_pi_exp = 0;    // as printed
    bool erratum = false;
    std::string note;
};

ClosedForm closed_form(long k, long r);
std::vector<ClosedForm> closed_form_table();
HiReal closed_form_value(const ClosedForm& cf, long digits);

// Two-term rational identities a S(k,r1) + b S(k,r2) = V for k ≡ 3 (mod 4).
struct TwoTermIdentity {
    long k;
    long r1, r2;
    BigInt a, b;
    BigRational V;
    long residual_log10;  // numeric verification at 40 digits
    bool zeta_route_exact;  // a R(k,r1) + b R(k,r2) == V with R = approx_eq8_rational
};

TwoTermIdentity two_term_identity(long k, std::pair<long, long> pair);

// |S(3, 2/7) - Gosper's closed form| at the given precision.
HiReal gosper_residual(long digits);

// Q with beta(s) = Q pi^s for odd s = 2n+1: Q = E_{2n} / (4^(n+1) (2n)!).
BigRational beta_closed_odd(long s);

// Dirichlet beta by accelerated alternating summation (works for real s > 0).
HiReal beta_numeric(const HiReal& s, long digits);
HiReal beta_numeric(long s, long digits);

struct EulerApproxReport {
    long n2;
    BigInt exact;
    long exact_digits;
    BigRational u;    // formula = u / pi^(n2+1), u = 2^(n2+2) n2!
    long pi_exp;
    long agree;       // leading-digit agreement
};

EulerApproxReport euler_approx_report(long n2);

}  // namespace ppforge::series

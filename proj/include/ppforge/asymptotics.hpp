#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppforge/hireal.hpp"

namespace ppforge::asym {

// Fitted general term. Terms are indexed by their 1-based position m in the
// supplied list (the paper counts "the 200th term" this way):
//   stride 1:  a(m) ~ c^m Gamma(m + s)  / (d pi^(m + t))
//   stride 2:  a(m) ~ c^m Gamma(2m + s) / (d pi^(2m + t))
// where a(m) is the m-th nonzero term at the stride.
struct GrowthFit {
    BigRational c;
    int s = 0;
    int t = 0;
    int stride = 1;
    HiReal d;
    std::optional<std::string> d_form;  // recognized closed form, when any
    std::vector<BigInt> d_minpoly;      // coefficients, constant term first
    long first_pos = 1;                 // list position of the first fitted term
    long n_used = 0;                    // number of terms consumed
    long quality = 0;                   // digits of agreement at the largest m used
    std::string sign_note;              // sign pattern of the raw terms
};

struct FitCandidate {
    BigRational c;
    int s;
    int t;
    double score;  // residual curvature; smaller is better
};

struct FitScan {
    std::vector<FitCandidate> candidates;  // ranked best-first
    bool degenerate = false;
    std::string note;
    long first_pos = 1;
    long n_terms = 0;
};

// Steps 3-4 of the procedure: ratio analysis a(m+1)/a(m) on the nonzero
// terms at the given stride, Richardson/Aitken extrapolated.
// Throws std::invalid_argument for fewer than 32 usable terms; non-monotone
// ratio data comes back as a degenerate report.
FitScan fit_growth(const std::vector<BigRational>& a, int stride);

// Step 5: d = lim c^m Gamma(.)/(pi^(.) a(m)), accelerated, with the result
// carrying `digits` requested digits. Throws std::runtime_error when the
// available terms cannot reach the requested digits.
HiReal isolate_scale(const std::vector<BigRational>& a, const BigRational& c, int s, int t,
                     int stride, long digits);

// Integer polynomial p (constant term first) with p(x) ~ 0, degree <=
// max_degree, |coeffs| <= coeff_bound; verified at the full precision of x
// before acceptance. nullopt when nothing within bounds is found.
std::optional<std::vector<BigInt>> recognize_constant(const HiReal& x, int max_degree,
                                                      const BigInt& coeff_bound);

// Quotient test of x against the dictionary {1, sqrt2, sqrt7, 2^(1/4),
// 7^(1/4), sqrt2*7^(1/4), sqrt2*7^(3/4)} x Gamma(3/4)^k products.
std::optional<std::string> recognize_dictionary(const HiReal& x);

// Count of agreeing leading digits between the term at 1-based position m
// and the fitted formula.
long agreement_digits(const std::vector<BigRational>& a, const GrowthFit& fit, long m);

// One-stop pipeline: fit_growth + isolate_scale + constant recognition.
GrowthFit fit_sequence(const std::vector<BigRational>& a, int stride, long digits);

std::string polynomial_string(const std::vector<BigInt>& coeffs);

// Best rational p/q with q <= max_den approximating x; nullopt when the
// continued-fraction remainder is not clearly below 10^-tol_digits.
std::optional<BigRational> to_rational(const HiReal& x, const BigInt& max_den,
                                       long tol_digits);

}  // namespace ppforge::asym

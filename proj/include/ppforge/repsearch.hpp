#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ppforge/appendix.hpp"
#include "ppforge/hireal.hpp"

namespace ppforge::repsearch {

// Pluggable source of S(k, r) values so batch work can share a persistent
// cache; the default recomputes directly.
using SValueFn = std::function<HiReal(long k, const BigRational& r, long digits)>;
SValueFn direct_source();

struct RepQuery {
    BigInt P;
    long k_max = 25;
    long digits = 0;  // 0 -> precision policy default
    BigInt coeff_bound = BigInt("100000000");
    bool all_pairs = false;
    long expected_coeff_digits = 8;
    long digits_cap = 4000;
};

struct Representation {
    BigInt P;
    long k1 = 0, k2 = 0;
    std::array<BigInt, 5> coeffs{};  // [e, a, b, c, d], e = -1
    std::vector<appendix::ApproxTerm> approx;
    HiReal approx_value;  // at 25 digits
    bool zeta_exact = false;
    long residual_log10 = 0;
    long digits_used = 0;
    bool target_probable_prime = false;
    // pairwise gcds of (a, b, c, d), reported not enforced
    std::vector<std::pair<std::string, BigInt>> gcd_report;
};

struct PairNote {
    long k1, k2;
    std::string outcome;  // "found" | "rejected:<why>" | "none" | "inconclusive"
};

struct SearchReport {
    std::vector<Representation> found;
    std::vector<PairNote> pairs;
    long digits_used = 0;
    std::string failure;  // nonempty when nothing was found
};

// Scans odd pairs (k1, k2), k1 < k2 <= k_max, ordered by (k1+k2, k1); for
// each, runs the relation search on [P, S(k1,1), S(k1,4), S(k2,1), S(k2,4)]
// and keeps results with |coefficient on P| = 1 that pass both the numeric
// residual gate and the exact zeta-rational gate.
SearchReport find_representation(const RepQuery& q, const SValueFn& sval);

// Exact rational a R(k1,1) + b R(k1,4) + c R(k2,1) + d R(k2,4) with
// R = approx_eq8_rational; equality with P is the certificate.
BigRational zeta_exact_check(const Representation& rep);
BigRational zeta_exact_value(const std::array<BigInt, 5>& coeffs, long k1, long k2);

// u-coefficients of the pi-power approximation and its decimal value.
void fill_approx(Representation& rep);

struct RowCheck {
    appendix::AppendixRow row;
    bool zeta_exact = false;
    long residual_log10 = 0;
    bool approx_matches = false;
    std::string recomputed_approx;
    std::vector<std::pair<std::string, BigInt>> gcd_report;
};

struct AppendixReport {
    std::vector<RowCheck> checks;
    long rows_ok = 0;
    long rows_failed = 0;
    std::vector<std::string> errata;  // catalogued in-text discrepancies
};

// Verifies every parsed corpus row: numeric residual at 80 digits, exact
// zeta check, approximation string comparison, coprimality report.
AppendixReport verify_appendix(const std::vector<appendix::AppendixRow>& rows,
                               const SValueFn& sval);

struct BatchResult {
    BigInt target;
    std::optional<Representation> rep;
    std::string failure;
};

std::vector<BatchResult> batch_search(const std::vector<BigInt>& targets, const RepQuery& tmpl,
                                      const SValueFn& sval);

// Precision policy: 40 + 2*ceil(log10 P) + 10*expected_coeff_digits.
long policy_digits(const BigInt& P, long expected_coeff_digits);

}  // namespace ppforge::repsearch

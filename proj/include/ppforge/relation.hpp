#pragma once

#include <optional>
#include <vector>

#include "ppforge/hireal.hpp"

namespace ppforge::relation {

// Sentinel residual for an exactly zero combination.
constexpr long kExactZero = -999999;

struct RelationProblem {
    // m >= 2 nonzero values. They may carry more digits than `digits`; the
    // search runs at `digits` and the acceptance gate re-verifies the found
    // vector at 1.5x `digits` using the extra stored precision.
    std::vector<HiReal> values;
    long digits;
    BigInt coeff_bound;
};

enum class SearchStatus {
    Found,            // relation passed all gates
    NoneWithinBound,  // norm-bound certificate excludes any relation <= coeff_bound
    Inconclusive,     // precision or iteration budget exhausted
};

struct RelationResult {
    std::vector<BigInt> coeffs;  // gcd 1, first nonzero coefficient positive
    long residual_log10;
    enum class Confidence { Accepted, SpuriousRisk } confidence;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<RelationResult> relation;  // present for Found (and for
                                             // SpuriousRisk diagnostics)
    double exclusion_bound = 0.0;  // lower bound on the 2-norm of any relation
    long iterations = 0;
};

// PSLQ with gamma = 2/sqrt(3), Hermite reduction, Bailey's detection
// criteria. Deterministic: iteration cap 50 * m * digits.
SearchOutcome find_integer_relation(const RelationProblem& p);

// Residual of sum c_i x_i evaluated at `digits` working precision.
// Returns ceil(log10 |sum|), floored against the relative residual
// ceil(log10(|sum|/max|x|)); kExactZero if the sum is exactly zero.
long verify_relation(const std::vector<BigInt>& coeffs, const std::vector<HiReal>& values,
                     long digits);

// Canonical form: divide by gcd, flip so the first nonzero entry is positive.
void canonicalize(std::vector<BigInt>& coeffs);

}  // namespace ppforge::relation

#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <vector>

#include "ppforge/hireal.hpp"

namespace ppforge::oracle {

// pi via Machin's formula with pure integer arithmetic:
// pi = 16 arctan(1/5) - 4 arctan(1/239), scaled by 10^(digits+10).
inline BigInt machin_pi_scaled(long digits) {
    long guard = 10;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + guard));
    auto arctan_inv = [&](unsigned long x) {
        BigInt term = scale / x;
        BigInt total = term;
        BigInt x2 = BigInt(x) * x;
        unsigned long n = 1;
        while (term != 0) {
            term /= x2;
            if (term == 0) break;
            if (n % 2 == 1)
                total -= term / (2 * n + 1);
            else
                total += term / (2 * n + 1);
            ++n;
        }
        return total;
    };
    return 16 * arctan_inv(5) - 4 * arctan_inv(239);
}

inline HiReal machin_pi(long digits) {
    BigInt scaled = machin_pi_scaled(digits);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 10));
    return HiReal::of(scaled, digits + 5) / HiReal::of(scale, digits + 5);
}

// Bernoulli numbers by the Akiyama-Tanigawa algorithm (exact rationals).
inline std::vector<BigRational> akiyama_tanigawa(long count) {
    std::vector<BigRational> out;
    std::vector<BigRational> row(static_cast<size_t>(count) + 1);
    for (long m = 0; m <= count; ++m) {
        row[static_cast<size_t>(m)] = BigRational(1, m + 1);
        for (long j = m; j >= 1; --j) {
            row[static_cast<size_t>(j - 1)] =
                (row[static_cast<size_t>(j - 1)] - row[static_cast<size_t>(j)]) * j;
            row[static_cast<size_t>(j - 1)].canonicalize();
        }
        BigRational b = row[0];   // Akiyama-Tanigawa yields B_n with B_1 = +1/2
        if (m == 1) b = -b;       // normalize to the B_1 = -1/2 convention
        b.canonicalize();
        out.push_back(b);
    }
    return out;
}

// zeta(s) for integer s >= 2 by Euler-Maclaurin with four correction terms.
inline HiReal euler_maclaurin_zeta(long s, long digits) {
    long wd = digits + 15;
    long N = 10 + 2 * digits;  // N^-s decay dominates for s >= 2
    HiReal sum(wd);
    for (long k = 1; k <= N; ++k) sum += HiReal::of(1, wd) / pow(HiReal::of(k, wd), s);
    HiReal Nr = HiReal::of(N, wd);
    sum += pow(Nr, 1 - s) / (s - 1);
    sum -= pow(Nr, -s) / 2;
    // Bernoulli correction terms B_2, B_4, B_6, B_8
    const long bnum[4] = {1, -1, 1, -1};
    const long bden[4] = {6, 30, 42, 30};
    HiReal deriv = HiReal::of(s, wd) * pow(Nr, -s - 1);  // -f'(N) with f = x^-s
    long fact = 1;
    for (int j = 1; j <= 4; ++j) {
        // B_2j / (2j)! * f^{(2j-1)}(N), with f^{(2j-1)} = -(s)(s+1)...(s+2j-2) x^{-s-2j+1}
        fact = 1;
        HiReal df = pow(Nr, -s - (2 * j - 1));
        for (long i = 0; i < 2 * j - 1; ++i) df *= (s + i);
        long f2j = 1;
        for (long i = 2; i <= 2 * j; ++i) f2j *= i;
        sum += HiReal::of(bnum[j - 1], wd) * df / bden[j - 1] / f2j;
    }
    (void)deriv;
    (void)fact;
    return sum.with_digits(digits);
}

// Direct partial summation of S(k, r) with a crude tail check.
inline HiReal direct_S(long k, const BigRational& r, long digits) {
    long wd = digits + 15;
    HiReal pi = machin_pi(wd);
    HiReal rr = HiReal::of(r, wd);
    HiReal sum(wd);
    for (long n = 1;; ++n) {
        HiReal e = exp(rr * pi * n);
        HiReal term = pow(HiReal::of(n, wd), k) / (e - 1);
        sum += term;
        if (n > 4 && (term.is_zero() ||
                      term.ilog10() < sum.ilog10() - (digits + 8)))
            break;
    }
    return sum.with_digits(digits);
}

}  // namespace ppforge::oracle

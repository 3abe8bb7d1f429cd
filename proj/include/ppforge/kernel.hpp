#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ppforge/hireal.hpp"

namespace ppforge {

// ---- fundamental constants ----

// pi correct to `digits` significant digits.
HiReal pi_const(long digits);

// Gamma(3/4) via the AGM/lemniscate route plus the reflection formula.
HiReal gamma_three_quarters(long digits);

// ---- exact integer/rational sequences ----

// Z with zeta(m2) = Z * pi^m2, for even m2 >= 2.
// Z = (-1)^(m2/2+1) * B_m2 * 2^m2 / (2 * m2!).
BigRational zeta_even_rational(long m2);

// Bernoulli number B_n (B_1 = -1/2). Tangent-number route for moderate n,
// zeta/von Staudt-Clausen reconstruction for large n.
BigRational bernoulli(long n);

// Positive secant number E_n2 for even n2 (E_0=1, E_2=1, E_4=5, E_6=61, ...).
BigInt euler_secant(long n2);

// Zigzag number a(n) (A000111) via the Seidel boustrophedon recurrence.
// Even indices are the secant numbers, odd indices the tangent numbers.
BigInt zigzag(long n);

// von Staudt-Clausen denominator: product of primes p with (p-1) | n, even n.
BigInt von_staudt_clausen_denominator(long n);

// ---- primality ----

// Strong probable-prime verdict: Miller-Rabin with the fixed witness set
// {2,3,...,37} plus a strong Lucas test. Deterministic for 64-bit inputs.
bool is_probable_prime(const BigInt& n);

// Smallest prime with exactly m decimal digits (2, 11, 101, 1009, ...).
BigInt smallest_prime_with_digits(long m);

// Trial-division factorization; intended for 64-bit-sized inputs.
std::vector<BigInt> factor_small(BigInt n);

// ---- small shared utilities ----

long decimal_digit_count(const BigInt& n);
BigInt factorial(long n);
BigInt pow_int(long base, long exp);

// Number of agreeing leading significant digits between an exact integer and
// an approximation (digit-string prefix; 0 when the decimal exponents differ).
long leading_agreement(const BigInt& exact, const HiReal& approx);
long leading_agreement(const HiReal& a, const HiReal& b, long max_digits);

}  // namespace ppforge

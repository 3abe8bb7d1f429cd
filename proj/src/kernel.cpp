#include "ppforge/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace ppforge {

HiReal pi_const(long digits) {
    if (digits < 1) throw std::domain_error("pi_const: digits must be >= 1");
    HiReal r(digits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

// Gauss: M(1, sqrt 2) = pi / varpi with varpi the lemniscate constant, and
// varpi = Gamma(1/4)^2 / (2 sqrt(2 pi)). Hence
//   Gamma(1/4) = sqrt(2 pi sqrt(2 pi) / M(1, sqrt 2)),
//   Gamma(3/4) = pi sqrt(2) / Gamma(1/4)   (reflection at 1/4).
HiReal gamma_three_quarters(long digits) {
    if (digits < 10) throw std::domain_error("gamma_three_quarters: digits must be >= 10");
    long wd = digits + 10;
    HiReal pi = pi_const(wd);
    HiReal two = HiReal::of(2, wd);
    HiReal m = agm(HiReal::of(1, wd), sqrt(two));
    HiReal g14 = sqrt(pi * two * sqrt(pi * two) / m);
    return (pi * sqrt(two) / g14).with_digits(digits);
}

BigRational zeta_even_rational(long m2) {
    if (m2 < 2 || m2 % 2 != 0)
        throw std::domain_error("zeta_even_rational: need even m2 >= 2");
    BigRational z(bernoulli(m2));
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m2));
    z *= BigRational(two_pow);
    z /= BigRational(2 * factorial(m2));
    if ((m2 / 2 + 1) % 2 != 0) z = -z;
    z.canonicalize();
    return z;
}

namespace {

// Seidel boustrophedon triangle; grows on demand, shared cache.
class ZigzagCache {
  public:
    BigInt get(long n) {
        std::lock_guard<std::mutex> lk(mu_);
        extend(n);
        return vals_[static_cast<size_t>(n)];
    }

  private:
    void extend(long n) {
        if (static_cast<long>(vals_.size()) > n) return;
        if (vals_.empty()) {
            vals_.push_back(1);
            row_ = {BigInt(1)};
        }
        while (static_cast<long>(vals_.size()) <= n) {
            // next row: prepend 0, then running sums of the reversed previous row
            std::vector<BigInt> nr(row_.size() + 1);
            nr[0] = 0;
            for (size_t i = 0; i < row_.size(); ++i)
                nr[i + 1] = nr[i] + row_[row_.size() - 1 - i];
            row_ = std::move(nr);
            vals_.push_back(row_.back());
        }
    }

    std::mutex mu_;
    std::vector<BigInt> vals_;
    std::vector<BigInt> row_;
};

ZigzagCache& zigzag_cache() {
    static ZigzagCache c;
    return c;
}

// B_2m from the tangent number T_{2m-1} = zigzag(2m-1):
//   B_2m = (-1)^(m-1) * 2m * T_{2m-1} / (2^(2m) (2^(2m) - 1)).
BigRational bernoulli_tangent_route(long n) {
    long m = n / 2;
    BigInt t = zigzag(n - 1);
    BigInt p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n));
    BigRational b(BigInt(n) * t, p2 * (p2 - 1));
    if (m % 2 == 0) b = -b;
    b.canonicalize();
    return b;
}

// Large-index route: denominator D by von Staudt-Clausen, numerator from
// |B_n| = 2 n! zeta(n) / (2 pi)^n rounded against the exact denominator.
BigRational bernoulli_zeta_route(long n) {
    BigInt den = von_staudt_clausen_denominator(n);
    // digit estimate of the numerator
    double lg = std::lgamma(static_cast<double>(n) + 1.0) / std::log(10.0);
    double dig = lg + std::log10(2.0) - n * std::log10(2.0 * 3.14159265358979324) +
                 mpz_sizeinbase(den.get_mpz_t(), 10);
    long prec = static_cast<long>(dig) + 25;
    HiReal pi = pi_const(prec);
    HiReal x = HiReal::of(2 * den * factorial(n), prec) / pow(pi * 2, n);
    // zeta(n) by direct summation; converges in O(10^(prec/n)) terms
    HiReal z = HiReal::of(1, prec);
    for (long k = 2;; ++k) {
        HiReal term = HiReal::of(1, prec) / pow(HiReal::of(k, prec), n);
        if (term.is_zero() || term.ilog10() < -(prec + 5)) break;
        z += term;
    }
    x *= z;
    BigInt num = x.round_to_int();
    if ((n / 2) % 2 == 0) num = -num;
    BigRational b(num, den);
    b.canonicalize();
    return b;
}

constexpr long kBernoulliZetaThreshold = 320;

}  // namespace

BigInt zigzag(long n) {
    if (n < 0) throw std::domain_error("zigzag: n must be >= 0");
    return zigzag_cache().get(n);
}

BigInt euler_secant(long n2) {
    if (n2 < 0 || n2 % 2 != 0) throw std::domain_error("euler_secant: need even n >= 0");
    return zigzag(n2);
}

BigInt von_staudt_clausen_denominator(long n) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("von_staudt_clausen_denominator: need even n >= 2");
    BigInt d = 1;
    for (long p = 2; p - 1 <= n; ++p) {
        if (n % (p - 1) != 0) continue;
        BigInt bp(p);
        if (mpz_probab_prime_p(bp.get_mpz_t(), 30) > 0) d *= bp;
    }
    return d;
}

BigRational bernoulli(long n) {
    if (n < 0) throw std::domain_error("bernoulli: n must be >= 0");
    if (n == 0) return BigRational(1);
    if (n == 1) return BigRational(-1, 2);
    if (n % 2 != 0) return BigRational(0);

    static std::mutex mu;
    static std::map<long, BigRational> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    BigRational b = (n <= kBernoulliZetaThreshold) ? bernoulli_tangent_route(n)
                                                   : bernoulli_zeta_route(n);
    // von Staudt-Clausen consistency: denominator must match exactly
    if (BigInt(b.get_den()) != von_staudt_clausen_denominator(n))
        throw std::logic_error("bernoulli: von Staudt-Clausen denominator check failed");
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(n, b);
    return b;
}

// ---- primality ----

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned long s) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Strong Lucas probable-prime test with Selfridge parameter choice
// (method A): first D in 5, -7, 9, -11, ... with jacobi(D, n) = -1.
bool strong_lucas(const BigInt& n) {
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;
    long d_abs = 5;
    int sign = 1;
    BigInt D;
    for (;;) {
        D = sign > 0 ? BigInt(d_abs) : BigInt(-d_abs);
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), D.get_mpz_t(), n.get_mpz_t());
            if (g != n) return false;  // proper factor found
        }
        d_abs += 2;
        sign = -sign;
        if (d_abs > 10000)
            throw std::logic_error("strong_lucas: no Selfridge D found");
    }
    // P = 1, Q = (1 - D)/4
    BigInt Q = (1 - D) / 4;
    BigInt delta = n + 1;
    unsigned long s = mpz_scan1(delta.get_mpz_t(), 0);
    BigInt d = delta >> s;

    // binary ladder over bits of d computing U_d, V_d mod n, top bit consumed
    long bits = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    BigInt U = 1, V = 1;  // U_1, V_1 with P = 1
    BigInt Qk = Q % n;
    if (Qk < 0) Qk += n;
    auto mod = [&](BigInt& x) {
        x %= n;
        if (x < 0) x += n;
    };
    BigInt inv2 = 0;
    {
        BigInt two = 2;
        mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), n.get_mpz_t());
    }
    for (long i = bits - 2; i >= 0; --i) {
        // double: U_2k = U_k V_k ; V_2k = V_k^2 - 2 Q^k
        BigInt U2 = U * V;
        mod(U2);
        BigInt V2 = V * V - 2 * Qk;
        mod(V2);
        BigInt Q2 = Qk * Qk;
        mod(Q2);
        U = U2;
        V = V2;
        Qk = Q2;
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            // add one: U_{k+1} = (P U_k + V_k)/2, V_{k+1} = (D U_k + P V_k)/2 with P=1
            BigInt Un = (U + V) * inv2;
            mod(Un);
            BigInt Vn = (D * U + V) * inv2;
            mod(Vn);
            U = Un;
            V = Vn;
            BigInt Qn = Qk * (Q % n);
            mod(Qn);
            Qk = Qn;
        }
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        BigInt V2 = V * V - 2 * Qk;
        mod(V2);
        V = V2;
        BigInt Q2 = Qk * Qk;
        mod(Q2);
        Qk = Q2;
        if (V == 0) return true;
    }
    return false;
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
    if (n < 0) throw std::domain_error("is_probable_prime: n must be >= 0");
    if (n < 2) return false;
    static const long small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                        41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (long p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    static const long witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long a : witnesses)
        if (!miller_rabin_witness(n, BigInt(a), d, s)) return false;
    return strong_lucas(n);
}

BigInt smallest_prime_with_digits(long m) {
    if (m < 1) throw std::domain_error("smallest_prime_with_digits: m must be >= 1");
    if (m == 1) return 2;
    BigInt n;
    mpz_ui_pow_ui(n.get_mpz_t(), 10, static_cast<unsigned long>(m - 1));
    n += 1;
    while (!is_probable_prime(n)) n += 2;
    return n;
}

std::vector<BigInt> factor_small(BigInt n) {
    std::vector<BigInt> out;
    if (n < 2) return out;
    for (BigInt p = 2; p * p <= n;) {
        if (n % p == 0) {
            out.push_back(p);
            n /= p;
        } else {
            p += (p == 2) ? 1 : 2;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---- utilities ----

long decimal_digit_count(const BigInt& n) {
    if (n == 0) return 1;
    BigInt a = n < 0 ? BigInt(-n) : n;
    // sizeinbase may overestimate by one
    size_t est = mpz_sizeinbase(a.get_mpz_t(), 10);
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, est - 1);
    return a >= p ? static_cast<long>(est) : static_cast<long>(est) - 1;
}

BigInt factorial(long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

BigInt pow_int(long base, long exp) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return p;
}

long leading_agreement(const BigInt& exact, const HiReal& approx) {
    BigInt a = exact < 0 ? BigInt(-exact) : exact;
    std::string sa = a.get_str();
    auto [sb, eb] = abs(approx).sig_digits(static_cast<long>(sa.size()) + 4);
    if (eb != static_cast<long>(sa.size())) return 0;
    long k = 0;
    for (size_t i = 0; i < sa.size() && i < sb.size(); ++i) {
        if (sa[i] != sb[i]) break;
        ++k;
    }
    return k;
}

long leading_agreement(const HiReal& a, const HiReal& b, long max_digits) {
    if (a.is_zero() || b.is_zero()) return 0;
    auto [da, ea] = abs(a).sig_digits(max_digits);
    auto [db, eb] = abs(b).sig_digits(max_digits);
    if (ea != eb || a.sign() != b.sign()) return 0;
    long k = 0;
    for (size_t i = 0; i < da.size() && i < db.size(); ++i) {
        if (da[i] != db[i]) break;
        ++k;
    }
    return k;
}

}  // namespace ppforge

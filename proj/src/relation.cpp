#include "ppforge/relation.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace ppforge::relation {

namespace {

// Contiguous mpfr workspace; every entry shares one precision.
class Reals {
  public:
    Reals(size_t count, mpfr_prec_t prec) : v_(count) {
        for (auto& x : v_) mpfr_init2(x, prec);
    }
    ~Reals() {
        for (auto& x : v_) mpfr_clear(x);
    }
    Reals(const Reals&) = delete;
    Reals& operator=(const Reals&) = delete;
    mpfr_ptr operator[](size_t i) { return v_[i]; }

  private:
    std::vector<__mpfr_struct> v_;
};

}  // namespace

void canonicalize(std::vector<BigInt>& c) {
    BigInt g = 0;
    for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : c) x /= g;
    for (const auto& x : c) {
        if (x != 0) {
            if (x < 0)
                for (auto& y : c) y = -y;
            break;
        }
    }
}

long verify_relation(const std::vector<BigInt>& coeffs, const std::vector<HiReal>& values,
                     long digits) {
    if (coeffs.size() != values.size())
        throw std::invalid_argument("verify_relation: length mismatch");
    mpfr_prec_t prec = HiReal::bits_for(digits);
    Reals w(3, prec);
    mpfr_ptr sum = w[0], t = w[1], xmax = w[2];
    mpfr_set_zero(sum, 1);
    mpfr_set_zero(xmax, 1);
    for (size_t i = 0; i < values.size(); ++i) {
        mpfr_mul_z(t, values[i].raw(), coeffs[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(sum, sum, t, MPFR_RNDN);
        mpfr_abs(t, values[i].raw(), MPFR_RNDN);
        if (mpfr_cmp(t, xmax) > 0) mpfr_set(xmax, t, MPFR_RNDN);
    }
    if (mpfr_zero_p(sum)) return kExactZero;
    mpfr_abs(sum, sum, MPFR_RNDN);
    mpfr_log10(t, sum, MPFR_RNDN);
    double labs = mpfr_get_d(t, MPFR_RNDN);
    mpfr_div(sum, sum, xmax, MPFR_RNDN);
    mpfr_log10(t, sum, MPFR_RNDN);
    double lrel = mpfr_get_d(t, MPFR_RNDN);
    return static_cast<long>(std::ceil(std::max(labs, lrel)));
}

SearchOutcome find_integer_relation(const RelationProblem& p) {
    const size_t n = p.values.size();
    if (n < 2) throw std::invalid_argument("find_integer_relation: need at least 2 values");
    for (const auto& v : p.values)
        if (v.is_zero())
            throw std::invalid_argument("find_integer_relation: values must be nonzero");
    const long digits = p.digits;
    const mpfr_prec_t prec = HiReal::bits_for(digits);
    const long max_iter = 50 * static_cast<long>(n) * digits;

    // y vector, H (n x n-1), temporaries, detection epsilon
    Reals y(n, prec), s(n, prec), tmp(6, prec);
    std::vector<std::unique_ptr<Reals>> H;
    H.reserve(n);
    for (size_t i = 0; i < n; ++i) H.push_back(std::make_unique<Reals>(n - 1, prec));
    auto h = [&](size_t i, size_t j) -> mpfr_ptr { return (*H[i])[j]; };
    mpfr_ptr t1 = tmp[0], t2 = tmp[1], t3 = tmp[2], t4 = tmp[3], eps = tmp[4], gam = tmp[5];

    mpfr_set_ui(eps, 10, MPFR_RNDN);
    mpfr_pow_si(eps, eps, -(digits - 8), MPFR_RNDN);
    mpfr_set_ui(gam, 4, MPFR_RNDN);
    mpfr_div_ui(gam, gam, 3, MPFR_RNDN);
    mpfr_sqrt(gam, gam, MPFR_RNDN);  // gamma = 2/sqrt(3)

    // partial sums s_k = sqrt(sum_{j>=k} x_j^2); y = x / s_0
    mpfr_set_zero(t1, 1);
    for (size_t i = n; i-- > 0;) {
        mpfr_set(y[i], p.values[i].raw(), MPFR_RNDN);
        mpfr_fma(t1, y[i], y[i], t1, MPFR_RNDN);
        mpfr_sqrt(s[i], t1, MPFR_RNDN);
    }
    mpfr_ui_div(t1, 1, s[0], MPFR_RNDN);
    for (size_t i = 0; i < n; ++i) {
        mpfr_mul(y[i], y[i], t1, MPFR_RNDN);
        mpfr_mul(s[i], s[i], t1, MPFR_RNDN);
    }

    // H: lower trapezoidal basis of the orthogonal complement of x
    for (size_t j = 0; j + 1 < n; ++j) {
        for (size_t i = 0; i < j; ++i) mpfr_set_zero(h(i, j), 1);
        mpfr_div(h(j, j), s[j + 1], s[j], MPFR_RNDN);
        mpfr_mul(t1, s[j], s[j + 1], MPFR_RNDN);
        mpfr_div(t1, y[j], t1, MPFR_RNDN);
        for (size_t i = j + 1; i < n; ++i) {
            mpfr_mul(h(i, j), y[i], t1, MPFR_RNDN);
            mpfr_neg(h(i, j), h(i, j), MPFR_RNDN);
        }
    }

    // B integer matrix (columns carry candidate relations)
    std::vector<std::vector<BigInt>> B(n, std::vector<BigInt>(n));
    for (size_t i = 0; i < n; ++i) B[i][i] = 1;

    BigInt tz;
    BigInt coeff_guard;  // entries beyond this imply exhausted precision
    mpz_ui_pow_ui(coeff_guard.get_mpz_t(), 10, static_cast<unsigned long>(
                                                   digits > 12 ? digits - 10 : 2));

    auto reduce_row = [&](size_t i, size_t jtop) -> bool {
        for (size_t j = jtop + 1; j-- > 0;) {
            mpfr_div(t1, h(i, j), h(j, j), MPFR_RNDN);
            mpfr_rint(t1, t1, MPFR_RNDN);
            if (mpfr_zero_p(t1)) continue;
            mpfr_get_z(tz.get_mpz_t(), t1, MPFR_RNDN);
            mpfr_mul_z(t2, y[i], tz.get_mpz_t(), MPFR_RNDN);
            mpfr_add(y[j], y[j], t2, MPFR_RNDN);
            for (size_t k = 0; k <= j; ++k) {
                mpfr_mul_z(t2, h(j, k), tz.get_mpz_t(), MPFR_RNDN);
                mpfr_sub(h(i, k), h(i, k), t2, MPFR_RNDN);
            }
            for (size_t k = 0; k < n; ++k) {
                B[k][j] += tz * B[k][i];
                if (mpz_cmpabs(B[k][j].get_mpz_t(), coeff_guard.get_mpz_t()) > 0) return false;
            }
        }
        return true;
    };

    SearchOutcome out;
    bool precision_ok = true;
    for (size_t i = 1; i < n && precision_ok; ++i) precision_ok = reduce_row(i, i - 1);

    auto detect = [&]() -> int {  // index of |y| below eps, else -1
        int jm = -1;
        for (size_t i = 0; i < n; ++i) {
            if (mpfr_cmpabs(y[i], eps) < 0) {
                if (jm < 0 || mpfr_cmpabs(y[i], y[static_cast<size_t>(jm)]) < 0)
                    jm = static_cast<int>(i);
            }
        }
        return jm;
    };

    auto finish_candidate = [&](int jm) {
        std::vector<BigInt> c(n);
        for (size_t k = 0; k < n; ++k) c[k] = B[k][static_cast<size_t>(jm)];
        canonicalize(c);
        long vdigits = (3 * digits) / 2;
        for (const auto& v : p.values) vdigits = std::min(vdigits, v.digits());
        long res = verify_relation(c, p.values, vdigits);
        bool within_bound = true;
        for (const auto& x : c)
            if (mpz_cmpabs(x.get_mpz_t(), p.coeff_bound.get_mpz_t()) > 0) within_bound = false;
        RelationResult r;
        r.coeffs = std::move(c);
        r.residual_log10 = res;
        bool accepted =
            within_bound && (res == kExactZero || res <= -(digits + 7));
        r.confidence = accepted ? RelationResult::Confidence::Accepted
                                : RelationResult::Confidence::SpuriousRisk;
        out.relation = std::move(r);
        out.status = accepted ? SearchStatus::Found : SearchStatus::Inconclusive;
    };

    int jm = detect();
    if (jm >= 0) {
        finish_candidate(jm);
        return out;
    }
    if (!precision_ok) return out;  // Inconclusive

    const double bound_limit =
        mpz_get_d(p.coeff_bound.get_mpz_t()) * std::sqrt(static_cast<double>(n));

    for (long iter = 0; iter < max_iter; ++iter) {
        out.iterations = iter + 1;
        // pivot: maximize gamma^i |h(i,i)|
        size_t m = 0;
        mpfr_set_zero(t3, 1);
        mpfr_set(t4, gam, MPFR_RNDN);
        for (size_t i = 0; i + 1 < n; ++i) {
            mpfr_abs(t1, h(i, i), MPFR_RNDN);
            mpfr_mul(t1, t1, t4, MPFR_RNDN);
            if (mpfr_cmp(t1, t3) > 0) {
                m = i;
                mpfr_set(t3, t1, MPFR_RNDN);
            }
            mpfr_mul(t4, t4, gam, MPFR_RNDN);
        }

        mpfr_swap(y[m], y[m + 1]);
        for (size_t k = 0; k + 1 < n; ++k) mpfr_swap(h(m, k), h(m + 1, k));
        for (size_t k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);

        if (m + 2 < n) {
            // corner rotation zeroing h(m, m+1)
            mpfr_hypot(t3, h(m, m), h(m, m + 1), MPFR_RNDN);
            mpfr_div(t1, h(m, m), t3, MPFR_RNDN);
            mpfr_div(t2, h(m, m + 1), t3, MPFR_RNDN);
            for (size_t i = m; i < n; ++i) {
                mpfr_set(t3, h(i, m), MPFR_RNDN);
                mpfr_set(t4, h(i, m + 1), MPFR_RNDN);
                mpfr_mul(h(i, m), t1, t3, MPFR_RNDN);
                mpfr_fma(h(i, m), t2, t4, h(i, m), MPFR_RNDN);
                mpfr_mul(h(i, m + 1), t1, t4, MPFR_RNDN);
                mpfr_mul(t3, t2, t3, MPFR_RNDN);
                mpfr_sub(h(i, m + 1), h(i, m + 1), t3, MPFR_RNDN);
            }
        }

        precision_ok = true;
        for (size_t i = m + 1; i < n && precision_ok; ++i)
            precision_ok = reduce_row(i, std::min(i - 1, m + 1));
        if (!precision_ok) return out;  // Inconclusive: coefficients exhausted precision

        jm = detect();
        if (jm >= 0) {
            finish_candidate(jm);
            return out;
        }

        // norm bound: any relation has 2-norm >= 1 / max_j |h(j,j)|
        mpfr_set_zero(t3, 1);
        for (size_t j = 0; j + 1 < n; ++j) {
            mpfr_abs(t1, h(j, j), MPFR_RNDN);
            if (mpfr_cmp(t1, t3) > 0) mpfr_set(t3, t1, MPFR_RNDN);
        }
        double hmax = mpfr_get_d(t3, MPFR_RNDN);
        if (hmax > 0) {
            out.exclusion_bound = 1.0 / hmax;
            if (out.exclusion_bound > bound_limit) {
                out.status = SearchStatus::NoneWithinBound;
                return out;
            }
        }
    }
    return out;  // Inconclusive: iteration cap
}

}  // namespace ppforge::relation

#include "ppforge/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ppforge/kernel.hpp"
#include "ppforge/relation.hpp"

namespace ppforge::asym {

namespace {

// Indices of the usable all-nonzero tail at the given stride, anchored to
// 1-based list positions.
struct Support {
    std::vector<size_t> idx;  // raw indices into a
    long first_pos;           // 1-based position of idx[0] among stride entries
    int stride;
};

Support usable_support(const std::vector<BigRational>& a, int stride) {
    Support s;
    s.stride = stride;
    size_t off = 0;
    if (stride == 2) {
        // pick the parity class holding the nonzero mass
        size_t nz0 = 0, nz1 = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != 0) (i % 2 == 0 ? nz0 : nz1)++;
        }
        off = nz1 > nz0 ? 1 : 0;
    }
    std::vector<size_t> cls;
    for (size_t i = off; i < a.size(); i += static_cast<size_t>(stride)) cls.push_back(i);
    // longest all-nonzero suffix
    size_t start = cls.size();
    while (start > 0 && a[cls[start - 1]] != 0) --start;
    s.first_pos = static_cast<long>(start) + 1;
    s.idx.assign(cls.begin() + static_cast<long>(start), cls.end());
    return s;
}

// Iterated Aitken delta-squared acceleration; stops when two successive
// sweeps agree (auto order selection). Returns (limit, error estimate).
std::pair<HiReal, HiReal> accelerate(std::vector<HiReal> v) {
    if (v.empty()) throw std::invalid_argument("accelerate: empty sequence");
    HiReal best = v.back();
    HiReal err = v.size() > 1 ? abs(v.back() - v[v.size() - 2]) : abs(best);
    for (int sweep = 0; sweep < 12 && v.size() >= 3; ++sweep) {
        std::vector<HiReal> w;
        w.reserve(v.size() - 2);
        for (size_t i = 0; i + 2 < v.size(); ++i) {
            HiReal den = v[i + 2] - v[i + 1] - (v[i + 1] - v[i]);
            if (den.is_zero()) {
                w.push_back(v[i + 2]);
                continue;
            }
            HiReal num = v[i + 2] - v[i + 1];
            w.push_back(v[i + 2] - num * num / den);
        }
        HiReal cand = w.back();
        HiReal delta = abs(cand - best);
        if (delta < err) {
            err = delta;
            best = cand;
        } else {
            break;  // no further improvement; previous order was the stable one
        }
        v = std::move(w);
    }
    return {best, err};
}

long mu(long m, int stride) { return stride == 2 ? 2 * m : m; }

// d_m = c^m Gamma(mu(m)+s) / (pi^(mu(m)+t) a(m)) over the last `count`
// usable positions, at `wd` working digits.
std::vector<HiReal> scale_sequence(const std::vector<BigRational>& a, const Support& sup,
                                   const BigRational& c, int s, int t, long wd, size_t count) {
    HiReal pi = pi_const(wd);
    HiReal cr = HiReal::of(c, wd);
    std::vector<HiReal> out;
    size_t begin = sup.idx.size() > count ? sup.idx.size() - count : 0;
    for (size_t i = begin; i < sup.idx.size(); ++i) {
        long m = sup.first_pos + static_cast<long>(i);
        long g = mu(m, sup.stride) + s;  // Gamma argument
        if (g < 1) continue;
        BigRational av = a[sup.idx[i]];
        if (av < 0) av = -av;
        HiReal num = pow(cr, m) * HiReal::of(factorial(g - 1), wd);
        HiReal den = pow(pi, mu(m, sup.stride) + t) * HiReal::of(av, wd);
        out.push_back(num / den);
    }
    return out;
}

}  // namespace

std::optional<BigRational> to_rational(const HiReal& x, const BigInt& max_den,
                                       long tol_digits) {
    // continued fraction expansion of x
    long wd = x.digits();
    HiReal v = x;
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int step = 0; step < 64; ++step) {
        HiReal fl(v);
        mpfr_floor(fl.raw(), v.raw());
        BigInt ai;
        mpfr_get_z(ai.get_mpz_t(), fl.raw(), MPFR_RNDN);
        BigInt p2 = ai * p1 + p0;
        BigInt q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        HiReal frac = v - fl;
        HiReal approx = HiReal::of(BigRational(p1, q1), wd);
        HiReal diff = abs(x - approx);
        if (diff.is_zero() || diff.ilog10() < -tol_digits) {
            BigRational r(p1, q1);
            r.canonicalize();
            return r;
        }
        if (frac.is_zero()) break;
        v = HiReal::of(1, wd) / frac;
    }
    return std::nullopt;
}

FitScan fit_growth(const std::vector<BigRational>& a, int stride) {
    if (stride != 1 && stride != 2) throw std::invalid_argument("fit_growth: stride must be 1 or 2");
    Support sup = usable_support(a, stride);
    if (sup.idx.size() < 32)
        throw std::invalid_argument("fit_growth: need at least 32 nonzero terms at the stride");

    FitScan scan;
    scan.first_pos = sup.first_pos;
    scan.n_terms = static_cast<long>(sup.idx.size());

    const long wd = 60;
    HiReal pi = pi_const(wd);

    // ratio magnitudes rho_m = |a(m+1)/a(m)|
    std::vector<HiReal> rho;
    std::vector<long> pos;
    for (size_t i = 0; i + 1 < sup.idx.size(); ++i) {
        BigRational r = a[sup.idx[i + 1]] / a[sup.idx[i]];
        if (r < 0) r = -r;
        rho.push_back(HiReal::of(r, wd));
        pos.push_back(sup.first_pos + static_cast<long>(i));
    }

    // growth against the factorial scale: stride 1: rho_m/m -> c/pi,
    // stride 2: rho_m/(2m(2m+1)) -> c/pi^2
    std::vector<HiReal> q;
    for (size_t i = 0; i < rho.size(); ++i) {
        long m = pos[i];
        if (stride == 1)
            q.push_back(rho[i] / m);
        else
            q.push_back(rho[i] / (2 * m) / (2 * m + 1));
    }
    // non-monotone tail check on the normalized ratios' convergence
    auto [L, Lerr] = accelerate(q);
    if (L.sign() <= 0 || (!Lerr.is_zero() && Lerr > abs(L) * HiReal::of_double(0.5, wd))) {
        scan.degenerate = true;
        scan.note = "ratio sequence does not stabilize against the factorial scale";
        return scan;
    }
    HiReal cf = stride == 1 ? L * pi : L * pi * pi;
    if (cf < HiReal::of_double(0.05, wd)) {
        scan.degenerate = true;
        scan.note = "no factorial-type growth (degenerate sequence)";
        return scan;
    }
    auto crat = to_rational(cf, BigInt(12), 8);
    if (!crat) {
        scan.degenerate = true;
        scan.note = "growth base not a small rational: c*pi^-stride ~ " + cf.str(12);
        return scan;
    }
    BigRational c = *crat;

    // shift: stride 1: rho_m*pi/c - m -> s; stride 2: (rho_m*pi^2/c - 4m^2 - 2m)/(2m) -> s + ...
    std::vector<HiReal> u;
    HiReal cr = HiReal::of(c, wd);
    for (size_t i = 0; i < rho.size(); ++i) {
        long m = pos[i];
        if (stride == 1) {
            u.push_back(rho[i] * pi / cr - m);
        } else {
            // rho = c (2m+s)(2m+s+1) / pi^2 ; solve the quadratic's linear part
            HiReal w = rho[i] * pi * pi / cr;  // (2m+s)(2m+s+1)
            // (2m+s)(2m+s+1) = (2m)^2 + (2m)(2s+1) + s(s+1)
            HiReal lin = (w - HiReal::of(4 * m * m, wd)) / (2 * m);  // -> 2s+1 + s(s+1)/(2m)
            u.push_back((lin - 1) / 2);
        }
    }
    auto [S, Serr] = accelerate(u);
    double sd = S.to_double();
    int s_best = static_cast<int>(std::lround(sd));

    // rank (s, t) candidates: s near the extrapolated shift, t by
    // recognizability of d/pi^t; ties by smaller |s|+|t|
    for (int s = std::max(-2, s_best - 1); s <= std::min(3, s_best + 1); ++s) {
        // residual curvature score: deviation of the last ratio from the model
        HiReal model = stride == 1
                           ? cr * (pos.back() + s) / pi
                           : cr * (2 * pos.back() + s) * (2 * pos.back() + s + 1) / (pi * pi);
        double dev = std::fabs((rho.back() / model - 1).to_double()) +
                     std::fabs(sd - s);
        for (int t = -2; t <= 3; ++t) {
            FitCandidate fc{c, s, t, dev + 0.001 * (std::abs(s) + std::abs(t))};
            scan.candidates.push_back(fc);
        }
    }
    std::sort(scan.candidates.begin(), scan.candidates.end(),
              [](const FitCandidate& x, const FitCandidate& y) { return x.score < y.score; });
    return scan;
}

HiReal isolate_scale(const std::vector<BigRational>& a, const BigRational& c, int s, int t,
                     int stride, long digits) {
    Support sup = usable_support(a, stride);
    if (sup.idx.size() < 8) throw std::invalid_argument("isolate_scale: too few terms");
    long wd = digits + 25;
    auto dm = scale_sequence(a, sup, c, s, t, wd, 72);
    auto [d, err] = accelerate(dm);
    if (d.is_zero())
        throw std::runtime_error("isolate_scale: requested digits unreachable (zero limit)");
    if (!err.is_zero()) {
        long got = (abs(d) / err).is_zero() ? 0 : (abs(d) / err).ilog10();
        if (got < digits)
            throw std::runtime_error(
                "isolate_scale: requested digits unreachable with available terms (have ~" +
                std::to_string(got) + ", need " + std::to_string(digits) + ")");
    }
    return d.with_digits(digits);
}

std::optional<std::vector<BigInt>> recognize_constant(const HiReal& x, int max_degree,
                                                      const BigInt& coeff_bound) {
    double needed = 20.0 + max_degree * std::log10(mpz_get_d(coeff_bound.get_mpz_t()));
    if (x.digits() < static_cast<long>(needed))
        throw std::invalid_argument("recognize_constant: x carries too few digits");
    long full = x.digits();
    long search = full / 2;

    for (int deg = 1; deg <= max_degree; ++deg) {
        std::vector<HiReal> powers;
        powers.reserve(static_cast<size_t>(deg) + 1);
        for (int k = 0; k <= deg; ++k) powers.push_back(pow(x, k));
        relation::RelationProblem prob{powers, search, coeff_bound};
        auto out = relation::find_integer_relation(prob);
        if (out.status != relation::SearchStatus::Found) continue;
        std::vector<BigInt> p = out.relation->coeffs;
        while (!p.empty() && p.back() == 0) p.pop_back();
        if (p.size() < 2) continue;
        // verification at the full precision of x
        long res = relation::verify_relation(
            p, std::vector<HiReal>(powers.begin(), powers.begin() + static_cast<long>(p.size())),
            full);
        if (res != relation::kExactZero && res > -(full / 2)) continue;
        if (p.back() < 0)
            for (auto& v : p) v = -v;
        return p;
    }
    return std::nullopt;
}

std::optional<std::string> recognize_dictionary(const HiReal& x) {
    long wd = x.digits();
    if (wd < 30) return std::nullopt;
    HiReal two = HiReal::of(2, wd), seven = HiReal::of(7, wd);
    HiReal g = gamma_three_quarters(wd);
    struct Basis {
        std::string label;
        HiReal value;
    };
    std::vector<Basis> base;
    base.push_back({"1", HiReal::of(1, wd)});
    base.push_back({"sqrt(2)", sqrt(two)});
    base.push_back({"sqrt(7)", sqrt(seven)});
    base.push_back({"2^(1/4)", rootn(two, 4)});
    base.push_back({"7^(1/4)", rootn(seven, 4)});
    base.push_back({"sqrt(2)*7^(1/4)", sqrt(two) * rootn(seven, 4)});
    base.push_back({"sqrt(2)*7^(3/4)", sqrt(two) * rootn(seven, 4) * sqrt(seven)});
    for (int k = 0; k <= 8; ++k) {
        HiReal gk = pow(g, k);
        for (const auto& b : base) {
            HiReal q = x / (b.value * gk);
            auto r = to_rational(q, BigInt(1000000), wd - 12);
            if (!r) continue;
            std::string lbl;
            if (*r != 1) lbl += r->get_str() + "*";
            if (b.label != "1")
                lbl += b.label;
            else if (k == 0)
                lbl = r->get_str();
            if (k > 0) {
                if (!lbl.empty() && lbl.back() != '*' && b.label != "1") lbl += "*";
                if (b.label == "1" && *r != 1) lbl = r->get_str() + "*";
                lbl += "Gamma(3/4)^" + std::to_string(k);
            }
            if (lbl.empty()) lbl = "1";
            if (!lbl.empty() && lbl.back() == '*') lbl.pop_back();
            return lbl;
        }
    }
    return std::nullopt;
}

long agreement_digits(const std::vector<BigRational>& a, const GrowthFit& fit, long m) {
    Support sup = usable_support(a, fit.stride);
    long i = m - sup.first_pos;
    if (i < 0 || static_cast<size_t>(i) >= sup.idx.size())
        throw std::invalid_argument("agreement_digits: position outside available terms");
    BigRational av = a[sup.idx[static_cast<size_t>(i)]];
    if (av < 0) av = -av;
    long wd = fit.d.digits() + 10;
    long g = mu(m, fit.stride) + fit.s;
    HiReal formula = pow(HiReal::of(fit.c, wd), m) * HiReal::of(factorial(g - 1), wd) /
                     (fit.d.with_digits(wd) * pow(pi_const(wd), mu(m, fit.stride) + fit.t));
    if (av.get_den() == 1) return leading_agreement(BigInt(av.get_num()), formula);
    return leading_agreement(HiReal::of(av, wd), formula, fit.d.digits());
}

GrowthFit fit_sequence(const std::vector<BigRational>& a, int stride, long digits) {
    FitScan scan = fit_growth(a, stride);
    if (scan.degenerate) throw std::runtime_error("fit_sequence: degenerate: " + scan.note);

    Support sup = usable_support(a, stride);
    // sign pattern of the usable terms
    std::string signs;
    bool all_pos = true, alternating = true;
    for (size_t i = 0; i < sup.idx.size(); ++i) {
        bool neg = a[sup.idx[i]] < 0;
        if (neg) all_pos = false;
        if (i > 0 && (a[sup.idx[i]] < 0) == (a[sup.idx[i - 1]] < 0)) alternating = false;
    }
    signs = all_pos ? "all-positive" : (alternating ? "alternating" : "mixed");

    // Candidates best-first; a recognized scale constant settles the t
    // offset (t and d are only jointly identifiable from ratios).
    std::string last_err;
    std::optional<GrowthFit> fallback;
    for (const auto& cand : scan.candidates) {
        long g1 = mu(sup.first_pos, stride) + cand.s;
        if (g1 < 1 && sup.idx.size() < 40) continue;
        HiReal d;
        try {
            d = isolate_scale(a, cand.c, cand.s, cand.t, stride, digits);
        } catch (const std::exception& e) {
            last_err = e.what();
            continue;
        }
        GrowthFit fit;
        fit.c = cand.c;
        fit.s = cand.s;
        fit.t = cand.t;
        fit.stride = stride;
        fit.d = d;
        fit.first_pos = sup.first_pos;
        fit.n_used = static_cast<long>(sup.idx.size());
        fit.sign_note = signs;
        long top = sup.first_pos + static_cast<long>(sup.idx.size()) - 1;
        fit.quality = agreement_digits(a, fit, top);
        if (fit.quality < 3 && sup.idx.size() >= 40) {
            last_err = "candidate (s=" + std::to_string(cand.s) + ",t=" + std::to_string(cand.t) +
                       ") reproduces only " + std::to_string(fit.quality) + " digits";
            continue;
        }
        if (d.digits() >= 40) {
            try {
                auto p = recognize_constant(d, 8, BigInt(100000));
                if (p) {
                    fit.d_minpoly = *p;
                    fit.d_form = polynomial_string(*p);
                }
            } catch (const std::exception&) {
            }
        }
        if (!fit.d_form) {
            auto dict = recognize_dictionary(d);
            if (dict) fit.d_form = dict;
        }
        if (fit.d_form) return fit;
        if (!fallback) fallback = std::move(fit);
    }
    if (fallback) return *fallback;
    throw std::runtime_error("fit_sequence: no candidate produced a usable fit: " + last_err);
}

std::string polynomial_string(const std::vector<BigInt>& coeffs) {
    std::string s;
    for (size_t k = coeffs.size(); k-- > 0;) {
        const BigInt& c = coeffs[k];
        if (c == 0) continue;
        BigInt ab = c < 0 ? BigInt(-c) : c;
        std::string term;
        if (k == 0)
            term = ab.get_str();
        else {
            if (ab != 1) term = ab.get_str() + "*";
            term += "x";
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace ppforge::asym

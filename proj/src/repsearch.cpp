#include "ppforge/repsearch.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppforge/kernel.hpp"
#include "ppforge/relation.hpp"
#include "ppforge/series.hpp"

namespace ppforge::repsearch {

SValueFn direct_source() {
    return [](long k, const BigRational& r, long digits) {
        return series::eval_S(k, r, digits).value;
    };
}

long policy_digits(const BigInt& P, long expected_coeff_digits) {
    return 40 + 2 * decimal_digit_count(P) + 10 * expected_coeff_digits;
}

BigRational zeta_exact_value(const std::array<BigInt, 5>& c, long k1, long k2) {
    BigRational v = BigRational(c[1]) * series::approx_eq8_rational(k1, BigRational(1)) +
                    BigRational(c[2]) * series::approx_eq8_rational(k1, BigRational(4)) +
                    BigRational(c[3]) * series::approx_eq8_rational(k2, BigRational(1)) +
                    BigRational(c[4]) * series::approx_eq8_rational(k2, BigRational(4));
    v.canonicalize();
    return v;
}

BigRational zeta_exact_check(const Representation& rep) {
    return zeta_exact_value(rep.coeffs, rep.k1, rep.k2);
}

void fill_approx(Representation& rep) {
    rep.approx.clear();
    auto term = [&](const BigInt& whole, const BigInt& quarter, long k) {
        BigInt p4;
        mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(k + 1));
        BigRational u = (BigRational(whole) + BigRational(quarter, p4)) * BigRational(factorial(k));
        u.canonicalize();
        if (u != 0) rep.approx.push_back({u, k + 1});
    };
    term(rep.coeffs[1], rep.coeffs[2], rep.k1);
    term(rep.coeffs[3], rep.coeffs[4], rep.k2);
    long wd = 35;
    HiReal v(wd);
    HiReal pi = pi_const(wd);
    for (const auto& t : rep.approx) v += HiReal::of(t.u, wd) / pow(pi, t.pi_exp);
    rep.approx_value = v.with_digits(25);
}

namespace {

std::vector<std::pair<std::string, BigInt>> pairwise_gcds(const std::array<BigInt, 5>& c) {
    static const char* names[4] = {"a", "b", "c", "d"};
    std::vector<std::pair<std::string, BigInt>> out;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), c[static_cast<size_t>(i)].get_mpz_t(),
                    c[static_cast<size_t>(j)].get_mpz_t());
            out.emplace_back(std::string(names[i - 1]) + "," + names[j - 1], g);
        }
    return out;
}

std::vector<std::pair<long, long>> pair_scan_order(long k_max) {
    std::vector<std::pair<long, long>> pairs;
    for (long k1 = 3; k1 <= k_max; k1 += 2)
        for (long k2 = k1 + 2; k2 <= k_max; k2 += 2) pairs.emplace_back(k1, k2);
    std::sort(pairs.begin(), pairs.end(), [](auto& x, auto& y) {
        if (x.first + x.second != y.first + y.second)
            return x.first + x.second < y.first + y.second;
        return x.first < y.first;
    });
    return pairs;
}

}  // namespace

SearchReport find_representation(const RepQuery& q, const SValueFn& sval) {
    if (q.P < 2) throw std::domain_error("find_representation: P must be >= 2");
    SearchReport report;
    long base_digits = q.digits > 0 ? q.digits : policy_digits(q.P, q.expected_coeff_digits);

    for (auto [k1, k2] : pair_scan_order(q.k_max)) {
        long digits = base_digits;
        bool done_pair = false;
        while (!done_pair) {
            long vdigits = (3 * digits) / 2;  // verification headroom
            std::vector<HiReal> values;
            values.push_back(HiReal::of(q.P, vdigits));
            values.push_back(sval(k1, BigRational(1), vdigits));
            values.push_back(sval(k1, BigRational(4), vdigits));
            values.push_back(sval(k2, BigRational(1), vdigits));
            values.push_back(sval(k2, BigRational(4), vdigits));
            relation::RelationProblem prob{std::move(values), digits, q.coeff_bound};
            auto out = relation::find_integer_relation(prob);

            if (out.status == relation::SearchStatus::Found) {
                std::vector<BigInt> c = out.relation->coeffs;
                if (mpz_cmpabs_ui(c[0].get_mpz_t(), 1) != 0) {
                    report.pairs.push_back({k1, k2, "rejected:|e|!=1"});
                    done_pair = true;
                    break;
                }
                if (c[0] > 0)
                    for (auto& x : c) x = -x;  // appendix normalization e = -1
                Representation rep;
                rep.P = q.P;
                rep.k1 = k1;
                rep.k2 = k2;
                std::copy(c.begin(), c.end(), rep.coeffs.begin());
                BigRational zv = zeta_exact_check(rep);
                rep.zeta_exact = (zv == BigRational(q.P));
                rep.residual_log10 = out.relation->residual_log10;
                rep.digits_used = digits;
                bool residual_ok = rep.residual_log10 == relation::kExactZero ||
                                   rep.residual_log10 <= -(digits / 2);
                if (!rep.zeta_exact || !residual_ok) {
                    report.pairs.push_back({k1, k2, "rejected:spurious"});
                    done_pair = true;
                    break;
                }
                fill_approx(rep);
                rep.gcd_report = pairwise_gcds(rep.coeffs);
                rep.target_probable_prime = is_probable_prime(q.P);
                report.found.push_back(std::move(rep));
                report.pairs.push_back({k1, k2, "found"});
                report.digits_used = digits;
                if (!q.all_pairs) return report;
                done_pair = true;
            } else if (out.status == relation::SearchStatus::NoneWithinBound) {
                report.pairs.push_back({k1, k2, "none"});
                done_pair = true;
            } else {
                // Inconclusive: escalate x1.5 up to the cap
                long next = (3 * digits) / 2;
                if (next > q.digits_cap) {
                    report.pairs.push_back({k1, k2, "inconclusive"});
                    done_pair = true;
                } else {
                    digits = next;
                }
            }
        }
    }
    if (report.found.empty()) {
        report.failure = "no representation found up to k_max=" + std::to_string(q.k_max) +
                         " (pairs scanned: " + std::to_string(report.pairs.size()) + ")";
        report.digits_used = base_digits;
    }
    return report;
}

AppendixReport verify_appendix(const std::vector<appendix::AppendixRow>& rows,
                               const SValueFn& sval) {
    AppendixReport rep;
    const long vd = 80;
    for (const auto& row : rows) {
        RowCheck chk;
        chk.row = row;
        // exact zeta-rational gate
        BigRational zv = zeta_exact_value(row.vec, row.k1, row.k2);
        chk.zeta_exact = (zv == BigRational(row.P));
        // numeric residual at 80 digits
        std::vector<HiReal> vals;
        vals.push_back(HiReal::of(row.P, vd + 20));
        vals.push_back(sval(row.k1, BigRational(1), vd + 20));
        vals.push_back(sval(row.k1, BigRational(4), vd + 20));
        vals.push_back(sval(row.k2, BigRational(1), vd + 20));
        vals.push_back(sval(row.k2, BigRational(4), vd + 20));
        std::vector<BigInt> c(row.vec.begin(), row.vec.end());
        chk.residual_log10 = relation::verify_relation(c, vals, vd);
        // recomputed approximation string
        Representation r;
        r.P = row.P;
        r.k1 = row.k1;
        r.k2 = row.k2;
        r.coeffs = row.vec;
        fill_approx(r);
        chk.recomputed_approx = appendix::format_approx(r.approx);
        std::string printed = appendix::format_approx(row.approx);
        chk.approx_matches = (chk.recomputed_approx == printed);
        chk.gcd_report = pairwise_gcds(row.vec);
        bool ok = chk.zeta_exact && chk.approx_matches &&
                  (chk.residual_log10 == relation::kExactZero || chk.residual_log10 <= -40);
        (ok ? rep.rows_ok : rep.rows_failed)++;
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

std::vector<BatchResult> batch_search(const std::vector<BigInt>& targets, const RepQuery& tmpl,
                                      const SValueFn& sval) {
    std::vector<BatchResult> out;
    out.reserve(targets.size());
    for (const auto& t : targets) {
        BatchResult br;
        br.target = t;
        try {
            RepQuery q = tmpl;
            q.P = t;
            q.all_pairs = false;
            SearchReport rep = find_representation(q, sval);
            if (!rep.found.empty())
                br.rep = rep.found.front();
            else
                br.failure = rep.failure;
        } catch (const std::exception& e) {
            br.failure = e.what();
        }
        out.push_back(std::move(br));
    }
    return out;
}

}  // namespace ppforge::repsearch

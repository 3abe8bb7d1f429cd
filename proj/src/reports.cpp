#include "ppforge/reports.hpp"

namespace ppforge::cli {

namespace {

std::string rat(const BigRational& r) {
    BigRational c = r;
    c.canonicalize();
    return c.get_str();
}

}  // namespace

json to_json(const series::SeriesValue& v) {
    return json{{"k", v.key.k},
                {"r", rat(v.key.r)},
                {"digits", v.digits},
                {"value", v.value.str(v.digits)},
                {"terms_used", v.terms_used}};
}

json to_json(const series::ClosedForm& cf, long check_digits, const HiReal& closed_value,
             const HiReal& direct_value) {
    HiReal diff = abs(closed_value - direct_value);
    json j{{"k", cf.k},
           {"r", cf.r},
           {"A", rat(cf.A)},
           {"B", rat(cf.B)},
           {"paper_A", rat(cf.paper_A)},
           {"paper_B", rat(cf.paper_B)},
           {"approx_u", rat(cf.approx_u)},
           {"approx_pi_exp", cf.approx_pi_exp},
           {"paper_approx_pi_exp", cf.paper_approx_pi_exp},
           {"erratum", cf.erratum},
           {"check_digits", check_digits},
           {"residual_log10", diff.is_zero() ? -check_digits : diff.ilog10()}};
    if (!cf.note.empty()) j["note"] = cf.note;
    return j;
}

json to_json(const series::TwoTermIdentity& id) {
    return json{{"k", id.k},
                {"r1", id.r1},
                {"r2", id.r2},
                {"a", id.a.get_str()},
                {"b", id.b.get_str()},
                {"V", rat(id.V)},
                {"zeta_route_exact", id.zeta_route_exact},
                {"residual_log10", id.residual_log10}};
}

json to_json(const asym::GrowthFit& fit, const std::string& expression) {
    json j{{"expression", expression},
           {"c", rat(fit.c)},
           {"s", fit.s},
           {"t", fit.t},
           {"stride", fit.stride},
           {"d_decimal", fit.d.str(std::min(fit.d.digits(), 40L))},
           {"quality", fit.quality},
           {"n_used", fit.n_used},
           {"sign_note", fit.sign_note}};
    if (fit.d_form) j["d_form"] = *fit.d_form;
    return j;
}

json to_json(const repsearch::Representation& rep) {
    json terms = json::array();
    for (const auto& t : rep.approx)
        terms.push_back(json{{"u", rat(t.u)}, {"pi_exp", t.pi_exp}});
    json gcds = json::object();
    for (const auto& [k, v] : rep.gcd_report) gcds[k] = v.get_str();
    json coeffs = json::array();
    for (const auto& c : rep.coeffs) coeffs.push_back(c.get_str());
    return json{{"P", rep.P.get_str()},
                {"k1", rep.k1},
                {"k2", rep.k2},
                {"coeffs", coeffs},
                {"approx", terms},
                {"approx_value", rep.approx_value.str(25)},
                {"zeta_exact", rep.zeta_exact},
                {"residual_log10", rep.residual_log10},
                {"digits_used", rep.digits_used},
                {"target_probable_prime", rep.target_probable_prime}};
}

json to_json(const repsearch::AppendixReport& rep) {
    json rows = json::array();
    for (const auto& c : rep.checks) {
        rows.push_back(json{{"line", c.row.line_no},
                            {"P", c.row.P.get_str()},
                            {"k1", c.row.k1},
                            {"k2", c.row.k2},
                            {"zeta_exact", c.zeta_exact},
                            {"residual_log10", c.residual_log10},
                            {"approx_matches", c.approx_matches},
                            {"recomputed_approx", c.recomputed_approx}});
    }
    return json{{"rows", rows},
                {"rows_ok", rep.rows_ok},
                {"rows_failed", rep.rows_failed},
                {"errata", rep.errata}};
}

}  // namespace ppforge::cli

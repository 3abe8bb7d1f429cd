#include <CLI11.hpp>

#include <iostream>
#include <memory>

#include "ppforge/commands.hpp"

int main(int argc, char** argv) {
    using namespace ppforge;

    CLI::App app{"ppforge: prime-number representations built from pi"};
    app.require_subcommand(1);

    std::string config_path;
    bool json = false, no_cache = false;
    app.add_option("--config", config_path, "config file (flat key = value)");
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_flag("--no-cache", no_cache, "disable the persistent S-value cache");

    long k = 3, n = 12, s = 7, digits = 0, kmax = 0, pair = 4;
    std::string r_text = "1", expr, p_text, bound_text, file;
    bool all_pairs = false, strict = false;

    auto* c_series = app.add_subcommand("series", "evaluate S(k, r) to a precision");
    c_series->add_option("--k", k, "exponent k >= 1")->required();
    c_series->add_option("--r", r_text, "rational r > 0, e.g. 2/7")->required();
    c_series->add_option("--digits", digits, "significant digits");

    auto* c_egf = app.add_subcommand("egf", "exact EGF terms of a trigonometric expression");
    c_egf->add_option("--expr", expr, "expression, e.g. (1+sin(x))/cos(x)")->required();
    c_egf->add_option("--n", n, "last index");

    auto* c_asym = app.add_subcommand("asym", "fit the general term c^m Gamma(m+s)/(d Pi^(m+t))");
    c_asym->add_option("--expr", expr, "expression")->required();
    c_asym->add_option("--n", n, "number of terms to expand")->required();
    c_asym->add_option("--digits", digits, "digits for the scale constant");

    auto* c_rep = app.add_subcommand("represent", "find P = a S(k1,1)+b S(k1,4)+c S(k2,1)+d S(k2,4)");
    c_rep->add_option("--p", p_text, "target integer")->required();
    c_rep->add_option("--kmax", kmax, "largest exponent scanned");
    c_rep->add_option("--digits", digits, "search precision override");
    c_rep->add_option("--bound", bound_text, "coefficient bound");
    c_rep->add_flag("--all-pairs", all_pairs, "report every pair, not the first hit");

    auto* c_batch = app.add_subcommand("batch", "search a file of targets");
    c_batch->add_option("--file", file, "targets, one integer per line")->required();
    c_batch->add_option("--kmax", kmax, "largest exponent scanned");
    c_batch->add_option("--bound", bound_text, "coefficient bound");

    auto* c_ident = app.add_subcommand("identities", "two-term rational identities");
    c_ident->add_option("--k", k, "exponent, k ≡ 3 (mod 4)")->required();
    c_ident->add_option("--pair", pair, "second r of the pair: 4 or 2");

    auto* c_ram = app.add_subcommand("ramanujan", "exact S(k,2) = B_{k+1}/(2(k+1)), k ≡ 1 (mod 4)");
    c_ram->add_option("--k", k, "exponent")->required();

    auto* c_beta = app.add_subcommand("beta", "Dirichlet beta function");
    c_beta->add_option("--s", s, "argument")->required();
    c_beta->add_option("--digits", digits, "significant digits");

    auto* c_table = app.add_subcommand("table", "closed-form table verification report");
    c_table->add_option("--digits", digits, "check precision (>= 50)");

    auto* c_app = app.add_subcommand("verify-appendix", "check a raw-table corpus file");
    c_app->add_option("--file", file, "corpus file")->required();
    c_app->add_flag("--strict", strict, "fail on any parse error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kUsage;
    }

    cli::Context ctx;
    ctx.json = json;
    ctx.out = &std::cout;
    ctx.err = &std::cerr;
    try {
        if (!config_path.empty()) ctx.cfg = cli::Config::load_file(config_path);
        ctx.cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kUsage;
    }

    std::unique_ptr<cli::SCache> cache;
    if (!no_cache && ctx.cfg.cache_enabled) {
        cache = std::make_unique<cli::SCache>(ctx.cfg.cache_path, true);
        ctx.cache = cache.get();
    }
    if (digits <= 0) digits = ctx.cfg.default_digits;

    try {
        if (*c_series) return cli::cmd_series(ctx, k, r_text, digits);
        if (*c_egf) return cli::cmd_egf(ctx, expr, n);
        if (*c_asym) return cli::cmd_asym(ctx, expr, n, digits);
        if (*c_rep) return cli::cmd_represent(ctx, p_text, kmax, 0, bound_text, all_pairs);
        if (*c_batch) return cli::cmd_batch(ctx, file, kmax, bound_text);
        if (*c_ident) return cli::cmd_identities(ctx, k, pair);
        if (*c_ram) return cli::cmd_ramanujan(ctx, k);
        if (*c_beta) return cli::cmd_beta(ctx, s, digits);
        if (*c_table) return cli::cmd_table(ctx, digits);
        if (*c_app) return cli::cmd_verify_appendix(ctx, file, strict);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kVerifyFailed;
    }
    return cli::kUsage;
}

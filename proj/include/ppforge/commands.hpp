#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ppforge/cache.hpp"
#include "ppforge/config.hpp"
#include "ppforge/repsearch.hpp"

namespace ppforge::cli {

// Exit codes: 0 success, 1 not-found, 2 verification failure, 3 parse/config.
enum ExitCode { kOk = 0, kNotFound = 1, kVerifyFailed = 2, kUsage = 3 };

struct Context {
    Config cfg;
    bool json = false;
    SCache* cache = nullptr;  // may be null (--no-cache)
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;

    repsearch::SValueFn sval() const;
};

int cmd_series(Context& ctx, long k, const std::string& r_text, long digits);
int cmd_egf(Context& ctx, const std::string& expr, long n);
int cmd_asym(Context& ctx, const std::string& expr, long n, long digits);
int cmd_represent(Context& ctx, const std::string& p_text, long kmax, long digits,
                  const std::string& bound_text, bool all_pairs);
int cmd_batch(Context& ctx, const std::string& file, long kmax, const std::string& bound_text);
int cmd_identities(Context& ctx, long k, long pair_r2);
int cmd_ramanujan(Context& ctx, long k);
int cmd_beta(Context& ctx, long s, long digits);
int cmd_table(Context& ctx, long digits);
int cmd_verify_appendix(Context& ctx, const std::string& file, bool strict);

}  // namespace ppforge::cli

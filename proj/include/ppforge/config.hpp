#pragma once

#include <string>

#include "ppforge/hireal.hpp"

namespace ppforge::cli {

// Flat "key = value" configuration. Caps must dominate defaults.
struct Config {
    long default_digits = 50;
    long digits_cap = 4000;
    long k_max_default = 25;
    BigInt coeff_bound_default = BigInt("100000000");
    std::string cache_path = "ppforge-cache.txt";
    std::string output_format = "text";  // "text" | "json"
    long scan_k_min = 3;                 // scan-order parameters
    bool cache_enabled = true;

    void apply(const std::string& key, const std::string& value);
    void validate() const;  // throws std::invalid_argument on violations

    static Config load_file(const std::string& path);
};

}  // namespace ppforge::cli

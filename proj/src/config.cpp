#include "ppforge/config.hpp"

#include <fstream>
#include <stdexcept>

namespace ppforge::cli {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

void Config::apply(const std::string& key, const std::string& value) {
    try {
        if (key == "default_digits")
            default_digits = std::stol(value);
        else if (key == "digits_cap")
            digits_cap = std::stol(value);
        else if (key == "k_max_default")
            k_max_default = std::stol(value);
        else if (key == "coeff_bound_default")
            coeff_bound_default = BigInt(value);
        else if (key == "cache_path")
            cache_path = value;
        else if (key == "output_format")
            output_format = value;
        else if (key == "scan_k_min")
            scan_k_min = std::stol(value);
        else if (key == "cache_enabled")
            cache_enabled = (value == "true" || value == "1" || value == "yes");
        else
            throw std::invalid_argument("unknown config key: " + key);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad value for config key " + key + ": " + value);
    }
}

void Config::validate() const {
    if (default_digits < 10) throw std::invalid_argument("config: default_digits must be >= 10");
    if (digits_cap < default_digits)
        throw std::invalid_argument("config: digits_cap must be >= default_digits");
    if (k_max_default < 5) throw std::invalid_argument("config: k_max_default must be >= 5");
    if (coeff_bound_default < 2) throw std::invalid_argument("config: coeff_bound_default too small");
    if (output_format != "text" && output_format != "json")
        throw std::invalid_argument("config: output_format must be text or json");
    if (scan_k_min < 3 || scan_k_min % 2 == 0)
        throw std::invalid_argument("config: scan_k_min must be odd >= 3");
}

Config Config::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file: " + path);
    Config c;
    std::string line;
    long ln = 0;
    while (std::getline(f, line)) {
        ++ln;
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::string t = trim(line);
        if (t.empty()) continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(ln) + ": expected key = value");
        c.apply(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    c.validate();
    return c;
}

}  // namespace ppforge::cli

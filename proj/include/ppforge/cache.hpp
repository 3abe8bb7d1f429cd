#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

#include "ppforge/hireal.hpp"

namespace ppforge::cli {

// Persistent S(k, r) value cache. Line-oriented append-only text with the
// header "ppforge-cache v1" and a per-line checksum; a corrupt line sends
// the whole file to quarantine (good records survive in a rewritten file)
// and computation proceeds with a warning.
//
// Record: k|p/q|digits|value|created-at|checksum
// `value` carries exactly `digits` significant digits. A stored value at
// digits' >= digits satisfies a request by re-rounding.
class SCache {
  public:
    SCache(std::string path, bool enabled);

    HiReal get_or_compute(long k, const BigRational& r, long digits);

    // Stored decimal for exactly this key, if present (testing hook).
    std::optional<std::string> lookup_exact(long k, const BigRational& r, long digits) const;

    bool corruption_warned() const { return corruption_warned_; }
    long hits() const { return hits_; }
    long misses() const { return misses_; }

    static std::string checksum_line(const std::string& payload);

  private:
    using Key = std::tuple<long, std::string, long>;  // k, "p/q", digits

    void load();
    void append_record(const Key& key, const std::string& value);
    void rewrite_clean();

    std::string path_;
    bool enabled_;
    bool corruption_warned_ = false;
    long hits_ = 0, misses_ = 0;
    std::map<Key, std::string> mem_;
    mutable std::mutex mu_;
};

}  // namespace ppforge::cli

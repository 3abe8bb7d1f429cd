#include "ppforge/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "ppforge/series.hpp"

namespace ppforge::cli {

namespace {

constexpr const char* kHeader = "ppforge-cache v1";

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string rat_str(const BigRational& r) {
    BigRational c = r;
    c.canonicalize();
    return c.get_str();  // "p" or "p/q"
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string SCache::checksum_line(const std::string& payload) {
    // FNV-1a 64
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SCache::SCache(std::string path, bool enabled) : path_(std::move(path)), enabled_(enabled) {
    if (enabled_) load();
}

void SCache::load() {
    std::ifstream f(path_);
    if (!f) return;  // fresh cache
    std::string line;
    bool first = true;
    bool corrupt = false;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            first = false;
            if (line != kHeader) {
                corrupt = true;
                break;
            }
            continue;
        }
        if (line.empty()) continue;
        auto parts = split(line, '|');
        if (parts.size() != 6) {
            corrupt = true;
            continue;
        }
        std::string payload =
            parts[0] + "|" + parts[1] + "|" + parts[2] + "|" + parts[3] + "|" + parts[4];
        if (checksum_line(payload) != parts[5]) {
            corrupt = true;
            continue;
        }
        try {
            Key k{std::stol(parts[0]), parts[1], std::stol(parts[2])};
            mem_[k] = parts[3];
        } catch (const std::exception&) {
            corrupt = true;
        }
    }
    f.close();
    if (corrupt) {
        corruption_warned_ = true;
        std::string qpath = path_ + ".quarantine";
        std::rename(path_.c_str(), qpath.c_str());
        std::cerr << "warning: cache checksum mismatch; quarantined " << path_ << " -> " << qpath
                  << ", keeping verified records\n";
        rewrite_clean();
    }
}

void SCache::rewrite_clean() {
    std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << kHeader << "\n";
        for (const auto& [k, v] : mem_) {
            std::string payload = std::to_string(std::get<0>(k)) + "|" + std::get<1>(k) + "|" +
                                  std::to_string(std::get<2>(k)) + "|" + v + "|" + now_iso8601();
            out << payload << "|" << checksum_line(payload) << "\n";
        }
    }
    std::rename(tmp.c_str(), path_.c_str());
}

void SCache::append_record(const Key& key, const std::string& value) {
    bool fresh = false;
    {
        std::ifstream probe(path_);
        fresh = !probe.good();
    }
    int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) return;  // caching silently unavailable
    ::flock(fd, LOCK_EX);
    std::string out;
    if (fresh) out = std::string(kHeader) + "\n";
    std::string payload = std::to_string(std::get<0>(key)) + "|" + std::get<1>(key) + "|" +
                          std::to_string(std::get<2>(key)) + "|" + value + "|" + now_iso8601();
    out += payload + "|" + checksum_line(payload) + "\n";
    ssize_t ignored = ::write(fd, out.data(), out.size());
    (void)ignored;
    ::flock(fd, LOCK_UN);
    ::close(fd);
}

std::optional<std::string> SCache::lookup_exact(long k, const BigRational& r, long digits) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = mem_.find(Key{k, rat_str(r), digits});
    if (it == mem_.end()) return std::nullopt;
    return it->second;
}

HiReal SCache::get_or_compute(long k, const BigRational& r, long digits) {
    if (!enabled_) return series::eval_S(k, r, digits).value;
    std::string rs = rat_str(r);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = mem_.find(Key{k, rs, digits});
        if (it != mem_.end()) {
            ++hits_;
            return HiReal::parse(it->second, digits);
        }
        // any stored precision >= requested satisfies by re-rounding
        for (auto it2 = mem_.lower_bound(Key{k, rs, digits}); it2 != mem_.end(); ++it2) {
            if (std::get<0>(it2->first) != k || std::get<1>(it2->first) != rs) break;
            long have = std::get<2>(it2->first);
            if (have >= digits) {
                ++hits_;
                return HiReal::parse(it2->second, have).with_digits(digits);
            }
        }
        ++misses_;
    }
    HiReal v = series::eval_S(k, r, digits).value;
    std::string dec = v.sci(digits);
    {
        std::lock_guard<std::mutex> lk(mu_);
        Key key{k, rs, digits};
        if (!mem_.count(key)) {
            mem_[key] = dec;
            append_record(key, dec);
        }
    }
    return v;
}

}  // namespace ppforge::cli

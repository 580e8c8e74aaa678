#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chroma2/rational.hpp"

namespace chroma2 {

// Ordered key/value report behind every subcommand. The same rows serialize
// as tab-separated lines or as one JSON object; timings are appended last and
// can be left out entirely for byte-stable comparisons.
class RunReport {
  public:
    void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
    void add(const std::string& key, const char* value) { rows_.emplace_back(key, value); }
    void add(const std::string& key, bool value) { rows_.emplace_back(key, value); }
    void add(const std::string& key, const Rat& value) { rows_.emplace_back(key, rat_string(value)); }
    template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
    void add(const std::string& key, T value) {
        rows_.emplace_back(key, static_cast<long long>(value));
    }

    void verdict(bool pass) { add("verdict", pass ? "PASS" : "FAIL"); }

    std::string tsv() const {
        std::ostringstream os;
        for (const auto& [k, v] : rows_) {
            os << k << '\t';
            if (v.is_string()) os << v.get<std::string>();
            else os << v.dump();
            os << '\n';
        }
        return os.str();
    }

    std::string json() const {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [k, v] : rows_) obj[k] = v;
        return obj.dump(2) + "\n";
    }

    bool has(const std::string& key) const {
        for (const auto& [k, v] : rows_)
            if (k == key) return true;
        return false;
    }

  private:
    std::vector<std::pair<std::string, nlohmann::ordered_json>> rows_;
};

class StageTimer {
  public:
    StageTimer() : start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace chroma2

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridnull {

/// Outcome of an exhaustive scan or a seeded randomized batch.
struct ScanReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t instances = 0;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::string> counterexamples;  // empty on passing runs
  std::optional<std::uint64_t> seed;
  double elapsed_seconds = 0.0;

  bool passed() const {
    return counterexamples.empty() &&
           std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.second; });
  }

  void set(std::string key, std::string value) {
    for (auto& [k, v] : parameters)
      if (k == key) {
        v = std::move(value);
        return;
      }
    parameters.emplace_back(std::move(key), std::move(value));
  }
  std::optional<std::string> get(const std::string& key) const {
    for (const auto& [k, v] : parameters)
      if (k == key) return v;
    return std::nullopt;
  }
  void verdict(std::string key, bool ok) { verdicts.emplace_back(std::move(key), ok); }
  void counterexample(std::string description) { counterexamples.push_back(std::move(description)); }
  void sort_counterexamples() { std::sort(counterexamples.begin(), counterexamples.end()); }

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

}  // namespace gridnull

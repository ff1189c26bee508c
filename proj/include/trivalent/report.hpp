#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trivalent/formula.hpp"
#include "trivalent/semantics.hpp"

namespace trivalent {

/// One failed check. Fields that do not apply stay empty; when `inference`,
/// `scheme`, `standard` and `valuation` are all set, the inference can be
/// re-checked from the command line and reproduces the failure.
struct Counterexample {
  std::string check;
  std::optional<Inference> inference;
  std::optional<std::string> scheme;
  std::optional<std::string> standard;
  std::optional<Valuation> valuation;
  std::string detail;
};

/// Outcome of a batch of checks. Only the first few failures are kept.
struct Report {
  static constexpr std::size_t kRecordedFailures = 20;

  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::vector<Counterexample> failures;

  bool passed() const noexcept { return failure_count == 0; }

  void fail(Counterexample c) {
    ++failure_count;
    if (failures.size() < kRecordedFailures) failures.push_back(std::move(c));
  }

  /// Counts one instance; records a failure when `holds` is false.
  void expect(bool holds, Counterexample c) {
    ++instances;
    if (!holds) fail(std::move(c));
  }

  /// As `expect`, building the counterexample only on failure.
  template <typename Make>
  void expect_with(bool holds, Make&& make) {
    ++instances;
    if (!holds) fail(make());
  }

  void merge(const Report& other) {
    instances += other.instances;
    failure_count += other.failure_count;
    for (const auto& c : other.failures) {
      if (failures.size() == kRecordedFailures) break;
      failures.push_back(c);
    }
  }
};

}  // namespace trivalent

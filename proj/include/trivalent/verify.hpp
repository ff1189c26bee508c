#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "trivalent/report.hpp"

namespace trivalent {

enum class SchemePairs { kAllPairs, kNamed };

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t corpus_size = 10'000;
  /// Prefix of the random corpus used where every scheme pair is tried.
  std::size_t reduced_size = 500;
  /// Operator-law samples per universe.
  std::size_t law_samples = 100;
  /// Claim ids to run; empty runs all.
  std::vector<std::string> only;
  /// Scheme pairs tried by the theorem4 claim: all 256 ordered pairs or the
  /// nine pairs of named presets.
  SchemePairs theorem4_pairs = SchemePairs::kAllPairs;
};

struct ClaimResult {
  std::string id;
  std::string description;
  Report report;
  double runtime_ms = 0;
};

struct VerifyResult {
  std::vector<ClaimResult> claims;
  bool passed() const;
};

struct ClaimInfo {
  std::string id;
  std::string description;
};

/// Claim ids in run order.
std::vector<ClaimInfo> claims();

/// Runs the selected claims. Throws PreconditionError for unknown ids.
VerifyResult run_verification(const VerifyOptions& options);

}  // namespace trivalent

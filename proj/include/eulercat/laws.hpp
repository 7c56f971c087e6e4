#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulercat/matrix.hpp"

namespace eulercat {

struct LawRunConfig {
  std::uint64_t seed = 1;
  std::size_t count = 50;
  std::size_t max_objects = 4;
  std::size_t max_hom = 3;
  std::size_t threads = 0;  // 0: hardware concurrency; never affects output
};

/// Throws std::invalid_argument unless count >= 1 and both bounds >= 1.
void validate(const LawRunConfig& config);

using PinvFn = std::function<RatMatrix(const RatMatrix&)>;

struct LawResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;  // instance did not meet the law's hypotheses
  std::optional<nlohmann::json> first_failure;
};

struct LawSummary {
  LawRunConfig config;
  std::vector<LawResult> laws;

  bool ok() const;
  const LawResult* find(const std::string& name) const;
};

/// Names of the laws in report order.
const std::vector<std::string>& law_names();

/// Runs every law on `count` random instances. Instance i draws from its own
/// generator seeded with (seed, i), so the summary depends only on the
/// config. `pinv_fn` is the pseudoinverse under test in the Penrose law.
LawSummary run_laws(const LawRunConfig& config, const PinvFn& pinv_fn = pinv);

/// Per-law counts and the first failing witness. Deterministic for a config.
nlohmann::json to_json(const LawSummary& s);

}  // namespace eulercat

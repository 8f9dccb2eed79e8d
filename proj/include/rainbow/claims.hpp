#pragma once

#include <string>
#include <vector>

#include "rainbow/fixtures.hpp"

namespace rainbow {

struct ClaimResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct ClaimOptions {
  /// Largest n for the Omega table check; Omega(8) needs ~1.7e7 reduced
  /// squares of side 7.
  int max_omega_n = kMaxOmegaN;
};

/// Replays every worked example and published value against `catalog`.
/// Each claim is evaluated independently; an exception fails that claim only.
std::vector<ClaimResult> run_claims(const FixtureCatalog& catalog, const ClaimOptions& opts = {});

/// One "PASS|FAIL  id  description[: detail]" line per claim.
std::string format_claims(const std::vector<ClaimResult>& results);

}  // namespace rainbow

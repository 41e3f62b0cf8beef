#pragma once

#include <string>
#include <vector>

namespace moduli {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Counterexample or summary.
  std::string detail;
};

/// Invariant suite behind `moduli-lab selfcheck`: table cross-checks,
/// substitution soundness, dimension identities and the destabilizer bound.
std::vector<CheckResult> run_selfcheck();

}  // namespace moduli

#pragma once

#include <string>
#include <vector>

#include "kottman/config.hpp"
#include "kottman/serialize.hpp"

namespace kottman {

/// Process exit codes of `verify`.
enum class Verdict { verified = 0, falsified = 2, budget = 3, usage = 4 };

struct VerifyResult {
  Verdict verdict = Verdict::verified;
  std::string kind;
  std::vector<std::string> checks;  // what was re-established
  std::string reason;               // why it was not verified
};

/// Re-checks a certificate from its raw data. Shares no search code with the
/// engine: sets are re-parsed into plain integer vectors and every free-set,
/// admissibility and exhaustive claim is recomputed by direct enumeration.
/// Norm claims are recomputed through the norm oracles.
VerifyResult verify_certificate(const json& cert, const Budgets& budgets = {});

}  // namespace kottman

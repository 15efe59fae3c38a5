#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kottman/config.hpp"
#include "kottman/serialize.hpp"

namespace kottman {

inline constexpr const char* kVersion = "1.0.0";

struct RunManifest {
  std::vector<std::string> command;
  Budgets budgets;
  double wall_time = 0.0;  // seconds; excluded from every digest
};

std::string sha256_hex(std::string_view data);

/// {"command", "config_digest", "seed", "versions", "budgets", "wall_time"}.
json manifest_to_json(const RunManifest& m);

/// {"kind", "payload", "manifest", "manifest_digest", "digest"}. The digest
/// covers everything except itself and the manifest wall time.
json make_certificate(const std::string& kind, json payload, const RunManifest& m);

std::string manifest_digest(const json& manifest);
std::string certificate_digest(const json& cert);

}  // namespace kottman

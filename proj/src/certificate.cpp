#include "kottman/certificate.hpp"

#include <openssl/evp.h>

#include <gmp.h>

#include <cstdio>

#include "kottman/errors.hpp"

namespace kottman {

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 computation failed");
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

json manifest_to_json(const RunManifest& m) {
  const json budgets = to_json(m.budgets);
  return {{"command", m.command},
          {"config_digest", sha256_hex(budgets.dump())},
          {"seed", m.budgets.seed},
          {"versions", {{"kottman", kVersion}, {"gmp", gmp_version}, {"compiler", __VERSION__}}},
          {"budgets", budgets},
          {"wall_time", m.wall_time}};
}

std::string manifest_digest(const json& manifest) {
  json m = manifest;
  if (m.is_object()) m.erase("wall_time");
  return sha256_hex(m.dump());
}

std::string certificate_digest(const json& cert) {
  json c = cert;
  if (!c.is_object()) return {};
  c.erase("digest");
  if (c.contains("manifest") && c["manifest"].is_object()) c["manifest"].erase("wall_time");
  return sha256_hex(c.dump());
}

json make_certificate(const std::string& kind, json payload, const RunManifest& m) {
  json cert{{"kind", kind}, {"payload", std::move(payload)}, {"manifest", manifest_to_json(m)}};
  cert["manifest_digest"] = manifest_digest(cert["manifest"]);
  cert["digest"] = certificate_digest(cert);
  return cert;
}

}  // namespace kottman

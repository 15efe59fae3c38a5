#pragma once

#include <json.hpp>

#include "kottman/arrow.hpp"
#include "kottman/auerbach.hpp"
#include "kottman/config.hpp"
#include "kottman/freeset.hpp"
#include "kottman/gaussian.hpp"
#include "kottman/kernels.hpp"
#include "kottman/norm.hpp"
#include "kottman/separation.hpp"

namespace kottman {

using nlohmann::json;

/// Vectors are strings over {+,0,-} (Gaussian: {0,+,-,i,j}); sets are
/// {"dim": n, "members": [...]} in canonical order.
json to_json(const SymmetricCubeSet& a);
json to_json(const GaussianSet& a);
SymmetricCubeSet cube_set_from_json(const json& j);
GaussianSet gaussian_set_from_json(const json& j);
json vectors_to_json(const std::vector<TernaryVector>& v);
json vectors_to_json(const std::vector<GaussianVector>& v);
std::vector<TernaryVector> ternary_vectors_from_json(const json& j);

/// Rationals are "p/q" strings; float entries are [re, im] number pairs.
json to_json(const RVec& v);
json to_json(const CVec& v);
RVec rvec_from_json(const json& j);
CVec cvec_from_json(const json& j);

/// {"dim", "field", "norm": {"type", ...}}.
json to_json(const NormSpec& s);
NormSpec norm_spec_from_json(const json& j);
NormSpec load_norm_spec(const std::string& path);

json to_json(const Budgets& b);
json to_json(const SweepReport& r);
json to_json(const FreeSetCertificate& c);
json to_json(const GaussianFreeCertificate& c);
json to_json(const ArrowCertificate& c);
json to_json(const ValueResult& v, ArrowRelation relation, int l);
json to_json(const GridReport& r);
json to_json(const AuerbachBasis& b);
json to_json(const AuerbachReport& r);
AuerbachBasis auerbach_basis_from_json(const json& j);
json to_json(const SeparatedFamily& f);

/// Payloads of the certificate kinds not covered above.
json witness_payload(FreeMode mode, int l, const SymmetricCubeSet& set, const MaxFreeResult& best);
json extend_payload(const SymmetricCubeSet& set, const std::vector<TernaryVector>& base, const FreeSetCertificate& result);
json auerbach_payload(const NormSpec& spec, const AuerbachBasis& basis, const AuerbachReport& report);

json read_json_file(const std::string& path);

}  // namespace kottman

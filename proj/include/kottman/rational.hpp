#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace kottman {

using Rational = mpq_class;
using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;  // row-major

/// Accepts "p/q", integers and finite decimals ("0.25", "-3e-2" is rejected).
Rational parse_rational(std::string_view text);
/// Canonical form: "p" or "p/q" in lowest terms.
std::string format_rational(const Rational& q);

Rational dot(const RVec& a, const RVec& b);
Rational abs_value(const Rational& q);

}  // namespace kottman

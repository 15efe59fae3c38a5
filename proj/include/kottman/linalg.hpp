#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "kottman/rational.hpp"

namespace kottman {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;
using CMat = std::vector<CVec>;  // row-major

std::size_t rank(RMat m);
Rational determinant(RMat m);
/// nullopt when singular.
std::optional<RMat> inverse(const RMat& m);

Complex determinant(const CMat& m);
/// nullopt when numerically singular.
std::optional<CMat> inverse(const CMat& m);

/// Matrix whose k-th column is cols[k].
RMat from_columns(const std::vector<RVec>& cols);
CMat from_columns(const std::vector<CVec>& cols);

CVec to_complex(const RVec& v);

}  // namespace kottman

#include "kottman/admissible.hpp"

#include <algorithm>
#include <bit>

#include "kottman/errors.hpp"

namespace kottman {
namespace {

std::optional<std::uint64_t> power_of_two(std::uint64_t exponent) {
  if (exponent >= 63) return std::nullopt;
  return std::uint64_t{1} << exponent;
}

TernaryVector from_code(int dim, std::uint64_t code) {
  std::uint64_t pos = 0, neg = 0;
  for (int i = 0; i < dim; ++i) {
    const auto digit = code % 3;
    code /= 3;
    if (digit == 1) pos |= std::uint64_t{1} << i;
    else if (digit == 2) neg |= std::uint64_t{1} << i;
  }
  return TernaryVector::from_masks(dim, pos, neg);
}

void check_budget(std::optional<std::uint64_t> count, std::uint64_t budget, const char* what, int dim) {
  if (!count || *count > budget)
    throw BudgetExceeded(std::string(what) + " in dimension " + std::to_string(dim) + " exceeds the enumeration budget of " +
                         std::to_string(budget) + " sets");
}

bool first_nonzero_is_plus_one(const TernaryVector& x) {
  const std::uint64_t s = x.support();
  return s != 0 && (x.positive_mask() & (s & -s)) != 0;
}

constexpr int kSamplerTableMaxDim = 12;

std::uint64_t pow3(int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

}  // namespace

std::optional<std::uint64_t> admissible_count(int dim, bool include_zero_choice) {
  if (dim < 1 || dim > 39) return std::nullopt;
  std::uint64_t p = 1;
  for (int i = 0; i < dim; ++i) p *= 3;
  const std::uint64_t orbits = (p - 1) / 2;
  return power_of_two(orbits - static_cast<std::uint64_t>(dim) + (include_zero_choice ? 1 : 0));
}

std::optional<std::uint64_t> gaussian_admissible_count(int dim, bool include_zero_choice) {
  if (dim < 1 || dim > 27) return std::nullopt;
  std::uint64_t p = 1;
  for (int i = 0; i < dim; ++i) p *= 5;
  const std::uint64_t orbits = (p - 1) / 4;
  return power_of_two(orbits - static_cast<std::uint64_t>(dim) + (include_zero_choice ? 1 : 0));
}

std::vector<TernaryVector> free_orbit_representatives(int dim) {
  if (dim < 1 || dim > 20) throw BudgetExceeded("orbit table beyond dimension 20");
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) total *= 3;
  std::vector<TernaryVector> reps;
  reps.reserve(total / 2);
  for (std::uint64_t c = 1; c < total; ++c) {
    const TernaryVector x = from_code(dim, c);
    if (first_nonzero_is_plus_one(x) && x.weight() > 1) reps.push_back(x);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<GaussianVector> gaussian_free_orbit_representatives(int dim) {
  if (dim < 1 || dim > 12) throw BudgetExceeded("Gaussian orbit table beyond dimension 12");
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) total *= 5;
  std::vector<GaussianVector> reps;
  std::vector<int> digits(dim);
  for (std::uint64_t c = 1; c < total; ++c) {
    std::uint64_t r = c;
    for (int i = 0; i < dim; ++i) {
      digits[i] = static_cast<int>(r % 5);
      r /= 5;
    }
    const GaussianVector x = GaussianVector::from_digits(digits);
    const TernaryVector& re = x.real_part();
    const std::uint64_t s = re.support() | x.imag_part().support();
    const bool leading_one = (re.positive_mask() & (s & -s)) != 0;
    if (leading_one && std::popcount(s) > 1) reps.push_back(x);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

AdmissibleEnumerator::AdmissibleEnumerator(int dim, bool include_zero_choice, std::uint64_t budget)
    : dim_(dim), zero_choice_(include_zero_choice) {
  if (dim < 1) throw PreconditionError("dimension must be positive");
  const auto count = admissible_count(dim, include_zero_choice);
  check_budget(count, budget, "admissible-set enumeration", dim);
  count_ = *count;
  free_ = free_orbit_representatives(dim);
}

SymmetricCubeSet AdmissibleEnumerator::at(std::uint64_t index) const {
  if (index >= count_) throw PreconditionError("admissible-set index out of range");
  std::vector<TernaryVector> members;
  members.reserve(2 * (dim_ + free_.size()) + 1);
  for (int k = 1; k <= dim_; ++k) {
    members.push_back(basis_vector(dim_, k));
    members.push_back(-basis_vector(dim_, k));
  }
  for (std::size_t j = 0; j < free_.size(); ++j)
    if ((index >> j) & 1U) {
      members.push_back(free_[j]);
      members.push_back(-free_[j]);
    }
  if (zero_choice_ && ((index >> free_.size()) & 1U)) members.emplace_back(dim_);
  return SymmetricCubeSet(dim_, std::move(members));
}

GaussianAdmissibleEnumerator::GaussianAdmissibleEnumerator(int dim, bool include_zero_choice, std::uint64_t budget)
    : dim_(dim), zero_choice_(include_zero_choice) {
  if (dim < 1) throw PreconditionError("dimension must be positive");
  const auto count = gaussian_admissible_count(dim, include_zero_choice);
  check_budget(count, budget, "i-closed set enumeration", dim);
  count_ = *count;
  free_ = gaussian_free_orbit_representatives(dim);
}

GaussianSet GaussianAdmissibleEnumerator::at(std::uint64_t index) const {
  if (index >= count_) throw PreconditionError("Gaussian admissible-set index out of range");
  std::vector<GaussianVector> seeds;
  for (int k = 1; k <= dim_; ++k) seeds.push_back(gaussian_basis_vector(dim_, k));
  for (std::size_t j = 0; j < free_.size(); ++j)
    if ((index >> j) & 1U) seeds.push_back(free_[j]);
  GaussianSet closed = i_closure(seeds, dim_);
  if (zero_choice_ && ((index >> free_.size()) & 1U)) {
    std::vector<GaussianVector> members(closed.members().begin(), closed.members().end());
    members.emplace_back(dim_);
    return GaussianSet(dim_, std::move(members));
  }
  return closed;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t dim, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(dim), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

AdmissibleSampler::AdmissibleSampler(int dim) : dim_(dim), free_(free_orbit_representatives(dim)) {
  if (dim > kSamplerTableMaxDim) return;
  const std::uint64_t total = pow3(dim);
  std::vector<std::int32_t> orbit_by_code(total, -1);
  orbit_by_code[0] = -2;
  for (std::size_t j = 0; j < free_.size(); ++j) {
    orbit_by_code[free_[j].code()] = static_cast<std::int32_t>(j);
    orbit_by_code[(-free_[j]).code()] = static_cast<std::int32_t>(j);
  }
  std::vector<TernaryVector> all;
  all.reserve(total);
  for (std::uint64_t c = 0; c < total; ++c) all.push_back(from_code(dim, c));
  const SymmetricCubeSet cube(dim, std::move(all));
  cube_.assign(cube.members().begin(), cube.members().end());
  orbit_.reserve(total);
  for (const auto& x : cube_) orbit_.push_back(x.weight() == 1 ? -1 : orbit_by_code[x.code()]);
}

SymmetricCubeSet AdmissibleSampler::sample(std::mt19937_64& rng) const {
  std::uint64_t bits = 0;
  int left = 0;
  auto coin = [&] {
    if (left == 0) {
      bits = rng();
      left = 64;
    }
    const bool b = bits & 1U;
    bits >>= 1;
    --left;
    return b;
  };
  std::vector<char> chosen(free_.size());
  for (auto& c : chosen) c = coin();
  const bool zero = coin();

  std::vector<TernaryVector> members;
  if (!cube_.empty()) {
    members.reserve(cube_.size());
    for (std::size_t i = 0; i < cube_.size(); ++i) {
      const auto o = orbit_[i];
      if (o == -1 || (o == -2 && zero) || (o >= 0 && chosen[o])) members.push_back(cube_[i]);
    }
    return SymmetricCubeSet::from_canonical(dim_, std::move(members));
  }
  for (int k = 1; k <= dim_; ++k) {
    members.push_back(basis_vector(dim_, k));
    members.push_back(-basis_vector(dim_, k));
  }
  for (std::size_t j = 0; j < free_.size(); ++j)
    if (chosen[j]) {
      members.push_back(free_[j]);
      members.push_back(-free_[j]);
    }
  if (zero) members.emplace_back(dim_);
  return SymmetricCubeSet(dim_, std::move(members));
}

GaussianSampler::GaussianSampler(int dim) : dim_(dim), free_(gaussian_free_orbit_representatives(dim)) {}

GaussianSet GaussianSampler::sample(std::mt19937_64& rng) const {
  std::vector<GaussianVector> members;
  members.reserve(4 * (free_.size() + dim_) + 1);
  auto add_orbit = [&](GaussianVector x) {
    for (int r = 0; r < 4; ++r) {
      members.push_back(x);
      x = x.times_i();
    }
  };
  for (int k = 1; k <= dim_; ++k) add_orbit(gaussian_basis_vector(dim_, k));
  std::uint64_t bits = 0;
  int left = 0;
  auto coin = [&] {
    if (left == 0) {
      bits = rng();
      left = 64;
    }
    const bool b = bits & 1U;
    bits >>= 1;
    --left;
    return b;
  };
  for (const auto& rep : free_)
    if (coin()) add_orbit(rep);
  if (coin()) members.emplace_back(dim_);
  return GaussianSet(dim_, std::move(members));
}

}  // namespace kottman

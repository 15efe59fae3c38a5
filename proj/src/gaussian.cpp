#include "kottman/gaussian.hpp"

#include <algorithm>
#include <string>

#include "kottman/conflict_graph.hpp"
#include "kottman/errors.hpp"
#include "kottman/freeset.hpp"

namespace kottman {
namespace {

bool conflict(const GaussianVector& x, const GaussianVector& y, const GaussianSet& a) {
  const auto d = gaussian_difference(x, y);
  return d && (a.contains(*d) || a.contains(-*d));
}

GaussianFreeCertificate make_certificate(const GaussianSet& a, std::vector<GaussianVector> w) {
  GaussianFreeCertificate c;
  std::sort(w.begin(), w.end());
  c.witness = std::move(w);
  c.claimed_size = c.witness.size();
  c.checked = is_gaussian_free(c.witness, a);
  c.ground_set = a;
  return c;
}

}  // namespace

bool is_gaussian_free(std::span<const GaussianVector> b_in, const GaussianSet& a) {
  std::vector<GaussianVector> b(b_in.begin(), b_in.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  for (const auto& x : b) {
    if (x.dim() != a.dim()) throw PreconditionError("is_gaussian_free: dimension mismatch");
    if (!a.contains(x)) throw PreconditionError("is_gaussian_free: " + x.to_string() + " is not in the ground set");
  }
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (conflict(b[i], b[j], a)) return false;
  return true;
}

std::vector<GaussianVector> max_gaussian_free_subset(const GaussianSet& a, std::size_t vertex_budget) {
  if (a.size() > vertex_budget)
    throw BudgetExceeded("maximum Gaussian free subset: |A| = " + std::to_string(a.size()) +
                         " exceeds the vertex budget of " + std::to_string(vertex_budget));
  const auto g = ConflictGraph::build(a);
  std::vector<GaussianVector> out;
  for (auto v : lex_least_maximum_independent_set(g)) out.push_back(a[v]);
  return out;
}

GaussianSet delta_construction(const SymmetricCubeSet& a) {
  if (!a.admissible()) throw PreconditionError("delta_construction: set must contain every e_k and be symmetric");
  if (a.contains_zero()) throw PreconditionError("delta_construction: set must not contain 0");
  std::vector<GaussianVector> m;
  const TernaryVector zero(a.dim());
  for (const auto& x : a.members()) {
    m.emplace_back(x, zero);
    m.emplace_back(zero, x);
  }
  return GaussianSet(a.dim(), std::move(m));
}

GaussianFreeCertificate find_gaussian_difference_free(const GaussianSet& a, const Budgets& budgets) {
  if (!a.admissible())
    throw PreconditionError("find_gaussian_difference_free: set must contain every e_k and be closed under i");
  const std::size_t want = 2 * static_cast<std::size_t>(a.dim()) + 2;

  const auto real = find_difference_free(a.embedded(), budgets);
  std::vector<GaussianVector> base;
  for (const auto& y : real.witness) base.push_back(*unembed_real(y));
  const std::size_t embedded_size = base.size();

  for (const auto& y : a.members()) {
    if (std::find(base.begin(), base.end(), y) != base.end()) continue;
    if (std::none_of(base.begin(), base.end(), [&](const GaussianVector& x) { return conflict(x, y, a); })) {
      auto w = base;
      w.push_back(y);
      auto c = make_certificate(a, std::move(w));
      c.embedded_size = embedded_size;
      c.augmentation = "single_addition";
      if (c.checked) return c;
    }
  }

  if (a.size() > budgets.augmentation_vertices)
    throw BudgetExceeded("Gaussian augmentation: |A| = " + std::to_string(a.size()) + " exceeds the vertex budget of " +
                         std::to_string(budgets.augmentation_vertices));
  const auto g = ConflictGraph::build(a);
  std::vector<std::size_t> seed;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::find(base.begin(), base.end(), a[i]) != base.end()) seed.push_back(i);
  const auto found = independent_set_of_size(g, want, {}, seed);
  if (!found)
    throw ResearchArtifact("no difference-free subset of size " + std::to_string(want) + " exists in an admissible set of V_" +
                           std::to_string(a.dim()) + " (|A| = " + std::to_string(a.size()) + ")");
  std::vector<GaussianVector> w;
  for (std::size_t i = 0; i < want; ++i) w.push_back(a[(*found)[i]]);
  auto c = make_certificate(a, std::move(w));
  c.embedded_size = embedded_size;
  c.augmentation = "exact_search";
  if (!c.checked) throw SearchFailure("Gaussian augmentation produced a set that fails re-verification");
  return c;
}

}  // namespace kottman

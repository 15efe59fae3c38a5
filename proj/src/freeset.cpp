#include "kottman/freeset.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "kottman/errors.hpp"
#include "kottman/mutation.hpp"

namespace kottman {

namespace mutation {
namespace {
std::atomic<Fault> g_fault{Fault::none};
}  // namespace

void inject(Fault f) noexcept { g_fault.store(f); }
Fault active() noexcept { return g_fault.load(std::memory_order_relaxed); }

Fault parse_fault(const std::string& name) {
  if (name == "none") return Fault::none;
  if (name == "is_free_off_by_one") return Fault::is_free_off_by_one;
  throw PreconditionError("unknown mutation '" + name + "'");
}
}  // namespace mutation

namespace {

std::vector<TernaryVector> canonical(std::span<const TernaryVector> b) {
  std::vector<TernaryVector> v(b.begin(), b.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_admissible(const SymmetricCubeSet& a, const char* op) {
  if (!a.admissible())
    throw PreconditionError(std::string(op) + ": ground set must contain every e_k and be symmetric");
}

bool conflict(const TernaryVector& x, const TernaryVector& y, const SymmetricCubeSet& a) {
  if (!difference_in_cube(x, y)) return false;
  const TernaryVector d = unchecked_difference(x, y);
  return a.contains(d) || a.contains(-d);
}

// Digit rank in the extension order + < 0 < -.
int last_rank(const TernaryVector& x) {
  const int c = x[x.dim() - 1];
  return c == 1 ? 0 : (c == 0 ? 1 : 2);
}

FreeSetCertificate make_certificate(FreeMode mode, SymmetricCubeSet ground, std::vector<TernaryVector> witness) {
  FreeSetCertificate c;
  c.mode = mode;
  std::sort(witness.begin(), witness.end());
  c.witness = std::move(witness);
  c.claimed_size = c.witness.size();
  c.checked = is_free(c.witness, ground, mode);
  if (mode == FreeMode::sum)
    c.non_distinct_sum_free = std::none_of(c.witness.begin(), c.witness.end(), [&](const TernaryVector& x) {
      const auto s = ternary_sum(x, x);
      return s && ground.contains(*s);
    });
  c.ground_set = std::move(ground);
  return c;
}

std::vector<TernaryVector> mis_fallback(const SymmetricCubeSet& a, FreeMode mode, std::size_t want, const Budgets& budgets) {
  if (a.size() > budgets.mis_vertices) return {};
  auto r = max_free_subset(a, mode, budgets.mis_vertices);
  if (r.size < want) return {};
  r.witness.resize(want);
  return r.witness;
}

}  // namespace

bool is_free(std::span<const TernaryVector> b, const SymmetricCubeSet& a, FreeMode mode) {
  const auto v = canonical(b);
  for (const auto& x : v) {
    if (x.dim() != a.dim()) throw PreconditionError("is_free: dimension mismatch");
    if (!a.contains(x)) throw PreconditionError("is_free: " + x.to_string() + " is not in the ground set");
  }
  const std::size_t skew = mutation::active() == mutation::Fault::is_free_off_by_one ? 1 : 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1 + skew; j < v.size(); ++j) {
      if (mode == FreeMode::difference) {
        const auto d = ternary_difference(v[i], v[j]);
        if (d && (a.contains(*d) || a.contains(-*d))) return false;
      } else {
        const auto s = ternary_sum(v[i], v[j]);
        if (s && a.contains(*s)) return false;
      }
    }
  return true;
}

MaxFreeResult max_free_subset(const SymmetricCubeSet& a, FreeMode mode, std::size_t vertex_budget) {
  if (a.size() > vertex_budget)
    throw BudgetExceeded("maximum free subset: |A| = " + std::to_string(a.size()) + " exceeds the vertex budget of " +
                         std::to_string(vertex_budget));
  const auto g = ConflictGraph::build(a, mode);
  MaxFreeResult r;
  for (auto v : lex_least_maximum_independent_set(g)) r.witness.push_back(a[v]);
  r.size = r.witness.size();
  return r;
}

namespace {

// `pr` is pr_N A, passed in so a chain projects every level only once.
FreeSetCertificate extend_step(const SymmetricCubeSet& a, const SymmetricCubeSet& pr, std::span<const TernaryVector> b_in,
                               bool check_pruning) {
  const int n = a.dim() - 1;
  const auto b = canonical(b_in);
  for (const auto& x : b)
    if (x.dim() != n) throw PreconditionError("extend_difference_free: base vectors must have dimension " + std::to_string(n));
  for (const auto& x : b)
    if (!pr.contains(x)) throw PreconditionError("extend_difference_free: " + x.to_string() + " is not in the projection");
  if (!is_free(b, pr, FreeMode::difference))
    throw PreconditionError("extend_difference_free: base set is not difference-free in the projection");

  std::vector<std::vector<TernaryVector>> ext(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) ext[i] = extensions_of(b[i], a);

  // For a fixed z each element independently takes its first admissible
  // extension, so the least tuple over all (tuple, z) is the least of the
  // per-z minima, and the first z attaining it wins.
  std::vector<int> best_rank, rank(b.size());
  std::vector<const TernaryVector*> best_choice, choice(b.size());
  const TernaryVector* best_z = nullptr;
  std::vector<int> floor_rank(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) floor_rank[i] = last_rank(ext[i].front());

  for (const auto& z : a.members()) {
    bool ok = true;
    for (std::size_t i = 0; i < b.size() && ok; ++i) {
      choice[i] = nullptr;
      for (const auto& e : ext[i]) {
        if (e == z || conflict(e, z, a)) continue;
        choice[i] = &e;
        rank[i] = last_rank(e);
        break;
      }
      ok = choice[i] != nullptr;
      if (ok && best_z && i + 1 <= best_rank.size()) {
        // prune once the prefix is already worse than the incumbent
        const auto cmp = std::lexicographical_compare_three_way(rank.begin(), rank.begin() + i + 1, best_rank.begin(),
                                                                best_rank.begin() + i + 1);
        if (cmp > 0) ok = false;
      }
    }
    if (!ok) continue;
    if (!best_z || rank < best_rank) {
      best_rank = rank;
      best_choice = choice;
      best_z = &z;
      if (best_rank == floor_rank) break;
    }
  }
  if (!best_z)
    throw SearchFailure("extension step found no completion for a difference-free base of size " + std::to_string(b.size()));

  std::vector<TernaryVector> out;
  for (auto* e : best_choice) out.push_back(*e);
  if (check_pruning) {
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (conflict(out[i], out[j], a))
          throw SearchFailure("projection pruning skipped a conflicting pair " + out[i].to_string() + ", " +
                              out[j].to_string());
  }
  out.push_back(*best_z);
  auto cert = make_certificate(FreeMode::difference, a, std::move(out));
  if (!cert.checked || cert.claimed_size != b.size() + 1)
    throw SearchFailure("extension step produced a set that fails re-verification");
  return cert;
}

}  // namespace

FreeSetCertificate extend_difference_free(const SymmetricCubeSet& a, std::span<const TernaryVector> b, bool check_pruning) {
  require_admissible(a, "extend_difference_free");
  if (a.dim() < 2) throw PreconditionError("extend_difference_free: ground set needs dimension at least 2");
  return extend_step(a, project_set(a, a.dim() - 1), b, check_pruning);
}

std::vector<FreeSetCertificate> chain_difference_free(const SymmetricCubeSet& a, bool check_pruning) {
  require_admissible(a, "chain_difference_free");
  // Project top-down so each level is computed from the next, smaller one.
  std::vector<SymmetricCubeSet> levels(a.dim());
  levels.back() = a;
  for (int n = a.dim() - 1; n >= 1; --n) levels[n - 1] = project_set(levels[n], n);
  std::vector<FreeSetCertificate> chain;
  chain.push_back(make_certificate(FreeMode::difference, std::move(levels[0]),
                                   {TernaryVector::parse("+"), TernaryVector::parse("-")}));
  for (int n = 2; n <= a.dim(); ++n)
    chain.push_back(extend_step(levels[n - 1], chain.back().ground_set, chain.back().witness, check_pruning));
  return chain;
}

FreeSetCertificate find_difference_free(const SymmetricCubeSet& a, const Budgets& budgets) {
  require_admissible(a, "find_difference_free");
  const std::size_t want = static_cast<std::size_t>(a.dim()) + 1;
  auto chain = chain_difference_free(a, budgets.check_pruning);
  auto cert = std::move(chain.back());
  if (cert.checked && cert.claimed_size == want) return cert;
  auto w = mis_fallback(a, FreeMode::difference, want, budgets);
  if (w.empty()) throw SearchFailure("no difference-free subset of size " + std::to_string(want) + " found");
  return make_certificate(FreeMode::difference, a, std::move(w));
}

FreeSetCertificate find_sum_free(const SymmetricCubeSet& a, const Budgets& budgets) {
  require_admissible(a, "find_sum_free");
  const int dim = a.dim();
  // Give every element its first extension in the order +, 0, - and add the
  // new basis vector: (x, xi) + e_{n+1} = (x, xi + 1) is then out of the cube
  // or not in A, because xi + 1 was not available.
  std::vector<SymmetricCubeSet> levels(dim);
  levels.back() = a;
  for (int n = dim - 1; n >= 1; --n) levels[n - 1] = project_set(levels[n], n);
  std::vector<TernaryVector> b{TernaryVector::parse("+")};
  for (int n = 1; n < dim; ++n) {
    const auto& level = levels[n];
    for (auto& x : b) {
      const auto ext = extensions_of(x, level);
      if (ext.empty()) throw SearchFailure("sum-free step lost an element of the projection");
      x = ext.front();
    }
    b.push_back(basis_vector(n + 1, n + 1));
  }
  auto cert = make_certificate(FreeMode::sum, a, std::move(b));
  if (cert.checked && cert.claimed_size == static_cast<std::size_t>(dim)) return cert;
  auto w = mis_fallback(a, FreeMode::sum, static_cast<std::size_t>(dim), budgets);
  if (w.empty()) throw SearchFailure("no sum-free subset of size " + std::to_string(dim) + " found");
  return make_certificate(FreeMode::sum, a, std::move(w));
}

SymmetricCubeSet witness_difference(int l) {
  if (l < 3 || l - 2 > kMaxDim) throw PreconditionError("witness_difference: need 3 <= l <= " + std::to_string(kMaxDim + 2));
  const int n = l - 2;
  std::vector<TernaryVector> m;
  for (int i = 1; i <= n; ++i) {
    m.push_back(basis_vector(n, i));
    m.push_back(-basis_vector(n, i));
    for (int j = 1; j <= n; ++j)
      if (i != j) m.push_back(*ternary_difference(basis_vector(n, i), basis_vector(n, j)));
  }
  return SymmetricCubeSet(n, std::move(m));
}

SymmetricCubeSet witness_sum(int l) {
  if (l < 2 || l - 1 > kMaxDim) throw PreconditionError("witness_sum: need 2 <= l <= " + std::to_string(kMaxDim + 1));
  const int n = l - 1;
  std::vector<TernaryVector> m{TernaryVector(n)};
  for (int i = 1; i <= n; ++i) {
    m.push_back(basis_vector(n, i));
    m.push_back(-basis_vector(n, i));
  }
  return SymmetricCubeSet(n, std::move(m));
}

namespace {

void check_point(const GridPoint& p, int n) {
  if (p.k < 1 || p.k > n || p.m < 1 || p.m > n)
    throw PreconditionError("grid point (" + std::to_string(p.k) + "," + std::to_string(p.m) + ") out of range");
  if (p.k == p.m) throw PreconditionError("grid point (" + std::to_string(p.k) + "," + std::to_string(p.m) + ") is on the diagonal");
}

bool compatible(const GridPoint& x, const GridPoint& y) {
  for (int s : {x.k, x.m}) {
    if (s != y.k && s != y.m) continue;
    const bool crossed = (s == x.k && s == y.m) || (s == x.m && s == y.k);
    if (!crossed) return false;
  }
  return true;
}

}  // namespace

bool grid_star_check(std::span<const GridPoint> b_in, int n) {
  if (n < 1) throw PreconditionError("grid size must be positive");
  std::vector<GridPoint> b(b_in.begin(), b_in.end());
  for (const auto& p : b) check_point(p, n);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!compatible(b[i], b[j])) return false;
  return true;
}

GridReport grid_max_properties(int n, int max_n) {
  if (n < 1) throw PreconditionError("grid size must be positive");
  if (n > max_n) throw BudgetExceeded("grid check for n = " + std::to_string(n) + " exceeds the budget n <= " + std::to_string(max_n));
  std::vector<GridPoint> cells;
  for (int k = 1; k <= n; ++k)
    for (int m = 1; m <= n; ++m)
      if (k != m) cells.push_back({k, m});
  const std::size_t c = cells.size();
  std::vector<std::vector<bool>> ok(c, std::vector<bool>(c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) ok[i][j] = i != j && compatible(cells[i], cells[j]);

  GridReport r;
  r.n = n;
  r.coverage_holds = true;
  std::vector<std::size_t> stack;
  // Preorder over increasing index sequences visits equal-size sets in
  // lexicographic order, so the first maximum seen is the least.
  auto visit = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < c; ++i) {
      if (!std::all_of(stack.begin(), stack.end(), [&](std::size_t j) { return ok[i][j]; })) continue;
      stack.push_back(i);
      ++r.star_sets;
      if (stack.size() > r.max_size) {
        r.max_size = stack.size();
        r.witness.clear();
        for (auto j : stack) r.witness.push_back(cells[j]);
      }
      if (stack.size() == static_cast<std::size_t>(n)) {
        ++r.full_sets;
        std::vector<int> first(n + 1), second(n + 1);
        for (auto j : stack) {
          ++first[cells[j].k];
          ++second[cells[j].m];
        }
        for (int k = 1; k <= n; ++k)
          if (first[k] != 1 || second[k] != 1) r.coverage_holds = false;
      }
      self(self, i + 1);
      stack.pop_back();
    }
  };
  visit(visit, 0);
  r.bound_holds = r.max_size <= static_cast<std::size_t>(n);
  return r;
}

}  // namespace kottman

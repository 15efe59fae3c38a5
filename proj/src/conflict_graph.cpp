#include "kottman/conflict_graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kottman/errors.hpp"

namespace kottman {

const char* to_string(FreeMode mode) noexcept { return mode == FreeMode::difference ? "difference" : "sum"; }

FreeMode parse_free_mode(const std::string& text) {
  if (text == "difference" || text == "diff") return FreeMode::difference;
  if (text == "sum") return FreeMode::sum;
  throw PreconditionError("unknown free mode '" + text + "'");
}

ConflictGraph::ConflictGraph(std::size_t n) : n_(n), words_((n + 63) / 64), adj_(n * ((n + 63) / 64), 0) {}

void ConflictGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adj_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  adj_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t ConflictGraph::degree(std::size_t u) const noexcept {
  std::size_t d = 0;
  for (auto w : row(u)) d += std::popcount(w);
  return d;
}

ConflictGraph ConflictGraph::build(const SymmetricCubeSet& a, FreeMode mode) {
  ConflictGraph g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const TernaryVector& u = a[i];
      const TernaryVector& v = mode == FreeMode::difference ? a[j] : -a[j];
      if (!difference_in_cube(u, v)) continue;
      const TernaryVector d = unchecked_difference(u, v);
      if (a.contains(d) || (mode == FreeMode::difference && a.contains(-d))) g.add_edge(i, j);
    }
  }
  return g;
}

ConflictGraph ConflictGraph::build(const GaussianSet& a) {
  ConflictGraph g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const auto d = gaussian_difference(a[i], a[j]);
      if (d && (a.contains(*d) || a.contains(-*d))) g.add_edge(i, j);
    }
  return g;
}

namespace {

// Branch and bound over word bitsets. Candidate sets for each depth live in
// one preallocated arena so the recursion does not allocate.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const ConflictGraph& g, std::size_t threshold, bool stop_at_first)
      : g_(g), w_(g.words()), threshold_(threshold), stop_(stop_at_first), arena_((g.size() + 2) * 2 * std::max<std::size_t>(w_, 1)) {}

  void run(const std::vector<std::uint64_t>& candidates) {
    std::copy(candidates.begin(), candidates.end(), arena_.begin());
    expand(0);
  }

  bool found() const noexcept { return !best_.empty() && best_.size() > threshold_; }
  const std::vector<std::size_t>& best() const noexcept { return best_; }

 private:
  std::uint64_t* level(std::size_t depth) noexcept { return arena_.data() + depth * 2 * w_; }

  std::size_t popcount(const std::uint64_t* p) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_; ++i) c += std::popcount(p[i]);
    return c;
  }

  // Greedy partition of P into cliques of the conflict graph; an independent
  // set meets each clique at most once.
  std::size_t clique_cover(const std::uint64_t* p, std::uint64_t* scratch, std::uint64_t* clique) const noexcept {
    std::copy(p, p + w_, scratch);
    std::size_t cliques = 0;
    for (std::size_t wi = 0; wi < w_; ++wi) {
      while (scratch[wi]) {
        const std::size_t u = wi * 64 + std::countr_zero(scratch[wi]);
        scratch[wi] &= scratch[wi] - 1;
        ++cliques;
        const auto nu = g_.row(u);
        bool any = false;
        for (std::size_t i = 0; i < w_; ++i) {
          clique[i] = scratch[i] & nu[i];
          any = any || clique[i];
        }
        while (any) {
          std::size_t v = 0;
          for (std::size_t i = 0; i < w_; ++i)
            if (clique[i]) {
              v = i * 64 + std::countr_zero(clique[i]);
              break;
            }
          scratch[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
          const auto nv = g_.row(v);
          any = false;
          for (std::size_t i = 0; i < w_; ++i) {
            clique[i] &= nv[i];
            any = any || clique[i];
          }
        }
      }
    }
    return cliques;
  }

  void record(const std::uint64_t* rest) {
    std::vector<std::size_t> s = current_;
    if (rest)
      for (std::size_t i = 0; i < w_; ++i)
        for (std::uint64_t m = rest[i]; m; m &= m - 1) s.push_back(i * 64 + std::countr_zero(m));
    if (s.size() > std::max(best_.size(), threshold_)) {
      std::sort(s.begin(), s.end());
      best_ = std::move(s);
    }
  }

  std::size_t target() const noexcept { return std::max(best_.size(), threshold_); }

  void expand(std::size_t depth) {
    if (done_) return;
    const std::size_t base = current_.size();
    expand_level(depth);
    current_.resize(base);
  }

  // Isolated vertices are taken without branching. The pivot is a vertex of
  // maximum degree when proving optimality and of minimum degree when only a
  // solution is wanted (cheap greedy dives find one fast).
  void expand_level(std::size_t depth) {
    std::uint64_t* p = level(depth);
    std::uint64_t* next = level(depth + 1);
    scratch_.resize(2 * w_);
    for (;;) {
      const std::size_t size = popcount(p);
      if (current_.size() + size <= target()) return;
      if (size == 0) {
        record(nullptr);
        if (stop_ && found()) done_ = true;
        return;
      }
      if (current_.size() + clique_cover(p, scratch_.data(), scratch_.data() + w_) <= target()) return;

      std::size_t pivot = 0, pivot_degree = 0;
      bool have = false, isolated = false;
      for (std::size_t i = 0; i < w_; ++i)
        for (std::uint64_t m = p[i]; m; m &= m - 1) {
          const std::size_t v = i * 64 + std::countr_zero(m);
          const auto nv = g_.row(v);
          std::size_t d = 0;
          for (std::size_t k = 0; k < w_; ++k) d += std::popcount(nv[k] & p[k]);
          if (d == 0) {
            current_.push_back(v);
            p[i] &= ~(std::uint64_t{1} << (v & 63));
            isolated = true;
            continue;
          }
          if (!have || (stop_ ? d < pivot_degree : d > pivot_degree)) {
            pivot = v;
            pivot_degree = d;
            have = true;
          }
        }
      if (isolated) continue;

      const auto np = g_.row(pivot);
      for (std::size_t i = 0; i < w_; ++i) next[i] = p[i] & ~np[i];
      next[pivot >> 6] &= ~(std::uint64_t{1} << (pivot & 63));
      current_.push_back(pivot);
      expand(depth + 1);
      current_.pop_back();
      if (done_) return;

      p[pivot >> 6] &= ~(std::uint64_t{1} << (pivot & 63));
    }
  }

  const ConflictGraph& g_;
  std::size_t w_;
  std::size_t threshold_;
  bool stop_;
  bool done_ = false;
  std::vector<std::uint64_t> arena_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

std::vector<std::uint64_t> mask_of(const ConflictGraph& g, std::span<const std::size_t> vertices) {
  std::vector<std::uint64_t> m(g.words(), 0);
  for (auto v : vertices) {
    if (v >= g.size()) throw PreconditionError("vertex index out of range");
    m[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  return m;
}

std::vector<std::uint64_t> full_mask(const ConflictGraph& g) {
  std::vector<std::uint64_t> m(g.words(), ~std::uint64_t{0});
  if (g.size() % 64) m.back() = (std::uint64_t{1} << (g.size() % 64)) - 1;
  if (g.size() == 0) m.clear();
  return m;
}

bool is_independent(const ConflictGraph& g, std::span<const std::size_t> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace

std::vector<std::size_t> maximum_independent_set(const ConflictGraph& g) {
  if (g.size() == 0) return {};
  IndependentSetSearch search(g, 0, false);
  search.run(full_mask(g));
  return search.best();
}

std::optional<std::vector<std::size_t>> independent_set_of_size(const ConflictGraph& g, std::size_t k,
                                                                std::span<const std::size_t> candidates,
                                                                std::span<const std::size_t> incumbent) {
  if (k == 0) return std::vector<std::size_t>{};
  if (!incumbent.empty() && incumbent.size() >= k && is_independent(g, incumbent)) {
    std::vector<std::size_t> s(incumbent.begin(), incumbent.end());
    std::sort(s.begin(), s.end());
    return s;
  }
  if (g.size() == 0) return std::nullopt;
  const auto mask = candidates.empty() ? full_mask(g) : mask_of(g, candidates);
  IndependentSetSearch search(g, k - 1, true);
  search.run(mask);
  if (!search.found()) return std::nullopt;
  return search.best();
}

std::vector<std::size_t> lex_least_maximum_independent_set(const ConflictGraph& g) {
  const std::size_t target = maximum_independent_set(g).size();
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> allowed(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) allowed[i] = i;
  while (chosen.size() < target) {
    bool placed = false;
    for (std::size_t idx = 0; idx < allowed.size(); ++idx) {
      const std::size_t v = allowed[idx];
      std::vector<std::size_t> rest;
      for (std::size_t j = idx + 1; j < allowed.size(); ++j)
        if (!g.adjacent(v, allowed[j])) rest.push_back(allowed[j]);
      const std::size_t need = target - chosen.size() - 1;
      const bool feasible =
          need == 0 || (rest.size() >= need && independent_set_of_size(g, need, rest).has_value());
      if (feasible) {
        chosen.push_back(v);
        allowed = std::move(rest);
        placed = true;
        break;
      }
    }
    if (!placed) throw SearchFailure("lexicographic reconstruction lost the maximum independent set");
  }
  return chosen;
}

}  // namespace kottman

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kottman/cube_set.hpp"

namespace kottman {

enum class FreeMode { difference, sum };

const char* to_string(FreeMode mode) noexcept;
FreeMode parse_free_mode(const std::string& text);

/// Graph on the members of A whose independent sets are exactly the free
/// subsets. Adjacency rows are word bitsets.
class ConflictGraph {
 public:
  explicit ConflictGraph(std::size_t n);

  /// difference: u ~ v iff u - v or v - u lies in A; sum: u ~ v iff u + v lies in A.
  static ConflictGraph build(const SymmetricCubeSet& a, FreeMode mode);
  /// Gaussian difference conflicts.
  static ConflictGraph build(const GaussianSet& a);

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (adj_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(std::size_t u) const noexcept {
    return {adj_.data() + u * words_, words_};
  }
  std::size_t degree(std::size_t u) const noexcept;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
};

/// Exact maximum independent set (branch and bound, maximum-degree branching,
/// greedy clique-cover bound). Vertices returned ascending.
std::vector<std::size_t> maximum_independent_set(const ConflictGraph& g);

/// Independent set of size >= k inside `candidates` (all vertices when empty),
/// or std::nullopt. `incumbent` may hold a known independent set used as the
/// starting solution.
std::optional<std::vector<std::size_t>> independent_set_of_size(const ConflictGraph& g, std::size_t k,
                                                                std::span<const std::size_t> candidates = {},
                                                                std::span<const std::size_t> incumbent = {});

/// Among maximum independent sets, the one whose ascending vertex list is
/// lexicographically least.
std::vector<std::size_t> lex_least_maximum_independent_set(const ConflictGraph& g);

}  // namespace kottman

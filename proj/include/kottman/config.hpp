#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace kottman {

/// Every budget and tolerance the engine uses, in one place.
struct Budgets {
  /// Admissible sets examined by one exhaustive arrow scan.
  std::uint64_t enumeration = std::uint64_t{1} << 22;
  /// Vertex cap for the exact maximum-free-subset oracle.
  std::size_t mis_vertices = 64;
  /// Vertex cap for the exact Gaussian augmentation search.
  std::size_t augmentation_vertices = 4096;
  /// Largest N for the 3^N unit ternary enumeration.
  int unit_ternary_max_dim = 18;
  /// Largest n for the 5^n Gaussian coefficient enumeration.
  int gaussian_coefficient_max_dim = 8;
  /// Largest n for the exhaustive grid check.
  int grid_max_n = 5;
  /// Restarts of the determinant-maximizing Auerbach search.
  int auerbach_restarts = 32;
  /// Exact vertex-tuple enumeration is used while (vertex count)^n stays below this.
  std::uint64_t vertex_tuple_limit = 1'000'000;
  /// Sweeps of coordinate ascent before giving up.
  int ascent_max_sweeps = 20000;
  /// Float ascent stops once |det| improves by less than this (relative).
  double ascent_tolerance = 1e-12;
  /// Random admissible sets used as evidence beyond the exhaustive range.
  int random_trials = 200;
  /// Random evidence is only drawn in C_N with N up to this (|A| grows like 3^N).
  int evidence_max_dim = 10;
  /// Same cap for V_n.
  int gaussian_evidence_max_dim = 4;
  std::uint64_t seed = 1;
  /// Float path: unit-norm membership tolerance.
  double tau = 1e-9;
  /// Float path: smallest accepted separation margin.
  double mu = 1e-6;
  /// Re-check pairs skipped by the projection pruning argument during extension.
  bool check_pruning = false;
  /// 0 keeps the OpenMP default.
  int threads = 0;
};

Budgets load_budgets(const std::string& path);
std::string budgets_to_json(const Budgets& b);
Budgets budgets_from_json(const std::string& text);

/// Applies `threads` to the OpenMP runtime (no-op without OpenMP).
void apply_thread_count(int threads);

}  // namespace kottman

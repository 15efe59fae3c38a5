#include "kottman/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kottman/errors.hpp"

namespace kottman {
namespace {

using nlohmann::json;

json to_json_object(const Budgets& b) {
  return json{{"enumeration", b.enumeration},
              {"mis_vertices", b.mis_vertices},
              {"augmentation_vertices", b.augmentation_vertices},
              {"unit_ternary_max_dim", b.unit_ternary_max_dim},
              {"gaussian_coefficient_max_dim", b.gaussian_coefficient_max_dim},
              {"grid_max_n", b.grid_max_n},
              {"auerbach_restarts", b.auerbach_restarts},
              {"vertex_tuple_limit", b.vertex_tuple_limit},
              {"ascent_max_sweeps", b.ascent_max_sweeps},
              {"ascent_tolerance", b.ascent_tolerance},
              {"random_trials", b.random_trials},
              {"evidence_max_dim", b.evidence_max_dim},
              {"gaussian_evidence_max_dim", b.gaussian_evidence_max_dim},
              {"seed", b.seed},
              {"tau", b.tau},
              {"mu", b.mu},
              {"check_pruning", b.check_pruning},
              {"threads", b.threads}};
}

template <class T>
void read_field(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

std::string budgets_to_json(const Budgets& b) { return to_json_object(b).dump(); }

Budgets budgets_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw PreconditionError("config must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!to_json_object(Budgets{}).contains(key)) throw PreconditionError("unknown config key '" + key + "'");
  Budgets b;
  try {
    read_field(j, "enumeration", b.enumeration);
    read_field(j, "mis_vertices", b.mis_vertices);
    read_field(j, "augmentation_vertices", b.augmentation_vertices);
    read_field(j, "unit_ternary_max_dim", b.unit_ternary_max_dim);
    read_field(j, "gaussian_coefficient_max_dim", b.gaussian_coefficient_max_dim);
    read_field(j, "grid_max_n", b.grid_max_n);
    read_field(j, "auerbach_restarts", b.auerbach_restarts);
    read_field(j, "vertex_tuple_limit", b.vertex_tuple_limit);
    read_field(j, "ascent_max_sweeps", b.ascent_max_sweeps);
    read_field(j, "ascent_tolerance", b.ascent_tolerance);
    read_field(j, "random_trials", b.random_trials);
    read_field(j, "evidence_max_dim", b.evidence_max_dim);
    read_field(j, "gaussian_evidence_max_dim", b.gaussian_evidence_max_dim);
    read_field(j, "seed", b.seed);
    read_field(j, "tau", b.tau);
    read_field(j, "mu", b.mu);
    read_field(j, "check_pruning", b.check_pruning);
    read_field(j, "threads", b.threads);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad config value: ") + e.what());
  }
  if (b.auerbach_restarts < 1) throw PreconditionError("auerbach_restarts must be at least 1");
  if (b.tau < 0 || b.mu < 0) throw PreconditionError("tolerances must be non-negative");
  return b;
}

Budgets load_budgets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return budgets_from_json(ss.str());
}

void apply_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

}  // namespace kottman

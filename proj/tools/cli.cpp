#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "kottman/acceptance.hpp"
#include "kottman/arrow.hpp"
#include "kottman/certificate.hpp"
#include "kottman/errors.hpp"
#include "kottman/freeset.hpp"
#include "kottman/mutation.hpp"
#include "kottman/separation.hpp"
#include "kottman/serialize.hpp"
#include "kottman/verify.hpp"

namespace kottman::cli {
namespace {

constexpr int kFalsified = 2;
constexpr int kBudget = 3;
constexpr int kUsage = 4;

// key=value on top of the loaded budgets; values are parsed as JSON scalars.
Budgets apply_overrides(const Budgets& base, const std::vector<std::string>& overrides) {
  json j = json::parse(budgets_to_json(base));
  for (const auto& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw PreconditionError("--budget expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (!j.contains(key)) throw PreconditionError("unknown budget key '" + key + "'");
    try {
      j[key] = json::parse(value);
    } catch (const json::exception&) {
      throw PreconditionError("bad value for budget '" + key + "': " + value);
    }
  }
  return budgets_from_json(j.dump());
}

FreeMode parse_free_mode(const std::string& s) {
  if (s == "diff" || s == "difference") return FreeMode::difference;
  if (s == "sum") return FreeMode::sum;
  throw PreconditionError("mode must be diff or sum, got '" + s + "'");
}

std::vector<TernaryVector> base_from_json(const json& j) {
  if (j.is_object()) return ternary_vectors_from_json(j.at("members"));
  return ternary_vectors_from_json(j);
}

json verify_report(const VerifyResult& r) {
  static const char* names[] = {"verified", "", "falsified", "budget", "usage"};
  json j{{"verdict", names[static_cast<int>(r.verdict)]}, {"kind", r.kind}, {"checks", r.checks}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified free-set and separation computations", "kottman_certify"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> budget_overrides;
  std::string config_path;
  std::string out_path;
  app.add_option("--threads", threads, "OpenMP threads (0 keeps the default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for randomized evidence and restarts");
  app.add_option("--budget", budget_overrides, "Override a budget, key=value (repeatable)");
  app.add_option("--config", config_path, "JSON budget file")->envname("KOTTMAN_CONFIG");
  app.add_option("--out", out_path, "Write the certificate here instead of stdout");

  int l = 0;
  std::string mode_name, set_path, base_path, norm_path, cert_path, mutant = "none";
  bool quick = false;

  auto* kottman = app.add_subcommand("kottman", "Exact value of K(l)");
  kottman->add_option("l", l)->required()->check(CLI::PositiveNumber);
  auto* sumfree = app.add_subcommand("sumfree", "Exact value of S(l)");
  sumfree->add_option("l", l)->required()->check(CLI::PositiveNumber);
  auto* gaussian = app.add_subcommand("gaussian", "Exact value of K_C(l)");
  gaussian->add_option("l", l)->required()->check(CLI::PositiveNumber);
  auto* witness = app.add_subcommand("witness", "Tightness witness for K(l) or S(l)");
  witness->add_option("mode", mode_name)->required()->check(CLI::IsMember({"diff", "sum"}));
  witness->add_option("l", l)->required()->check(CLI::PositiveNumber);
  auto* free = app.add_subcommand("free", "Free subset of an admissible set");
  free->add_option("mode", mode_name)->required()->check(CLI::IsMember({"diff", "sum"}));
  free->add_option("--set", set_path)->required();
  auto* extend = app.add_subcommand("extend", "One extension step of a difference-free set");
  extend->add_option("--set", set_path)->required();
  extend->add_option("--base", base_path)->required();
  auto* grid = app.add_subcommand("grid", "Exhaustive grid check");
  grid->add_option("n", l)->required()->check(CLI::PositiveNumber);
  auto* auerbach = app.add_subcommand("auerbach", "Auerbach basis of a norm");
  auerbach->add_option("--norm", norm_path)->required();
  auto* separate_cmd = app.add_subcommand("separate", "Separated unit vectors");
  separate_cmd->add_option("mode", mode_name)->required()->check(CLI::IsMember({"diff", "sum", "complex"}));
  separate_cmd->add_option("--norm", norm_path)->required();
  auto* verify = app.add_subcommand("verify", "Re-check a certificate");
  verify->add_option("certificate", cert_path)->required();
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_flag("--quick", quick, "Reduced random trial counts");
  selftest->add_option("--mutant", mutant)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    Budgets budgets = config_path.empty() ? Budgets{} : load_budgets(config_path);
    budgets = apply_overrides(budgets, budget_overrides);
    if (seed) budgets.seed = *seed;
    if (threads > 0) budgets.threads = threads;
    apply_thread_count(budgets.threads);

    RunManifest manifest;
    manifest.command.assign(argv + 1, argv + argc);
    manifest.budgets = budgets;

    auto emit = [&](const std::string& kind, json payload) {
      manifest.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const std::string text = make_certificate(kind, std::move(payload), manifest).dump(2) + "\n";
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!(f << text)) throw PreconditionError("cannot write " + out_path);
      }
      return 0;
    };

    if (*kottman) return emit("value", to_json(kottman_value(l, budgets), ArrowRelation::real_difference, l));
    if (*sumfree) return emit("value", to_json(sumfree_value(l, budgets), ArrowRelation::real_sum, l));
    if (*gaussian) return emit("value", to_json(gaussian_kottman_value(l, budgets), ArrowRelation::complex_difference, l));
    if (*witness) {
      const FreeMode mode = parse_free_mode(mode_name);
      if (l < 2) throw PreconditionError("witness needs l >= 2");
      const auto set = mode == FreeMode::difference ? witness_difference(l) : witness_sum(l);
      return emit("witness", witness_payload(mode, l, set, max_free_subset(set, mode, budgets.mis_vertices)));
    }
    if (*free) {
      const auto set = cube_set_from_json(read_json_file(set_path));
      const auto cert = parse_free_mode(mode_name) == FreeMode::difference ? find_difference_free(set, budgets)
                                                                           : find_sum_free(set, budgets);
      return emit("free", to_json(cert));
    }
    if (*extend) {
      const auto set = cube_set_from_json(read_json_file(set_path));
      const auto base = base_from_json(read_json_file(base_path));
      return emit("extend", extend_payload(set, base, extend_difference_free(set, base, budgets.check_pruning)));
    }
    if (*grid) {
      if (l > budgets.grid_max_n) throw BudgetExceeded("grid n=" + std::to_string(l) + " exceeds grid_max_n");
      return emit("grid", to_json(grid_max_properties(l, budgets.grid_max_n)));
    }
    if (*auerbach) {
      const auto spec = load_norm_spec(norm_path);
      const auto basis = auerbach_basis(spec, budgets);
      return emit("auerbach", auerbach_payload(spec, basis, verify_auerbach(basis, spec, budgets.tau)));
    }
    if (*separate_cmd) {
      const auto mode = parse_separation_mode(mode_name);
      NormSpec spec;
      try {
        spec = load_norm_spec(norm_path);
      } catch (const std::exception& e) {
        throw PipelineError("spec", e.what());
      }
      return emit("separation", to_json(separate(mode, spec, budgets)));
    }
    if (*verify) {
      json cert;
      try {
        cert = read_json_file(cert_path);
      } catch (const json::exception& e) {
        err << "error: " << cert_path << " is not JSON: " << e.what() << "\n";
        return kFalsified;
      }
      const auto r = verify_certificate(cert, budgets);
      out << verify_report(r).dump(2) << "\n";
      if (r.verdict != Verdict::verified) err << "not verified: " << r.reason << "\n";
      return static_cast<int>(r.verdict);
    }
    if (*selftest) {
      mutation::inject(mutation::parse_fault(mutant));
      AcceptanceOptions opt;
      opt.budgets = budgets;
      opt.quick = quick;
      const auto report = run_acceptance(opt, out);
      mutation::inject(mutation::Fault::none);
      return report.passed() ? 0 : kFalsified;
    }
  } catch (const PipelineError& e) {
    err << "error: " << e.what() << "\n";
    if (e.budget()) return kBudget;
    return e.stage() == "spec" ? kUsage : kFalsified;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const SearchFailure& e) {
    err << "search failed: " << e.what() << "\n";
    return kFalsified;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace kottman::cli

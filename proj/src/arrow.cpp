#include "kottman/arrow.hpp"

#include <algorithm>

#include "kottman/admissible.hpp"
#include "kottman/conflict_graph.hpp"
#include "kottman/errors.hpp"
#include "kottman/freeset.hpp"
#include "kottman/gaussian.hpp"

namespace kottman {

const char* to_string(ArrowRelation r) noexcept {
  switch (r) {
    case ArrowRelation::real_difference: return "real_difference";
    case ArrowRelation::real_sum: return "real_sum";
    case ArrowRelation::complex_difference: return "complex_difference";
  }
  return "?";
}

const char* to_string(ArrowMethod m) noexcept {
  switch (m) {
    case ArrowMethod::exhaustive: return "exhaustive";
    case ArrowMethod::witness: return "witness";
    case ArrowMethod::theorem_backed: return "theorem_backed";
  }
  return "?";
}

ArrowRelation parse_relation(const std::string& s) {
  if (s == "real_difference") return ArrowRelation::real_difference;
  if (s == "real_sum") return ArrowRelation::real_sum;
  if (s == "complex_difference") return ArrowRelation::complex_difference;
  throw PreconditionError("unknown relation '" + s + "'");
}

ArrowMethod parse_method(const std::string& s) {
  if (s == "exhaustive") return ArrowMethod::exhaustive;
  if (s == "witness") return ArrowMethod::witness;
  if (s == "theorem_backed") return ArrowMethod::theorem_backed;
  throw PreconditionError("unknown method '" + s + "'");
}

int kottman_formula(int l) {
  if (l < 1) throw PreconditionError("K(l) needs l >= 1");
  return std::max(1, l - 1);
}

int sumfree_formula(int l) {
  if (l < 1) throw PreconditionError("S(l) needs l >= 1");
  return l;
}

int gaussian_kottman_formula(int l) {
  if (l < 1) throw PreconditionError("K_C(l) needs l >= 1");
  return std::max(1, (l - 1) / 2);
}

namespace {

int formula(ArrowRelation r, int l) {
  switch (r) {
    case ArrowRelation::real_difference: return kottman_formula(l);
    case ArrowRelation::real_sum: return sumfree_formula(l);
    case ArrowRelation::complex_difference: return gaussian_kottman_formula(l);
  }
  return 0;
}

const char* claim_text(ArrowRelation r) {
  switch (r) {
    case ArrowRelation::real_difference: return "K(l) = l - 1";
    case ArrowRelation::real_sum: return "S(l) = l";
    case ArrowRelation::complex_difference: return "K_C(2n + v) = n for v in {1, 2}; K_C(1) = K_C(2) = 1";
  }
  return "";
}

void exhaustive(ArrowCertificate& c, const Budgets& budgets, Execution ex) {
  const auto want = static_cast<std::size_t>(c.l);
  if (c.relation == ArrowRelation::complex_difference) {
    const GaussianAdmissibleEnumerator e(c.N, true, budgets.enumeration);
    c.predicted_count = *gaussian_admissible_count(c.N, true);
    const auto first = first_index_where(ex, static_cast<std::int64_t>(e.count()), [&](std::int64_t i) {
      const auto a = e.at(static_cast<std::uint64_t>(i));
      if (a.size() > budgets.augmentation_vertices) throw BudgetExceeded("admissible set exceeds the vertex budget");
      return !independent_set_of_size(ConflictGraph::build(a), want).has_value();
    });
    c.sets_examined = e.count();
    c.holds = first == static_cast<std::int64_t>(e.count());
    if (!c.holds) {
      c.counterexample_index = static_cast<std::uint64_t>(first);
      c.gaussian_counterexample = e.at(*c.counterexample_index);
      c.counterexample_max_free = max_gaussian_free_subset(*c.gaussian_counterexample, budgets.augmentation_vertices).size();
    }
    return;
  }
  const FreeMode mode = c.relation == ArrowRelation::real_sum ? FreeMode::sum : FreeMode::difference;
  const AdmissibleEnumerator e(c.N, true, budgets.enumeration);
  c.predicted_count = *admissible_count(c.N, true);
  const auto first = first_index_where(ex, static_cast<std::int64_t>(e.count()), [&](std::int64_t i) {
    const auto a = e.at(static_cast<std::uint64_t>(i));
    if (a.size() > budgets.mis_vertices) throw BudgetExceeded("admissible set exceeds the vertex budget");
    return !independent_set_of_size(ConflictGraph::build(a, mode), want).has_value();
  });
  c.sets_examined = e.count();
  c.holds = first == static_cast<std::int64_t>(e.count());
  if (!c.holds) {
    c.counterexample_index = static_cast<std::uint64_t>(first);
    c.counterexample = e.at(*c.counterexample_index);
    c.counterexample_max_free = max_free_subset(*c.counterexample, mode, budgets.mis_vertices).size;
  }
}

void witness(ArrowCertificate& c, const Budgets& budgets) {
  switch (c.relation) {
    case ArrowRelation::real_difference:
      if (c.N > c.l - 2) throw PreconditionError("witness strategy: no witness refutes N -> l for N > l - 2");
      c.counterexample = witness_difference(c.N + 2);
      c.counterexample_max_free = max_free_subset(*c.counterexample, FreeMode::difference, budgets.mis_vertices).size;
      break;
    case ArrowRelation::real_sum:
      if (c.N > c.l - 1) throw PreconditionError("witness strategy: no witness refutes N -> l for N > l - 1");
      c.counterexample = witness_sum(c.N + 1);
      c.counterexample_max_free = max_free_subset(*c.counterexample, FreeMode::sum, budgets.mis_vertices).size;
      break;
    case ArrowRelation::complex_difference:
      if (2 * c.N + 2 >= c.l) throw PreconditionError("witness strategy: no witness refutes N -> l for 2N + 2 >= l");
      c.gaussian_counterexample = delta_construction(witness_difference(c.N + 2));
      c.counterexample_max_free = max_gaussian_free_subset(*c.gaussian_counterexample, budgets.augmentation_vertices).size();
      break;
  }
  if (c.counterexample_max_free >= static_cast<std::size_t>(c.l))
    throw SearchFailure("witness set has a free subset of size " + std::to_string(c.counterexample_max_free) +
                        ", it does not refute N -> l");
  c.holds = false;
}

SweepKind sweep_kind(ArrowRelation r) {
  switch (r) {
    case ArrowRelation::real_difference: return SweepKind::difference_free;
    case ArrowRelation::real_sum: return SweepKind::sum_free;
    case ArrowRelation::complex_difference: return SweepKind::gaussian;
  }
  return SweepKind::difference_free;
}

void theorem_backed(ArrowCertificate& c, const Budgets& budgets, Execution ex) {
  c.claim = claim_text(c.relation);
  c.holds = c.N >= formula(c.relation, c.l);
  if (!c.holds) {
    ArrowCertificate w = c;
    witness(w, budgets);
    c.counterexample = w.counterexample;
    c.gaussian_counterexample = w.gaussian_counterexample;
    c.counterexample_max_free = w.counterexample_max_free;
    return;
  }
  const int cap = c.relation == ArrowRelation::complex_difference ? budgets.gaussian_evidence_max_dim : budgets.evidence_max_dim;
  if (c.N <= cap && budgets.random_trials > 0) {
    auto r = random_sweep(sweep_kind(c.relation), c.N, static_cast<std::uint64_t>(budgets.random_trials), budgets.seed,
                          budgets, ex);
    if (!r.passed())
      throw SearchFailure("random evidence failed at trial " + std::to_string(r.first_failure) + ": " + r.first_failure_detail);
    c.evidence.push_back(std::move(r));
  }
}

}  // namespace

ArrowCertificate arrow_holds(ArrowRelation relation, int N, int l, ArrowMethod method, const Budgets& budgets, Execution ex) {
  if (N < 0 || l < 1) throw PreconditionError("arrow relation needs N >= 0 and l >= 1");
  if (N > kMaxDim) throw PreconditionError("dimension too large");
  ArrowCertificate c;
  c.relation = relation;
  c.N = N;
  c.l = l;
  c.method = method;
  if (N == 0) {
    c.trivial = true;
    c.holds = false;
    return c;
  }
  switch (method) {
    case ArrowMethod::exhaustive: exhaustive(c, budgets, ex); break;
    case ArrowMethod::witness: witness(c, budgets); break;
    case ArrowMethod::theorem_backed: theorem_backed(c, budgets, ex); break;
  }
  return c;
}

namespace {

ValueResult value_of(ArrowRelation r, int l, int value, int exhaustive_limit, const Budgets& budgets, Execution ex,
                     bool exhaustive_upper) {
  ValueResult v;
  v.value = value;
  const auto up = exhaustive_upper && value <= exhaustive_limit ? ArrowMethod::exhaustive : ArrowMethod::theorem_backed;
  v.upper = arrow_holds(r, value, l, up, budgets, ex);
  v.lower = arrow_holds(r, value - 1, l, ArrowMethod::witness, budgets, ex);
  if (!v.upper.holds || v.lower.holds)
    throw SearchFailure(std::string(to_string(r)) + " value " + std::to_string(value) + " for l = " + std::to_string(l) +
                        " is not confirmed by its own certificates");
  return v;
}

}  // namespace

ValueResult kottman_value(int l, const Budgets& budgets, Execution ex, bool exhaustive_upper) {
  if (l < 2) throw PreconditionError("kottman_value needs l >= 2");
  return value_of(ArrowRelation::real_difference, l, kottman_formula(l), 3, budgets, ex, exhaustive_upper);
}

ValueResult sumfree_value(int l, const Budgets& budgets, Execution ex, bool exhaustive_upper) {
  if (l < 1) throw PreconditionError("sumfree_value needs l >= 1");
  return value_of(ArrowRelation::real_sum, l, sumfree_formula(l), 3, budgets, ex, exhaustive_upper);
}

ValueResult gaussian_kottman_value(int l, const Budgets& budgets, Execution ex, bool exhaustive_upper) {
  if (l < 1) throw PreconditionError("gaussian_kottman_value needs l >= 1");
  return value_of(ArrowRelation::complex_difference, l, gaussian_kottman_formula(l), 2, budgets, ex, exhaustive_upper);
}

}  // namespace kottman

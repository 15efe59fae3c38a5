#include "kottman/serialize.hpp"

#include <fstream>
#include <sstream>

#include "kottman/errors.hpp"

namespace kottman {
namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw PreconditionError("rational entries must be \"p/q\" strings or integers");
}

RMat rmat_from_json(const json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of vectors");
  RMat m;
  for (const auto& row : j) m.push_back(rvec_from_json(row));
  return m;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json vectors_to_json(const std::vector<TernaryVector>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json vectors_to_json(const std::vector<GaussianVector>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

std::vector<TernaryVector> ternary_vectors_from_json(const json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of vectors");
  std::vector<TernaryVector> v;
  for (const auto& s : j) {
    if (!s.is_string()) throw PreconditionError("vectors are strings over {+,0,-}");
    v.push_back(TernaryVector::parse(s.get<std::string>()));
  }
  return v;
}

json to_json(const SymmetricCubeSet& a) {
  return {{"dim", a.dim()}, {"members", vectors_to_json(std::vector<TernaryVector>(a.members().begin(), a.members().end()))}};
}

json to_json(const GaussianSet& a) {
  return {{"dim", a.dim()},
          {"field", "gaussian"},
          {"members", vectors_to_json(std::vector<GaussianVector>(a.members().begin(), a.members().end()))}};
}

SymmetricCubeSet cube_set_from_json(const json& j) {
  const int dim = field(j, "dim").get<int>();
  auto members = ternary_vectors_from_json(field(j, "members"));
  for (const auto& m : members)
    if (m.dim() != dim) throw PreconditionError("set member '" + m.to_string() + "' has the wrong length");
  return SymmetricCubeSet(dim, std::move(members));
}

GaussianSet gaussian_set_from_json(const json& j) {
  const int dim = field(j, "dim").get<int>();
  std::vector<GaussianVector> members;
  for (const auto& s : field(j, "members")) {
    if (!s.is_string()) throw PreconditionError("vectors are strings over {0,+,-,i,j}");
    members.push_back(GaussianVector::parse(s.get<std::string>()));
    if (members.back().dim() != dim) throw PreconditionError("set member has the wrong length");
  }
  return GaussianSet(dim, std::move(members));
}

json to_json(const RVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(format_rational(q));
  return a;
}

json to_json(const CVec& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(json::array({z.real(), z.imag()}));
  return a;
}

RVec rvec_from_json(const json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of rationals");
  RVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

CVec cvec_from_json(const json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of [re, im] pairs");
  CVec v;
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_number() || !x[1].is_number())
      throw PreconditionError("complex entries are [re, im] number pairs");
    v.emplace_back(x[0].get<double>(), x[1].get<double>());
  }
  return v;
}

json to_json(const NormSpec& s) {
  json norm{{"type", to_string(s.kind)}};
  switch (s.kind) {
    case NormKind::lp:
      norm["p"] = s.p_infinite ? std::string("inf") : format_rational(s.p);
      if (s.complex_pairs) norm["complex_pairs"] = true;
      break;
    case NormKind::polytope_facets: {
      json rows = json::array();
      for (const auto& f : s.functionals) rows.push_back(to_json(f));
      norm["functionals"] = rows;
      break;
    }
    case NormKind::polytope_vertices: {
      json rows = json::array();
      for (const auto& p : s.points) rows.push_back(to_json(p));
      norm["points"] = rows;
      break;
    }
  }
  return {{"dim", s.dim}, {"field", to_string(s.field)}, {"norm", norm}};
}

NormSpec norm_spec_from_json(const json& j) {
  if (!j.is_object()) throw PreconditionError("norm spec must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "dim" && key != "field" && key != "norm") throw PreconditionError("unknown norm spec key '" + key + "'");
  NormSpec s;
  try {
    s.dim = field(j, "dim").get<int>();
    const std::string f = j.value("field", "real");
    if (f == "real")
      s.field = ScalarField::real;
    else if (f == "complex")
      s.field = ScalarField::complex;
    else
      throw PreconditionError("field must be \"real\" or \"complex\"");
    const json& n = field(j, "norm");
    const std::string type = field(n, "type").get<std::string>();
    if (type == "lp") {
      const json& p = field(n, "p");
      const std::string ps = p.is_string() ? p.get<std::string>() : p.dump();
      if (ps == "inf" || ps == "infinity")
        s.p_infinite = true;
      else
        s.p = rational_from_json(p);
      s.complex_pairs = n.value("complex_pairs", false);
    } else if (type == "polytope_facets") {
      s.kind = NormKind::polytope_facets;
      s.functionals = rmat_from_json(field(n, "functionals"));
    } else if (type == "polytope_vertices") {
      s.kind = NormKind::polytope_vertices;
      s.points = rmat_from_json(field(n, "points"));
    } else {
      throw PreconditionError("unknown norm type '" + type + "'");
    }
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad norm spec: ") + e.what());
  }
  validate(s);
  return s;
}

NormSpec load_norm_spec(const std::string& path) { return norm_spec_from_json(read_json_file(path)); }

json to_json(const Budgets& b) { return json::parse(budgets_to_json(b)); }

json to_json(const SweepReport& r) {
  json j{{"kind", to_string(r.kind)}, {"dim", r.dim}, {"seed", r.seed}, {"trials", r.trials}, {"failures", r.failures}};
  if (r.failures) {
    j["first_failure"] = r.first_failure;
    j["first_failure_detail"] = r.first_failure_detail;
  }
  return j;
}

json to_json(const FreeSetCertificate& c) {
  json j{{"mode", to_string(c.mode)},
         {"set", to_json(c.ground_set)},
         {"witness", vectors_to_json(c.witness)},
         {"claimed_size", c.claimed_size},
         {"checked", c.checked}};
  if (c.mode == FreeMode::sum) j["non_distinct_sum_free"] = c.non_distinct_sum_free;
  return j;
}

json to_json(const GaussianFreeCertificate& c) {
  return {{"set", to_json(c.ground_set)},
          {"witness", vectors_to_json(c.witness)},
          {"claimed_size", c.claimed_size},
          {"checked", c.checked},
          {"embedded_size", c.embedded_size},
          {"augmentation", c.augmentation}};
}

json to_json(const ArrowCertificate& c) {
  json j{{"relation", to_string(c.relation)}, {"N", c.N},           {"l", c.l},
         {"holds", c.holds},                  {"method", to_string(c.method)}, {"trivial", c.trivial}};
  if (c.method == ArrowMethod::exhaustive) {
    j["sets_examined"] = c.sets_examined;
    j["predicted_count"] = c.predicted_count;
  }
  if (c.counterexample) j["counterexample"] = to_json(*c.counterexample);
  if (c.gaussian_counterexample) j["counterexample"] = to_json(*c.gaussian_counterexample);
  if (c.counterexample || c.gaussian_counterexample) j["counterexample_max_free"] = c.counterexample_max_free;
  if (c.counterexample_index) j["counterexample_index"] = *c.counterexample_index;
  if (c.method == ArrowMethod::theorem_backed) {
    j["claim"] = c.claim;
    json ev = json::array();
    for (const auto& r : c.evidence) ev.push_back(to_json(r));
    j["evidence"] = ev;
  }
  return j;
}

json to_json(const ValueResult& v, ArrowRelation relation, int l) {
  json j{{"relation", to_string(relation)},
         {"l", l},
         {"value", v.value},
         {"method", to_string(v.upper.method)},
         {"lower", to_json(v.lower)},
         {"upper", to_json(v.upper)}};
  if (v.upper.method == ArrowMethod::exhaustive) j["sets_examined"] = v.upper.sets_examined;
  return j;
}

json to_json(const GridReport& r) {
  json w = json::array();
  for (const auto& p : r.witness) w.push_back(json::array({p.k, p.m}));
  return {{"n", r.n},
          {"max_size", r.max_size},
          {"witness", w},
          {"star_sets", r.star_sets},
          {"full_sets", r.full_sets},
          {"bound_holds", r.bound_holds},
          {"coverage_holds", r.coverage_holds}};
}

json to_json(const AuerbachBasis& b) {
  json vecs = json::array(), funs = json::array();
  if (b.exact) {
    for (const auto& v : b.vectors) vecs.push_back(to_json(v));
    for (const auto& f : b.functionals) funs.push_back(to_json(f));
  } else {
    for (const auto& v : b.fvectors) vecs.push_back(to_json(v));
    for (const auto& f : b.ffunctionals) funs.push_back(to_json(f));
  }
  json j{{"exact", b.exact}, {"method", b.method}, {"abs_det", b.abs_det}, {"vectors", vecs}, {"functionals", funs}};
  if (b.restart >= 0) j["restart"] = b.restart;
  return j;
}

json to_json(const AuerbachReport& r) {
  json j{{"exact", r.exact},
         {"biorthogonality", r.biorthogonality},
         {"norm", r.norm},
         {"dual_norm", r.dual_norm},
         {"passed", r.passed}};
  if (!r.exact) j["tau"] = r.tau;
  return j;
}

AuerbachBasis auerbach_basis_from_json(const json& j) {
  AuerbachBasis b;
  b.exact = field(j, "exact").get<bool>();
  b.method = j.value("method", "supplied");
  b.abs_det = j.value("abs_det", 0.0);
  b.restart = j.value("restart", -1);
  for (const auto& v : field(j, "vectors")) {
    if (b.exact)
      b.vectors.push_back(rvec_from_json(v));
    else
      b.fvectors.push_back(cvec_from_json(v));
  }
  for (const auto& f : field(j, "functionals")) {
    if (b.exact)
      b.functionals.push_back(rvec_from_json(f));
    else
      b.ffunctionals.push_back(cvec_from_json(f));
  }
  return b;
}

json to_json(const SeparatedFamily& f) {
  json pts = json::array(), table = json::array();
  if (f.exact) {
    for (const auto& p : f.points) pts.push_back(to_json(p));
    for (const auto& row : f.table) table.push_back(to_json(row));
  } else {
    for (const auto& p : f.fpoints) pts.push_back(to_json(p));
    table = f.ftable;
  }
  json j{{"mode", to_string(f.mode)},
         {"exact", f.exact},
         {"norm", to_json(f.spec)},
         {"basis", to_json(f.basis)},
         {"witness", f.mode == SeparationMode::complex ? vectors_to_json(f.gaussian_witness) : vectors_to_json(f.witness)},
         {"unit_set_size", f.unit_set_size},
         {"size", f.size()},
         {"points", pts},
         {"table", table}};
  if (f.exact) {
    j["margin"] = format_rational(f.margin);
  } else {
    j["margin"] = f.fmargin;
    j["tau"] = f.tau;
    j["mu"] = f.mu;
  }
  return j;
}

json witness_payload(FreeMode mode, int l, const SymmetricCubeSet& set, const MaxFreeResult& best) {
  return {{"mode", to_string(mode)}, {"l", l}, {"set", to_json(set)}, {"max_free", best.size}, {"witness", vectors_to_json(best.witness)}};
}

json extend_payload(const SymmetricCubeSet& set, const std::vector<TernaryVector>& base, const FreeSetCertificate& result) {
  return {{"set", to_json(set)}, {"base", vectors_to_json(base)}, {"result", vectors_to_json(result.witness)}};
}

json auerbach_payload(const NormSpec& spec, const AuerbachBasis& basis, const AuerbachReport& report) {
  return {{"norm", to_json(spec)}, {"basis", to_json(basis)}, {"report", to_json(report)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    throw PreconditionError(path + " is not valid JSON: " + e.what());
  }
}

}  // namespace kottman

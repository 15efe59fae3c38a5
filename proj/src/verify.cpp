#include "kottman/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "kottman/certificate.hpp"
#include "kottman/errors.hpp"

namespace kottman {
namespace {

struct Falsified : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OverBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Falsified(what);
}

// Plain integer vectors; Gaussian vectors interleave (re, im) per coordinate.
using IVec = std::vector<int>;

IVec parse_vector(const json& j, int dim, bool gaussian) {
  require(j.is_string(), "vector entries must be strings");
  const auto s = j.get<std::string>();
  require(static_cast<int>(s.size()) == dim, "vector '" + s + "' has the wrong length");
  IVec v;
  for (char c : s) {
    int re = 0, im = 0;
    switch (c) {
      case '0': break;
      case '+': re = 1; break;
      case '-': re = -1; break;
      case 'i': im = 1; break;
      case 'j': im = -1; break;
      default: throw Falsified(std::string("bad digit '") + c + "'");
    }
    require(gaussian || im == 0, "imaginary digit in a real vector");
    v.push_back(re);
    if (gaussian) v.push_back(im);
  }
  return v;
}

IVec combine(const IVec& x, const IVec& y, int sign) {
  IVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + sign * y[i];
  return r;
}

IVec negate(const IVec& x) { return combine(IVec(x.size(), 0), x, -1); }

IVec times_i(const IVec& x) {
  IVec r(x.size());
  for (std::size_t k = 0; k + 1 < x.size(); k += 2) {
    r[k] = -x[k + 1];
    r[k + 1] = x[k];
  }
  return r;
}

IVec unit(int dim, int k, bool gaussian) {
  IVec e(gaussian ? 2 * dim : dim, 0);
  e[gaussian ? 2 * k : k] = 1;
  return e;
}

struct PlainSet {
  int dim = 0;
  bool gaussian = false;
  std::vector<IVec> items;
  std::set<IVec> lookup;
  bool has(const IVec& x) const { return lookup.count(x) > 0; }
  void add(IVec x) {
    if (lookup.insert(x).second) items.push_back(std::move(x));
  }
};

std::vector<IVec> parse_vectors(const json& j, int dim, bool gaussian) {
  require(j.is_array(), "expected an array of vectors");
  std::vector<IVec> out;
  for (const auto& s : j) out.push_back(parse_vector(s, dim, gaussian));
  return out;
}

PlainSet read_set(const json& j, bool gaussian) {
  PlainSet a;
  a.dim = j.at("dim").get<int>();
  a.gaussian = gaussian;
  require(a.dim >= 0, "negative dimension");
  for (auto& v : parse_vectors(j.at("members"), a.dim, gaussian)) {
    require(!a.has(v), "duplicate set member");
    a.add(std::move(v));
  }
  return a;
}

bool admissible(const PlainSet& a) {
  for (int k = 0; k < a.dim; ++k)
    if (!a.has(unit(a.dim, k, a.gaussian))) return false;
  for (const auto& x : a.items)
    if (!a.has(a.gaussian ? times_i(x) : negate(x))) return false;
  return true;
}

bool conflict(const PlainSet& a, const IVec& x, const IVec& y, bool sum) {
  if (sum) return a.has(combine(x, y, 1));
  return a.has(combine(x, y, -1)) || a.has(combine(y, x, -1));
}

bool free_in(const PlainSet& a, const std::vector<IVec>& b, bool sum) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (conflict(a, b[i], b[j], sum)) return false;
  return true;
}

void require_free_subset(const PlainSet& a, const std::vector<IVec>& b, bool sum, const char* what) {
  std::set<IVec> seen;
  for (const auto& x : b) {
    require(a.has(x), std::string(what) + " is not a subset of the ground set");
    require(seen.insert(x).second, std::string(what) + " has repeated elements");
  }
  require(free_in(a, b, sum), std::string(what) + " is not free");
}

// Depth-first search for k pairwise non-conflicting elements, pruned by a
// greedy clique cover of the remaining candidates.
class Search {
 public:
  Search(const PlainSet& a, bool sum, std::size_t budget) : n_(a.items.size()), bad_(n_, std::vector<char>(n_, 0)) {
    if (n_ > budget) throw OverBudget("set of " + std::to_string(n_) + " elements exceeds the verifier budget");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) bad_[i][j] = bad_[j][i] = conflict(a, a.items[i], a.items[j], sum);
  }

  bool exists(std::size_t k) {
    std::vector<std::size_t> all(n_);
    for (std::size_t i = 0; i < n_; ++i) all[i] = i;
    return dfs(all, k);
  }

  std::size_t maximum(std::size_t at_least) {
    std::size_t k = at_least;
    while (exists(k + 1)) ++k;
    return k;
  }

 private:
  std::size_t cover(const std::vector<std::size_t>& c) const {
    std::vector<std::vector<std::size_t>> cliques;
    for (auto v : c) {
      bool placed = false;
      for (auto& q : cliques)
        if (std::all_of(q.begin(), q.end(), [&](std::size_t u) { return bad_[u][v]; })) {
          q.push_back(v);
          placed = true;
          break;
        }
      if (!placed) cliques.push_back({v});
    }
    return cliques.size();
  }

  bool dfs(const std::vector<std::size_t>& cand, std::size_t need) {
    if (need == 0) return true;
    if (cand.size() < need || cover(cand) < need) return false;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (cand.size() - i < need) return false;
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (!bad_[cand[i]][cand[j]]) next.push_back(cand[j]);
      if (dfs(next, need - 1)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<char>> bad_;
};

std::size_t vertex_budget(const Budgets& b, bool gaussian) { return gaussian ? b.augmentation_vertices : b.mis_vertices; }

// All nonzero vectors of the cube (3^dim or 5^dim) in plain form.
std::vector<IVec> cube_points(int dim, bool gaussian) {
  const int base = gaussian ? 5 : 3;
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) total *= base;
  static const char digits[] = "0+-ij";
  std::vector<IVec> out;
  for (std::uint64_t c = 1; c < total; ++c) {
    std::string s;
    std::uint64_t x = c;
    for (int i = 0; i < dim; ++i, x /= base) s += digits[x % base];
    out.push_back(parse_vector(json(s), dim, gaussian));
  }
  return out;
}

// Antipodal (real) or {x, ix, -x, -ix} (Gaussian) orbits other than the basis orbits.
std::vector<std::vector<IVec>> free_orbits(int dim, bool gaussian) {
  std::set<IVec> done;
  std::vector<std::vector<IVec>> orbits;
  for (int k = 0; k < dim; ++k) {
    IVec e = unit(dim, k, gaussian);
    for (int r = 0; r < 4; ++r) {
      done.insert(e);
      e = gaussian ? times_i(e) : negate(e);
    }
  }
  for (const auto& x : cube_points(dim, gaussian)) {
    if (done.count(x)) continue;
    std::vector<IVec> orbit;
    IVec y = x;
    for (int r = 0; r < 4; ++r) {
      if (done.insert(y).second) orbit.push_back(y);
      y = gaussian ? times_i(y) : negate(y);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// Every admissible set (with or without 0) has a free subset of size l.
std::uint64_t exhaustive_holds(int dim, int l, bool sum, bool gaussian, const Budgets& budgets) {
  const auto orbits = free_orbits(dim, gaussian);
  require(orbits.size() + 1 < 63, "cube too large");
  const std::uint64_t count = std::uint64_t{1} << (orbits.size() + 1);
  if (count > budgets.enumeration) throw OverBudget("exhaustive re-check of " + std::to_string(count) + " sets exceeds the budget");
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    PlainSet a;
    a.dim = dim;
    a.gaussian = gaussian;
    for (int k = 0; k < dim; ++k) {
      IVec e = unit(dim, k, gaussian);
      for (int r = 0; r < 4; ++r) {
        a.add(e);
        e = gaussian ? times_i(e) : negate(e);
      }
    }
    for (std::size_t o = 0; o < orbits.size(); ++o)
      if ((mask >> o) & 1U)
        for (const auto& x : orbits[o]) a.add(x);
    if ((mask >> orbits.size()) & 1U) a.add(IVec(gaussian ? 2 * dim : dim, 0));
    require(Search(a, sum, vertex_budget(budgets, gaussian)).exists(static_cast<std::size_t>(l)),
            "admissible set " + std::to_string(mask) + " has no free subset of size " + std::to_string(l));
  }
  return count;
}

struct Context {
  const Budgets& budgets;
  VerifyResult& out;
  void note(std::string s) { out.checks.push_back(std::move(s)); }
};

void check_arrow(const json& c, const std::string& relation, int l, int N, bool holds, Context& ctx) {
  require(c.at("relation").get<std::string>() == relation, "relation mismatch");
  require(c.at("l").get<int>() == l && c.at("N").get<int>() == N, "arrow parameters do not match the value");
  require(c.at("holds").get<bool>() == holds, "arrow verdict does not match the value");
  const bool gaussian = relation == "complex_difference";
  const bool sum = relation == "real_sum";
  const std::string method = c.at("method").get<std::string>();
  if (!holds) {
    if (c.at("trivial").get<bool>()) {
      require(N == 0, "only the 0-dimensional cube is trivial");
      ctx.note(std::to_string(N) + " -/-> " + std::to_string(l) + ": empty cube");
      return;
    }
    const PlainSet a = read_set(c.at("counterexample"), gaussian);
    require(a.dim == N, "counterexample lives in the wrong cube");
    require(admissible(a), "counterexample is not admissible");
    Search s(a, sum, vertex_budget(ctx.budgets, gaussian));
    const auto claimed = c.at("counterexample_max_free").get<std::size_t>();
    require(claimed < static_cast<std::size_t>(l), "counterexample max free size is not below l");
    require(s.exists(claimed) && !s.exists(claimed + 1), "counterexample max free size is wrong");
    ctx.note(std::to_string(N) + " -/-> " + std::to_string(l) + ": counterexample with max free size " +
             std::to_string(claimed));
    return;
  }
  if (method == "exhaustive") {
    const auto count = exhaustive_holds(N, l, sum, gaussian, ctx.budgets);
    require(c.at("sets_examined").get<std::uint64_t>() == count, "sets_examined does not match the enumeration");
    ctx.note(std::to_string(N) + " -> " + std::to_string(l) + ": re-enumerated " + std::to_string(count) + " sets");
    return;
  }
  require(method == "theorem_backed", "a holding arrow needs exhaustive or theorem-backed support");
  require(c.at("claim").is_string(), "theorem-backed claim missing");
  std::uint64_t trials = 0;
  for (const auto& r : c.at("evidence")) {
    require(r.at("dim").get<int>() == N, "evidence drawn in the wrong cube");
    require(r.at("failures").get<std::uint64_t>() == 0, "evidence records failures");
    trials += r.at("trials").get<std::uint64_t>();
  }
  ctx.note(std::to_string(N) + " -> " + std::to_string(l) + ": theorem-backed, " + std::to_string(trials) +
           " random trials recorded (not re-run)");
}

void check_value(const json& p, Context& ctx) {
  const std::string relation = p.at("relation").get<std::string>();
  require(relation == "real_difference" || relation == "real_sum" || relation == "complex_difference",
          "unknown relation");
  const int l = p.at("l").get<int>();
  const int value = p.at("value").get<int>();
  require(value >= 1, "value must be positive");
  check_arrow(p.at("lower"), relation, l, value - 1, false, ctx);
  check_arrow(p.at("upper"), relation, l, value, true, ctx);
  require(p.at("method") == p.at("upper").at("method"), "method does not match the upper bound");
  if (p.contains("sets_examined")) require(p.at("sets_examined") == p.at("upper").at("sets_examined"), "sets_examined mismatch");
}

PlainSet witness_construction(const std::string& mode, int l) {
  PlainSet a;
  a.dim = mode == "sum" ? l - 1 : l - 2;
  require(a.dim >= 1, "witness parameter out of range");
  for (int k = 0; k < a.dim; ++k) {
    a.add(unit(a.dim, k, false));
    a.add(negate(unit(a.dim, k, false)));
  }
  if (mode == "sum")
    a.add(IVec(a.dim, 0));
  else
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j)
        if (i != j) a.add(combine(unit(a.dim, i, false), unit(a.dim, j, false), -1));
  return a;
}

void check_witness(const json& p, Context& ctx) {
  const std::string mode = p.at("mode").get<std::string>();
  require(mode == "difference" || mode == "sum", "unknown mode");
  const bool sum = mode == "sum";
  const int l = p.at("l").get<int>();
  const PlainSet a = read_set(p.at("set"), false);
  const PlainSet expect = witness_construction(mode, l);
  require(a.dim == expect.dim && a.lookup == expect.lookup, "set is not the witness construction");
  const auto w = parse_vectors(p.at("witness"), a.dim, false);
  require_free_subset(a, w, sum, "witness");
  const auto m = p.at("max_free").get<std::size_t>();
  require(w.size() == m, "witness size differs from max_free");
  require(m == static_cast<std::size_t>(l - 1), "max_free is not l - 1");
  require(!Search(a, sum, ctx.budgets.mis_vertices).exists(m + 1), "a larger free subset exists");
  ctx.note("maximum free size " + std::to_string(m) + " confirmed by exhaustive search");
}

void check_free(const json& p, Context& ctx) {
  const std::string mode = p.at("mode").get<std::string>();
  require(mode == "difference" || mode == "sum", "unknown mode");
  const bool sum = mode == "sum";
  const PlainSet a = read_set(p.at("set"), false);
  require(admissible(a), "ground set is not admissible");
  const auto w = parse_vectors(p.at("witness"), a.dim, false);
  require_free_subset(a, w, sum, "witness");
  const std::size_t want = static_cast<std::size_t>(sum ? a.dim : a.dim + 1);
  require(w.size() == want && p.at("claimed_size").get<std::size_t>() == want, "witness has the wrong size");
  if (sum && p.contains("non_distinct_sum_free") && p.at("non_distinct_sum_free").get<bool>())
    for (const auto& x : w) require(!a.has(combine(x, x, 1)), "x + x lies in the set");
  ctx.note(std::string(sum ? "sum" : "difference") + "-free subset of size " + std::to_string(want));
}

void check_extend(const json& p, Context& ctx) {
  const PlainSet a = read_set(p.at("set"), false);
  require(a.dim >= 2, "extension needs dimension at least 2");
  PlainSet proj;
  proj.dim = a.dim - 1;
  for (const auto& x : a.items) proj.add(IVec(x.begin(), x.end() - 1));
  const auto base = parse_vectors(p.at("base"), a.dim - 1, false);
  const auto result = parse_vectors(p.at("result"), a.dim, false);
  require_free_subset(proj, base, false, "base");
  require_free_subset(a, result, false, "result");
  require(result.size() == base.size() + 1, "result is not one larger than the base");
  for (const auto& b : base)
    require(std::any_of(result.begin(), result.end(), [&](const IVec& r) { return IVec(r.begin(), r.end() - 1) == b; }),
            "a base element has no extension in the result");
  ctx.note("extension of " + std::to_string(base.size()) + " elements to " + std::to_string(result.size()));
}

void check_grid(const json& p, Context& ctx) {
  const int n = p.at("n").get<int>();
  require(n >= 1, "grid size must be positive");
  if (n > ctx.budgets.grid_max_n) throw OverBudget("grid re-check beyond the budget");
  std::vector<std::pair<int, int>> cells;
  for (int k = 1; k <= n; ++k)
    for (int m = 1; m <= n; ++m)
      if (k != m) cells.emplace_back(k, m);
  auto ok = [](std::pair<int, int> a, std::pair<int, int> b) {
    // Shared indices must be crossed: first of one is second of the other.
    for (int x : {a.first, a.second})
      for (int y : {b.first, b.second})
        if (x == y && !((x == a.first && y == b.second) || (x == a.second && y == b.first))) return false;
    return true;
  };
  std::size_t best = 0;
  std::vector<std::pair<int, int>> best_set, cur;
  std::uint64_t star = 0, full = 0;
  bool coverage = true;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < cells.size(); ++i) {
      if (!std::all_of(cur.begin(), cur.end(), [&](auto c) { return ok(c, cells[i]); })) continue;
      cur.push_back(cells[i]);
      ++star;
      if (cur.size() > best) {
        best = cur.size();
        best_set = cur;
      }
      if (cur.size() == static_cast<std::size_t>(n)) {
        ++full;
        for (int k = 1; k <= n; ++k) {
          const auto a = std::count_if(cur.begin(), cur.end(), [&](auto c) { return c.first == k; });
          const auto b = std::count_if(cur.begin(), cur.end(), [&](auto c) { return c.second == k; });
          if (a != 1 || b != 1) coverage = false;
        }
      }
      self(self, i + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  std::vector<std::pair<int, int>> w;
  for (const auto& c : p.at("witness")) w.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  require(w == best_set, "witness is not the first maximum set");
  require(p.at("max_size").get<std::size_t>() == best, "max_size mismatch");
  require(p.at("star_sets").get<std::uint64_t>() == star && p.at("full_sets").get<std::uint64_t>() == full,
          "set counts mismatch");
  require(p.at("bound_holds").get<bool>() == (best <= static_cast<std::size_t>(n)), "bound flag mismatch");
  require(p.at("coverage_holds").get<bool>() == coverage, "coverage flag mismatch");
  ctx.note("grid n = " + std::to_string(n) + " re-enumerated: " + std::to_string(star) + " sets");
}

void check_auerbach_basis(const NormSpec& spec, const AuerbachBasis& b, Context& ctx) {
  require(b.dim() == spec.dim, "basis dimension mismatch");
  require(b.exact == spec.exact(), "basis arithmetic does not match the spec");
  const auto r = verify_auerbach(b, spec, ctx.budgets.tau);
  require(r.passed, "basis is not Auerbach (residuals " + std::to_string(r.biorthogonality) + ", " +
                        std::to_string(r.norm) + ", " + std::to_string(r.dual_norm) + ")");
  ctx.note(std::string("Auerbach residuals ") + (b.exact ? "exactly 0" : "within tau"));
}

void check_auerbach(const json& p, Context& ctx) {
  const NormSpec spec = norm_spec_from_json(p.at("norm"));
  check_auerbach_basis(spec, auerbach_basis_from_json(p.at("basis")), ctx);
  require(p.at("report").at("passed").get<bool>(), "certificate reports a failed verification");
}

void check_separation(const json& p, Context& ctx) {
  const NormSpec spec = norm_spec_from_json(p.at("norm"));
  const SeparationMode mode = parse_separation_mode(p.at("mode").get<std::string>());
  const AuerbachBasis basis = auerbach_basis_from_json(p.at("basis"));
  check_auerbach_basis(spec, basis, ctx);
  const bool exact = p.at("exact").get<bool>();
  require(exact == spec.exact(), "exactness flag does not match the spec");
  const bool gaussian = mode == SeparationMode::complex;
  require(gaussian == (spec.field == ScalarField::complex), "mode does not match the scalar field");
  const int n = spec.dim;
  const auto w = parse_vectors(p.at("witness"), n, gaussian);
  const std::size_t want = static_cast<std::size_t>(mode == SeparationMode::difference ? n + 1 : mode == SeparationMode::sum ? n : 2 * n + 2);
  require(w.size() == want, "family size breaks the size law");
  require(std::set<IVec>(w.begin(), w.end()).size() == w.size(), "repeated coefficient vectors");

  SeparatedFamily f;
  f.mode = mode;
  f.exact = exact;
  const auto& pts = p.at("points");
  require(pts.is_array() && pts.size() == want, "point count mismatch");
  for (std::size_t k = 0; k < want; ++k) {
    // Points must be the pullback of the coefficient witness.
    if (exact) {
      const RVec z = rvec_from_json(pts[k]);
      RVec expect(n, 0);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) expect[i] += w[k][j] * basis.vectors[j][i];
      require(z == expect, "point " + std::to_string(k) + " is not the combination its coefficients give");
      f.points.push_back(z);
    } else {
      const CVec z = cvec_from_json(pts[k]);
      require(z.size() == static_cast<std::size_t>(n), "point dimension mismatch");
      for (int i = 0; i < n; ++i) {
        Complex e = 0;
        for (int j = 0; j < n; ++j) {
          const Complex a = gaussian ? Complex(w[k][2 * j], w[k][2 * j + 1]) : Complex(w[k][j], 0);
          e += a * basis.fvectors[j][i];
        }
        require(std::abs(e - z[i]) <= ctx.budgets.tau, "point " + std::to_string(k) + " drifts from its coefficients");
      }
      f.fpoints.push_back(z);
    }
  }
  const auto r = verify_separation(f, spec, ctx.budgets.tau, ctx.budgets.mu);
  require(r.units_ok, "a point is not a unit vector");
  require(r.passed, "pairwise separation fails (margin " + std::to_string(r.fmargin) + ")");
  if (exact) {
    require(parse_rational(p.at("margin").get<std::string>()) == r.margin, "recorded margin differs from the recomputed one");
    ctx.note("exact margin " + format_rational(r.margin));
  } else {
    require(std::abs(p.at("margin").get<double>() - r.fmargin) <= ctx.budgets.tau, "recorded margin differs");
    ctx.note("float margin " + std::to_string(r.fmargin) + " >= mu");
  }
}

}  // namespace

VerifyResult verify_certificate(const json& cert, const Budgets& budgets) {
  VerifyResult out;
  Context ctx{budgets, out};
  try {
    require(cert.is_object(), "certificate is not a JSON object");
    for (const char* key : {"kind", "payload", "manifest", "manifest_digest", "digest"})
      require(cert.contains(key), std::string("missing field '") + key + "'");
    out.kind = cert.at("kind").get<std::string>();
    require(cert.at("digest").get<std::string>() == certificate_digest(cert), "digest mismatch");
    require(cert.at("manifest_digest").get<std::string>() == manifest_digest(cert.at("manifest")), "manifest digest mismatch");
    const auto& wall = cert.at("manifest").at("wall_time");
    require(wall.is_number() && wall.get<double>() >= 0, "bad wall_time");
    ctx.note("digests match");
    const json& p = cert.at("payload");
    if (out.kind == "value")
      check_value(p, ctx);
    else if (out.kind == "witness")
      check_witness(p, ctx);
    else if (out.kind == "free")
      check_free(p, ctx);
    else if (out.kind == "extend")
      check_extend(p, ctx);
    else if (out.kind == "grid")
      check_grid(p, ctx);
    else if (out.kind == "auerbach")
      check_auerbach(p, ctx);
    else if (out.kind == "separation")
      check_separation(p, ctx);
    else
      throw Falsified("unknown certificate kind '" + out.kind + "'");
    out.verdict = Verdict::verified;
  } catch (const Falsified& e) {
    out.verdict = Verdict::falsified;
    out.reason = e.what();
  } catch (const OverBudget& e) {
    out.verdict = Verdict::budget;
    out.reason = e.what();
  } catch (const BudgetExceeded& e) {
    out.verdict = Verdict::budget;
    out.reason = e.what();
  } catch (const std::exception& e) {
    // Missing or mistyped fields, unparsable numbers, invalid specs.
    out.verdict = Verdict::falsified;
    out.reason = std::string("malformed certificate: ") + e.what();
  }
  return out;
}

}  // namespace kottman

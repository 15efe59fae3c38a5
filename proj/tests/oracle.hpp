// Brute-force reference implementations on plain integer vectors. They share
// no code with the library beyond parsing the inputs out of library types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "kottman/cube_set.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Set = std::set<Vec>;

inline Vec coords(const kottman::TernaryVector& x) { return x.coords(); }

inline Set to_set(const kottman::SymmetricCubeSet& a) {
  Set s;
  for (const auto& x : a.members()) s.insert(x.coords());
  return s;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool free_pair(const Vec& x, const Vec& y, const Set& a, bool sum) {
  if (sum) return !a.count(add(x, y));
  return !a.count(sub(x, y)) && !a.count(sub(y, x));
}

inline bool is_free(const std::vector<Vec>& b, const Set& a, bool sum) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!free_pair(b[i], b[j], a, sum)) return false;
  return true;
}

/// Maximum free subset size by plain recursion over include/exclude.
inline std::size_t max_free(const Set& a, bool sum) {
  std::vector<Vec> v(a.begin(), a.end());
  std::vector<Vec> cur;
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (cur.size() + (v.size() - i) <= best) return;
    if (i == v.size()) {
      best = std::max(best, cur.size());
      return;
    }
    bool ok = true;
    for (const auto& y : cur) ok = ok && free_pair(v[i], y, a, sum);
    if (ok) {
      cur.push_back(v[i]);
      self(self, i + 1);
      cur.pop_back();
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return best;
}

/// Every vector of {-1,0,1}^n.
inline std::vector<Vec> cube(int n) {
  std::vector<Vec> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const auto& p : out)
      for (int c : {-1, 0, 1}) {
        auto q = p;
        q.push_back(c);
        next.push_back(q);
      }
    out.swap(next);
  }
  return out;
}

inline bool admissible(const Set& a, int n) {
  for (int k = 0; k < n; ++k) {
    Vec e(n, 0);
    e[k] = 1;
    if (!a.count(e)) return false;
  }
  for (const auto& x : a) {
    Vec m = x;
    for (auto& c : m) c = -c;
    if (!a.count(m)) return false;
  }
  return true;
}

}  // namespace oracle

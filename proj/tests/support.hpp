#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ckinv/ckext.hpp"
#include "ckinv/exactmat.hpp"
#include "ckinv/fgab.hpp"
#include "ckinv/markediso.hpp"

namespace testsupport {

using ckinv::Integer;
using ckinv::IntMatrix;
using ckinv::IntVector;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

inline IntVector random_vector(Rng& rng, std::size_t n, long lo, long hi) {
  IntVector v(n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

// Reachability by repeated boolean squaring; deliberately not Tarjan.
inline bool irreducible_oracle(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = a(i, j) != 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r[i][j]) return false;
  return true;
}

inline bool permutation_oracle(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    int row = 0, col = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      row += a(i, j) != 0;
      col += a(j, i) != 0;
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

// Accept/reject sampling of irreducible non-permutation 0-1 matrices.
inline ckinv::ZeroOneMatrix random_valid_matrix(Rng& rng, std::size_t n) {
  std::bernoulli_distribution bit(0.5);
  for (;;) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = bit(rng) ? 1 : 0;
    if (irreducible_oracle(m) && !permutation_oracle(m)) return ckinv::validate(m);
  }
}

// Leibniz expansion over all permutations.
inline Integer leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start,
                         std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: D_k = gcd of all k x k
// minors, d_k = D_k / D_{k-1}. Returns the nonzero factors only.
inline std::vector<Integer> invariant_factors_oracle(const IntMatrix& m) {
  std::vector<Integer> factors;
  Integer prev = 1;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    combinations(m.rows(), k, 0, cur, rs);
    combinations(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
        g = gcd(g, ckinv::determinant(sub));
        if (g == 1) break;
      }
      if (g == 1) break;
    }
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

inline std::vector<Integer> nontrivial(const std::vector<Integer>& f) {
  std::vector<Integer> out;
  for (const auto& d : f)
    if (d != 1) out.push_back(d);
  return out;
}

// All invariant-factor lists 1 < d_1 | ... | d_t with product n.
inline void factor_chains(long n, long prev, std::vector<long>& cur,
                          std::vector<std::vector<long>>& out) {
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  // Build from the largest factor down so each new factor divides the last.
  for (long d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    if (prev != 0 && prev % d != 0) continue;
    cur.insert(cur.begin(), d);
    factor_chains(n / d, d, cur, out);
    cur.erase(cur.begin());
  }
}

inline std::vector<std::vector<long>> abelian_groups_of_order(long n) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  factor_chains(n, 0, cur, out);
  return out;
}

// Finite group Z/d_1 + ... + Z/d_t with elements as coordinate tuples.
struct FiniteGroupModel {
  std::vector<long> d;

  long order() const {
    long o = 1;
    for (long x : d) o *= x;
    return o;
  }
  std::vector<long> decode(long idx) const {
    std::vector<long> c(d.size());
    for (std::size_t i = d.size(); i-- > 0;) {
      c[i] = idx % d[i];
      idx /= d[i];
    }
    return c;
  }
  long encode(const std::vector<long>& c) const {
    long idx = 0;
    for (std::size_t i = 0; i < d.size(); ++i) idx = idx * d[i] + ((c[i] % d[i]) + d[i]) % d[i];
    return idx;
  }
  long order_of(const std::vector<long>& c) const {
    long o = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const long g = std::gcd(c[i], d[i]);
      o = std::lcm(o, d[i] / (g == 0 ? d[i] : g));
    }
    return o;
  }
};

// An automorphism given by images of the standard generators.
struct FiniteMap {
  std::vector<std::vector<long>> images;

  std::vector<long> apply(const FiniteGroupModel& g, const std::vector<long>& x) const {
    std::vector<long> y(g.d.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) y[j] = (y[j] + x[i] * images[i][j]) % g.d[j];
    return y;
  }
};

// Random automorphism: sample generator images with order dividing d_i
// until the induced map is bijective.
inline FiniteMap random_automorphism(Rng& rng, const FiniteGroupModel& g) {
  const long n = g.order();
  for (;;) {
    FiniteMap f;
    bool ok = true;
    for (std::size_t i = 0; i < g.d.size() && ok; ++i) {
      std::vector<long> img;
      for (int tries = 0; tries < 64; ++tries) {
        img = g.decode(uniform(rng, 0, n - 1));
        if (g.d[i] % g.order_of(img) == 0) break;
        img.clear();
      }
      if (img.empty()) ok = false;
      f.images.push_back(img);
    }
    if (!ok) continue;
    std::vector<bool> hit(n, false);
    long distinct = 0;
    for (long idx = 0; idx < n; ++idx) {
      const long y = g.encode(f.apply(g, g.decode(idx)));
      if (!hit[y]) {
        hit[y] = true;
        ++distinct;
      }
    }
    if (distinct == n) return f;
  }
}

inline ckinv::MarkedGroup to_marked(const FiniteGroupModel& g,
                                    const std::vector<std::vector<long>>& markers) {
  std::vector<Integer> factors(g.d.begin(), g.d.end());
  const auto group = ckinv::FgAbelianGroup::from_invariants(0, factors);
  std::vector<ckinv::GroupElement> elems;
  for (const auto& m : markers)
    elems.push_back(group.element(std::vector<Integer>(m.begin(), m.end()), {}));
  return ckinv::MarkedGroup(group, std::move(elems));
}

}  // namespace testsupport

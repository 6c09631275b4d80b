#include "ckinv/markediso.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <string>

#include "ckinv/error.hpp"

namespace ckinv {

namespace {

using Coord = std::int64_t;
using CoordVector = std::vector<Coord>;

// The orbit search stops here rather than exhaust memory.
constexpr std::size_t kMaxOrbitStates = std::size_t{1} << 22;
// Candidate-extension budget for the exhaustive oracle.
constexpr std::uint64_t kMaxBruteforceSteps = 400'000'000;

Coord mod_coord(const Integer& x, Coord q) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(q));
  return static_cast<Coord>(r.get_si());
}

std::vector<Coord> prime_divisors(Coord n) {
  std::vector<Coord> primes;
  for (Coord p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool in_p_multiple(const GroupElement& x, const Integer& p) {
  for (const auto& f : x.free_coords())
    if (!mpz_divisible_p(f.get_mpz_t(), p.get_mpz_t())) return false;
  const auto& d = x.parent().torsion();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (mpz_divisible_p(d[i].get_mpz_t(), p.get_mpz_t()) &&
        !mpz_divisible_p(x.torsion_coords()[i].get_mpz_t(), p.get_mpz_t()))
      return false;
  }
  return true;
}

Integer torsion_order(const FgAbelianGroup& g) {
  Integer o = 1;
  for (const auto& d : g.torsion()) o *= d;
  return o;
}

// p-primary part of T = Z/d_1 + ... + Z/d_t, as Z/p^{e_1} + ... with the
// coordinate of factor l read as (torsion coordinate) mod p^{e_l}.
struct PrimaryPart {
  Coord p = 0;
  std::vector<Coord> moduli;
  std::vector<int> exponent;
  std::vector<std::size_t> factor;
};

PrimaryPart primary_part(const std::vector<Integer>& torsion, Coord p) {
  PrimaryPart part;
  part.p = p;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    Coord d = torsion[i].get_si();
    Coord q = 1;
    int e = 0;
    while (d % p == 0) {
      d /= p;
      q *= p;
      ++e;
    }
    if (e == 0) continue;
    part.moduli.push_back(q);
    part.exponent.push_back(e);
    part.factor.push_back(i);
  }
  return part;
}

// Canonical coordinates of T_p^k / S through the Smith transform of its
// presentation, in machine integers.
class CosetCoder {
 public:
  explicit CosetCoder(const FgAbelianGroup& quotient) {
    const IntMatrix& u = quotient.coord_transform();
    for (std::size_t i = 0; i < quotient.torsion().size(); ++i) {
      const Coord d = quotient.torsion()[i].get_si();
      moduli_.push_back(d);
      CoordVector row(u.cols());
      for (std::size_t j = 0; j < u.cols(); ++j)
        row[j] = mod_coord(u(quotient.torsion_rows()[i], j), d);
      rows_.push_back(std::move(row));
    }
  }

  CoordVector operator()(const CoordVector& v) const {
    CoordVector key(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      const Coord d = moduli_[i];
      __int128 acc = 0;
      for (std::size_t j = 0; j < v.size(); ++j) acc += static_cast<__int128>(rows_[i][j]) * v[j];
      key[i] = static_cast<Coord>(((acc % d) + d) % d);
    }
    return key;
  }

 private:
  CoordVector moduli_;
  std::vector<CoordVector> rows_;
};

// Generator of Aut(T_p): either g_target -> u g_target, or the transvection
// g_source -> g_source + c g_target, which on coordinates reads
// t_target += c t_source.
struct AutGenerator {
  bool scaling = true;
  std::size_t target = 0;
  std::size_t source = 0;
  Coord factor = 1;
};

std::vector<Coord> unit_group_generators(Coord q, Coord p) {
  std::vector<Coord> gens;
  std::vector<bool> reached(static_cast<std::size_t>(q), false);
  reached[1 % q] = true;
  for (Coord u = 2; u < q; ++u) {
    if (u % p == 0 || reached[u]) continue;
    gens.push_back(u);
    std::deque<Coord> queue;
    for (Coord x = 0; x < q; ++x)
      if (reached[x]) queue.push_back(x);
    while (!queue.empty()) {
      const Coord x = queue.front();
      queue.pop_front();
      for (Coord g : gens) {
        const Coord y = (x * g) % q;
        if (!reached[y]) {
          reached[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

std::vector<AutGenerator> automorphism_generators(const PrimaryPart& part) {
  std::vector<AutGenerator> gens;
  const std::size_t n = part.moduli.size();
  for (std::size_t l = 0; l < n; ++l)
    for (Coord u : unit_group_generators(part.moduli[l], part.p))
      gens.push_back({true, l, l, u});
  for (std::size_t target = 0; target < n; ++target)
    for (std::size_t source = 0; source < n; ++source) {
      if (target == source) continue;
      Coord c = 1;
      for (int e = part.exponent[source]; e < part.exponent[target]; ++e) c *= part.p;
      gens.push_back({false, target, source, c % part.moduli[target]});
    }
  return gens;
}

void apply_generator(const AutGenerator& g, const PrimaryPart& part, CoordVector& v) {
  const std::size_t n = part.moduli.size();
  const Coord q = part.moduli[g.target];
  for (std::size_t base = 0; base < v.size(); base += n) {
    Coord& t = v[base + g.target];
    if (g.scaling) {
      t = (t * g.factor) % q;
    } else {
      t = (t + g.factor * v[base + g.source]) % q;
    }
  }
}

CoordVector primary_coords(const std::vector<GroupElement>& markers, const PrimaryPart& part) {
  const std::size_t n = part.moduli.size();
  CoordVector v(markers.size() * n);
  for (std::size_t a = 0; a < markers.size(); ++a)
    for (std::size_t l = 0; l < n; ++l)
      v[a * n + l] = mod_coord(markers[a].torsion_coords()[part.factor[l]], part.moduli[l]);
  return v;
}

// Is some automorphism of T_p, composed with some shift from Hom(Z^r, T_p),
// carrying the p-parts of x's torsion coordinates to those of y's?
bool primary_orbit_match(const PrimaryPart& part, const MarkedGroup& x, const MarkedGroup& y) {
  const std::size_t n = part.moduli.size();
  const std::size_t k = x.markers.size();
  const std::size_t r = x.group.free_rank();
  const std::size_t dim = k * n;

  IntMatrix pres(dim, dim + r * n);
  for (std::size_t pos = 0; pos < dim; ++pos) pres(pos, pos) = part.moduli[pos % n];
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t col = dim + j * n + l;
      for (std::size_t a = 0; a < k; ++a)
        pres(a * n + l, col) = mod_coord(x.markers[a].free_coords()[j], part.moduli[l]);
    }
  const FgAbelianGroup quotient = FgAbelianGroup::cokernel(pres);
  const CosetCoder coder(quotient);

  const CoordVector start = primary_coords(x.markers, part);
  const CoordVector target = coder(primary_coords(y.markers, part));
  if (coder(start) == target) return true;

  const std::vector<AutGenerator> gens = automorphism_generators(part);
  std::set<CoordVector> seen{coder(start)};
  std::deque<CoordVector> queue{start};
  while (!queue.empty()) {
    const CoordVector rep = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      CoordVector next = rep;
      apply_generator(g, part, next);
      CoordVector key = coder(next);
      if (key == target) return true;
      if (seen.insert(std::move(key)).second) {
        if (seen.size() > kMaxOrbitStates) {
          throw Error(ErrorCode::TooLarge, "automorphism orbit exceeds search budget");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

// Rows: markers, columns: free coordinates. Left GL_r(Z)-equivalence of
// the r x k matrix of free parts is equality of this matrix's column HNF.
IntMatrix free_part_profile(const MarkedGroup& m) {
  const std::size_t r = m.group.free_rank();
  IntMatrix t(m.markers.size(), r);
  for (std::size_t a = 0; a < m.markers.size(); ++a)
    for (std::size_t j = 0; j < r; ++j) t(a, j) = m.markers[a].free_coords()[j];
  return hnf_columns(t);
}

}  // namespace

MarkedGroup::MarkedGroup(FgAbelianGroup g, std::vector<GroupElement> m)
    : group(std::move(g)), markers(std::move(m)) {
  for (const auto& x : markers) {
    if (!x.parent().same_as(group)) {
      throw Error(ErrorCode::ParentMismatch, "marker does not belong to the marked group");
    }
  }
}

bool same_invariants(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return a.free_rank() == b.free_rank() && a.torsion() == b.torsion();
}

bool passes_necessary_filters(const MarkedGroup& x, const MarkedGroup& y) {
  if (x.markers.size() != y.markers.size()) {
    throw Error(ErrorCode::MarkerCountMismatch, std::to_string(x.markers.size()) + " vs " +
                                                    std::to_string(y.markers.size()));
  }
  if (!same_invariants(x.group, y.group)) return false;
  std::vector<Integer> primes;
  if (!x.group.torsion().empty()) {
    // Every prime dividing |T| divides the largest invariant factor.
    Integer d = x.group.torsion().back();
    for (Integer p = 2; p * p <= d; ++p) {
      if (!mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) continue;
      primes.push_back(p);
      while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) d /= p;
    }
    if (d > 1) primes.push_back(d);
  }
  for (std::size_t i = 0; i < x.markers.size(); ++i) {
    if (element_order(x.markers[i]) != element_order(y.markers[i])) return false;
    for (const auto& p : primes)
      if (in_p_multiple(x.markers[i], p) != in_p_multiple(y.markers[i], p)) return false;
  }
  return true;
}

bool marked_isomorphic(const MarkedGroup& x, const MarkedGroup& y,
                       const MarkedIsoOptions& options) {
  if (x.markers.size() != y.markers.size()) {
    throw Error(ErrorCode::MarkerCountMismatch, std::to_string(x.markers.size()) + " vs " +
                                                    std::to_string(y.markers.size()));
  }
  if (!same_invariants(x.group, y.group)) return false;
  if (x.markers.empty()) return true;
  if (options.use_filters && !passes_necessary_filters(x, y)) return false;

  if (x.group.free_rank() > 0 && !(free_part_profile(x) == free_part_profile(y))) return false;

  const Integer t = torsion_order(x.group);
  if (t == 1) return true;
  if (t > options.torsion_bound) {
    throw Error(ErrorCode::TorsionTooLarge, "|T| = " + t.get_str() + " exceeds bound " +
                                                options.torsion_bound.get_str());
  }
  for (Coord p : prime_divisors(t.get_si())) {
    if (!primary_orbit_match(primary_part(x.group.torsion(), p), x, y)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

namespace {

class FiniteTable {
 public:
  explicit FiniteTable(const FgAbelianGroup& g) {
    for (const auto& d : g.torsion()) moduli_.push_back(static_cast<int>(d.get_si()));
    size_ = 1;
    for (int d : moduli_) size_ *= d;
    coords_.resize(size_);
    for (int idx = 0; idx < size_; ++idx) coords_[idx] = decode(idx);
    add_.resize(static_cast<std::size_t>(size_) * size_);
    for (int a = 0; a < size_; ++a)
      for (int b = 0; b < size_; ++b) {
        std::vector<int> c(moduli_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
          c[i] = (coords_[a][i] + coords_[b][i]) % moduli_[i];
        add_[static_cast<std::size_t>(a) * size_ + b] = encode(c);
      }
    order_.resize(size_);
    for (int a = 0; a < size_; ++a) {
      int k = 1, m = a;
      while (m != 0) {
        m = add(m, a);
        ++k;
      }
      order_[a] = k;
    }
  }

  int size() const { return size_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * size_ + b]; }
  int order(int a) const { return order_[a]; }

  int index_of(const GroupElement& x) const {
    std::vector<int> c(moduli_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<int>(x.torsion_coords()[i].get_si());
    return encode(c);
  }

  int unit(std::size_t i) const {
    std::vector<int> c(moduli_.size(), 0);
    c[i] = 1;
    return encode(c);
  }
  std::size_t rank() const { return moduli_.size(); }

 private:
  int encode(const std::vector<int>& c) const {
    int idx = 0;
    for (std::size_t i = 0; i < c.size(); ++i) idx = idx * moduli_[i] + c[i];
    return idx;
  }
  std::vector<int> decode(int idx) const {
    std::vector<int> c(moduli_.size());
    for (std::size_t i = c.size(); i-- > 0;) {
      c[i] = idx % moduli_[i];
      idx /= moduli_[i];
    }
    return c;
  }

  std::vector<int> moduli_;
  int size_ = 1;
  std::vector<std::vector<int>> coords_;
  std::vector<int> add_;
  std::vector<int> order_;
};

class IsoSearch {
 public:
  IsoSearch(const FiniteTable& dom, const FiniteTable& cod) : dom_(dom), cod_(cod) {
    phi_.assign(dom.size(), -1);
    used_.assign(cod.size(), false);
    phi_[0] = 0;
    used_[0] = true;
    span_.push_back(0);
  }

  // Each step is a domain generator with either a forced image or none.
  struct Step {
    int element;
    int forced_image;  // -1 when free
  };

  bool run(const std::vector<Step>& steps, std::size_t at = 0) {
    if (at == steps.size()) return true;
    const Step& s = steps[at];
    if (phi_[s.element] != -1) {
      if (s.forced_image != -1 && phi_[s.element] != s.forced_image) return false;
      return run(steps, at + 1);
    }
    const int ord = dom_.order(s.element);
    auto attempt = [&](int image) {
      std::vector<int> added;
      if (!extend(s.element, image, ord, added)) return false;
      if (run(steps, at + 1)) return true;
      undo(added);
      return false;
    };
    if (s.forced_image != -1) {
      if (cod_.order(s.forced_image) != ord) return false;
      return attempt(s.forced_image);
    }
    for (int image = 0; image < cod_.size(); ++image) {
      if (used_[image] || cod_.order(image) != ord) continue;
      if (attempt(image)) return true;
    }
    return false;
  }

 private:
  bool extend(int h, int a, int ord, std::vector<int>& added) {
    const std::size_t base = span_.size();
    int kh = h, ka = a;
    for (int k = 1; k < ord; ++k) {
      for (std::size_t i = 0; i < base; ++i) {
        if (++steps_ > kMaxBruteforceSteps) {
          throw Error(ErrorCode::TooLarge, "exhaustive isomorphism search exceeded its budget");
        }
        const int s = span_[i];
        const int e = dom_.add(s, kh);
        const int img = cod_.add(phi_[s], ka);
        if (phi_[e] == -1) {
          if (used_[img]) {
            undo(added);
            return false;
          }
          phi_[e] = img;
          used_[img] = true;
          added.push_back(e);
          span_.push_back(e);
        } else if (phi_[e] != img) {
          undo(added);
          return false;
        }
      }
      kh = dom_.add(kh, h);
      ka = cod_.add(ka, a);
    }
    return true;
  }

  void undo(std::vector<int>& added) {
    for (int e : added) {
      used_[phi_[e]] = false;
      phi_[e] = -1;
    }
    span_.resize(span_.size() - added.size());
    added.clear();
  }

  const FiniteTable& dom_;
  const FiniteTable& cod_;
  std::vector<int> phi_;
  std::vector<bool> used_;
  std::vector<int> span_;
  std::uint64_t steps_ = 0;
};

}  // namespace

bool marked_iso_bruteforce(const MarkedGroup& x, const MarkedGroup& y) {
  if (x.markers.size() != y.markers.size()) {
    throw Error(ErrorCode::MarkerCountMismatch, std::to_string(x.markers.size()) + " vs " +
                                                    std::to_string(y.markers.size()));
  }
  for (const auto* m : {&x, &y}) {
    if (!m->group.is_finite()) throw Error(ErrorCode::NotFinite, m->group.describe());
    if (*m->group.order() > 256) throw Error(ErrorCode::TooLarge, m->group.describe());
  }
  if (*x.group.order() != *y.group.order()) return false;

  const FiniteTable dom(x.group), cod(y.group);
  std::vector<IsoSearch::Step> steps;
  for (std::size_t i = 0; i < x.markers.size(); ++i)
    steps.push_back({dom.index_of(x.markers[i]), cod.index_of(y.markers[i])});
  // Largest cyclic factors first: relations with the markers surface early.
  for (std::size_t i = dom.rank(); i-- > 0;) steps.push_back({dom.unit(i), -1});

  IsoSearch search(dom, cod);
  return search.run(steps);
}

// ---------------------------------------------------------------------------

MarkedGroup weak_marked_pair(const ZeroOneMatrix& a) {
  return MarkedGroup(extw(a), {toeplitz_weak(a)});
}

MarkedGroup strong_marked_triple(const ZeroOneMatrix& a) {
  return MarkedGroup(exts(a), {toeplitz_strong(a), iota_hat(a, 1)});
}

bool ck_isomorphic(const ZeroOneMatrix& a, const ZeroOneMatrix& b,
                   const MarkedIsoOptions& options) {
  return marked_isomorphic(weak_marked_pair(a.transpose()), weak_marked_pair(b.transpose()),
                           options);
}

}  // namespace ckinv

#include "ckinv/fgab.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "ckinv/error.hpp"

namespace ckinv {

struct FgAbelianGroup::State {
  IntMatrix presentation;
  IntMatrix u;
  IntMatrix u_inv;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::vector<std::size_t> torsion_rows;
  std::vector<std::size_t> free_rows;
};

FgAbelianGroup::FgAbelianGroup(std::shared_ptr<const State> state)
    : state_(std::move(state)) {}

FgAbelianGroup FgAbelianGroup::cokernel(const IntMatrix& presentation) {
  const SmithDecomposition s = snf(presentation);
  const std::size_t n = presentation.rows();
  const std::size_t k = std::min(n, presentation.cols());
  auto st = std::make_shared<State>(State{presentation, s.u, inverse_unimodular(s.u), 0, {}, {}, {}});
  for (std::size_t i = 0; i < n; ++i) {
    if (i < k && s.d(i, i) != 0) {
      if (s.d(i, i) == 1) continue;
      st->torsion.push_back(s.d(i, i));
      st->torsion_rows.push_back(i);
    } else {
      st->free_rows.push_back(i);
    }
  }
  st->free_rank = st->free_rows.size();
  return FgAbelianGroup(std::move(st));
}

FgAbelianGroup FgAbelianGroup::from_invariants(std::size_t free_rank,
                                               const std::vector<Integer>& torsion) {
  std::vector<Integer> factors;
  for (const auto& d : torsion) {
    if (d <= 0) throw std::invalid_argument("invariant factors must be positive");
    if (d == 1) continue;
    if (!factors.empty() && !mpz_divisible_p(d.get_mpz_t(), factors.back().get_mpz_t())) {
      throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
    factors.push_back(d);
  }
  const std::size_t n = factors.size() + free_rank;
  IntMatrix pres(n, n);
  for (std::size_t i = 0; i < factors.size(); ++i) pres(i, i) = factors[i];
  auto st = std::make_shared<State>(
      State{pres, IntMatrix::identity(n), IntMatrix::identity(n), free_rank, factors, {}, {}});
  for (std::size_t i = 0; i < factors.size(); ++i) st->torsion_rows.push_back(i);
  for (std::size_t i = factors.size(); i < n; ++i) st->free_rows.push_back(i);
  return FgAbelianGroup(std::move(st));
}

std::size_t FgAbelianGroup::ambient_dim() const { return state_->presentation.rows(); }
const IntMatrix& FgAbelianGroup::presentation() const { return state_->presentation; }
std::size_t FgAbelianGroup::free_rank() const { return state_->free_rank; }
const std::vector<Integer>& FgAbelianGroup::torsion() const { return state_->torsion; }
const IntMatrix& FgAbelianGroup::coord_transform() const { return state_->u; }
const std::vector<std::size_t>& FgAbelianGroup::torsion_rows() const {
  return state_->torsion_rows;
}
const std::vector<std::size_t>& FgAbelianGroup::free_rows() const { return state_->free_rows; }

std::optional<Integer> FgAbelianGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer o = 1;
  for (const auto& d : state_->torsion) o *= d;
  return o;
}

GroupElement FgAbelianGroup::zero() const {
  return GroupElement(*this, std::vector<Integer>(state_->torsion.size()),
                      std::vector<Integer>(state_->free_rank));
}

GroupElement FgAbelianGroup::class_of(std::span<const Integer> v) const {
  if (v.size() != ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in Z^" +
                    std::to_string(ambient_dim()));
  }
  const IntMatrix& u = state_->u;
  auto row_dot = [&](std::size_t row) {
    Integer acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += u(row, j) * v[j];
    return acc;
  };
  std::vector<Integer> tors(state_->torsion.size());
  for (std::size_t i = 0; i < tors.size(); ++i) tors[i] = row_dot(state_->torsion_rows[i]);
  std::vector<Integer> free(state_->free_rank);
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = row_dot(state_->free_rows[i]);
  return element(std::move(tors), std::move(free));
}

GroupElement FgAbelianGroup::element(std::vector<Integer> torsion_coords,
                                     std::vector<Integer> free_coords) const {
  if (torsion_coords.size() != state_->torsion.size() ||
      free_coords.size() != state_->free_rank) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate count does not match " + describe());
  }
  for (std::size_t i = 0; i < torsion_coords.size(); ++i) {
    mpz_fdiv_r(torsion_coords[i].get_mpz_t(), torsion_coords[i].get_mpz_t(),
               state_->torsion[i].get_mpz_t());
  }
  return GroupElement(*this, std::move(torsion_coords), std::move(free_coords));
}

IntVector FgAbelianGroup::representative(const GroupElement& x) const {
  if (!same_as(x.parent())) throw Error(ErrorCode::ParentMismatch, "representative");
  IntVector w(ambient_dim());
  for (std::size_t i = 0; i < state_->torsion_rows.size(); ++i)
    w[state_->torsion_rows[i]] = x.torsion_coords()[i];
  for (std::size_t i = 0; i < state_->free_rows.size(); ++i)
    w[state_->free_rows[i]] = x.free_coords()[i];
  return state_->u_inv * std::span<const Integer>(w);
}

bool FgAbelianGroup::same_as(const FgAbelianGroup& other) const {
  if (state_ == other.state_) return true;
  return state_->presentation == other.state_->presentation && state_->u == other.state_->u;
}

std::string FgAbelianGroup::describe() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  for (std::size_t i = 0; i < state_->free_rank; ++i) {
    sep();
    os << 'Z';
  }
  for (const auto& d : state_->torsion) {
    sep();
    os << "Z/" << d;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------

GroupElement::GroupElement(FgAbelianGroup parent, std::vector<Integer> torsion,
                           std::vector<Integer> free)
    : parent_(std::move(parent)), torsion_(std::move(torsion)), free_(std::move(free)) {}

bool GroupElement::is_zero() const {
  for (const auto& c : torsion_)
    if (c != 0) return false;
  for (const auto& c : free_)
    if (c != 0) return false;
  return true;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (!a.parent_.same_as(b.parent_)) {
    throw Error(ErrorCode::ParentMismatch, "comparing elements of different groups");
  }
  return a.torsion_ == b.torsion_ && a.free_ == b.free_;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& c : free_) {
    os << (first ? "" : ", ") << c;
    first = false;
  }
  for (const auto& c : torsion_) {
    os << (first ? "" : ", ") << c;
    first = false;
  }
  os << ')';
  return os.str();
}

static void require_same_parent(const GroupElement& a, const GroupElement& b) {
  if (!a.parent().same_as(b.parent())) {
    throw Error(ErrorCode::ParentMismatch, "group operation across different groups");
  }
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_parent(a, b);
  std::vector<Integer> t = a.torsion_coords(), f = a.free_coords();
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += b.torsion_coords()[i];
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += b.free_coords()[i];
  return a.parent().element(std::move(t), std::move(f));
}

GroupElement negate(const GroupElement& a) { return scale(a, -1); }

GroupElement scale(const GroupElement& a, const Integer& k) {
  std::vector<Integer> t = a.torsion_coords(), f = a.free_coords();
  for (auto& c : t) c *= k;
  for (auto& c : f) c *= k;
  return a.parent().element(std::move(t), std::move(f));
}

std::optional<Integer> element_order(const GroupElement& a) {
  for (const auto& c : a.free_coords())
    if (c != 0) return std::nullopt;
  Integer order = 1;
  const auto& d = a.parent().torsion();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer g = gcd(a.torsion_coords()[i], d[i]);
    Integer oi = d[i] / g;
    order = lcm(order, oi);
  }
  return order;
}

}  // namespace ckinv

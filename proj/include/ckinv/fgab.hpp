#pragma once

// Finitely generated abelian groups presented as cokernels Z^N / M Z^k.
//
// The canonical decomposition is Z^r + Z/d_1 + ... + Z/d_t with
// 1 < d_1 | d_2 | ... | d_t. Element coordinates are read off through the
// left transform U of the presentation's Smith form: torsion coordinate i is
// (U v)_p mod d_i at the position p of d_i, free coordinates are the rows of
// U v sitting over zero invariant factors. U is not unique, so coordinates
// are only comparable between elements of the same group object.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ckinv/exactmat.hpp"

namespace ckinv {

class GroupElement;

class FgAbelianGroup {
 public:
  static FgAbelianGroup cokernel(const IntMatrix& presentation);

  /// Z^free_rank + Z/torsion[0] + ... presented by a diagonal matrix, so
  /// coordinates coincide with the textbook ones. Entries equal to 1 are
  /// dropped; every entry must be positive.
  static FgAbelianGroup from_invariants(std::size_t free_rank,
                                        const std::vector<Integer>& torsion);

  std::size_t ambient_dim() const;
  const IntMatrix& presentation() const;
  std::size_t free_rank() const;
  const std::vector<Integer>& torsion() const;
  const IntMatrix& coord_transform() const;
  /// Rows of coord_transform() that produce the torsion and free
  /// coordinates, in coordinate order.
  const std::vector<std::size_t>& torsion_rows() const;
  const std::vector<std::size_t>& free_rows() const;

  bool is_finite() const { return free_rank() == 0; }
  /// Group order; nullopt when the group is infinite.
  std::optional<Integer> order() const;

  GroupElement zero() const;
  GroupElement class_of(std::span<const Integer> v) const;
  /// Element with the given canonical coordinates; torsion entries are
  /// reduced into [0, d_i).
  GroupElement element(std::vector<Integer> torsion_coords,
                       std::vector<Integer> free_coords) const;
  /// A vector of Z^N whose class is x.
  IntVector representative(const GroupElement& x) const;

  /// Same presentation and same coordinate transform, hence identical
  /// coordinate systems.
  bool same_as(const FgAbelianGroup& other) const;

  /// "Z + Z/2 + Z/4", "0" for the trivial group.
  std::string describe() const;

 private:
  struct State;
  explicit FgAbelianGroup(std::shared_ptr<const State> state);

  std::shared_ptr<const State> state_;
};

class GroupElement {
 public:
  const FgAbelianGroup& parent() const { return parent_; }
  const std::vector<Integer>& torsion_coords() const { return torsion_; }
  const std::vector<Integer>& free_coords() const { return free_; }
  bool is_zero() const;

  /// Coordinate equality; throws ParentMismatch across groups.
  friend bool operator==(const GroupElement& a, const GroupElement& b);

  std::string to_string() const;

 private:
  friend class FgAbelianGroup;
  GroupElement(FgAbelianGroup parent, std::vector<Integer> torsion,
               std::vector<Integer> free);

  FgAbelianGroup parent_;
  std::vector<Integer> torsion_;
  std::vector<Integer> free_;
};

GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupElement& a);
GroupElement scale(const GroupElement& a, const Integer& k);

/// Least k > 0 with k a = 0; nullopt for infinite order.
std::optional<Integer> element_order(const GroupElement& a);

}  // namespace ckinv

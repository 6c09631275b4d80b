#pragma once

// Isomorphism of finitely generated abelian groups carrying an ordered tuple
// of marked elements: (G, x_1..x_k) ~ (H, y_1..y_k) iff some group
// isomorphism phi : G -> H has phi(x_i) = y_i for every i.

#include <vector>

#include "ckinv/ckext.hpp"
#include "ckinv/fgab.hpp"

namespace ckinv {

struct MarkedGroup {
  MarkedGroup(FgAbelianGroup group, std::vector<GroupElement> markers);

  FgAbelianGroup group;
  std::vector<GroupElement> markers;
};

struct MarkedIsoOptions {
  /// Largest torsion subgroup order for which the automorphism search runs.
  Integer torsion_bound = 512;
  /// Reject early on marker orders and on membership in pG.
  bool use_filters = true;
};

/// Same free rank and invariant factors.
bool same_invariants(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Necessary conditions only: equal invariants and, marker by marker, equal
/// order and equal membership in pG for every prime p dividing |T|.
bool passes_necessary_filters(const MarkedGroup& x, const MarkedGroup& y);

/// Decision procedure. The free parts are compared by the Hermite form of
/// their GL_r(Z)-orbit; the torsion parts by a breadth-first orbit search
/// of Aut(T_p), prime by prime, on T_p^k modulo the shifts reachable
/// through Hom(Z^r, T_p).
///
/// Throws MarkerCountMismatch, or TorsionTooLarge when the torsion order
/// exceeds options.torsion_bound and a search would be needed.
bool marked_isomorphic(const MarkedGroup& x, const MarkedGroup& y,
                       const MarkedIsoOptions& options = {});

/// Exhaustive oracle: grows a candidate isomorphism generator by generator
/// and checks well-definedness and injectivity on every element. Finite
/// groups of order <= 256 only (NotFinite, TooLarge).
bool marked_iso_bruteforce(const MarkedGroup& x, const MarkedGroup& y);

/// (Ext_w, [T_A]_w)
MarkedGroup weak_marked_pair(const ZeroOneMatrix& a);
/// (Ext_s, [T_A]_s, iota(1))
MarkedGroup strong_marked_triple(const ZeroOneMatrix& a);

/// O_A ~ O_B iff (Ext_w(A^t), [T_{A^t}]_w) ~ (Ext_w(B^t), [T_{B^t}]_w).
bool ck_isomorphic(const ZeroOneMatrix& a, const ZeroOneMatrix& b,
                   const MarkedIsoOptions& options = {});

}  // namespace ckinv

#pragma once

// Reference worked examples: Cuntz algebras O_2..O_5, the Fibonacci matrix
// and six 3x3 matrices, each with its stated weak pair (Ext_w, [T]_w) and
// strong triple (Ext_s, [T]_s, iota(1)).

#include <string>
#include <vector>

#include "ckinv/exactmat.hpp"
#include "ckinv/markediso.hpp"

namespace ckinv {

struct MarkerCoords {
  std::vector<long> free;
  std::vector<long> torsion;
};

struct MarkedGroupData {
  std::size_t free_rank = 0;
  std::vector<long> torsion;
  std::vector<MarkerCoords> markers;

  MarkedGroup build() const;
};

struct CatalogEntry {
  std::string name;
  IntMatrix matrix;
  MarkedGroupData weak;
  MarkedGroupData strong;
  // Stated values that no choice of coordinates reproduces from the
  // defining formulas; kept verbatim and reported as differences.
  bool weak_differs = false;
  bool strong_differs = false;
};

/// All-ones N x N matrix.
IntMatrix all_ones(std::size_t n);

const std::vector<CatalogEntry>& example_catalog();
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace ckinv

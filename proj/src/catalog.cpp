#include "ckinv/catalog.hpp"

#include <stdexcept>

namespace ckinv {

MarkedGroup MarkedGroupData::build() const {
  std::vector<Integer> factors(torsion.begin(), torsion.end());
  const FgAbelianGroup g = FgAbelianGroup::from_invariants(free_rank, factors);
  std::vector<GroupElement> elems;
  for (const auto& m : markers) {
    std::vector<Integer> t;
    // Factors equal to 1 were dropped from the group; drop their coordinates.
    for (std::size_t i = 0; i < torsion.size(); ++i)
      if (torsion[i] != 1) t.emplace_back(m.torsion[i]);
    elems.push_back(g.element(std::move(t), std::vector<Integer>(m.free.begin(), m.free.end())));
  }
  return MarkedGroup(g, std::move(elems));
}

IntMatrix all_ones(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 1;
  return m;
}

static std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  for (long n = 2; n <= 5; ++n) {
    c.push_back({"O_" + std::to_string(n),
                 all_ones(n),
                 {0, {n - 1}, {{{}, {-1}}}},
                 {1, {}, {{{-1}, {}}, {{1 - n}, {}}}}});
  }
  c.push_back({"F", IntMatrix{{1, 1}, {1, 0}}, {0, {}, {{{}, {}}}},
               {1, {}, {{{-2}, {}}, {{-1}, {}}}}});
  c.push_back({"A_1", IntMatrix{{0, 0, 1}, {1, 0, 1}, {1, 1, 1}}, {0, {3}, {{{}, {2}}}},
               {1, {}, {{{4}, {}}, {{3}, {}}}}});
  c.push_back({"A_2", IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 1}}, {0, {4}, {{{}, {2}}}},
               {1, {2}, {{{-2}, {0}}, {{2}, {1}}}}, false, true});
  c.push_back({"A_3", IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {0, {2, 2}, {{{}, {0, 0}}}},
               {1, {2, 2}, {{{-2}, {0, 0}}, {{1}, {1, 1}}}}, false, true});
  c.push_back({"A_4", IntMatrix{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, {1, {}, {{{-1}, {}}}},
               {2, {}, {{{-2, -1}, {}}, {{1, 0}, {}}}}, true, true});
  c.push_back({"A_5", IntMatrix{{1, 1, 1}, {1, 1, 1}, {1, 0, 0}}, {0, {2}, {{{}, {0}}}},
               {1, {}, {{{-2}, {}}, {{-2}, {}}}}});
  c.push_back({"A_6", IntMatrix{{1, 1, 1}, {1, 1, 0}, {1, 1, 0}}, {0, {2}, {{{}, {1}}}},
               {1, {2}, {{{-1}, {0}}, {{-1}, {-1}}}}});
  return c;
}

const std::vector<CatalogEntry>& example_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : example_catalog())
    if (e.name == name) return e;
  throw std::out_of_range("no catalog entry " + name);
}

}  // namespace ckinv

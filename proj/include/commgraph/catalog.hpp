#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/families.hpp"

namespace commgraph {

/// One constructible group: a family instance or a named special group.
struct CatalogEntry {
  std::optional<FamilySpec> spec;  // empty for special groups
  std::string special;             // special-group name when spec is empty
  std::uint64_t order = 0;

  std::string family() const;  // family name, or "special"
  std::string params() const;  // "m=4", or the special-group name
  std::string label() const;
  FiniteGroup build(const BuildOptions& opts = {}) const;
};

/// Every family instance and special group of order <= max_order, sorted by
/// (order, family name, parameters). Throws InvalidParameter if max_order < 6.
std::vector<CatalogEntry> catalog(std::uint64_t max_order);

}  // namespace commgraph

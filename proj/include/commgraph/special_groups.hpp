#pragma once

// Named small groups that do not belong to a parametrized family.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph {

struct SpecialGroup {
  std::string name;  // display label, e.g. "A_4", "D_8*Z_4"
  std::uint32_t order;
  std::function<FiniteGroup()> build;
};

/// Fixed list, sorted by (order, name).
const std::vector<SpecialGroup>& special_group_list();
/// Throws InvalidParameter for unknown names.
FiniteGroup build_special(const std::string& name);
std::vector<FiniteGroup> builtin_special_groups();

/// Permutations of {0..k-1} (even ones only if `even`) in lexicographic order,
/// product (s t)(x) = s(t(x)).
FiniteGroup permutation_group(unsigned k, bool even, std::string label);

}  // namespace commgraph

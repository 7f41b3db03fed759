#pragma once

// Finitely presented groups and Todd-Coxeter enumeration over the trivial
// subgroup.

#include <cstdint>
#include <string>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph {

/// Letters are +(g+1) for generator g and -(g+1) for its inverse.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Parses relators such as "a^5", "b^-1 a b a^-2" or "[a,c]" (= a^-1 c^-1 a c).
  /// Generator names are matched longest-first; whitespace is ignored.
  static Presentation parse(std::vector<std::string> generators, const std::vector<std::string>& relators);

  /// Throws InvalidParameter when a relator is empty or references an unknown generator.
  void check() const;
};

/// Enumerates the cosets of the trivial subgroup. Elements are numbered in
/// breadth-first order from the identity, scanning columns a, a^-1, b, b^-1,
/// ..., and the result is the regular representation. Throws
/// EnumerationOverflow once more than `max_cosets` cosets have been defined.
FiniteGroup coset_enumerate(const Presentation& pres, std::uint32_t max_cosets, std::string label = "");

}  // namespace commgraph

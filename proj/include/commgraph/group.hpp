#pragma once

// Finite groups given by a multiplication table, plus the queries used
// downstream: center, centralizers, commutativity degree, central quotient.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/numeric.hpp"

namespace commgraph {

using Element = std::uint32_t;

/// Subset of {0, ..., n-1} stored as a bitmask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::uint32_t universe);

  std::uint32_t universe() const { return universe_; }
  bool contains(Element x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Element x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  std::uint32_t size() const;
  std::vector<Element> elements() const;
  bool is_subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::uint32_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class FiniteGroup {
 public:
  /// Checks shape, entry range, the identity row and column, and that every
  /// element has a two-sided inverse. Full axiom screening is validate_group.
  FiniteGroup(std::uint32_t order, std::vector<Element> table, std::string label,
              std::vector<std::string> element_names = {});

  std::uint32_t order() const { return order_; }
  static constexpr Element identity() { return 0; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::vector<Element>& table() const { return table_; }

  /// Bounds-checked product; throws std::out_of_range.
  Element multiply(Element i, Element j) const;
  Element mul(Element i, Element j) const { return table_[std::size_t{i} * order_ + j]; }
  Element inverse(Element i) const { return inverse_[i]; }

 private:
  std::uint32_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string label_;
  std::vector<std::string> names_;
};

inline constexpr std::uint32_t kDefaultAssociativityCap = 512;

/// Throws GroupAxiomError naming the first violated axiom ("range",
/// "latin-square", "identity", "inverse", "associativity"). Associativity is
/// exhaustive up to `assoc_cap` and sampled (10 n^2 triples) above it.
void validate_group(std::uint32_t order, const std::vector<Element>& table,
                    std::uint32_t assoc_cap = kDefaultAssociativityCap);
void validate_group(const FiniteGroup& g, std::uint32_t assoc_cap = kDefaultAssociativityCap);

bool is_abelian(const FiniteGroup& g);
ElementSet center(const FiniteGroup& g);
ElementSet centralizer(const FiniteGroup& g, Element x);
std::uint32_t element_order(const FiniteGroup& g, Element x);
std::uint32_t count_distinct_centralizers(const FiniteGroup& g);
Rational commutativity_degree(const FiniteGroup& g);
std::uint32_t conjugacy_class_count(const FiniteGroup& g);

/// G/Z(G) on minimum-index coset representatives, ordered by representative.
FiniteGroup central_quotient(const FiniteGroup& g);

/// m >= 3 with G isomorphic to D_2m, if any.
std::optional<std::uint32_t> recognize_dihedral(const FiniteGroup& g);
/// p with G isomorphic to Z_p x Z_p, if any.
std::optional<std::uint32_t> recognize_elementary_abelian_p2(const FiniteGroup& g);

}  // namespace commgraph

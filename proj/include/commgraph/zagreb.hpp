#pragma once

// First and second Zagreb indices by three routes, clique decompositions,
// and the exact Hansen-Vukicevic comparison M2/|E| >= M1/|V|.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/graph.hpp"
#include "commgraph/numeric.hpp"

namespace commgraph {

struct ZagrebReport {
  BigInt m1, m2, vertices, edges;
  friend bool operator==(const ZagrebReport&, const ZagrebReport&) = default;
};

struct CliquePart {
  BigInt copies;  // l
  BigInt size;    // m
  friend bool operator==(const CliquePart&, const CliquePart&) = default;
};

/// Parts have distinct sizes and are sorted by size.
struct CliqueDecomposition {
  std::vector<CliquePart> parts;

  /// Merges equal sizes, drops zero-copy parts, sorts. Throws InvalidParameter
  /// for negative values or size 0 with copies > 0.
  static CliqueDecomposition normalized(std::vector<CliquePart> parts);
  BigInt vertex_total() const;
  BigInt edge_total() const;
  std::string to_string() const;  // "K_3 + 4K_2", largest clique first
  friend bool operator==(const CliqueDecomposition&, const CliqueDecomposition&) = default;
};

enum class VerdictStatus { HoldsStrict, HoldsWithEquality, Fails, Undefined };

std::string to_string(VerdictStatus s);

struct ConjectureVerdict {
  VerdictStatus status = VerdictStatus::Undefined;
  BigInt gap_numerator;    // M2 |V| - M1 |E|
  BigInt gap_denominator;  // |E| |V|, zero when undefined

  /// Lowest-terms "num/den", or "undefined".
  std::string gap_string() const;
  friend bool operator==(const ConjectureVerdict&, const ConjectureVerdict&) = default;
};

ZagrebReport zagreb_direct(const SimpleGraph& g);
/// Direct sums over the non-edges of g, without materializing the complement.
ZagrebReport zagreb_direct_complement(const SimpleGraph& g);
ZagrebReport zagreb_from_decomposition(const CliqueDecomposition& d);
/// Complement formulas. Throws std::logic_error if the M2 numerator is odd,
/// which only happens for inconsistent input.
ZagrebReport zagreb_complement(const ZagrebReport& base);

/// Present iff every connected component is complete.
std::optional<CliqueDecomposition> extract_clique_decomposition(const SimpleGraph& g);

ConjectureVerdict conjecture_verdict(const ZagrebReport& r);

struct GroupReport {
  std::uint32_t order = 0;
  std::uint32_t center_size = 0;
  ZagrebReport commuting, non_commuting;
  ConjectureVerdict commuting_verdict, non_commuting_verdict;
  std::optional<CliqueDecomposition> decomposition;  // of the commuting graph
};

/// Computes both graphs' reports directly and re-derives the non-commuting one
/// by the complement formulas and (when available) the commuting one from its
/// clique decomposition. Throws RouteMismatch if any two routes disagree and
/// AbelianGroupError for abelian input.
GroupReport group_report(const FiniteGroup& g);

}  // namespace commgraph

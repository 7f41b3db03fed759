#pragma once

// Simple undirected graphs on dense bit rows, and the commuting /
// non-commuting graphs of a finite group.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph {

class SimpleGraph {
 public:
  explicit SimpleGraph(std::uint32_t vertices = 0);

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return edges_; }
  std::uint32_t degree(std::uint32_t v) const { return deg_[v]; }
  const std::vector<std::uint32_t>& degrees() const { return deg_; }
  bool has_edge(std::uint32_t u, std::uint32_t v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }

  /// Returns false when the edge already exists. Throws std::invalid_argument
  /// for loops or out-of-range vertices.
  bool add_edge(std::uint32_t u, std::uint32_t v);

  std::size_t words_per_row() const { return words_; }
  const std::uint64_t* row(std::uint32_t v) const { return bits_.data() + std::size_t{v} * words_; }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  std::uint32_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> deg_;
  std::uint64_t edges_ = 0;
};

SimpleGraph complement(const SimpleGraph& g);

/// Vertices are the non-central elements in ascending index order. Throws
/// AbelianGroupError for abelian input.
SimpleGraph commuting_graph(const FiniteGroup& g);
SimpleGraph non_commuting_graph(const FiniteGroup& g);
/// Element index of each vertex of the (non-)commuting graph.
std::vector<Element> noncentral_elements(const FiniteGroup& g);

/// Edge-list format: "n m", then m lines "u v" with 0 <= u < v < n.
/// Throws ParseError on malformed input or duplicate edges.
SimpleGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const SimpleGraph& g);

}  // namespace commgraph

#include "commgraph/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "commgraph/errors.hpp"

namespace commgraph {

SimpleGraph::SimpleGraph(std::uint32_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), bits_(std::size_t{vertices} * words_, 0), deg_(vertices, 0) {}

bool SimpleGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (has_edge(u, v)) return false;
  bits_[std::size_t{u} * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[std::size_t{v} * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++deg_[u];
  ++deg_[v];
  ++edges_;
  return true;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.vertex_count());
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
    for (std::uint32_t v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<Element> noncentral_elements(const FiniteGroup& g) {
  const ElementSet z = center(g);
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (!z.contains(x)) out.push_back(x);
  return out;
}

SimpleGraph commuting_graph(const FiniteGroup& g) {
  const auto verts = noncentral_elements(g);
  if (verts.empty()) throw AbelianGroupError();
  const auto n = static_cast<std::uint32_t>(verts.size());
  SimpleGraph out(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (g.mul(verts[i], verts[j]) == g.mul(verts[j], verts[i])) out.add_edge(i, j);
  return out;
}

SimpleGraph non_commuting_graph(const FiniteGroup& g) { return complement(commuting_graph(g)); }

SimpleGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::istringstream& ss) {
    while (std::getline(in, line)) {
      ++lineno;
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      ss = std::istringstream(line);
      return true;
    }
    return false;
  };
  auto read_pair = [&](long long& a, long long& b) {
    std::istringstream ss;
    if (!next_line(ss)) return false;
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra)) throw ParseError("line " + std::to_string(lineno) + ": expected two integers");
    return true;
  };
  long long n = 0, m = 0;
  if (!read_pair(n, m)) throw ParseError("empty edge-list file");
  if (n < 0 || m < 0 || n > (1 << 20)) throw ParseError("line " + std::to_string(lineno) + ": bad header");
  SimpleGraph g(static_cast<std::uint32_t>(n));
  for (long long k = 0; k < m; ++k) {
    long long u = 0, v = 0;
    if (!read_pair(u, v)) throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    if (!(0 <= u && u < v && v < n))
      throw ParseError("line " + std::to_string(lineno) + ": need 0 <= u < v < n");
    if (!g.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)))
      throw ParseError("line " + std::to_string(lineno) + ": duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  long long extra_u = 0, extra_v = 0;
  if (read_pair(extra_u, extra_v)) throw ParseError("line " + std::to_string(lineno) + ": more edges than declared");
  return g;
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
    for (std::uint32_t v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
}

}  // namespace commgraph

#include "commgraph/zagreb.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "commgraph/errors.hpp"

namespace commgraph {
namespace {

using i128 = __int128;

BigInt widen(i128 v) {
  // cpp_int has no __int128 constructor on every platform; split into halves.
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

std::string report_string(const ZagrebReport& r) {
  return "(M1=" + r.m1.str() + ", M2=" + r.m2.str() + ", V=" + r.vertices.str() + ", E=" + r.edges.str() + ")";
}

}  // namespace

CliqueDecomposition CliqueDecomposition::normalized(std::vector<CliquePart> parts) {
  std::map<BigInt, BigInt> by_size;
  for (const auto& p : parts) {
    if (p.copies < 0 || p.size < 0) throw InvalidParameter("clique parts must be nonnegative");
    if (p.copies == 0) continue;
    if (p.size == 0) throw InvalidParameter("clique size must be >= 1");
    by_size[p.size] += p.copies;
  }
  CliqueDecomposition d;
  for (const auto& [size, copies] : by_size) d.parts.push_back({copies, size});
  return d;
}

BigInt CliqueDecomposition::vertex_total() const {
  BigInt v = 0;
  for (const auto& p : parts) v += p.copies * p.size;
  return v;
}

BigInt CliqueDecomposition::edge_total() const {
  BigInt e = 0;
  for (const auto& p : parts) e += p.copies * p.size * (p.size - 1) / 2;
  return e;
}

std::string CliqueDecomposition::to_string() const {
  std::string out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->copies != 1) out += it->copies.str();
    out += "K_" + it->size.str();
  }
  return out.empty() ? "empty" : out;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::HoldsStrict: return "HoldsStrict";
    case VerdictStatus::HoldsWithEquality: return "HoldsWithEquality";
    case VerdictStatus::Fails: return "Fails";
    case VerdictStatus::Undefined: return "Undefined";
  }
  return "?";
}

std::string ConjectureVerdict::gap_string() const {
  if (status == VerdictStatus::Undefined) return "undefined";
  return fraction_string(gap_numerator, gap_denominator);
}

ZagrebReport zagreb_direct(const SimpleGraph& g) {
  const std::uint32_t n = g.vertex_count();
  const auto& deg = g.degrees();
  i128 m1 = 0, twice_m2 = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    m1 += i128{deg[u]} * deg[u];
    const std::uint64_t* row = g.row(u);
    std::uint64_t nbr_sum = 0;
    for (std::size_t w = 0; w < g.words_per_row(); ++w)
      for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) nbr_sum += deg[w * 64 + std::countr_zero(bits)];
    twice_m2 += i128{deg[u]} * nbr_sum;
  }
  return {widen(m1), widen(twice_m2 / 2), BigInt(n), BigInt(g.edge_count())};
}

ZagrebReport zagreb_direct_complement(const SimpleGraph& g) {
  const std::uint32_t n = g.vertex_count();
  std::vector<std::uint32_t> cdeg(n);
  for (std::uint32_t u = 0; u < n; ++u) cdeg[u] = n - 1 - g.degree(u);
  i128 m1 = 0, twice_m2 = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    m1 += i128{cdeg[u]} * cdeg[u];
    const std::uint64_t* row = g.row(u);
    std::uint64_t nbr_sum = 0;
    for (std::size_t w = 0; w < g.words_per_row(); ++w) {
      std::uint64_t bits = ~row[w];
      const std::size_t base = w * 64;
      if (base + 64 > n) bits &= (std::uint64_t{1} << (n - base)) - 1;
      if (u / 64 == w) bits &= ~(std::uint64_t{1} << (u & 63));
      for (; bits; bits &= bits - 1) nbr_sum += cdeg[base + std::countr_zero(bits)];
    }
    twice_m2 += i128{cdeg[u]} * nbr_sum;
  }
  const std::uint64_t nn = n;
  return {widen(m1), widen(twice_m2 / 2), BigInt(n), BigInt(nn * (nn - (nn ? 1 : 0)) / 2 - g.edge_count())};
}

ZagrebReport zagreb_from_decomposition(const CliqueDecomposition& d) {
  ZagrebReport r{0, 0, 0, 0};
  for (const auto& p : d.parts) {
    const BigInt& l = p.copies;
    const BigInt& m = p.size;
    r.m1 += l * m * (m - 1) * (m - 1);
    r.m2 += l * m * (m - 1) * (m - 1) * (m - 1) / 2;  // m (m-1) is even
    r.vertices += l * m;
    r.edges += l * m * (m - 1) / 2;
  }
  return r;
}

ZagrebReport zagreb_complement(const ZagrebReport& b) {
  const BigInt& v = b.vertices;
  const BigInt& e = b.edges;
  const BigInt v1 = v - 1;
  ZagrebReport r;
  r.vertices = v;
  r.edges = v * v1 / 2 - e;
  r.m1 = v * v1 * v1 - 4 * e * v1 + b.m1;
  // M2' = V(V-1)^3/2 + 2E^2 - 3E(V-1)^2 + (V - 3/2) M1 - M2, over denominator 2.
  const BigInt twice = v * v1 * v1 * v1 + 4 * e * e - 6 * e * v1 * v1 + (2 * v - 3) * b.m1 - 2 * b.m2;
  if (twice % 2 != 0) throw std::logic_error("complement M2 numerator is odd; base report is inconsistent");
  r.m2 = twice / 2;
  return r;
}

std::optional<CliqueDecomposition> extract_clique_decomposition(const SimpleGraph& g) {
  const std::uint32_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<CliquePart> parts;
  std::vector<std::uint32_t> comp;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    comp.assign(1, s);
    seen[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      const std::uint64_t* row = g.row(comp[h]);
      for (std::size_t w = 0; w < g.words_per_row(); ++w)
        for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
          const auto v = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
          if (!seen[v]) {
            seen[v] = true;
            comp.push_back(v);
          }
        }
    }
    const auto k = static_cast<std::uint32_t>(comp.size());
    for (std::uint32_t v : comp)
      if (g.degree(v) != k - 1) return std::nullopt;  // degree k-1 inside a k-vertex component means complete
    parts.push_back({1, k});
  }
  return CliqueDecomposition::normalized(std::move(parts));
}

ConjectureVerdict conjecture_verdict(const ZagrebReport& r) {
  ConjectureVerdict v;
  if (r.edges == 0 || r.vertices == 0) {
    v.status = VerdictStatus::Undefined;
    v.gap_numerator = 0;
    v.gap_denominator = 0;
    return v;
  }
  v.gap_numerator = r.m2 * r.vertices - r.m1 * r.edges;
  v.gap_denominator = r.edges * r.vertices;
  v.status = v.gap_numerator > 0   ? VerdictStatus::HoldsStrict
             : v.gap_numerator == 0 ? VerdictStatus::HoldsWithEquality
                                    : VerdictStatus::Fails;
  return v;
}

GroupReport group_report(const FiniteGroup& g) {
  const SimpleGraph c = commuting_graph(g);
  GroupReport out;
  out.order = g.order();
  out.center_size = g.order() - c.vertex_count();
  out.commuting = zagreb_direct(c);
  out.non_commuting = zagreb_direct_complement(c);

  std::uint64_t degree_sum = 0;
  for (auto d : c.degrees()) degree_sum += d;
  if (degree_sum != 2 * c.edge_count()) throw RouteMismatch(g.label() + ": handshake lemma violated");

  const ZagrebReport via_formula = zagreb_complement(out.commuting);
  if (via_formula != out.non_commuting)
    throw RouteMismatch(g.label() + ": non-commuting graph direct " + report_string(out.non_commuting) +
                        " vs complement formula " + report_string(via_formula));
  out.decomposition = extract_clique_decomposition(c);
  if (out.decomposition) {
    const ZagrebReport via_cliques = zagreb_from_decomposition(*out.decomposition);
    if (via_cliques != out.commuting)
      throw RouteMismatch(g.label() + ": commuting graph direct " + report_string(out.commuting) +
                          " vs clique decomposition " + report_string(via_cliques));
  }
  out.commuting_verdict = conjecture_verdict(out.commuting);
  out.non_commuting_verdict = conjecture_verdict(out.non_commuting);
  return out;
}

}  // namespace commgraph

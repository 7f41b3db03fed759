#include <doctest.h>

#include <random>
#include <sstream>

#include "commgraph/catalog.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/families.hpp"
#include "commgraph/special_groups.hpp"
#include "commgraph/zagreb.hpp"
#include "oracles.hpp"

using namespace commgraph;

namespace {

SimpleGraph graph_of(std::uint32_t n, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimpleGraph random_graph(std::mt19937_64& rng) {
  const auto n = static_cast<std::uint32_t>(rng() % 41);
  const double p = static_cast<double>(rng() % 1001) / 1000.0;
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void check_against_oracle(const SimpleGraph& g) {
  const auto o = oracle::indices(oracle::adjacency(g));
  const ZagrebReport r = zagreb_direct(g);
  CHECK(r.m1 == o.m1);
  CHECK(r.m2 == o.m2);
  CHECK(r.vertices == o.v);
  CHECK(r.edges == o.e);
}

}  // namespace

TEST_CASE("graph basics") {
  SimpleGraph g(70);
  CHECK(g.add_edge(0, 69));
  CHECK_FALSE(g.add_edge(69, 0));
  CHECK(g.has_edge(69, 0));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 70), std::invalid_argument);
  CHECK(complement(complement(g)) == g);
  CHECK(complement(g).edge_count() == 70 * 69 / 2 - 1);
}

TEST_CASE("edge-list reader") {
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return read_edge_list(in);
  };
  const SimpleGraph g = read("# comment\n\n3 2\n0 1\n  # inner\n1 2\n");
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 2));
  CHECK(read("4 0\n").vertex_count() == 4);
  CHECK_THROWS_AS(read(""), ParseError);
  CHECK_THROWS_AS(read("3 1\n1 0\n"), ParseError);        // u < v required
  CHECK_THROWS_AS(read("3 1\n1 1\n"), ParseError);        // loop
  CHECK_THROWS_AS(read("3 2\n0 1\n0 1\n"), ParseError);   // duplicate
  CHECK_THROWS_AS(read("3 1\n0 1\n1 2\n"), ParseError);   // extra edge
  CHECK_THROWS_AS(read("3 2\n0 1\n"), ParseError);        // missing edge
  CHECK_THROWS_AS(read("3 1\n0 1 2\n"), ParseError);      // trailing token
  CHECK_THROWS_AS(read("3 1\n0 3\n"), ParseError);        // out of range

  std::ostringstream out;
  write_edge_list(out, g);
  CHECK(read(out.str()) == g);
}

TEST_CASE("direct indices against the naive oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) check_against_oracle(random_graph(rng));
  // Crosses a 64-bit word boundary.
  SimpleGraph big(130);
  for (std::uint32_t v = 1; v < 130; v += 3) big.add_edge(0, v);
  for (std::uint32_t v = 64; v < 129; ++v) big.add_edge(v, v + 1);
  check_against_oracle(big);
}

TEST_CASE("clique formula and complement formulas") {
  const auto d = CliqueDecomposition::normalized({{1, 6}, {4, 2}, {0, 9}});
  CHECK(d.to_string() == "K_6 + 4K_2");
  CHECK(d.vertex_total() == 14);
  CHECK(d.edge_total() == 19);
  const ZagrebReport r = zagreb_from_decomposition(d);
  CHECK(r.m1 == 158);
  CHECK(r.m2 == 379);
  // Materialize K_6 + 4K_2 and compare.
  SimpleGraph g(14);
  for (std::uint32_t u = 0; u < 6; ++u)
    for (std::uint32_t v = u + 1; v < 6; ++v) g.add_edge(u, v);
  for (std::uint32_t k = 0; k < 4; ++k) g.add_edge(6 + 2 * k, 7 + 2 * k);
  CHECK(zagreb_direct(g) == r);
  CHECK(extract_clique_decomposition(g) == d);
  CHECK(zagreb_direct(complement(g)) == zagreb_complement(r));
  CHECK(zagreb_direct_complement(g) == zagreb_complement(r));

  // Complement of K_m is edgeless.
  const auto km = zagreb_from_decomposition(CliqueDecomposition::normalized({{1, 7}}));
  CHECK(zagreb_complement(km) == ZagrebReport{0, 0, 7, 0});
  CHECK_THROWS_AS(CliqueDecomposition::normalized({{1, 0}}), InvalidParameter);
  CHECK_THROWS_AS(CliqueDecomposition::normalized({{-1, 3}}), InvalidParameter);
}

TEST_CASE("complement identities on 200 random graphs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const SimpleGraph g = random_graph(rng);
    const ZagrebReport r = zagreb_direct(g);
    CHECK(zagreb_complement(r) == zagreb_direct(complement(g)));
    CHECK(zagreb_complement(zagreb_complement(r)) == r);
    CHECK(zagreb_direct_complement(g) == zagreb_direct(complement(g)));
  }
}

TEST_CASE("clique decomposition extraction") {
  CHECK_FALSE(extract_clique_decomposition(graph_of(3, {{0, 1}, {1, 2}})));  // path is not a clique
  CHECK(extract_clique_decomposition(graph_of(3, {}))->to_string() == "3K_1");
  CHECK(extract_clique_decomposition(SimpleGraph(0))->to_string() == "empty");
}

TEST_CASE("verdicts") {
  const SimpleGraph star_tri = graph_of(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {6, 7}, {6, 8}, {7, 8}});
  const auto v = conjecture_verdict(zagreb_direct(star_tri));
  CHECK(v.status == VerdictStatus::Fails);
  CHECK(v.gap_numerator == -3);
  CHECK(v.gap_denominator == 72);
  CHECK(v.gap_string() == "-1/24");

  const SimpleGraph c6 = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK(conjecture_verdict(zagreb_direct(c6)).status == VerdictStatus::HoldsWithEquality);
  CHECK(conjecture_verdict(zagreb_direct(SimpleGraph(4))).status == VerdictStatus::Undefined);
  CHECK(conjecture_verdict(zagreb_direct(SimpleGraph(4))).gap_string() == "undefined");
  // Any l K_m is regular, so equality.
  for (int l = 1; l <= 4; ++l)
    for (int m = 2; m <= 6; ++m)
      CHECK(conjecture_verdict(zagreb_from_decomposition(CliqueDecomposition::normalized({{l, m}}))).status ==
            VerdictStatus::HoldsWithEquality);
}

TEST_CASE("group reports agree with the table oracle over the catalog") {
  for (const auto& e : catalog(48)) {
    const FiniteGroup g = e.build();
    if (is_abelian(g)) continue;
    CAPTURE(g.label());
    const GroupReport r = group_report(g);
    const auto o = oracle::group_indices(g);
    CHECK(r.center_size == o.center_size);
    CHECK(r.commuting.m1 == o.c.m1);
    CHECK(r.commuting.m2 == o.c.m2);
    CHECK(r.commuting.edges == o.c.e);
    CHECK(r.non_commuting.m1 == o.nc.m1);
    CHECK(r.non_commuting.m2 == o.nc.m2);
    CHECK(r.non_commuting.edges == o.nc.e);
  }
  CHECK_THROWS_AS(group_report(cyclic_group(6)), AbelianGroupError);
}

TEST_CASE("the drawn S_4 graph misses six commuting pairs") {
  // Each 4-cycle commutes with its square, a double transposition; with those
  // six edges removed the true commuting graph (25 edges) drops to 19 edges
  // and gives the values 86, 115, 9546, 97320.
  const FiniteGroup s4 = build_special("S_4");
  const GroupReport r = group_report(s4);
  CHECK(r.commuting.edges == 25);
  CHECK(r.commuting.m1 == 164);
  CHECK(r.commuting.m2 == 280);

  const SimpleGraph c = commuting_graph(s4);
  const auto verts = noncentral_elements(s4);
  SimpleGraph drawn(c.vertex_count());
  int removed = 0;
  for (std::uint32_t i = 0; i < c.vertex_count(); ++i)
    for (std::uint32_t j = i + 1; j < c.vertex_count(); ++j) {
      if (!c.has_edge(i, j)) continue;
      const Element x = verts[i], y = verts[j];
      const bool square_pair = (element_order(s4, x) == 4 && s4.mul(x, x) == y) ||
                               (element_order(s4, y) == 4 && s4.mul(y, y) == x);
      if (square_pair) {
        ++removed;
        continue;
      }
      drawn.add_edge(i, j);
    }
  CHECK(removed == 6);
  const ZagrebReport d = zagreb_direct(drawn);
  CHECK(d.edges == 19);
  CHECK(d.m1 == 86);
  CHECK(d.m2 == 115);
  CHECK(zagreb_complement(d).m1 == 9546);
  CHECK(zagreb_complement(d).m2 == 97320);
}

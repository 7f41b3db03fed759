#include <doctest.h>

#include <set>
#include <sstream>

#include "commgraph/catalog.hpp"
#include "commgraph/cayley_io.hpp"
#include "commgraph/errors.hpp"
#include "commgraph/families.hpp"
#include "commgraph/presentation.hpp"
#include "commgraph/special_groups.hpp"
#include "oracles.hpp"

using namespace commgraph;

namespace {

FiniteGroup from_text(const std::string& s) {
  std::istringstream in(s);
  return ingest_cayley(in, "t");
}

std::vector<Element> z_n_table(std::uint32_t n) {
  std::vector<Element> t(n * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  return t;
}

}  // namespace

TEST_CASE("axiom screening names the first failure") {
  auto axiom_of = [](std::uint32_t n, std::vector<Element> t) {
    try {
      validate_group(n, t);
    } catch (const GroupAxiomError& e) {
      return e.axiom();
    }
    return std::string("ok");
  };
  CHECK(axiom_of(3, z_n_table(3)) == "ok");
  CHECK(axiom_of(2, {0, 1, 1, 2}) == "range");
  CHECK(axiom_of(2, {0, 1, 1, 1}) == "latin-square");
  CHECK(axiom_of(2, {1, 0, 0, 1}) == "identity");
  // Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK(axiom_of(5, loop) == "associativity");
}

TEST_CASE("center, centralizers and commutativity degree against the table") {
  for (const auto& g : builtin_special_groups()) {
    CAPTURE(g.label());
    CHECK(center(g).size() == oracle::center(g).size());
    CHECK(commutativity_degree(g) == oracle::commuting_pairs_ratio(g));
    // Pr(G) = k(G)/|G|.
    CHECK(commutativity_degree(g) == Rational(conjugacy_class_count(g), g.order()));
  }
  const FiniteGroup q8 = build_family(family::Dicyclic{2});
  CHECK(count_distinct_centralizers(q8) == 4);
  const FiniteGroup s3 = build_family(family::Dihedral{3});
  CHECK(count_distinct_centralizers(s3) == 5);
  const FiniteGroup d6z3 = build_special("D_6xZ_3");
  CHECK(center(d6z3).size() == 3);
}

TEST_CASE("central quotients and recognition") {
  CHECK(recognize_elementary_abelian_p2(central_quotient(build_family(family::Dicyclic{2}))) == 2u);
  CHECK(recognize_dihedral(central_quotient(build_family(family::U6n{2}))) == 3u);
  CHECK(recognize_dihedral(central_quotient(build_family(family::M2mn{5, 2}))) == 5u);
  CHECK(recognize_dihedral(build_family(family::Dihedral{7})) == 7u);
  CHECK_FALSE(recognize_dihedral(build_family(family::Dicyclic{3})));
  CHECK_FALSE(recognize_elementary_abelian_p2(cyclic_group(4)));
  CHECK(recognize_elementary_abelian_p2(direct_product(cyclic_group(3), cyclic_group(3))) == 3u);
}

TEST_CASE("presentation parsing") {
  const auto p = Presentation::parse({"a", "b"}, {"a^3", "[a,b]", "(a b)^-2"});
  CHECK(p.relators[0] == Word{1, 1, 1});
  CHECK(p.relators[1] == Word{-1, -2, 1, 2});
  CHECK(p.relators[2] == Word{-2, -1, -2, -1});
  CHECK_THROWS_AS(Presentation::parse({"a"}, {"a c"}), ParseError);
  CHECK_THROWS_AS(Presentation::parse({"a"}, {"a^"}), ParseError);
  CHECK_THROWS_AS(Presentation::parse({"a"}, {"(a"}), ParseError);
  // Longest-first matching of generator names.
  const auto q = Presentation::parse({"x", "xy"}, {"xy x"});
  CHECK(q.relators[0] == Word{2, 1});
}

TEST_CASE("coset enumeration") {
  CHECK(coset_enumerate(Presentation::parse({"a"}, {"a^5"}), 100).order() == 5);
  const auto s3 = coset_enumerate(Presentation::parse({"a", "b"}, {"a^3", "b^2", "b a b^-1 a"}), 100);
  CHECK(s3.order() == 6);
  CHECK_FALSE(is_abelian(s3));
  CHECK(oracle::is_associative(s3));
  // Free group: overflow instead of running forever.
  CHECK_THROWS_AS(coset_enumerate(Presentation::parse({"a", "b"}, {"[a,b]"}), 50), EnumerationOverflow);
  // Trivial group from redundant relators.
  CHECK(coset_enumerate(Presentation::parse({"a", "b"}, {"a", "b a^2"}), 10).order() == 1);
}

TEST_CASE("family builders produce valid groups of the right order") {
  const std::vector<std::pair<FamilySpec, std::uint32_t>> cases = {
      {family::Dihedral{5}, 10},      {family::Dicyclic{3}, 12},      {family::Quasidihedral{4}, 16},
      {family::SD8n{3}, 24},          {family::V8n{2}, 16},           {family::U6n{2}, 12},
      {family::M2mn{5, 3}, 30},       {family::PQ{3, 7}, 21},         {family::Suzuki2{}, 20},
      {family::HanakiA1{2}, 16},      {family::HanakiA2{1, 3}, 27},   {family::GL2{3}, 48},
      {family::GL2{4}, 180},          {family::PSL2{2}, 60},
  };
  for (const auto& [spec, order] : cases) {
    const FiniteGroup g = build_family(spec);
    CAPTURE(g.label());
    CHECK(g.order() == order);
    CHECK(family_order(spec) == order);
    CHECK_NOTHROW(validate_group(g));
    CHECK_FALSE(is_abelian(g));
  }
  CHECK(build_family(family::GL2{3}).label() == "GL(2,3)");
  CHECK(center(build_family(family::GL2{5})).size() == 4);  // q - 1
  CHECK(center(build_family(family::PSL2{3})).size() == 1);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(build_family(family::Dihedral{2}), InvalidParameter);
  CHECK_THROWS_AS(build_family(family::M2mn{4, 1}), InvalidParameter);
  CHECK_THROWS_AS(build_family(family::PQ{3, 11}), InvalidParameter);
  CHECK_THROWS_AS(build_family(family::GL2{6}), InvalidParameter);
  CHECK_THROWS_AS(build_family(family::Quasidihedral{3}), InvalidParameter);
  CHECK_THROWS_AS(build_family(family::Dihedral{4000}), OrderCapExceeded);
}

TEST_CASE("special groups") {
  for (const auto& s : special_group_list()) {
    const FiniteGroup g = s.build();
    CAPTURE(s.name);
    CHECK(g.order() == s.order);
    CHECK_NOTHROW(validate_group(g));
  }
  CHECK_THROWS_AS(build_special("nope"), InvalidParameter);
}

TEST_CASE("catalog") {
  CHECK_THROWS_AS(catalog(5), InvalidParameter);
  const auto c8 = catalog(8);
  std::set<std::string> labels;
  for (const auto& e : c8) labels.insert(e.label());
  CHECK(labels == std::set<std::string>{"D_6", "M_6(3,1)", "Z_3:Z_2", "U_6", "Q_8", "D_8", "A(1,2)", "V_8"});
  const auto c = catalog(64);
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].order <= c[i].order);
}

TEST_CASE("Cayley ingestion") {
  // Identity stored at index 2; it moves to 0 and the rest keep their order.
  const FiniteGroup g = from_text("# name: Z3\n3\n1 2 0\n2 0 1\n0 1 2\n");
  CHECK(g.label() == "Z3");
  CHECK(g.order() == 3);
  CHECK(g.mul(1, 2) == 0);  // old 0 * old 1 = old 2, the identity
  CHECK_NOTHROW(validate_group(g));
  CHECK_THROWS_AS(from_text("2\n0 1\n1 5\n"), GroupAxiomError);
  CHECK_THROWS_AS(from_text("2\n0 1\n1\n"), ParseError);
  CHECK_THROWS_AS(from_text("2\n0 x\n1 0\n"), ParseError);
  CHECK_THROWS_AS(from_text(""), ParseError);
  try {
    from_text("2\n1 1\n0 0\n");
    FAIL("expected failure");
  } catch (const GroupAxiomError& e) {
    CHECK(e.axiom() == "identity");
  }

  const FiniteGroup d = build_family(family::Dihedral{4});
  std::ostringstream out;
  write_cayley(out, d);
  const FiniteGroup back = from_text(out.str());
  CHECK(back.table() == d.table());
}

#include "commgraph/special_groups.hpp"

#include <algorithm>
#include <map>

#include "commgraph/errors.hpp"
#include "commgraph/families.hpp"
#include "commgraph/presentation.hpp"

namespace commgraph {
namespace {

FiniteGroup presented(const std::vector<std::string>& gens, const std::vector<std::string>& rels, std::uint32_t order,
                      const std::string& label) {
  FiniteGroup g = coset_enumerate(Presentation::parse(gens, rels), 1u << 15, label);
  if (g.order() != order) throw std::logic_error(label + ": unexpected order " + std::to_string(g.order()));
  return g;
}

FiniteGroup relabel(FiniteGroup g, std::string label) {
  g.set_label(std::move(label));
  return g;
}

bool is_even(const std::vector<unsigned>& p) {
  unsigned inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

}  // namespace

FiniteGroup permutation_group(unsigned k, bool even, std::string label) {
  std::vector<unsigned> p(k);
  for (unsigned i = 0; i < k; ++i) p[i] = i;
  std::vector<std::vector<unsigned>> perms;
  do {
    if (!even || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<unsigned>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  const auto n = static_cast<std::uint32_t>(perms.size());
  std::vector<Element> table(std::size_t{n} * n);
  std::vector<unsigned> prod(k);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      for (unsigned x = 0; x < k; ++x) prod[x] = perms[i][perms[j][x]];
      table[std::size_t{i} * n + j] = index.at(prod);
    }
  return FiniteGroup(n, std::move(table), std::move(label));
}

const std::vector<SpecialGroup>& special_group_list() {
  static const std::vector<SpecialGroup> list = [] {
    std::vector<SpecialGroup> v{
        {"A_4", 12, [] { return permutation_group(4, true, "A_4"); }},
        {"D_8*Z_4", 16,
         [] { return presented({"a", "b", "c"}, {"a^4", "b^2", "c^2 a^-2", "b a b^-1 a", "[a,c]", "[b,c]"}, 16, "D_8*Z_4"); }},
        {"M_16", 16, [] { return presented({"a", "b"}, {"a^8", "b^2", "b a b^-1 a^-5"}, 16, "M_16"); }},
        {"SG(16,3)", 16,
         [] { return presented({"a", "b", "c"}, {"a^4", "b^2", "c^2", "[a,b]", "[b,c]", "c a c^-1 (a b)^-1"}, 16, "SG(16,3)"); }},
        {"Z_2xD_8", 16,
         [] { return relabel(direct_product(cyclic_group(2), build_family(family::Dihedral{4})), "Z_2xD_8"); }},
        {"Z_2xQ_8", 16,
         [] { return relabel(direct_product(cyclic_group(2), build_family(family::Dicyclic{2})), "Z_2xQ_8"); }},
        {"Z_4:Z_4", 16, [] { return presented({"a", "b"}, {"a^4", "b^4", "b a b^-1 a"}, 16, "Z_4:Z_4"); }},
        {"D_6xZ_3", 18,
         [] { return relabel(direct_product(build_family(family::Dihedral{3}), cyclic_group(3)), "D_6xZ_3"); }},
        {"S_4", 24, [] { return permutation_group(4, false, "S_4"); }},
        {"SL(2,3)", 24, [] { return special_linear_2(3); }},
        {"A_4xZ_2", 24,
         [] { return relabel(direct_product(permutation_group(4, true, "A_4"), cyclic_group(2)), "A_4xZ_2"); }},
        {"A_5", 60, [] { return permutation_group(5, true, "A_5"); }},
    };
    std::sort(v.begin(), v.end(), [](const SpecialGroup& a, const SpecialGroup& b) {
      return std::tie(a.order, a.name) < std::tie(b.order, b.name);
    });
    return v;
  }();
  return list;
}

FiniteGroup build_special(const std::string& name) {
  for (const auto& s : special_group_list())
    if (s.name == name) return s.build();
  throw InvalidParameter("unknown special group \"" + name + "\"");
}

std::vector<FiniteGroup> builtin_special_groups() {
  std::vector<FiniteGroup> out;
  for (const auto& s : special_group_list()) out.push_back(s.build());
  return out;
}

}  // namespace commgraph

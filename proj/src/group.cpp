#include "commgraph/group.hpp"

#include <bit>
#include <random>
#include <set>
#include <stdexcept>

#include "commgraph/errors.hpp"
#include "commgraph/ff.hpp"

namespace commgraph {

ElementSet::ElementSet(std::uint32_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

std::uint32_t ElementSet::size() const {
  std::uint32_t s = 0;
  for (auto w : words_) s += static_cast<std::uint32_t>(std::popcount(w));
  return s;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<Element>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (universe_ != other.universe_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

FiniteGroup::FiniteGroup(std::uint32_t order, std::vector<Element> table, std::string label,
                         std::vector<std::string> element_names)
    : order_(order), table_(std::move(table)), label_(std::move(label)), names_(std::move(element_names)) {
  if (order_ == 0) throw InvalidParameter("group order must be positive");
  if (table_.size() != std::size_t{order_} * order_) throw InvalidParameter("table has wrong size");
  if (!names_.empty() && names_.size() != order_) throw InvalidParameter("element_names has wrong size");
  for (Element e : table_)
    if (e >= order_) throw GroupAxiomError("range", "table entry out of range");
  for (Element i = 0; i < order_; ++i)
    if (mul(0, i) != i || mul(i, 0) != i) throw GroupAxiomError("identity", "element 0 is not the identity");
  inverse_.assign(order_, order_);
  for (Element i = 0; i < order_; ++i) {
    for (Element j = 0; j < order_; ++j) {
      if (mul(i, j) == 0) {
        if (mul(j, i) != 0) throw GroupAxiomError("inverse", "element " + std::to_string(i) + " has only a one-sided inverse");
        inverse_[i] = j;
        break;
      }
    }
    if (inverse_[i] == order_) throw GroupAxiomError("inverse", "element " + std::to_string(i) + " has no inverse");
  }
}

Element FiniteGroup::multiply(Element i, Element j) const {
  if (i >= order_ || j >= order_) throw std::out_of_range("element index out of range");
  return mul(i, j);
}

void validate_group(std::uint32_t n, const std::vector<Element>& t, std::uint32_t assoc_cap) {
  if (n == 0) throw GroupAxiomError("range", "empty table");
  if (t.size() != std::size_t{n} * n) throw GroupAxiomError("range", "table is not n x n");
  auto at = [&](std::size_t i, std::size_t j) { return t[i * n + j]; };
  for (Element e : t)
    if (e >= n) throw GroupAxiomError("range", "entry " + std::to_string(e) + " outside [0, n)");
  std::vector<std::uint8_t> seen(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (seen[at(i, j)]++) throw GroupAxiomError("latin-square", "row " + std::to_string(i) + " repeats an entry");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (seen[at(j, i)]++) throw GroupAxiomError("latin-square", "column " + std::to_string(i) + " repeats an entry");
    }
  }
  for (std::uint32_t i = 0; i < n; ++i)
    if (at(0, i) != i || at(i, 0) != i) throw GroupAxiomError("identity", "element 0 is not a two-sided identity");
  // A Latin square with identity gives unique one-sided inverses; check they agree.
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (at(i, j) == 0 && at(j, i) != 0)
        throw GroupAxiomError("inverse", "element " + std::to_string(i) + " has only a one-sided inverse");
    }
  }
  auto assoc_fail = [](std::size_t i, std::size_t j, std::size_t k) {
    throw GroupAxiomError("associativity", "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" +
                                               std::to_string(k) + " differs from " + std::to_string(i) + "*(" +
                                               std::to_string(j) + "*" + std::to_string(k) + ")");
  };
  if (n <= assoc_cap) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ij = at(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (at(ij, k) != at(i, at(j, k))) assoc_fail(i, j, k);
      }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    const std::uint64_t trials = 10ull * n * n;
    for (std::uint64_t s = 0; s < trials; ++s) {
      const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      if (at(at(i, j), k) != at(i, at(j, k))) assoc_fail(i, j, k);
    }
  }
}

void validate_group(const FiniteGroup& g, std::uint32_t assoc_cap) { validate_group(g.order(), g.table(), assoc_cap); }

bool is_abelian(const FiniteGroup& g) {
  for (Element i = 0; i < g.order(); ++i)
    for (Element j = i + 1; j < g.order(); ++j)
      if (g.mul(i, j) != g.mul(j, i)) return false;
  return true;
}

ElementSet centralizer(const FiniteGroup& g, Element x) {
  if (x >= g.order()) throw std::out_of_range("element index out of range");
  ElementSet s(g.order());
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) s.insert(y);
  return s;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.insert(x);
  }
  return z;
}

std::uint32_t element_order(const FiniteGroup& g, Element x) {
  std::uint32_t k = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

std::uint32_t count_distinct_centralizers(const FiniteGroup& g) {
  std::set<ElementSet> distinct;
  for (Element x = 0; x < g.order(); ++x) distinct.insert(centralizer(g, x));
  return static_cast<std::uint32_t>(distinct.size());
}

Rational commutativity_degree(const FiniteGroup& g) {
  std::uint64_t pairs = 0;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++pairs;
  const std::uint64_t n = g.order();
  return Rational(BigInt(pairs), BigInt(n * n));
}

std::uint32_t conjugacy_class_count(const FiniteGroup& g) {
  std::vector<bool> done(g.order(), false);
  std::uint32_t classes = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    ++classes;
    for (Element h = 0; h < g.order(); ++h) done[g.mul(g.mul(h, x), g.inverse(h))] = true;
  }
  return classes;
}

FiniteGroup central_quotient(const FiniteGroup& g) {
  const auto z = center(g).elements();
  const std::uint32_t n = g.order();
  std::vector<Element> rep(n);
  for (Element x = 0; x < n; ++x) {
    Element best = x;
    for (Element c : z) best = std::min(best, g.mul(x, c));
    rep[x] = best;
  }
  std::vector<std::uint32_t> index_of(n, n);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x)
    if (rep[x] == x) {
      index_of[x] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(x);
    }
  const auto q = static_cast<std::uint32_t>(reps.size());
  std::vector<Element> table(std::size_t{q} * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) table[std::size_t{a} * q + b] = index_of[rep[g.mul(reps[a], reps[b])]];
  return FiniteGroup(q, std::move(table), g.label() + "/Z");
}

std::optional<std::uint32_t> recognize_dihedral(const FiniteGroup& g) {
  const std::uint32_t n = g.order();
  if (n < 6 || n % 2 != 0) return std::nullopt;
  const std::uint32_t m = n / 2;
  for (Element r = 1; r < n; ++r) {
    if (element_order(g, r) != m) continue;
    std::vector<bool> in_r(n, false);
    for (Element y = 0, k = 0; k < m; ++k, y = g.mul(y, r)) in_r[y] = true;
    const Element r_inv = g.inverse(r);
    for (Element s = 1; s < n; ++s) {
      if (in_r[s] || g.mul(s, s) != 0) continue;
      if (g.mul(g.mul(s, r), s) == r_inv) return m;
    }
    // In D_2m with m >= 3 every element of order m is a rotation, so the
    // first candidate is decisive.
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> recognize_elementary_abelian_p2(const FiniteGroup& g) {
  const auto pp = prime_power(g.order());
  if (pp.exponent != 2 || !is_abelian(g)) return std::nullopt;
  for (Element x = 1; x < g.order(); ++x)
    if (element_order(g, x) != pp.p) return std::nullopt;
  return static_cast<std::uint32_t>(pp.p);
}

}  // namespace commgraph

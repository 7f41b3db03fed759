#include "commgraph/catalog.hpp"

#include <algorithm>
#include <tuple>

#include "commgraph/errors.hpp"
#include "commgraph/ff.hpp"
#include "commgraph/special_groups.hpp"

namespace commgraph {

std::string CatalogEntry::family() const { return spec ? family_name(*spec) : "special"; }

std::string CatalogEntry::params() const { return spec ? family_params_string(*spec) : special; }

std::string CatalogEntry::label() const { return spec ? family_label(*spec) : special; }

FiniteGroup CatalogEntry::build(const BuildOptions& opts) const {
  if (spec) return build_family(*spec, opts);
  if (order > opts.order_cap) throw OrderCapExceeded(special + " exceeds the order cap");
  return build_special(special);
}

std::vector<CatalogEntry> catalog(std::uint64_t max_order) {
  if (max_order < 6) throw InvalidParameter("max_order must be >= 6");
  const auto N = static_cast<std::int64_t>(std::min<std::uint64_t>(max_order, std::uint64_t{1} << 40));
  std::vector<CatalogEntry> out;
  auto add = [&](FamilySpec s) {
    const std::uint64_t ord = family_order(s);
    if (ord <= max_order) out.push_back(CatalogEntry{s, "", ord});
  };
  for (std::int64_t m = 3; 2 * m <= N; ++m) add(family::Dihedral{m});
  for (std::int64_t n = 2; 4 * n <= N; ++n) add(family::Dicyclic{n});
  for (std::int64_t n = 4; n <= 62 && (std::int64_t{1} << n) <= N; ++n) add(family::Quasidihedral{n});
  for (std::int64_t n = 2; 8 * n <= N; ++n) add(family::SD8n{n});
  for (std::int64_t n = 1; 8 * n <= N; ++n) add(family::V8n{n});
  for (std::int64_t n = 1; 6 * n <= N; ++n) add(family::U6n{n});
  for (std::int64_t m = 3; 2 * m <= N; ++m) {
    if (m == 4) continue;
    for (std::int64_t n = 1; 2 * m * n <= N; ++n) add(family::M2mn{m, n});
  }
  for (std::int64_t q = 3; 2 * q <= N; ++q) {
    if (!is_prime(static_cast<std::uint64_t>(q))) continue;
    for (std::int64_t p = 2; p < q && p * q <= N; ++p)
      if (is_prime(static_cast<std::uint64_t>(p)) && (q - 1) % p == 0) add(family::PQ{p, q});
  }
  add(family::Suzuki2{});
  for (std::int64_t n = 2; n <= 16 && (std::int64_t{1} << (2 * n)) <= N; ++n) add(family::HanakiA1{n});
  for (std::int64_t p = 2; p * p * p <= N; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    std::int64_t pn = p;
    for (std::int64_t n = 1; pn * pn * pn <= N; ++n, pn *= p) add(family::HanakiA2{n, p});
  }
  for (std::int64_t q = 3; (q * q - 1) * (q * q - q) <= N; ++q)
    if (prime_power(static_cast<std::uint64_t>(q)).exponent > 0) add(family::GL2{q});
  for (std::int64_t k = 2; k <= 16; ++k) add(family::PSL2{k});
  for (const auto& s : special_group_list())
    if (s.order <= max_order) out.push_back(CatalogEntry{std::nullopt, s.name, s.order});

  auto key = [](const CatalogEntry& e) {
    return std::make_tuple(e.order, e.family(), e.spec ? family_params(*e.spec) : std::vector<std::int64_t>{},
                           e.special);
  };
  std::sort(out.begin(), out.end(), [&](const CatalogEntry& a, const CatalogEntry& b) { return key(a) < key(b); });
  return out;
}

}  // namespace commgraph

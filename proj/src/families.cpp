#include "commgraph/families.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "commgraph/errors.hpp"
#include "commgraph/ff.hpp"
#include "commgraph/presentation.hpp"

namespace commgraph {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using u128 = unsigned __int128;

std::uint64_t saturate(u128 v) {
  return v > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                         : static_cast<std::uint64_t>(v);
}

u128 upow(u128 b, std::int64_t e) {
  u128 r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    r *= b;
    if (r > (u128{1} << 100)) return r;  // saturated; callers only compare
  }
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(u128{r} * b % m);
    b = static_cast<std::uint64_t>(u128{b} * b % m);
    e >>= 1;
  }
  return r;
}

// Table from a product rule on normal-form indices 0..n-1.
template <class Mul>
FiniteGroup table_group(std::uint32_t n, Mul mul, std::string label) {
  std::vector<Element> t(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) t[std::size_t{i} * n + j] = static_cast<Element>(mul(i, j));
  return FiniteGroup(n, std::move(t), std::move(label));
}

// Matrix group from an explicit element list. Elements are sorted
// lexicographically, then the identity is moved to index 0.
template <std::size_t N, class Mul>
FiniteGroup matrix_group(std::vector<std::array<std::uint32_t, N>> elems, const std::array<std::uint32_t, N>& identity,
                         std::uint32_t q, Mul mul, std::string label) {
  std::sort(elems.begin(), elems.end());
  auto id_it = std::find(elems.begin(), elems.end(), identity);
  if (id_it == elems.end()) throw std::logic_error("matrix group without identity");
  std::rotate(elems.begin(), id_it, id_it + 1);
  auto encode = [q](const std::array<std::uint32_t, N>& a) {
    std::uint64_t c = 0;
    for (auto x : a) c = c * q + x;
    return c;
  };
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(elems.size() * 2);
  for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(encode(elems[i]), i);
  const auto n = static_cast<std::uint32_t>(elems.size());
  return table_group(
      n,
      [&](std::uint32_t i, std::uint32_t j) {
        auto it = index.find(encode(mul(elems[i], elems[j])));
        if (it == index.end()) throw std::logic_error("matrix group not closed under multiplication");
        return it->second;
      },
      std::move(label));
}

using Mat2 = std::array<std::uint32_t, 4>;

Mat2 mat2_mul(const FieldTables& f, const Mat2& x, const Mat2& y) {
  return {f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
          f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
}

FieldSpec field_of_order(std::uint64_t q) {
  const auto pp = prime_power(q);
  if (pp.exponent == 0) throw InvalidParameter(std::to_string(q) + " is not a prime power");
  return ff_make(static_cast<Residue>(pp.p), pp.exponent);
}

// 2x2 matrices over GF(q): determinant 1 when `special`, else any nonzero.
FiniteGroup linear_group_2(std::uint64_t q, bool special, std::string label) {
  const FieldTables f(field_of_order(q));
  const std::uint32_t one = 1;  // code of 1 in every field
  std::vector<Mat2> elems;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          const std::uint32_t det = f.sub(f.mul(a, d), f.mul(b, c));
          if (special ? det == one : det != 0) elems.push_back({a, b, c, d});
        }
  return matrix_group(std::move(elems), Mat2{1, 0, 0, 1}, static_cast<std::uint32_t>(q),
                      [&](const Mat2& x, const Mat2& y) { return mat2_mul(f, x, y); }, std::move(label));
}

std::uint32_t enumeration_bound(std::uint64_t order) {
  return static_cast<std::uint32_t>(std::max<std::uint64_t>(order * 256, 1u << 15));
}

FiniteGroup enumerate_family(const std::vector<std::string>& gens, const std::vector<std::string>& rels,
                             std::uint64_t expected, std::string label) {
  FiniteGroup g = coset_enumerate(Presentation::parse(gens, rels), enumeration_bound(expected), std::move(label));
  if (g.order() != expected)
    throw std::logic_error(g.label() + ": presentation gave order " + std::to_string(g.order()) + ", expected " +
                           std::to_string(expected));
  return g;
}

std::string pow_str(const std::string& x, std::int64_t e) { return x + "^" + std::to_string(e); }

}  // namespace

std::string family_name(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const family::Dihedral&) { return "dihedral"; },
                        [](const family::Dicyclic&) { return "dicyclic"; },
                        [](const family::Quasidihedral&) { return "quasidihedral"; },
                        [](const family::SD8n&) { return "sd8n"; },
                        [](const family::V8n&) { return "v8n"; },
                        [](const family::U6n&) { return "u6n"; },
                        [](const family::M2mn&) { return "m2mn"; },
                        [](const family::PQ&) { return "pq"; },
                        [](const family::Suzuki2&) { return "sz2"; },
                        [](const family::HanakiA1&) { return "hanaki1"; },
                        [](const family::HanakiA2&) { return "hanaki2"; },
                        [](const family::GL2&) { return "gl2"; },
                        [](const family::PSL2&) { return "psl2"; },
                    },
                    spec);
}

std::vector<std::int64_t> family_params(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const family::Dihedral& s) { return std::vector<std::int64_t>{s.m}; },
                        [](const family::Dicyclic& s) { return std::vector<std::int64_t>{s.n}; },
                        [](const family::Quasidihedral& s) { return std::vector<std::int64_t>{s.n}; },
                        [](const family::SD8n& s) { return std::vector<std::int64_t>{s.n}; },
                        [](const family::V8n& s) { return std::vector<std::int64_t>{s.n}; },
                        [](const family::U6n& s) { return std::vector<std::int64_t>{s.n}; },
                        [](const family::M2mn& s) { return std::vector<std::int64_t>{s.m, s.n}; },
                        [](const family::PQ& s) { return std::vector<std::int64_t>{s.p, s.q}; },
                        [](const family::Suzuki2&) { return std::vector<std::int64_t>{}; },
                        [](const family::HanakiA1& s) { return std::vector<std::int64_t>{s.n}; },
                        [](const family::HanakiA2& s) { return std::vector<std::int64_t>{s.n, s.p}; },
                        [](const family::GL2& s) { return std::vector<std::int64_t>{s.q}; },
                        [](const family::PSL2& s) { return std::vector<std::int64_t>{s.k}; },
                    },
                    spec);
}

std::string family_params_string(const FamilySpec& spec) {
  auto kv = [](std::initializer_list<std::pair<const char*, std::int64_t>> items) {
    std::string out;
    for (const auto& [k, v] : items) {
      if (!out.empty()) out += ",";
      out += std::string(k) + "=" + std::to_string(v);
    }
    return out;
  };
  return std::visit(overloaded{
                        [&](const family::Dihedral& s) { return kv({{"m", s.m}}); },
                        [&](const family::Dicyclic& s) { return kv({{"n", s.n}}); },
                        [&](const family::Quasidihedral& s) { return kv({{"n", s.n}}); },
                        [&](const family::SD8n& s) { return kv({{"n", s.n}}); },
                        [&](const family::V8n& s) { return kv({{"n", s.n}}); },
                        [&](const family::U6n& s) { return kv({{"n", s.n}}); },
                        [&](const family::M2mn& s) { return kv({{"m", s.m}, {"n", s.n}}); },
                        [&](const family::PQ& s) { return kv({{"p", s.p}, {"q", s.q}}); },
                        [&](const family::Suzuki2&) { return std::string(); },
                        [&](const family::HanakiA1& s) { return kv({{"n", s.n}}); },
                        [&](const family::HanakiA2& s) { return kv({{"n", s.n}, {"p", s.p}}); },
                        [&](const family::GL2& s) { return kv({{"q", s.q}}); },
                        [&](const family::PSL2& s) { return kv({{"k", s.k}}); },
                    },
                    spec);
}

std::string family_label(const FamilySpec& spec) {
  const auto ord = std::to_string(family_order(spec));
  return std::visit(overloaded{
                        [&](const family::Dihedral&) { return "D_" + ord; },
                        [&](const family::Dicyclic&) { return "Q_" + ord; },
                        [&](const family::Quasidihedral&) { return "QD_" + ord; },
                        [&](const family::SD8n&) { return "SD_" + ord; },
                        [&](const family::V8n&) { return "V_" + ord; },
                        [&](const family::U6n&) { return "U_" + ord; },
                        [&](const family::M2mn& s) {
                          return "M_" + ord + "(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
                        },
                        [&](const family::PQ& s) { return "Z_" + std::to_string(s.q) + ":Z_" + std::to_string(s.p); },
                        [&](const family::Suzuki2&) { return std::string("Sz(2)"); },
                        [&](const family::HanakiA1& s) { return "A(" + std::to_string(s.n) + ",nu)"; },
                        [&](const family::HanakiA2& s) {
                          return "A(" + std::to_string(s.n) + "," + std::to_string(s.p) + ")";
                        },
                        [&](const family::GL2& s) { return "GL(2," + std::to_string(s.q) + ")"; },
                        [&](const family::PSL2& s) { return "PSL(2," + std::to_string(std::int64_t{1} << std::min<std::int64_t>(s.k, 62)) + ")"; },
                    },
                    spec);
}

std::uint64_t family_order(const FamilySpec& spec) {
  auto pos = [](std::int64_t v) { return v < 0 ? u128{0} : static_cast<u128>(v); };
  return std::visit(overloaded{
                        [&](const family::Dihedral& s) { return saturate(2 * pos(s.m)); },
                        [&](const family::Dicyclic& s) { return saturate(4 * pos(s.n)); },
                        [&](const family::Quasidihedral& s) { return saturate(upow(2, std::min<std::int64_t>(s.n, 101))); },
                        [&](const family::SD8n& s) { return saturate(8 * pos(s.n)); },
                        [&](const family::V8n& s) { return saturate(8 * pos(s.n)); },
                        [&](const family::U6n& s) { return saturate(6 * pos(s.n)); },
                        [&](const family::M2mn& s) { return saturate(2 * pos(s.m) * pos(s.n)); },
                        [&](const family::PQ& s) { return saturate(pos(s.p) * pos(s.q)); },
                        [&](const family::Suzuki2&) { return std::uint64_t{20}; },
                        [&](const family::HanakiA1& s) { return saturate(upow(4, std::min<std::int64_t>(s.n, 51))); },
                        [&](const family::HanakiA2& s) {
                          return saturate(upow(pos(s.p), std::min<std::int64_t>(3 * s.n, 101)));
                        },
                        [&](const family::GL2& s) {
                          const u128 q = std::min<u128>(pos(s.q), u128{1} << 30);
                          return saturate((q * q - 1) * (q * q - q));
                        },
                        [&](const family::PSL2& s) {
                          const u128 k = upow(2, std::min<std::int64_t>(s.k, 40));
                          return saturate((k + 1) * k * (k - 1));
                        },
                    },
                    spec);
}

void validate_family(const FamilySpec& spec) {
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw InvalidParameter(family_name(spec) + ": " + what);
  };
  std::visit(overloaded{
                 [&](const family::Dihedral& s) { require(s.m >= 3, "m must be >= 3"); },
                 [&](const family::Dicyclic& s) { require(s.n >= 2, "n must be >= 2"); },
                 [&](const family::Quasidihedral& s) { require(s.n >= 4 && s.n <= 62, "n must be in [4, 62]"); },
                 [&](const family::SD8n& s) { require(s.n >= 2, "n must be >= 2"); },
                 [&](const family::V8n& s) { require(s.n >= 1, "n must be >= 1"); },
                 [&](const family::U6n& s) { require(s.n >= 1, "n must be >= 1"); },
                 [&](const family::M2mn& s) {
                   require(s.m >= 3 && s.m != 4, "m must be >= 3 and != 4");
                   require(s.n >= 1, "n must be >= 1");
                 },
                 [&](const family::PQ& s) {
                   require(s.p > 0 && s.q > 0 && is_prime(static_cast<std::uint64_t>(s.p)) &&
                               is_prime(static_cast<std::uint64_t>(s.q)),
                           "p and q must be prime");
                   require(s.p < s.q && (s.q - 1) % s.p == 0, "p must divide q - 1");
                 },
                 [&](const family::Suzuki2&) {},
                 [&](const family::HanakiA1& s) { require(s.n >= 2 && s.n <= 16, "n must be in [2, 16]"); },
                 [&](const family::HanakiA2& s) {
                   require(s.p > 0 && is_prime(static_cast<std::uint64_t>(s.p)), "p must be prime");
                   require(s.n >= 1 && upow(static_cast<u128>(s.p), s.n) <= kMaxFieldSize, "need n >= 1 and p^n <= 2^16");
                 },
                 [&](const family::GL2& s) {
                   require(s.q > 2 && s.q <= static_cast<std::int64_t>(kMaxFieldSize) &&
                               prime_power(static_cast<std::uint64_t>(s.q)).exponent > 0,
                           "q must be a prime power in (2, 2^16]");
                 },
                 [&](const family::PSL2& s) { require(s.k >= 2 && s.k <= 16, "k must be in [2, 16]"); },
             },
             spec);
}

FiniteGroup build_family(const FamilySpec& spec, const BuildOptions& opts) {
  validate_family(spec);
  const std::uint64_t order = family_order(spec);
  if (order > opts.order_cap)
    throw OrderCapExceeded(family_label(spec) + " has order " + std::to_string(order) + " above the cap " +
                           std::to_string(opts.order_cap));
  const auto n = static_cast<std::uint32_t>(order);
  std::string label = family_label(spec);

  return std::visit(
      overloaded{
          [&](const family::Dihedral& s) {
            // f^i g^j -> i + m j
            const auto m = s.m;
            return table_group(
                n,
                [m](std::int64_t x, std::int64_t y) {
                  const std::int64_t i = x % m, j = x / m, k = y % m, l = y / m;
                  return mod(i + (j ? -k : k), m) + m * ((j + l) % 2);
                },
                label);
          },
          [&](const family::Dicyclic& s) {
            // f^i g^j -> i + 2n j, with g^2 = f^n
            const auto m = 2 * s.n, half = s.n;
            return table_group(
                n,
                [m, half](std::int64_t x, std::int64_t y) {
                  const std::int64_t i = x % m, j = x / m, k = y % m, l = y / m;
                  const std::int64_t e = i + (j ? -k : k) + ((j && l) ? half : 0);
                  return mod(e, m) + m * ((j + l) % 2);
                },
                label);
          },
          [&](const family::Quasidihedral& s) {
            const std::int64_t half = std::int64_t{1} << (s.n - 1);
            const std::int64_t twist = (std::int64_t{1} << (s.n - 2)) - 1;
            return enumerate_family({"f", "g"}, {pow_str("f", half), "g^2", "g f g^-1 " + pow_str("f", -twist)},
                                    order, label);
          },
          [&](const family::SD8n& s) {
            return enumerate_family({"f", "g"},
                                    {pow_str("f", 4 * s.n), "g^2", "g f g^-1 " + pow_str("f", -(2 * s.n - 1))}, order,
                                    label);
          },
          [&](const family::V8n& s) {
            // gf = g^-1 f^-1 and g^-1 f = f^-1 g
            return enumerate_family({"f", "g"}, {pow_str("f", 2 * s.n), "g^4", "g f g f", "f g^-1 f g^-1"}, order,
                                    label);
          },
          [&](const family::U6n& s) {
            // a^j b^i -> 3 j + i; b^i a^k = a^k b^{i (-1)^k}
            const auto m = 2 * s.n;
            return table_group(
                n,
                [m](std::int64_t x, std::int64_t y) {
                  const std::int64_t j = x / 3, i = x % 3, k = y / 3, l = y % 3;
                  return 3 * ((j + k) % m) + mod((k % 2 ? -i : i) + l, 3);
                },
                label);
          },
          [&](const family::M2mn& s) {
            // a^i b^j -> i + m j; b a b^-1 = a^-1
            const auto m = s.m, two_n = 2 * s.n;
            return table_group(
                n,
                [m, two_n](std::int64_t x, std::int64_t y) {
                  const std::int64_t i = x % m, j = x / m, k = y % m, l = y / m;
                  return mod(i + (j % 2 ? -k : k), m) + m * ((j + l) % two_n);
                },
                label);
          },
          [&](const family::PQ& s) {
            // a^x b^y -> x + q y; b a b^-1 = a^r
            const auto q = static_cast<std::uint64_t>(s.q), p = static_cast<std::uint64_t>(s.p);
            const std::uint64_t r = powmod(least_primitive_root(q), (q - 1) / p, q);
            std::vector<std::uint64_t> rpow(p);
            for (std::uint64_t y = 0; y < p; ++y) rpow[y] = powmod(r, y, q);
            return table_group(
                n,
                [&](std::uint64_t a, std::uint64_t b) {
                  const std::uint64_t x = a % q, y = a / q, u = b % q, v = b / q;
                  return (x + rpow[y] * u) % q + q * ((y + v) % p);
                },
                label);
          },
          [&](const family::Suzuki2&) {
            return enumerate_family({"a", "b"}, {"a^5", "b^4", "b^-1 a b a^-2"}, order, label);
          },
          [&](const family::HanakiA1& s) {
            // U(a, b) -> a q + b; U(a,b) U(c,d) = U(a + c, b + d + nu(a) c)
            const FieldTables f(ff_make(2, static_cast<unsigned>(s.n)));
            const std::uint32_t q = f.size();
            return table_group(
                n,
                [&](std::uint32_t x, std::uint32_t y) {
                  const std::uint32_t a = x / q, b = x % q, c = y / q, d = y % q;
                  return f.add(a, c) * q + f.add(f.add(b, d), f.mul(f.frob(a), c));
                },
                label);
          },
          [&](const family::HanakiA2& s) {
            // v(a, b, c) -> (a q + b) q + c; v(a,b,c) v(a',b',c') = v(a + a', b + b' + c a', c + c')
            const FieldTables f(ff_make(static_cast<Residue>(s.p), static_cast<unsigned>(s.n)));
            const std::uint32_t q = f.size();
            return table_group(
                n,
                [&](std::uint32_t x, std::uint32_t y) {
                  const std::uint32_t a = x / (q * q), b = x / q % q, c = x % q;
                  const std::uint32_t a2 = y / (q * q), b2 = y / q % q, c2 = y % q;
                  return (f.add(a, a2) * q + f.add(f.add(b, b2), f.mul(c, a2))) * q + f.add(c, c2);
                },
                label);
          },
          [&](const family::GL2& s) { return linear_group_2(static_cast<std::uint64_t>(s.q), false, label); },
          [&](const family::PSL2& s) {
            // SL(2, 2^k) has trivial center, so it is PSL(2, 2^k).
            return linear_group_2(std::uint64_t{1} << s.k, true, label);
          },
      },
      spec);
}

FiniteGroup special_linear_2(std::uint64_t q, const BuildOptions& opts) {
  const u128 qq = q;
  const std::uint64_t order = saturate(qq * (qq * qq - 1));
  if (order > opts.order_cap) throw OrderCapExceeded("SL(2," + std::to_string(q) + ") exceeds the order cap");
  return linear_group_2(q, true, "SL(2," + std::to_string(q) + ")");
}

FiniteGroup affine_group_1(std::uint64_t q, std::string label) {
  const FieldTables f(field_of_order(q));
  std::vector<Mat2> elems;
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) elems.push_back({a, b, 0, 1});
  return matrix_group(std::move(elems), Mat2{1, 0, 0, 1}, static_cast<std::uint32_t>(q),
                      [&](const Mat2& x, const Mat2& y) { return mat2_mul(f, x, y); }, std::move(label));
}

FiniteGroup cyclic_group(std::uint32_t n) {
  return table_group(n, [n](std::uint32_t i, std::uint32_t j) { return (i + j) % n; }, "Z_" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const BuildOptions& opts) {
  const std::uint64_t order = std::uint64_t{g.order()} * h.order();
  if (order > opts.order_cap)
    throw OrderCapExceeded(g.label() + " x " + h.label() + " has order " + std::to_string(order) + " above the cap");
  const std::uint32_t hn = h.order();
  return table_group(
      static_cast<std::uint32_t>(order),
      [&](std::uint32_t x, std::uint32_t y) {
        return g.mul(x / hn, y / hn) * hn + h.mul(x % hn, y % hn);
      },
      g.label() + "x" + h.label());
}

std::uint64_t least_primitive_root(std::uint64_t q) {
  if (!is_prime(q)) throw InvalidParameter(std::to_string(q) + " is not prime");
  if (q == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = q - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2;; ++g) {
    bool primitive = true;
    for (auto f : factors) primitive = primitive && powmod(g, (q - 1) / f, q) != 1;
    if (primitive) return g;
  }
}

}  // namespace commgraph

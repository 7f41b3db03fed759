#pragma once

// Constructors for every group family studied, plus cyclic groups and
// direct products.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph {

namespace family {
struct Dihedral { std::int64_t m; };        // D_2m, m >= 3
struct Dicyclic { std::int64_t n; };        // Q_4n, n >= 2
struct Quasidihedral { std::int64_t n; };   // QD_{2^n}, n >= 4
struct SD8n { std::int64_t n; };            // n >= 2
struct V8n { std::int64_t n; };             // n >= 1
struct U6n { std::int64_t n; };             // n >= 1
struct M2mn { std::int64_t m, n; };         // m >= 3, m != 4, n >= 1
struct PQ { std::int64_t p, q; };           // primes, p | q - 1
struct Suzuki2 {};                          // Sz(2), order 20
struct HanakiA1 { std::int64_t n; };        // A(n, nu) over GF(2^n), n >= 2
struct HanakiA2 { std::int64_t n, p; };     // A(n, p) over GF(p^n)
struct GL2 { std::int64_t q; };             // GL(2, q), q > 2 a prime power
struct PSL2 { std::int64_t k; };            // PSL(2, 2^k), k >= 2
}  // namespace family

using FamilySpec = std::variant<family::Dihedral, family::Dicyclic, family::Quasidihedral, family::SD8n,
                                family::V8n, family::U6n, family::M2mn, family::PQ, family::Suzuki2,
                                family::HanakiA1, family::HanakiA2, family::GL2, family::PSL2>;

/// CLI name, e.g. "dihedral", "psl2".
std::string family_name(const FamilySpec& spec);
/// Parameters in declaration order.
std::vector<std::int64_t> family_params(const FamilySpec& spec);
/// "m=4" / "p=3,q=7" / "" for Sz(2).
std::string family_params_string(const FamilySpec& spec);
/// Conventional display label, e.g. "D_8", "GL(2,3)".
std::string family_label(const FamilySpec& spec);
/// Group order implied by the parameters (no construction). Saturates at
/// UINT64_MAX for absurd parameters.
std::uint64_t family_order(const FamilySpec& spec);
/// Throws InvalidParameter describing the first violated constraint.
void validate_family(const FamilySpec& spec);

struct BuildOptions {
  std::uint64_t order_cap = 5000;
};

/// Throws InvalidParameter or OrderCapExceeded.
FiniteGroup build_family(const FamilySpec& spec, const BuildOptions& opts = {});

/// SL(2, q) by matrix enumeration.
FiniteGroup special_linear_2(std::uint64_t q, const BuildOptions& opts = {});
/// Affine maps x -> a x + b over GF(q) as matrices [[a, b], [0, 1]].
/// For q = 5 this is Sz(2).
FiniteGroup affine_group_1(std::uint64_t q, std::string label);

FiniteGroup cyclic_group(std::uint32_t n);
/// (i, j) -> i |H| + j. Throws OrderCapExceeded.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const BuildOptions& opts = {});

/// Least primitive root modulo a prime q.
std::uint64_t least_primitive_root(std::uint64_t q);

}  // namespace commgraph

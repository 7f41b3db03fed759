#pragma once

// Arithmetic in GF(p^k) over a polynomial basis.

#include <cstdint>
#include <span>
#include <vector>

namespace commgraph {

using Residue = std::uint32_t;

/// Largest field order accepted by ff_make.
inline constexpr std::uint64_t kMaxFieldSize = 1u << 16;

struct FieldSpec {
  Residue p = 2;
  unsigned k = 1;
  /// Monic irreducible modulus, lowest coefficient first (length k + 1).
  std::vector<Residue> modulus;

  std::uint64_t size() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Polynomial-basis coordinates, lowest degree first (length k).
struct FieldElement {
  std::vector<Residue> coeffs;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

bool is_prime(std::uint64_t n);

/// Returns (p, j) with q = p^j, or {0, 0} if q is not a prime power.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned exponent = 0;
};
PrimePower prime_power(std::uint64_t q);

/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(Residue p, std::span<const Residue> monic_poly);

/// Field with the least irreducible modulus, ordered by integer code
/// sum(c_i p^i) (lexicographic on the high-to-low coefficient vector).
FieldSpec ff_make(Residue p, unsigned k);

FieldElement ff_zero(const FieldSpec& f);
FieldElement ff_one(const FieldSpec& f);
FieldElement ff_constant(const FieldSpec& f, Residue c);

// Integer code sum(c_i p^i); a bijection onto [0, p^k).
std::uint32_t ff_code(const FieldSpec& f, const FieldElement& x);
FieldElement ff_from_code(const FieldSpec& f, std::uint32_t code);

FieldElement ff_add(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
FieldElement ff_sub(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
FieldElement ff_neg(const FieldSpec& f, const FieldElement& x);
FieldElement ff_mul(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
FieldElement ff_pow(const FieldSpec& f, const FieldElement& x, std::uint64_t e);
/// Throws std::domain_error on zero.
FieldElement ff_inv(const FieldSpec& f, const FieldElement& x);
/// x -> x^p.
FieldElement frobenius(const FieldSpec& f, const FieldElement& x);

/// Dense operation tables over element codes, for builders that multiply
/// many matrices. Only for small fields (q <= 1024).
class FieldTables {
 public:
  explicit FieldTables(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t size() const { return q_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t frob(std::uint32_t a) const { return frob_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

 private:
  FieldSpec spec_;
  std::uint32_t q_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint32_t> neg_, frob_;
};

}  // namespace commgraph

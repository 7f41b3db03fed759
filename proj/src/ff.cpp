#include "commgraph/ff.hpp"

#include <stdexcept>
#include <string>

#include "commgraph/errors.hpp"

namespace commgraph {
namespace {

using Poly = std::vector<Residue>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial.
Poly poly_mod(Poly a, std::span<const Residue> monic, Residue p) {
  trim(a);
  const std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) {
      const std::uint64_t sub = (lead * monic[i]) % p;
      a[shift + i] = static_cast<Residue>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of code.
Poly monic_from_code(Residue p, unsigned degree, std::uint64_t code) {
  Poly out(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    out[i] = static_cast<Residue>(code % p);
    code /= p;
  }
  out[degree] = 1;
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_element(const FieldSpec& f, const FieldElement& x) {
  if (x.coeffs.size() != f.k) throw InvalidParameter("field element has wrong length");
  for (Residue c : x.coeffs)
    if (c >= f.p) throw InvalidParameter("field element coefficient out of range");
}

}  // namespace

std::uint64_t FieldSpec::size() const { return ipow(p, k); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower prime_power(std::uint64_t q) {
  if (q < 2) return {};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {};
  return {p, e};
}

bool is_irreducible(Residue p, std::span<const Residue> monic_poly) {
  const unsigned degree = static_cast<unsigned>(monic_poly.size() - 1);
  for (unsigned d = 1; 2 * d <= degree; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      const Poly divisor = monic_from_code(p, d, code);
      if (poly_mod(Poly(monic_poly.begin(), monic_poly.end()), divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec ff_make(Residue p, unsigned k) {
  if (!is_prime(p)) throw InvalidParameter("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidParameter("field extension degree must be >= 1");
  // Guard against overflow before computing p^k.
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw InvalidParameter("field order exceeds 2^16");
  }
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly candidate = monic_from_code(p, k, code);
    if (is_irreducible(p, candidate)) return FieldSpec{p, k, std::move(candidate)};
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldElement ff_zero(const FieldSpec& f) { return FieldElement{Poly(f.k, 0)}; }

FieldElement ff_one(const FieldSpec& f) { return ff_constant(f, 1); }

FieldElement ff_constant(const FieldSpec& f, Residue c) {
  FieldElement x = ff_zero(f);
  x.coeffs[0] = c % f.p;
  return x;
}

std::uint32_t ff_code(const FieldSpec& f, const FieldElement& x) {
  check_element(f, x);
  std::uint64_t code = 0;
  for (std::size_t i = f.k; i-- > 0;) code = code * f.p + x.coeffs[i];
  return static_cast<std::uint32_t>(code);
}

FieldElement ff_from_code(const FieldSpec& f, std::uint32_t code) {
  if (code >= f.size()) throw InvalidParameter("field element code out of range");
  FieldElement x = ff_zero(f);
  for (unsigned i = 0; i < f.k; ++i) {
    x.coeffs[i] = code % f.p;
    code /= f.p;
  }
  return x;
}

FieldElement ff_add(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
  check_element(f, x);
  check_element(f, y);
  FieldElement r = ff_zero(f);
  for (unsigned i = 0; i < f.k; ++i) r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % f.p;
  return r;
}

FieldElement ff_neg(const FieldSpec& f, const FieldElement& x) {
  check_element(f, x);
  FieldElement r = ff_zero(f);
  for (unsigned i = 0; i < f.k; ++i) r.coeffs[i] = (f.p - x.coeffs[i]) % f.p;
  return r;
}

FieldElement ff_sub(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
  return ff_add(f, x, ff_neg(f, y));
}

FieldElement ff_mul(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
  check_element(f, x);
  check_element(f, y);
  Poly prod(2 * f.k - 1, 0);
  for (unsigned i = 0; i < f.k; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < f.k; ++j) {
      const std::uint64_t t = static_cast<std::uint64_t>(x.coeffs[i]) * y.coeffs[j];
      prod[i + j] = static_cast<Residue>((prod[i + j] + t) % f.p);
    }
  }
  Poly rem = poly_mod(std::move(prod), f.modulus, f.p);
  rem.resize(f.k, 0);
  return FieldElement{std::move(rem)};
}

FieldElement ff_pow(const FieldSpec& f, const FieldElement& x, std::uint64_t e) {
  FieldElement result = ff_one(f);
  FieldElement base = x;
  while (e > 0) {
    if (e & 1) result = ff_mul(f, result, base);
    base = ff_mul(f, base, base);
    e >>= 1;
  }
  return result;
}

FieldElement ff_inv(const FieldSpec& f, const FieldElement& x) {
  if (x == ff_zero(f)) throw std::domain_error("division by zero in GF(" + std::to_string(f.size()) + ")");
  return ff_pow(f, x, f.size() - 2);
}

FieldElement frobenius(const FieldSpec& f, const FieldElement& x) { return ff_pow(f, x, f.p); }

FieldTables::FieldTables(FieldSpec spec) : spec_(std::move(spec)) {
  if (spec_.size() > 1024) throw InvalidParameter("FieldTables supports fields of order <= 1024");
  q_ = static_cast<std::uint32_t>(spec_.size());
  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  frob_.resize(q_);
  std::vector<FieldElement> elems;
  elems.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) elems.push_back(ff_from_code(spec_, c));
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg_[a] = ff_code(spec_, ff_neg(spec_, elems[a]));
    frob_[a] = ff_code(spec_, frobenius(spec_, elems[a]));
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<std::uint16_t>(ff_code(spec_, ff_add(spec_, elems[a], elems[b])));
      mul_[a * q_ + b] = static_cast<std::uint16_t>(ff_code(spec_, ff_mul(spec_, elems[a], elems[b])));
    }
  }
}

}  // namespace commgraph

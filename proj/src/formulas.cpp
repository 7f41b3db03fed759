#include "commgraph/formulas.hpp"

#include <map>

#include "commgraph/errors.hpp"
#include "commgraph/ff.hpp"

namespace commgraph {
namespace {

using boost::multiprecision::pow;
using Idx = std::array<BigInt, 4>;
using Parts = std::vector<CliquePart>;

BigInt B(std::int64_t v) { return BigInt(v); }
BigInt two_to(std::int64_t e) { return pow(BigInt(2), static_cast<unsigned>(e)); }

bool prime(std::int64_t p) { return p > 1 && is_prime(static_cast<std::uint64_t>(p)); }

CliqueDecomposition parts(Parts p) { return CliqueDecomposition::normalized(std::move(p)); }

// Equality of M2/E and M1/V computed from predicted values.
bool predicted_equality(const BigInt& m1, const BigInt& m2, const BigInt& v, const BigInt& e) {
  return e != 0 && v != 0 && m2 * v == m1 * e;
}

bool never(const Params&) { return false; }
bool always(const Params&) { return true; }

// Shared polynomial sets.
Idx dihedral_odd(const BigInt& m) {
  return {(m - 1) * pow(m - 2, 2), (m - 1) * pow(m - 2, 3) / 2, m * (m - 1) * (5 * m - 4),
          m * (m - 1) * (4 * m * m - 6 * m + 2)};
}

Idx dihedral_even(const BigInt& m) {
  return {(m - 2) * pow(m - 3, 2) + m, (m - 2) * pow(m - 3, 3) / 2 + m / 2, 5 * pow(m, 3) - 18 * m * m + 16 * m,
          4 * pow(m, 4) - 20 * pow(m, 3) + 32 * m * m - 16 * m};
}

Idx v8n_even_c(const BigInt& n) {
  return {(4 * n - 4) * pow(4 * n - 5, 2) + 36 * n, (2 * n - 2) * pow(4 * n - 5, 3) + 54 * n, 0, 0};
}

Idx v8n_even_stated(const BigInt& n) {
  Idx r = v8n_even_c(n);
  r[2] = 8 * n * (40 * n * n + 8 * n - 93);
  r[3] = 2 * n * (512 * pow(n, 3) - 1180 * n * n + 1024 * n - 229);
  return r;
}

Idx v8n_even_proof(const BigInt& n) {
  Idx r = v8n_even_c(n);
  r[2] = 8 * n * (40 * n * n - 72 * n + 32);
  r[3] = 2 * n * (512 * pow(n, 3) - 1280 * n * n + 1024 * n - 256);
  return r;
}

Idx v8n_odd(const BigInt& n) {
  return {(4 * n - 2) * pow(4 * n - 3, 2) + 4 * n, (2 * n - 1) * pow(4 * n - 3, 3) + 2 * n,
          16 * n * (20 * n * n - 18 * n + 4), 64 * n * (16 * pow(n, 3) - 20 * n * n + 8 * n - 1)};
}

Idx quot_dihedral(const BigInt& m, const BigInt& n) {
  return {n * (m - 1) * pow(m * n - n - 1, 2) + m * n * pow(n - 1, 2),
          ((m * n - n) * pow(m * n - n - 1, 3) + m * n * pow(n - 1, 3)) / 2,
          pow(n, 3) * (5 * pow(m, 3) - 9 * m * m + 4 * m),
          pow(n, 4) * (4 * pow(m, 4) - 10 * pow(m, 3) + 8 * m * m - 2 * m)};
}

Idx zpzp_stated(const BigInt& p, const BigInt& n) {
  const BigInt a = p * n - n;
  const BigInt inner = pow(p, 4) * n * n - 2 * pow(p, 3) * n * n + p * p * n * n;
  return {a * (p + 1) * pow(a - 1, 2), (p + 1) * a * pow(a - 1, 3) / 2, (p + 1) * a * inner,
          pow(p + 1, 2) * a * a * inner / 2};
}

Idx zpzp_proof(const BigInt& p, const BigInt& n) {
  Idx r = zpzp_stated(p, n);
  r[3] = (p * p * n - n) * (pow(p, 6) * pow(n, 3) - 3 * pow(p, 5) * pow(n, 3) + 3 * pow(p, 4) * pow(n, 3) -
                            pow(p, 3) * pow(n, 3)) /
         2;
  return r;
}

Idx pq_c(const BigInt& p, const BigInt& q) {
  return {(q - 1) * pow(q - 2, 2) + q * (p - 1) * pow(p - 2, 2),
          ((q - 1) * pow(q - 2, 3) + q * (p - 1) * pow(p - 2, 3)) / 2, 0, 0};
}

Idx pq_stated(const BigInt& p, const BigInt& q) {
  Idx r = pq_c(p, q);
  r[2] = pow(p, 3) * pow(q, 3) - 2 * p * p * q * q - p * pow(q, 3) - pow(p, 3) * q * q + p * q * q - 3 * q * q -
         3 * q * p * p + 2 * q + pow(p, 3) * q + pow(q, 3) - 4;
  r[3] = (pow(p, 4) * pow(q, 4) - 7 * pow(p, 3) * pow(q, 3) + 41 * p * p * q * q - 51 * p * q + 3 * pow(p, 4) * q * q +
          13 * q * q - 16 * pow(p, 3) * q * q + 14 * p * q * q + 2 * p * p * pow(q, 3) - 16 * p * pow(q, 3) +
          8 * p * p * q - 9 * q + 2 * p * pow(q, 4) + 2 * pow(p, 3) * q + pow(p, 4) * q + 18) /
         2;
  return r;
}

Idx pq_derived(const BigInt& p, const BigInt& q) {
  Idx r = pq_c(p, q);
  auto hp = [&](std::vector<BigInt> c) { return horner(c, p); };
  r[2] = horner({hp({1, 0, -2, 1}), hp({-2, 1, 2, -1}), hp({1, -1, 0, 0}), 0}, q);
  r[3] = horner({hp({1, 0, -3, 2, 0}), hp({-3, 2, 5, -4, 0}), hp({3, -4, -1, 2, 0}), hp({-1, 2, -1, 0, 0}), 0}, q) / 2;
  return r;
}

Idx psl_c(const BigInt& K) {
  return {pow(K, 5) - 4 * pow(K, 4) + 4 * pow(K, 3) + 4 * K * K - 5 * K - 4,
          (pow(K, 6) - 6 * pow(K, 5) + 14 * pow(K, 4) - 9 * pow(K, 3) - 15 * K * K + 15 * K + 8) / 2, 0, 0};
}

Idx psl_stated(const BigInt& K) {
  Idx r = psl_c(K);
  r[2] = pow(K, 9) - 5 * pow(K, 7) - pow(K, 6) + 9 * pow(K, 5) - 5 * pow(K, 3) - 3 * K * K + 3 * K;
  r[3] = (pow(K, 12) - 7 * pow(K, 10) - pow(K, 9) + 21 * pow(K, 8) - 26 * pow(K, 6) - 2 * pow(K, 5) +
          15 * pow(K, 4) + 3 * pow(K, 3) + 6 * K * K - 8 * K) /
         2;
  return r;
}

Idx psl_derived(const BigInt& K) {
  Idx r = psl_c(K);
  r[2] = horner({1, 0, -5, -1, 8, 2, -3, -1, -1, 0}, K);
  r[3] = horner({1, 0, -7, -1, 18, 3, -18, -2, 1, 2, 5, -2, 0}, K) / 2;
  return r;
}

CliqueDecomposition psl_parts(const BigInt& K) {
  return parts({{K + 1, K - 1}, {K * (K + 1) / 2, K - 2}, {K * (K - 1) / 2, K}});
}

std::vector<FormulaEntry> build_registry() {
  using T = FormulaTag;
  using P = Provenance;
  std::vector<FormulaEntry> r;
  auto add = [&](T tag, std::string case_name, P prov, bool auth, std::string note, std::vector<std::string> names,
                 std::function<bool(const Params&)> applies, std::function<CliqueDecomposition(const Params&)> dec,
                 std::function<Idx(const Params&)> idx, std::function<bool(const Params&)> eq) {
    r.push_back(FormulaEntry{tag, std::move(case_name), prov, auth, std::move(note), std::move(names),
                             std::move(applies), std::move(dec), std::move(idx), std::move(eq)});
  };
  // Equality read off the predicted values; used where no stated condition is trustworthy.
  auto from_values = [](std::function<CliqueDecomposition(const Params&)> dec,
                        std::function<Idx(const Params&)> idx) {
    return [dec, idx](const Params& x) {
      const auto d = dec(x);
      const auto v = idx(x);
      const BigInt V = d.vertex_total(), E = d.edge_total();
      return predicted_equality(v[0], v[1], V, E);
    };
  };

  // D_2m
  add(T::Dihedral, "m odd", P::Stated, true, "", {"m"},
      [](const Params& x) { return x[0] >= 3 && x[0] % 2 == 1; },
      [](const Params& x) { return parts({{1, B(x[0] - 1)}, {B(x[0]), 1}}); },
      [](const Params& x) { return dihedral_odd(B(x[0])); }, [](const Params& x) { return x[0] == 4; });
  add(T::Dihedral, "m even", P::Stated, true, "", {"m"},
      [](const Params& x) { return x[0] >= 4 && x[0] % 2 == 0; },
      [](const Params& x) { return parts({{1, B(x[0] - 2)}, {B(x[0] / 2), 2}}); },
      [](const Params& x) { return dihedral_even(B(x[0])); }, [](const Params& x) { return x[0] == 4; });

  // Q_4n
  add(T::Dicyclic, "all", P::Stated, true, "", {"n"}, [](const Params& x) { return x[0] >= 2; },
      [](const Params& x) { return parts({{1, B(2 * x[0] - 2)}, {B(x[0]), 2}}); },
      [](const Params& x) {
        const BigInt n = x[0];
        return Idx{(2 * n - 2) * pow(2 * n - 3, 2) + 2 * n, (n - 1) * pow(2 * n - 3, 3) + n,
                   40 * pow(n, 3) - 72 * n * n + 32 * n, 64 * pow(n, 4) - 160 * pow(n, 3) + 128 * n * n - 32 * n};
      },
      [](const Params& x) { return x[0] == 2; });

  // QD_{2^n}
  add(T::Quasidihedral, "all", P::Stated, true, "", {"n"}, [](const Params& x) { return x[0] >= 4 && x[0] <= 62; },
      [](const Params& x) {
        const BigInt N = two_to(x[0] - 1);
        return parts({{1, N - 2}, {N / 2, 2}});
      },
      [](const Params& x) {
        const std::int64_t n = x[0];
        const BigInt N = two_to(n - 1);
        return Idx{(N - 2) * pow(N - 3, 2) + N, (N / 2 - 1) * pow(N - 3, 3) + N / 2,
                   5 * two_to(3 * n - 3) - 18 * two_to(2 * n - 2) + 16 * two_to(n - 1),
                   4 * two_to(4 * n - 4) - 20 * two_to(3 * n - 3) + 32 * two_to(2 * n - 2) - 16 * two_to(n - 1)};
      },
      [](const Params& x) { return x[0] == 3; });

  // V_8n
  auto v8n_eq = [](const Params& x) { return x[0] == 1 || x[0] == 2; };
  auto v8n_even_parts = [](const Params& x) { return parts({{1, B(4 * x[0] - 4)}, {B(x[0]), 4}}); };
  auto v8n_odd_parts = [](const Params& x) { return parts({{1, B(4 * x[0] - 2)}, {B(2 * x[0]), 2}}); };
  add(T::V8n, "n even", P::Stated, false, "statement NC polynomials disagree with the proof", {"n"},
      [](const Params& x) { return x[0] >= 2 && x[0] % 2 == 0; }, v8n_even_parts,
      [](const Params& x) { return v8n_even_stated(B(x[0])); }, v8n_eq);
  add(T::V8n, "n even", P::Proof, true, "", {"n"}, [](const Params& x) { return x[0] >= 2 && x[0] % 2 == 0; },
      v8n_even_parts, [](const Params& x) { return v8n_even_proof(B(x[0])); }, v8n_eq);
  add(T::V8n, "n odd", P::Stated, true, "", {"n"}, [](const Params& x) { return x[0] >= 1 && x[0] % 2 == 1; },
      v8n_odd_parts, [](const Params& x) { return v8n_odd(B(x[0])); }, v8n_eq);

  // SD_8n: odd n has the V_8n even-case graph, even n the V_8n odd-case graph.
  auto sd_eq = [](const Params& x) { return x[0] == 2; };
  auto sd_odd = [](const Params& x) { return x[0] >= 3 && x[0] % 2 == 1; };
  auto sd_even = [](const Params& x) { return x[0] >= 2 && x[0] % 2 == 0; };
  add(T::SD8n, "n odd", P::Stated, false, "statement NC polynomials disagree with the proof", {"n"}, sd_odd,
      v8n_even_parts, [](const Params& x) { return v8n_even_stated(B(x[0])); }, sd_eq);
  add(T::SD8n, "n odd", P::Proof, true, "", {"n"}, sd_odd, v8n_even_parts,
      [](const Params& x) { return v8n_even_proof(B(x[0])); }, sd_eq);
  add(T::SD8n, "n even", P::Stated, false, "claimed equality at n=2, but K_6 + 4K_2 is not regular", {"n"},
      sd_even, v8n_odd_parts, [](const Params& x) { return v8n_odd(B(x[0])); }, sd_eq);
  add(T::SD8n, "n even", P::Derived, true, "", {"n"}, sd_even, v8n_odd_parts,
      [](const Params& x) { return v8n_odd(B(x[0])); },
      from_values(v8n_odd_parts, [](const Params& x) { return v8n_odd(B(x[0])); }));

  // G/Z ~ D_2m
  auto quot_d_parts = [](const Params& x) {
    return parts({{1, B((x[0] - 1) * x[1])}, {B(x[0]), B(x[1])}});
  };
  add(T::QuotDihedral, "all", P::Stated, true, "", {"m", "n"},
      [](const Params& x) { return x[0] >= 3 && x[1] >= 1; }, quot_d_parts,
      [](const Params& x) { return quot_dihedral(B(x[0]), B(x[1])); }, never);

  // U_6n
  add(T::U6n, "all", P::Stated, true, "", {"n"}, [](const Params& x) { return x[0] >= 1; },
      [](const Params& x) { return parts({{1, B(2 * x[0])}, {3, B(x[0])}}); },
      [](const Params& x) {
        const BigInt n = x[0];
        return Idx{2 * n * pow(2 * n - 1, 2) + 3 * n * pow(n - 1, 2),
                   (2 * n * pow(2 * n - 1, 3) + 3 * n * pow(n - 1, 3)) / 2, 66 * pow(n, 3), 120 * pow(n, 4)};
      },
      never);

  // M_2mn
  add(T::M2mn, "m odd", P::Stated, true, "", {"m", "n"},
      [](const Params& x) { return x[0] >= 3 && x[0] % 2 == 1 && x[1] >= 1; }, quot_d_parts,
      [](const Params& x) { return quot_dihedral(B(x[0]), B(x[1])); }, never);
  add(T::M2mn, "m even", P::Stated, true, "", {"m", "n"},
      [](const Params& x) { return x[0] >= 6 && x[0] % 2 == 0 && x[1] >= 1; },
      [](const Params& x) { return parts({{1, B((x[0] / 2 - 1) * 2 * x[1])}, {B(x[0] / 2), B(2 * x[1])}}); },
      [](const Params& x) {
        const BigInt m = x[0], n = x[1];
        return Idx{n * (m - 2) * pow(m * n - 2 * n - 1, 2) + m * n * pow(2 * n - 1, 2),
                   ((m * n - 2 * n) * pow(m * n - 2 * n - 1, 3) + m * n * pow(2 * n - 1, 3)) / 2,
                   pow(n, 3) * (5 * pow(m, 3) - 18 * m * m + 16 * m),
                   4 * pow(n, 4) * (pow(m, 4) - 5 * pow(m, 3) + 8 * m * m - 4 * m)};
      },
      never);

  // G/Z ~ Z_p x Z_p
  // n = |Z| >= 2: a trivial center would make G itself Z_p x Z_p.
  auto zp_applies = [](const Params& x) { return prime(x[0]) && x[1] >= 2; };
  auto zp_parts = [](const Params& x) { return parts({{B(x[0] + 1), B((x[0] - 1) * x[1])}}); };
  add(T::QuotZpZp, "all", P::Stated, false, "statement M2(NC) disagrees with the proof", {"p", "n"}, zp_applies,
      zp_parts, [](const Params& x) { return zpzp_stated(B(x[0]), B(x[1])); }, always);
  add(T::QuotZpZp, "all", P::Proof, true, "", {"p", "n"}, zp_applies, zp_parts,
      [](const Params& x) { return zpzp_proof(B(x[0]), B(x[1])); }, always);

  // G/Z ~ Sz(2)
  add(T::QuotSz2, "all", P::Stated, true, "", {"n"}, [](const Params& x) { return x[0] >= 1; },
      [](const Params& x) { return parts({{1, B(4 * x[0])}, {5, B(3 * x[0])}}); },
      [](const Params& x) {
        const BigInt n = x[0];
        return Idx{4 * n * pow(4 * n - 1, 2) + 15 * n * pow(3 * n - 1, 2),
                   (4 * n * pow(4 * n - 1, 3) + 15 * n * pow(3 * n - 1, 3)) / 2, 4740 * pow(n, 3), 37440 * pow(n, 4)};
      },
      never);

  // order pq
  auto pq_applies = [](const Params& x) {
    return prime(x[0]) && prime(x[1]) && x[0] < x[1] && (x[1] - 1) % x[0] == 0;
  };
  auto pq_parts = [](const Params& x) { return parts({{1, B(x[1] - 1)}, {B(x[1]), B(x[0] - 1)}}); };
  add(T::PQ, "all", P::Stated, false, "NC polynomials disagree with the complement formulas", {"p", "q"},
      pq_applies, pq_parts, [](const Params& x) { return pq_stated(B(x[0]), B(x[1])); }, never);
  add(T::PQ, "all", P::Derived, true, "", {"p", "q"}, pq_applies, pq_parts,
      [](const Params& x) { return pq_derived(B(x[0]), B(x[1])); }, never);

  // A(n, nu)
  add(T::HanakiA1, "all", P::Stated, true, "", {"n"}, [](const Params& x) { return x[0] >= 2 && x[0] <= 16; },
      [](const Params& x) {
        const BigInt t = two_to(x[0]);
        return parts({{t - 1, t}});
      },
      [](const Params& x) {
        const BigInt t = two_to(x[0]);
        return Idx{t * pow(t - 1, 3), t / 2 * pow(t - 1, 4), pow(t, 5) * (t - 5) + 4 * pow(t, 3) * (2 * t - 1),
                   pow(t, 7) * (t / 2 - 3) - pow(t, 6) * (t / 2 - 9) - 2 * pow(t, 4) * (5 * t - 2)};
      },
      always);

  // A(n, p)
  add(T::HanakiA2, "all", P::Stated, true, "", {"n", "p"},
      [](const Params& x) { return x[0] >= 1 && x[0] <= 16 && prime(x[1]); },
      [](const Params& x) {
        const BigInt P = pow(B(x[1]), static_cast<unsigned>(x[0]));
        return parts({{P + 1, P * P - P}});
      },
      [](const Params& x) {
        const BigInt P = pow(B(x[1]), static_cast<unsigned>(x[0]));
        return Idx{P * (P * P - 1) * pow(P * P - P - 1, 2), P * (P * P - 1) * pow(P * P - P - 1, 3) / 2,
                   pow(P, 8) * (P - 2) + pow(P, 5) * (2 * P - 1),
                   (pow(P, 3) - P) * (pow(P, 8) * (P - 3) + pow(P, 6) * (3 * P - 1)) / 2};
      },
      always);

  // GL(2, q)
  add(T::GL2, "all", P::Stated, true, "", {"q"},
      [](const Params& x) { return x[0] > 2 && prime_power(static_cast<std::uint64_t>(x[0])).exponent > 0; },
      [](const Params& x) {
        const BigInt q = x[0];
        return parts({{q * (q + 1) / 2, q * q - 3 * q + 2}, {q * (q - 1) / 2, q * q - q}, {q + 1, pow(q - 1, 2)}});
      },
      [](const Params& x) {
        const BigInt q = x[0];
        return Idx{q * (q - 1) * horner({1, -4, 4, 2, -4, 1, -1}, q),
                   q * (q - 1) * horner({1, -6, 14, -15, 3, 12, -16, 9, -1}, q) / 2,
                   (q - 1) * horner({1, -2, -4, 9, 5, -15, 1, 7, -2, 1, -1, 0}, q),
                   q * (q - 1) * horner({1, -3, -4, 19, 0, -47, 28, 43, -50, 11, 4, -12, 19, -11, 2}, q) / 2};
      },
      never);

  // PSL(2, 2^k)
  auto psl_applies = [](const Params& x) { return x[0] >= 2 && x[0] <= 16; };
  auto psl_dec = [](const Params& x) { return psl_parts(two_to(x[0])); };
  add(T::PSL2, "all", P::Stated, false, "NC polynomials disagree with the complement formulas", {"k"}, psl_applies,
      psl_dec, [](const Params& x) { return psl_stated(two_to(x[0])); }, never);
  add(T::PSL2, "all", P::Derived, true, "", {"k"}, psl_applies, psl_dec,
      [](const Params& x) { return psl_derived(two_to(x[0])); }, never);
  return r;
}

std::string field_value(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_string(FormulaTag t) {
  switch (t) {
    case FormulaTag::Dihedral: return "dihedral";
    case FormulaTag::Dicyclic: return "dicyclic";
    case FormulaTag::Quasidihedral: return "quasidihedral";
    case FormulaTag::SD8n: return "sd8n";
    case FormulaTag::V8n: return "v8n";
    case FormulaTag::U6n: return "u6n";
    case FormulaTag::M2mn: return "m2mn";
    case FormulaTag::PQ: return "pq";
    case FormulaTag::HanakiA1: return "hanaki1";
    case FormulaTag::HanakiA2: return "hanaki2";
    case FormulaTag::GL2: return "gl2";
    case FormulaTag::PSL2: return "psl2";
    case FormulaTag::QuotDihedral: return "quot-dihedral";
    case FormulaTag::QuotZpZp: return "quot-zpzp";
    case FormulaTag::QuotSz2: return "quot-sz2";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Stated: return "stated";
    case Provenance::Proof: return "proof";
    case Provenance::Derived: return "derived";
  }
  return "?";
}

std::string FormulaEntry::describe() const {
  return to_string(tag) + "[" + case_name + ", " + to_string(provenance) + "]";
}

const std::vector<FormulaEntry>& formula_registry() {
  static const std::vector<FormulaEntry> registry = build_registry();
  return registry;
}

BigInt horner(const std::vector<BigInt>& coeffs, const BigInt& x) {
  BigInt acc = 0;
  for (const auto& c : coeffs) acc = acc * x + c;
  return acc;
}

FormulaPrediction evaluate(const FormulaEntry& entry, const Params& params) {
  if (params.size() != entry.param_names.size() || !entry.applies(params))
    throw InvalidParameter(entry.describe() + ": parameters out of range");
  FormulaPrediction out;
  const auto idx = entry.indices(params);
  out.m1_c = idx[0];
  out.m2_c = idx[1];
  out.m1_nc = idx[2];
  out.m2_nc = idx[3];
  out.decomposition = entry.decomposition(params);
  out.vertices = out.decomposition.vertex_total();
  out.edges_c = out.decomposition.edge_total();
  out.edges_nc = out.vertices * (out.vertices - 1) / 2 - out.edges_c;
  out.equality_c = out.equality_nc = entry.equality(params);
  return out;
}

namespace {

struct SpecToTag {
  FormulaTag tag;
  Params params;
};

SpecToTag tag_of(const FamilySpec& spec) {
  Params p = family_params(spec);
  switch (spec.index()) {
    case 0: return {FormulaTag::Dihedral, p};
    case 1: return {FormulaTag::Dicyclic, p};
    case 2: return {FormulaTag::Quasidihedral, p};
    case 3: return {FormulaTag::SD8n, p};
    case 4: return {FormulaTag::V8n, p};
    case 5: return {FormulaTag::U6n, p};
    case 6: return {FormulaTag::M2mn, p};
    case 7: return {FormulaTag::PQ, p};
    case 8: return {FormulaTag::QuotSz2, {1}};  // Sz(2) has trivial center
    case 9: return {FormulaTag::HanakiA1, p};
    case 10: return {FormulaTag::HanakiA2, p};
    case 11: return {FormulaTag::GL2, p};
    default: return {FormulaTag::PSL2, p};
  }
}

void append_matches(std::vector<FormulaMatch>& out, FormulaTag tag, const Params& params) {
  for (const auto& e : formula_registry())
    if (e.tag == tag && e.param_names.size() == params.size() && e.applies(params)) out.push_back({&e, params});
}

}  // namespace

std::vector<FormulaMatch> registry_for(const FamilySpec& spec) {
  std::vector<FormulaMatch> out;
  const auto t = tag_of(spec);
  append_matches(out, t.tag, t.params);
  return out;
}

std::vector<FormulaMatch> registry_for(const FiniteGroup& g) {
  std::vector<FormulaMatch> out;
  const std::int64_t z = center(g).size();
  const FiniteGroup q = central_quotient(g);
  if (auto m = recognize_dihedral(q)) append_matches(out, FormulaTag::QuotDihedral, {std::int64_t{*m}, z});
  if (auto p = recognize_elementary_abelian_p2(q)) append_matches(out, FormulaTag::QuotZpZp, {std::int64_t{*p}, z});
  return out;
}

std::vector<FieldDiff> crosscheck(const FormulaEntry& entry, const Params& params, const GroupReport& obs) {
  const FormulaPrediction pred = evaluate(entry, params);
  std::vector<FieldDiff> diffs;
  auto cmp = [&](const char* field, const BigInt& p, const BigInt& o) {
    if (p != o) diffs.push_back({field, p.str(), o.str()});
  };
  cmp("M1_C", pred.m1_c, obs.commuting.m1);
  cmp("M2_C", pred.m2_c, obs.commuting.m2);
  cmp("M1_NC", pred.m1_nc, obs.non_commuting.m1);
  cmp("M2_NC", pred.m2_nc, obs.non_commuting.m2);
  cmp("V", pred.vertices, obs.commuting.vertices);
  cmp("E_C", pred.edges_c, obs.commuting.edges);
  cmp("E_NC", pred.edges_nc, obs.non_commuting.edges);
  const std::string observed_dec = obs.decomposition ? obs.decomposition->to_string() : "none";
  if (!obs.decomposition || *obs.decomposition != pred.decomposition)
    diffs.push_back({"decomposition", pred.decomposition.to_string(), observed_dec});
  const bool eq_c = obs.commuting_verdict.status == VerdictStatus::HoldsWithEquality;
  const bool eq_nc = obs.non_commuting_verdict.status == VerdictStatus::HoldsWithEquality;
  if (pred.equality_c != eq_c) diffs.push_back({"equality_C", field_value(pred.equality_c), field_value(eq_c)});
  if (pred.equality_nc != eq_nc) diffs.push_back({"equality_NC", field_value(pred.equality_nc), field_value(eq_nc)});
  return diffs;
}

std::vector<FieldDiff> crosscheck(const FormulaEntry& entry, const Params& params, const FiniteGroup& g) {
  return crosscheck(entry, params, group_report(g));
}

std::vector<ConsequenceTag> consequence_tags(const FiniteGroup& g) {
  std::vector<ConsequenceTag> out;
  const std::int64_t z = center(g).size();
  const std::uint32_t cent = count_distinct_centralizers(g);
  if (cent == 4) out.push_back({"4-centralizer", "Z_2xZ_2", FormulaTag::QuotZpZp, {2, z}});
  if (cent == 5) {
    if (z >= 2) out.push_back({"5-centralizer", "Z_3xZ_3", FormulaTag::QuotZpZp, {3, z}});
    out.push_back({"5-centralizer", "D_6", FormulaTag::QuotDihedral, {3, z}});
  }
  const Rational pr = commutativity_degree(g);
  struct Known {
    Rational pr;
    const char* quotient;
    FormulaTag tag;
    std::int64_t param;
  };
  const Known known[] = {
      {Rational(5, 14), "D_14", FormulaTag::QuotDihedral, 7}, {Rational(2, 5), "D_10", FormulaTag::QuotDihedral, 5},
      {Rational(11, 27), "Z_3xZ_3", FormulaTag::QuotZpZp, 3},  {Rational(1, 2), "D_6", FormulaTag::QuotDihedral, 3},
      {Rational(7, 16), "D_8", FormulaTag::QuotDihedral, 4},   {Rational(5, 8), "Z_2xZ_2", FormulaTag::QuotZpZp, 2},
  };
  for (const auto& k : known)
    if (pr == k.pr) out.push_back({"Pr(G)=" + fraction_string(pr), k.quotient, k.tag, {k.param, z}});
  if (g.order() > 1) {
    std::int64_t p = 2;
    while (g.order() % p != 0) ++p;
    const Rational target(BigInt(p * p + p - 1), BigInt(p * p * p));
    if (pr == target && p > 3)  // p = 2, 3 already covered by the table above
      out.push_back({"Pr(G)=(p^2+p-1)/p^3, p=" + std::to_string(p), "Z_" + std::to_string(p) + "xZ_" + std::to_string(p),
                     FormulaTag::QuotZpZp, {p, z}});
  }
  return out;
}

}  // namespace commgraph

#pragma once

// Closed-form Zagreb predictions for each group family and each quotient
// hypothesis, with their equality conditions.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "commgraph/families.hpp"
#include "commgraph/zagreb.hpp"

namespace commgraph {

enum class FormulaTag {
  Dihedral, Dicyclic, Quasidihedral, SD8n, V8n, U6n, M2mn, PQ, HanakiA1, HanakiA2, GL2, PSL2,
  QuotDihedral,  // G/Z ~ D_2m; params (m, n = |Z|)
  QuotZpZp,      // G/Z ~ Z_p x Z_p; params (p, n = |Z|)
  QuotSz2,       // G/Z ~ Sz(2); params (n = |Z|)
};

/// Stated: the polynomial as printed in a theorem statement.
/// Proof: taken from the proof where the statement disagrees with it.
/// Derived: recomputed from the clique decomposition where both are wrong.
enum class Provenance { Stated, Proof, Derived };

std::string to_string(FormulaTag t);
std::string to_string(Provenance p);

using Params = std::vector<std::int64_t>;

struct FormulaPrediction {
  BigInt m1_c, m2_c, m1_nc, m2_nc;
  BigInt vertices, edges_c, edges_nc;
  CliqueDecomposition decomposition;
  bool equality_c = false, equality_nc = false;
};

struct FormulaEntry {
  FormulaTag tag;
  std::string case_name;  // "m odd", "n even", "all"
  Provenance provenance;
  /// False when the oracle is known to disagree; diffs become warnings.
  bool authoritative;
  std::string note;
  std::vector<std::string> param_names;
  std::function<bool(const Params&)> applies;  // parameter range and case selector
  std::function<CliqueDecomposition(const Params&)> decomposition;
  std::function<std::array<BigInt, 4>(const Params&)> indices;  // M1_C, M2_C, M1_NC, M2_NC
  std::function<bool(const Params&)> equality;  // claimed equality in both graphs

  std::string describe() const;  // "v8n[n even, proof]"
};

const std::vector<FormulaEntry>& formula_registry();

/// Horner evaluation; coefficients highest degree first.
BigInt horner(const std::vector<BigInt>& coeffs, const BigInt& x);

/// Throws InvalidParameter when the entry does not apply to params.
FormulaPrediction evaluate(const FormulaEntry& entry, const Params& params);

struct FormulaMatch {
  const FormulaEntry* entry;
  Params params;
};

/// Entries of the family's own theorem that apply to these parameters.
std::vector<FormulaMatch> registry_for(const FamilySpec& spec);
/// Quotient entries found by recognizing G/Z(G), with n = |Z(G)|.
std::vector<FormulaMatch> registry_for(const FiniteGroup& g);

struct FieldDiff {
  std::string field, predicted, observed;
};

std::vector<FieldDiff> crosscheck(const FormulaEntry& entry, const Params& params, const GroupReport& observed);
std::vector<FieldDiff> crosscheck(const FormulaEntry& entry, const Params& params, const FiniteGroup& g);

/// Structural consequences that pin down G/Z(G): centralizer counts and
/// commutativity-degree values with a known quotient.
struct ConsequenceTag {
  std::string reason;     // e.g. "4-centralizer", "Pr(G)=5/8"
  std::string quotient;   // e.g. "Z_2xZ_2", "D_6"
  FormulaTag tag;
  Params params;          // entry params with n = |Z(G)|
};
std::vector<ConsequenceTag> consequence_tags(const FiniteGroup& g);

}  // namespace commgraph

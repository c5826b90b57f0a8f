#pragma once

// Algebra of the transversal T gate on a CSS code with one logical qubit:
// the groups G_a and H_a, the phase sum g, the coset E_a, tolerability,
// separation, factorization and the erasure identity.

#include <string>
#include <vector>

#include "colorgates/code.hpp"

namespace colorgates {

// U = prod_q T^{t_exponent * b_q} with every b_q odd.
struct TPattern {
  std::vector<int> b;
  int t_exponent = 1;

  std::size_t size() const noexcept { return b.size(); }
  // Exponent of T on qubit q, reduced to 0..7.
  int exponent(std::size_t q) const;

  // Signs from a two-coloring of the colex graph, qubit 0 gets +1, and
  // t_exponent = sum of b mod 8.
  static TPattern from_bipartition(const Colex& colex);
  static TPattern uniform(std::size_t n, int t_exponent);
};

enum class PauliKind : std::uint8_t { kX, kZ };

// A subgroup of P_X or P_Z given by a reduced basis of masks.
class GroupBasis {
 public:
  GroupBasis(PauliKind kind, const Gf2Span& span);
  GroupBasis(PauliKind kind, const BitMatrix& generators);

  PauliKind kind() const noexcept { return kind_; }
  const BitMatrix& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  bool contains(const BitVec& v) const { return span_.contains(v); }
  const Gf2Span& span() const noexcept { return span_; }
  friend bool operator==(const GroupBasis& a, const GroupBasis& b) {
    return a.kind_ == b.kind_ && a.basis_ == b.basis_;
  }
  // Group generated by both.
  GroupBasis join(const GroupBasis& other) const;

 private:
  PauliKind kind_;
  Gf2Span span_;
  BitMatrix basis_;  // canonical reduced rows
};

struct Coset {
  BitVec representative;
  GroupBasis subgroup;
  bool contains(const BitVec& z) const { return subgroup.contains(representative ^ z); }
  bool same_as(const Coset& o) const { return subgroup == o.subgroup && contains(o.representative); }
};

struct FactorResult {
  BitVec mask;
  bool in_coset = false;
};

struct ErasedChecks {
  std::vector<BitVec> generators;  // X masks
  bool all_commute = true;         // each generator commutes with H(phi)
};

class TgaContext {
 public:
  // Rejects codes with more or fewer than one logical qubit.
  TgaContext(const CssCode& code, TPattern pattern);

  const CssCode& code() const noexcept { return *code_; }
  const TPattern& pattern() const noexcept { return pattern_; }
  const BitVec& logical() const noexcept { return logical_; }

  GroupBasis group_G(const BitVec& alpha) const;
  GroupBasis group_H(const BitVec& alpha) const;

  // Sum of t_exponent * b_q over alpha, over the integers.
  long long g_sum(const BitVec& alpha) const;
  int g_mod8(const BitVec& alpha) const;

  // Production test: alpha & logical lies in H_alpha.
  bool is_tolerable(const BitVec& alpha) const;
  // Cross-checks of the same property.
  bool tolerable_by_rank(const BitVec& alpha) const;        // G_a == H_a
  bool tolerable_by_centralizer(const BitVec& alpha) const;  // a logical X commutes with G_a
  bool tolerable_by_definition(const BitVec& alpha) const;   // G_a holds no logical Z

  // Throws std::logic_error if the defining constraints are inconsistent
  // or an odd phase sum shows up, both signs of a broken code axiom.
  Coset e_coset(const BitVec& alpha) const;

  // The tolerable member of the syndrome class of phi.
  BitVec tolerable_preimage(const BitVec& phi) const;
  GroupBasis H_of(const BitVec& phi) const;
  Coset E_of(const BitVec& phi) const;

  bool separated(const std::vector<BitVec>& phis) const;
  // Sufficient test on the supports: every cell sees at most one alpha_i
  // with a non-stabilizer overlap.
  bool separation_criterion(const std::vector<BitVec>& alphas) const;
  // prod z_i * prod_{i<j} Z_{a_i & a_j}, checked against E of the sum.
  FactorResult factor_e(const std::vector<BitVec>& alphas, const std::vector<BitVec>& zs) const;

  bool erasure_identity_check(const BitVec& alpha, const BitVec& omega) const;
  ErasedChecks erased_checks(const BitVec& phi) const;

 private:
  const CssCode* code_;
  TPattern pattern_;
  BitVec logical_;
  BitMatrix x_centralizer_basis_;
};

struct AxiomReport {
  bool css = false;
  bool invariance = false;
  bool single_logical = false;
  bool undetectable_relation = false;
  std::size_t num_logical = 0;
  double leakage = 0.0;
  std::string detail;
  bool ok() const noexcept { return css && invariance && single_logical && undetectable_relation; }
};

// Axioms 1-4. The invariance axiom runs the statevector oracle and needs at
// most 16 qubits; larger codes report it as unchecked (false).
AxiomReport check_axioms(const CssCode& code, const TPattern& pattern);

// The relation between X and Z undetectable errors, compared as row spaces.
bool undetectable_relation_holds(const CssCode& code);

}  // namespace colorgates

#pragma once

// Transversal Clifford gates on one or two color codes and the way they
// propagate Pauli errors and syndromes. The diagonal gates are stored as
// per-qubit powers of P plus CZ pairs over the joint qubit register, so the
// conjugation below is the direct algebraic one; the syndrome maps use the
// branching-point and endpoint formulas instead, and tests compare the two.

#include <string>
#include <vector>

#include "colorgates/code.hpp"
#include "colorgates/tga.hpp"

namespace colorgates {

enum class GateKind : std::uint8_t { kStandardP, kFacetP, kFacetCP, kCNot };

std::string to_string(GateKind k);

class CliffordGate {
 public:
  // U^2 for the transversal T pattern: P^{e_q} on every qubit.
  static CliffordGate standard_p(const CssCode& code, const TPattern& pattern);
  // P^{e_q} on the qubits of facet r only.
  static CliffordGate facet_p(const CssCode& code, const TPattern& pattern, std::size_t r);
  // CZ between facet ra of a and facet rb of b, paired by a plaquette-preserving bijection.
  static CliffordGate facet_cp(const CssCode& a, std::size_t ra, const CssCode& b, std::size_t rb);
  // Transversal CNOT from a (control) to b (target); the codes must have equal size.
  static CliffordGate cnot(const CssCode& a, const CssCode& b);

  GateKind kind() const noexcept { return kind_; }
  std::size_t num_codes() const noexcept { return codes_.size(); }
  const CssCode& code(std::size_t i) const { return *codes_.at(i); }
  std::size_t facet_a() const noexcept { return ra_; }
  std::size_t facet_b() const noexcept { return rb_; }
  // Power of P per joint qubit, 0..3.
  const std::vector<int>& p_powers() const noexcept { return p_powers_; }
  // CZ pairs in joint indices.
  const std::vector<std::pair<std::size_t, std::size_t>>& cz_pairs() const noexcept { return cz_; }
  // Facet pairing for facet-CP: qubit q of a maps to pairing()[q] of b (global indices, only
  // facet qubits are meaningful).
  const std::vector<std::size_t>& pairing() const noexcept { return pairing_; }
  std::size_t joint_size() const noexcept { return offsets_.back(); }
  std::string describe() const;

 private:
  friend struct GateAccess;
  GateKind kind_ = GateKind::kStandardP;
  std::vector<const CssCode*> codes_;
  std::vector<std::size_t> offsets_{0};
  std::size_t ra_ = 0, rb_ = 0;
  std::vector<int> p_powers_;
  std::vector<std::pair<std::size_t, std::size_t>> cz_;
  std::vector<std::size_t> pairing_;
  std::vector<std::size_t> face_ab_, face_ba_;  // facet-face correspondence for facet-CP
};

// i^phase X_x Z_z, with the X factor to the left.
struct PhasedPauli {
  std::vector<PauliOp> parts;  // one per code of the gate
  int phase = 0;               // 0..3
};

// U p U^dag exactly, phase mod 4 included. `parts` holds one operator per code.
PhasedPauli conjugate_phased(const CliffordGate& gate, const std::vector<PauliOp>& parts);
std::vector<PauliOp> conjugate_pauli(const CliffordGate& gate, const std::vector<PauliOp>& parts);

// (xi, phi) -> (xi + br(phi), phi) for standard-P, xi + end_r(phi) for
// facet-P, the facet endpoint pattern sent across the pairing for facet-CP,
// and flux forward / charge backward for CNOT.
std::vector<SyndromePair> syndrome_map(const CliffordGate& gate, const std::vector<SyndromePair>& s);

// The operator with the mapped syndrome supported inside the light cone of
// supp(p), unique up to stabilizers. Throws std::invalid_argument when that
// region supports a logical operator.
std::vector<PauliOp> reconstruct_propagated(const CliffordGate& gate, const std::vector<PauliOp>& parts);

// Whether two operators agree up to X and Z stabilizers of each code.
bool equal_up_to_stabilizers(const CliffordGate& gate, const std::vector<PauliOp>& a,
                             const std::vector<PauliOp>& b);

// Plaquette-preserving bijection between the qubits of two facet codes
// (local indices); empty if none exists.
std::vector<std::size_t> facet_isomorphism(const FacetCode& a, const FacetCode& b);

}  // namespace colorgates

#pragma once

// Dense statevector oracle for codes of at most 16 qubits. Qubit q is bit q
// of the basis index.

#include <complex>
#include <string>
#include <vector>

#include "colorgates/code.hpp"
#include "colorgates/tga.hpp"

namespace colorgates {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxStateQubits = 16;

class StateVector {
 public:
  explicit StateVector(std::size_t n);  // |0...0>
  static StateVector basis(std::size_t n, std::uint64_t index);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const noexcept { return amps_; }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();
  void apply_x(const BitVec& mask);
  void apply_z(const BitVec& mask);
  // Multiplies basis state i by exp(i*pi/4 * sum_{q in i} e_q).
  void apply_t_powers(const std::vector<int>& exponents);
  // CZ between each listed (a, b) pair.
  void apply_cz(const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  // State (1 + X_s)/2 applied in place.
  void project_plus_x(const BitVec& mask);
  double expectation_x(const BitVec& mask) const;
  double expectation_z(const BitVec& mask) const;

  StateVector& operator+=(const StateVector& o);
  StateVector& operator*=(cplx c);
  friend cplx inner(const StateVector& a, const StateVector& b);  // <a|b>

 private:
  std::size_t n_;
  std::vector<cplx> amps_;
};

// Per-qubit T exponents of a pattern, optionally raised to a power and
// restricted to a support.
std::vector<int> t_exponents(const TPattern& pattern, int power = 1);
std::vector<int> t_exponents_on(const TPattern& pattern, const BitVec& support, int power);

struct LogicalBasis {
  StateVector zero;
  StateVector one;
};

// Stabilizer and logical data needed to encode a single logical qubit.
struct EncodingSpec {
  std::size_t n = 0;
  std::vector<BitVec> x_checks;
  std::vector<BitVec> z_checks;
  BitVec logical_x;
  BitVec logical_z;
};
EncodingSpec encoding_of(const CssCode& code);
// Two-dimensional color code of a facet, plaquettes carrying both X and Z.
EncodingSpec encoding_of(const FacetCode& facet);

LogicalBasis logical_basis(const EncodingSpec& spec);
LogicalBasis logical_basis(const CssCode& code);

struct LogicalActionReport {
  std::string gate;          // I, T, P, T^3, Z, T^5, P^dag or T^7
  int power_of_t = 0;        // relative phase in units of pi/4
  double global_phase = 0;   // radians
  double deviation = 0;      // distance from the named gate, leakage included
  double leakage = 0;        // weight outside the code space
};

// Maps the logical basis through a diagonal transversal gate and identifies
// the resulting logical diagonal gate.
LogicalActionReport logical_action(const EncodingSpec& spec, const LogicalBasis& basis,
                                   const std::vector<int>& exponents);
LogicalActionReport logical_action_check(const CssCode& code, const TPattern& pattern, int power = 1);

// Largest weight that U pushes out of the code space over the logical basis
// and the |+>, |+i> states.
double code_space_leakage(const CssCode& code, const TPattern& pattern);

// Logical action of transversal CZ between two copies of a facet code,
// qubit i of the first paired with perm[i] of the second. The expected
// result is logical CZ: diag(1, 1, 1, -1) up to global phase.
struct TwoQubitActionReport {
  std::vector<cplx> diagonal;  // on |00>, |01>, |10>, |11>, phase-normalized
  double deviation_from_cz = 0;
  double leakage = 0;
};
TwoQubitActionReport facet_cz_action(const FacetCode& a, const FacetCode& b,
                                     const std::vector<std::size_t>& perm);

// Exact trace distance between the two sides of the channel identity, over
// the inputs |0>, |1>, |+>, |+i>.
struct Theorem1Report {
  bool tolerable = false;
  bool used_w = false;
  std::vector<double> distances;  // one per input state
  double max_distance = 0;
};
Theorem1Report theorem1_check(const TgaContext& tga, const BitVec& x_mask);
// Same check with w forced to the identity even for intolerable errors.
Theorem1Report theorem1_check_without_w(const TgaContext& tga, const BitVec& x_mask);

// Trace distance between sum_i p_i |v_i><v_i| and sum_j q_j |u_j><u_j|.
double mixture_trace_distance(const std::vector<StateVector>& v, const std::vector<double>& p,
                              const std::vector<StateVector>& u, const std::vector<double>& q);

// Diagonal of A_alpha^dag P_0 expanded over Z masks (Walsh-Hadamard
// transform); returns the masks with non-negligible weight.
std::vector<BitVec> diagonal_z_support(const CssCode& code, const TPattern& pattern, const BitVec& alpha,
                                       double tol = 1e-9);

}  // namespace colorgates

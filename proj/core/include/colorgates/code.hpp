#pragma once

// The CSS color code of a colex: X checks on cells, Z checks on faces.
// Every solver the queries need is built once in the constructor, so a
// CssCode is immutable and can be shared across threads.

#include <memory>
#include <optional>
#include <vector>

#include "colorgates/charges.hpp"
#include "colorgates/colex.hpp"
#include "colorgates/gf2.hpp"

namespace colorgates {

// Phase-free Pauli operator X_x Z_z.
struct PauliOp {
  BitVec x;
  BitVec z;

  static PauliOp identity(std::size_t n) { return {BitVec(n), BitVec(n)}; }
  static PauliOp x_type(BitVec m) { return {m, BitVec(m.size())}; }
  static PauliOp z_type(BitVec m) { return {BitVec(m.size()), m}; }

  std::size_t size() const noexcept { return x.size(); }
  bool is_identity() const noexcept { return x.none() && z.none(); }
  PauliOp& operator*=(const PauliOp& o) {
    x ^= o.x;
    z ^= o.z;
    return *this;
  }
  friend PauliOp operator*(PauliOp a, const PauliOp& b) { return a *= b; }
  friend bool operator==(const PauliOp&, const PauliOp&) = default;
};

// Anticommuting cells (charge) and faces (flux).
struct SyndromePair {
  BitVec charge;
  BitVec flux;
  friend bool operator==(const SyndromePair&, const SyndromePair&) = default;
  SyndromePair& operator+=(const SyndromePair& o) {
    charge ^= o.charge;
    flux ^= o.flux;
    return *this;
  }
};

struct FluxComponent {
  BitVec faces;
  BitVec cells;            // cells touched by the component
  std::uint8_t facets = 0;  // bit r set when a face lies on facet r
  bool gauss_ok = true;    // boundary vanishes on every cell
};

class CssCode {
 public:
  explicit CssCode(Colex colex);
  explicit CssCode(std::shared_ptr<const Colex> colex);

  const Colex& colex() const noexcept { return *colex_; }
  std::size_t n() const noexcept { return colex_->n_qubits(); }
  std::size_t num_cells() const noexcept { return colex_->cells().size(); }
  std::size_t num_faces() const noexcept { return colex_->faces().size(); }

  const BitMatrix& sx() const noexcept { return sx_; }
  const BitMatrix& sz() const noexcept { return sz_; }
  const Gf2Span& sx_span() const noexcept { return sx_span_; }
  const Gf2Span& sz_span() const noexcept { return sz_span_; }
  std::size_t rank_sx() const noexcept { return sx_span_.dim(); }
  std::size_t rank_sz() const noexcept { return sz_span_.dim(); }
  std::size_t num_logical() const noexcept { return n() - rank_sx() - rank_sz(); }

  // X masks commuting with every Z check, and Z masks commuting with every X check.
  const BitMatrix& x_centralizer() const noexcept { return x_centralizer_; }
  const BitMatrix& z_centralizer() const noexcept { return z_centralizer_; }

  // Facet operators of facet 0, for codes with facets.
  std::optional<BitVec> logical_mask() const;

  BitVec flux_of(const BitVec& x_mask) const;
  BitVec charge_of(const BitVec& z_mask) const;
  SyndromePair syndrome(const PauliOp& p) const;

  // Per cell: the flux-group sum of the labels of its faces in phi.
  std::vector<Flux> monopole(const BitVec& phi) const;
  bool gauss_ok(const BitVec& phi) const;

  // An X mask whose flux is phi, if there is one.
  std::optional<BitVec> has_preimage(const BitVec& phi) const;
  // A Z mask whose charge is xi, if there is one.
  std::optional<BitVec> charge_preimage(const BitVec& xi) const;

  // Components linked through shared cells; faces on facets do not connect.
  std::vector<FluxComponent> connected_components(const BitVec& phi) const;

  // Cells with an odd number of phi-faces of some label.
  BitVec branching_points(const BitVec& phi) const;
  // Cells owning a phi-face that lies on facet r.
  BitVec endpoints_on_facet(const BitVec& phi, std::size_t r) const;

  // X mask inside `allowed` with flux phi.
  std::optional<BitVec> solve_x_within(const BitVec& phi, const BitVec& allowed) const;
  // Z mask inside `allowed` in the class target + span(S_Z).
  std::optional<BitVec> solve_z_class_within(const BitVec& target, const BitVec& allowed) const;
  // Z mask inside `allowed` with charge xi.
  std::optional<BitVec> solve_z_charge_within(const BitVec& xi, const BitVec& allowed) const;

  // True when some X (resp. Z) logical operator is supported inside `allowed`.
  bool x_logical_within(const BitVec& allowed) const;
  bool z_logical_within(const BitVec& allowed) const;

  // Z on both ends of every edge of color k along the path (edge indices).
  BitVec string_operator(const std::vector<std::size_t>& path, Color k) const;
  // Product of X_f over the faces of `surface` whose label is the complement of h.
  BitVec membrane_operator(const BitVec& surface, ColorPair h) const;

  // For every pair of colors, the X products over all containers of each
  // color agree.
  bool charge_conservation_check() const;

 private:
  void build();

  std::shared_ptr<const Colex> colex_;
  BitMatrix sx_;
  BitMatrix sz_;
  BitMatrix sz_columns_;  // row q: faces containing qubit q
  BitMatrix sx_columns_;  // row q: cells containing qubit q
  Gf2Span sx_span_;
  Gf2Span sz_span_;
  BitMatrix x_centralizer_;
  BitMatrix z_centralizer_;
  std::shared_ptr<const Gf2Solver> flux_solver_;
  std::shared_ptr<const Gf2Solver> charge_solver_;
};

}  // namespace colorgates

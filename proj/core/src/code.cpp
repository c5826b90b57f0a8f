#include "colorgates/code.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace colorgates {

namespace {

void check_length(const BitVec& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw std::invalid_argument(std::string(what) + ": expected length " + std::to_string(n) +
                                ", got " + std::to_string(v.size()));
  }
}

// Rows of m restricted to the columns listed in keep, renumbered densely.
BitMatrix restrict_columns(const BitMatrix& m, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> local(m.cols(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = i;
  BitMatrix out(keep.size());
  for (const auto& row : m.row_vectors()) {
    BitVec r(keep.size());
    for (auto c : row.indices()) {
      if (local[c] < keep.size()) r.set(local[c]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

BitVec restrict_vector(const BitVec& v, const std::vector<std::size_t>& keep) {
  BitVec r(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) r.set(i, v.test(keep[i]));
  return r;
}

// Solve y . rows[allowed] = rhs over the rows picked by `allowed`.
std::optional<BitVec> solve_over_rows(const BitMatrix& rows, const BitVec& allowed, const BitVec& rhs) {
  const auto picked = allowed.indices();
  BitMatrix sub(rows.cols());
  for (auto q : picked) sub.push_back(rows.row(q));
  auto y = Gf2Solver(sub).solve(rhs);
  if (!y) return std::nullopt;
  BitVec out(rows.rows());
  for (auto i : y->indices()) out.set(picked[i]);
  return out;
}

// Some y . rows[allowed] = 0 whose lift lies outside `stabilizers`.
bool kernel_escapes(const BitMatrix& rows, const BitVec& allowed, const Gf2Span& stabilizers) {
  const auto picked = allowed.indices();
  if (picked.empty()) return false;
  BitMatrix sub(rows.cols());
  for (auto q : picked) sub.push_back(rows.row(q));
  const auto kernel = null_space(transpose(sub));
  for (const auto& y : kernel.row_vectors()) {
    BitVec lift(rows.rows());
    for (auto i : y.indices()) lift.set(picked[i]);
    if (!stabilizers.contains(lift)) return true;
  }
  return false;
}

}  // namespace

CssCode::CssCode(Colex colex) : colex_(std::make_shared<const Colex>(std::move(colex))) { build(); }

CssCode::CssCode(std::shared_ptr<const Colex> colex) : colex_(std::move(colex)) {
  if (!colex_) throw std::invalid_argument("CssCode: null colex");
  build();
}

void CssCode::build() {
  const std::size_t n = colex_->n_qubits();
  sx_ = BitMatrix(n);
  for (const auto& c : colex_->cells()) sx_.push_back(c.qubits);
  sz_ = BitMatrix(n);
  for (const auto& f : colex_->faces()) sz_.push_back(f.qubits);
  sx_columns_ = transpose(sx_);
  sz_columns_ = transpose(sz_);
  sx_span_ = Gf2Span(sx_);
  sz_span_ = Gf2Span(sz_);
  x_centralizer_ = null_space(sz_);
  z_centralizer_ = null_space(sx_);
  flux_solver_ = std::make_shared<const Gf2Solver>(sz_columns_);
  charge_solver_ = std::make_shared<const Gf2Solver>(sx_columns_);
}

std::optional<BitVec> CssCode::logical_mask() const {
  if (colex_->facets().empty()) return std::nullopt;
  return colex_->facets()[0].qubits;
}

BitVec CssCode::flux_of(const BitVec& x_mask) const {
  check_length(x_mask, n(), "flux_of");
  return sz_.apply(x_mask);
}

BitVec CssCode::charge_of(const BitVec& z_mask) const {
  check_length(z_mask, n(), "charge_of");
  return sx_.apply(z_mask);
}

SyndromePair CssCode::syndrome(const PauliOp& p) const {
  check_length(p.x, n(), "syndrome");
  check_length(p.z, n(), "syndrome");
  return {charge_of(p.z), flux_of(p.x)};
}

std::vector<Flux> CssCode::monopole(const BitVec& phi) const {
  check_length(phi, num_faces(), "monopole");
  std::vector<Flux> out(num_cells());
  for (auto fi : phi.indices()) {
    const auto& f = colex_->faces()[fi];
    out[f.containers[0].index] += Flux(f.label);
    if (!f.on_facet()) out[f.containers[1].index] += Flux(f.label);
  }
  return out;
}

bool CssCode::gauss_ok(const BitVec& phi) const {
  for (auto m : monopole(phi)) {
    if (!m.zero()) return false;
  }
  return true;
}

std::optional<BitVec> CssCode::has_preimage(const BitVec& phi) const {
  check_length(phi, num_faces(), "has_preimage");
  return flux_solver_->solve(phi);
}

std::optional<BitVec> CssCode::charge_preimage(const BitVec& xi) const {
  check_length(xi, num_cells(), "charge_preimage");
  return charge_solver_->solve(xi);
}

std::vector<FluxComponent> CssCode::connected_components(const BitVec& phi) const {
  check_length(phi, num_faces(), "connected_components");
  const auto faces = phi.indices();
  std::vector<std::size_t> parent(faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<std::size_t> first_at_cell(num_cells(), faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = colex_->faces()[faces[i]];
    for (int side = 0; side < 2; ++side) {
      if (side == 1 && f.on_facet()) break;
      const auto c = f.containers[side].index;
      if (first_at_cell[c] == faces.size()) {
        first_at_cell[c] = i;
      } else {
        parent[find(i)] = find(first_at_cell[c]);
      }
    }
  }
  std::vector<std::size_t> slot(faces.size(), faces.size());
  std::vector<FluxComponent> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto root = find(i);
    if (slot[root] == faces.size()) {
      slot[root] = out.size();
      out.push_back({BitVec(num_faces()), BitVec(num_cells()), 0, true});
    }
    auto& comp = out[slot[root]];
    const auto& f = colex_->faces()[faces[i]];
    comp.faces.set(faces[i]);
    comp.cells.set(f.containers[0].index);
    if (f.on_facet()) {
      comp.facets = static_cast<std::uint8_t>(comp.facets | (1U << f.containers[1].index));
    } else {
      comp.cells.set(f.containers[1].index);
    }
  }
  for (auto& comp : out) comp.gauss_ok = gauss_ok(comp.faces);
  return out;
}

BitVec CssCode::branching_points(const BitVec& phi) const {
  check_length(phi, num_faces(), "branching_points");
  std::vector<std::array<int, 6>> counts(num_cells(), std::array<int, 6>{});
  for (auto fi : phi.indices()) {
    const auto& f = colex_->faces()[fi];
    ++counts[f.containers[0].index][f.label.index()];
    if (!f.on_facet()) ++counts[f.containers[1].index][f.label.index()];
  }
  BitVec out(num_cells());
  for (std::size_t c = 0; c < num_cells(); ++c) {
    for (int k : counts[c]) {
      if (k % 2 != 0) out.set(c);
    }
  }
  return out;
}

BitVec CssCode::endpoints_on_facet(const BitVec& phi, std::size_t r) const {
  check_length(phi, num_faces(), "endpoints_on_facet");
  if (r >= colex_->facets().size()) throw std::out_of_range("endpoints_on_facet: no such facet");
  BitVec out(num_cells());
  for (auto fi : colex_->facet_faces()[r]) {
    if (phi.test(fi)) out.set(colex_->faces()[fi].containers[0].index);
  }
  return out;
}

std::optional<BitVec> CssCode::solve_x_within(const BitVec& phi, const BitVec& allowed) const {
  check_length(phi, num_faces(), "solve_x_within");
  check_length(allowed, n(), "solve_x_within");
  return solve_over_rows(sz_columns_, allowed, phi);
}

std::optional<BitVec> CssCode::solve_z_charge_within(const BitVec& xi, const BitVec& allowed) const {
  check_length(xi, num_cells(), "solve_z_charge_within");
  check_length(allowed, n(), "solve_z_charge_within");
  return solve_over_rows(sx_columns_, allowed, xi);
}

bool CssCode::x_logical_within(const BitVec& allowed) const {
  check_length(allowed, n(), "x_logical_within");
  return kernel_escapes(sz_columns_, allowed, sx_span_);
}

bool CssCode::z_logical_within(const BitVec& allowed) const {
  check_length(allowed, n(), "z_logical_within");
  return kernel_escapes(sx_columns_, allowed, sz_span_);
}

std::optional<BitVec> CssCode::solve_z_class_within(const BitVec& target, const BitVec& allowed) const {
  check_length(target, n(), "solve_z_class_within");
  check_length(allowed, n(), "solve_z_class_within");
  const auto outside = (~allowed).indices();
  if (outside.empty()) return target;
  // Choose face rows s so that target + s.S_Z vanishes outside `allowed`.
  auto s = Gf2Solver(restrict_columns(sz_, outside)).solve(restrict_vector(target, outside));
  if (!s) return std::nullopt;
  return target ^ sz_.combine(*s);
}

BitVec CssCode::string_operator(const std::vector<std::size_t>& path, Color k) const {
  std::set<std::size_t> seen;
  BitVec z(n());
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= colex_->edges().size()) throw std::invalid_argument("string_operator: no such edge");
    if (!seen.insert(path[i]).second) throw std::invalid_argument("string_operator: duplicated edge");
    const auto& e = colex_->edges()[path[i]];
    if (i > 0) {
      const auto& p = colex_->edges()[path[i - 1]];
      if (e.a != p.a && e.a != p.b && e.b != p.a && e.b != p.b) {
        throw std::invalid_argument("string_operator: consecutive edges do not touch");
      }
    }
    if (e.color == k) {
      z.flip(e.a);
      z.flip(e.b);
    }
  }
  return z;
}

BitVec CssCode::membrane_operator(const BitVec& surface, ColorPair h) const {
  check_length(surface, num_faces(), "membrane_operator");
  const auto want = h.complement();
  BitVec x(n());
  for (auto fi : surface.indices()) {
    const auto& f = colex_->faces()[fi];
    if (f.label == want) x ^= f.qubits;
  }
  return x;
}

bool CssCode::charge_conservation_check() const {
  std::array<BitVec, kNumColors> w;
  w.fill(BitVec(n()));
  for (const auto* list : {&colex_->cells(), &colex_->facets()}) {
    for (const auto& c : *list) w[c.color] ^= c.qubits;
  }
  for (Color c = 1; c < kNumColors; ++c) {
    if (w[c] != w[0]) return false;
  }
  return true;
}

}  // namespace colorgates

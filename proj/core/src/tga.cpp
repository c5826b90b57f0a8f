#include "colorgates/tga.hpp"

#include <deque>
#include <stdexcept>

#include "colorgates/statevec.hpp"

namespace colorgates {

int TPattern::exponent(std::size_t q) const {
  const int e = (t_exponent * b.at(q)) % 8;
  return e < 0 ? e + 8 : e;
}

TPattern TPattern::from_bipartition(const Colex& colex) {
  const std::size_t n = colex.n_qubits();
  TPattern p;
  p.b.assign(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (p.b[start] != 0) continue;
    p.b[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto u : colex.adjacency()[v]) {
        if (p.b[u] == 0) {
          p.b[u] = -p.b[v];
          queue.push_back(u);
        } else if (p.b[u] == p.b[v]) {
          throw std::invalid_argument("colex graph is not bipartite");
        }
      }
    }
  }
  int sum = 0;
  for (int s : p.b) sum += s;
  p.t_exponent = ((sum % 8) + 8) % 8;
  return p;
}

TPattern TPattern::uniform(std::size_t n, int t_exponent) {
  TPattern p;
  p.b.assign(n, 1);
  p.t_exponent = t_exponent;
  return p;
}

// ---------------------------------------------------------------------------

GroupBasis::GroupBasis(PauliKind kind, const Gf2Span& span)
    : kind_(kind), span_(span), basis_(span.canonical_basis()) {}

GroupBasis::GroupBasis(PauliKind kind, const BitMatrix& generators)
    : GroupBasis(kind, Gf2Span(generators)) {}

GroupBasis GroupBasis::join(const GroupBasis& other) const {
  if (kind_ != other.kind_) throw std::invalid_argument("GroupBasis::join: mixed Pauli kinds");
  Gf2Span s = span_;
  s.insert_all(other.basis_);
  return GroupBasis(kind_, s);
}

// ---------------------------------------------------------------------------

TgaContext::TgaContext(const CssCode& code, TPattern pattern) : code_(&code), pattern_(std::move(pattern)) {
  if (pattern_.size() != code.n()) throw std::invalid_argument("TPattern size does not match the code");
  for (int s : pattern_.b) {
    if (s % 2 == 0) throw std::invalid_argument("TPattern entries must be odd");
  }
  if (code.num_logical() != 1) {
    throw std::invalid_argument("transversal-T algebra needs exactly one logical qubit, code has " +
                                std::to_string(code.num_logical()));
  }
  // Any X centralizer element outside span(S_X) is a logical X.
  x_centralizer_basis_ = code.x_centralizer();
  logical_ = BitVec(code.n());
  for (const auto& v : x_centralizer_basis_.row_vectors()) {
    if (!code.sx_span().contains(v)) {
      logical_ = v;
      break;
    }
  }
  if (auto facet = code.logical_mask()) logical_ = *facet;
}

GroupBasis TgaContext::group_G(const BitVec& alpha) const {
  Gf2Span s = code_->sz_span();
  for (const auto& beta : x_centralizer_basis_.row_vectors()) s.insert(alpha & beta);
  return GroupBasis(PauliKind::kZ, s);
}

GroupBasis TgaContext::group_H(const BitVec& alpha) const {
  Gf2Span s = code_->sz_span();
  for (const auto& beta : code_->sx().row_vectors()) s.insert(alpha & beta);
  return GroupBasis(PauliKind::kZ, s);
}

long long TgaContext::g_sum(const BitVec& alpha) const {
  long long g = 0;
  for (auto q : alpha.indices()) g += static_cast<long long>(pattern_.t_exponent) * pattern_.b[q];
  return g;
}

int TgaContext::g_mod8(const BitVec& alpha) const {
  return static_cast<int>(((g_sum(alpha) % 8) + 8) % 8);
}

bool TgaContext::is_tolerable(const BitVec& alpha) const {
  Gf2Span h = code_->sz_span();
  for (const auto& beta : code_->sx().row_vectors()) h.insert(alpha & beta);
  return h.contains(alpha & logical_);
}

bool TgaContext::tolerable_by_rank(const BitVec& alpha) const {
  return group_G(alpha).rank() == group_H(alpha).rank();
}

bool TgaContext::tolerable_by_centralizer(const BitVec& alpha) const {
  const auto g = group_G(alpha);
  const auto cent = null_space(g.basis());
  for (const auto& v : cent.row_vectors()) {
    if (!code_->sx_span().contains(v)) return true;
  }
  return false;
}

bool TgaContext::tolerable_by_definition(const BitVec& alpha) const {
  // G_a intersected with Z centralizer: combinations y of the basis rows
  // whose product commutes with every cell.
  const auto g = group_G(alpha).basis();
  BitMatrix images(code_->num_cells());
  for (const auto& row : g.row_vectors()) images.push_back(code_->charge_of(row));
  const auto kernel = null_space(transpose(images));
  for (const auto& y : kernel.row_vectors()) {
    if (!code_->sz_span().contains(g.combine(y))) return false;
  }
  return true;
}

Coset TgaContext::e_coset(const BitVec& alpha) const {
  auto g = group_G(alpha);
  const auto gammas = null_space(g.basis());
  BitVec rhs(gammas.rows());
  for (std::size_t j = 0; j < gammas.rows(); ++j) {
    const long long s = g_sum(gammas.row(j) & alpha);
    if (s % 2 != 0) throw std::logic_error("odd phase sum on a centralizer element of G_alpha");
    rhs.set(j, ((s / 2) % 2 + 2) % 2 == 1);
  }
  auto z = Gf2Solver(transpose(gammas)).solve(rhs);
  if (!z) throw std::logic_error("E_alpha constraints are inconsistent");
  return Coset{*z, std::move(g)};
}

BitVec TgaContext::tolerable_preimage(const BitVec& phi) const {
  auto alpha = code_->has_preimage(phi);
  if (!alpha) throw std::invalid_argument("flux configuration is not a syndrome");
  if (!is_tolerable(*alpha)) *alpha ^= logical_;
  return *alpha;
}

GroupBasis TgaContext::H_of(const BitVec& phi) const { return group_H(tolerable_preimage(phi)); }

Coset TgaContext::E_of(const BitVec& phi) const { return e_coset(tolerable_preimage(phi)); }

bool TgaContext::separated(const std::vector<BitVec>& phis) const {
  if (phis.empty()) return true;
  BitVec total(code_->num_faces());
  std::optional<GroupBasis> product;
  for (const auto& phi : phis) {
    total ^= phi;
    auto h = H_of(phi);
    product = product ? product->join(h) : h;
  }
  return H_of(total) == *product;
}

bool TgaContext::separation_criterion(const std::vector<BitVec>& alphas) const {
  for (const auto& beta : code_->sx().row_vectors()) {
    int hits = 0;
    for (const auto& a : alphas) {
      if (!code_->sz_span().contains(a & beta)) ++hits;
    }
    if (hits > 1) return false;
  }
  return true;
}

FactorResult TgaContext::factor_e(const std::vector<BitVec>& alphas, const std::vector<BitVec>& zs) const {
  if (alphas.size() != zs.size()) throw std::invalid_argument("factor_e: one z per alpha");
  std::vector<BitVec> phis;
  BitVec total(code_->n());
  for (const auto& a : alphas) {
    if (!is_tolerable(a)) throw std::invalid_argument("factor_e: every alpha must be tolerable");
    phis.push_back(code_->flux_of(a));
    total ^= a;
  }
  if (!separated(phis)) throw std::invalid_argument("factor_e: syndromes are not separated");
  FactorResult r{BitVec(code_->n()), false};
  for (const auto& z : zs) r.mask ^= z;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = i + 1; j < alphas.size(); ++j) r.mask ^= alphas[i] & alphas[j];
  }
  r.in_coset = e_coset(total).contains(r.mask);
  return r;
}

bool TgaContext::erasure_identity_check(const BitVec& alpha, const BitVec& omega) const {
  const auto ea = e_coset(alpha);
  const auto eao = e_coset(alpha ^ omega);
  const auto eo = e_coset(omega);
  const auto lhs_group = ea.subgroup.join(eao.subgroup);
  const auto rhs_group = ea.subgroup.join(eo.subgroup);
  if (!(lhs_group == rhs_group)) return false;
  const BitVec lhs = ea.representative ^ eao.representative;
  const BitVec rhs = eo.representative ^ (alpha & omega);
  return lhs_group.contains(lhs ^ rhs);
}

ErasedChecks TgaContext::erased_checks(const BitVec& phi) const {
  if (!code_->gauss_ok(phi) || !code_->has_preimage(phi)) {
    throw std::invalid_argument("erased_checks: not a valid flux syndrome");
  }
  const auto& cx = code_->colex();
  ErasedChecks out;
  BitVec touched(code_->num_cells());
  const auto comps = code_->connected_components(phi);
  for (const auto& c : comps) touched |= c.cells;
  for (std::size_t c = 0; c < code_->num_cells(); ++c) {
    if (!touched.test(c)) out.generators.push_back(cx.cells()[c].qubits);
  }
  for (const auto& comp : comps) {
    // Colors of the facets where this component ends.
    std::uint8_t end_colors = 0;
    for (std::size_t r = 0; r < cx.facets().size(); ++r) {
      if ((comp.facets >> r) & 1U) end_colors = static_cast<std::uint8_t>(end_colors | (1U << cx.facets()[r].color));
    }
    for (auto mask : kPairMasks) {
      if (mask & end_colors) continue;
      BitVec prod(code_->n());
      for (auto c : comp.cells.indices()) {
        if ((mask >> cx.cells()[c].color) & 1U) prod ^= cx.cells()[c].qubits;
      }
      if (prod.any()) out.generators.push_back(prod);
    }
  }
  const auto h = H_of(phi);
  for (const auto& gen : out.generators) {
    for (const auto& row : h.basis().row_vectors()) {
      if (dot(gen, row)) out.all_commute = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

bool undetectable_relation_holds(const CssCode& code) {
  const auto& cent_x = code.x_centralizer();
  Gf2Span products(code.n());
  for (std::size_t i = 0; i < cent_x.rows(); ++i) {
    for (std::size_t j = i; j < cent_x.rows(); ++j) products.insert(cent_x.row(i) & cent_x.row(j));
  }
  return same_span(products, Gf2Span(code.z_centralizer()));
}

AxiomReport check_axioms(const CssCode& code, const TPattern& pattern) {
  AxiomReport rep;
  rep.css = true;
  for (const auto& x : code.sx().row_vectors()) {
    for (const auto& z : code.sz().row_vectors()) {
      if (symplectic_commutator(x, z) != 1) rep.css = false;
    }
  }
  rep.num_logical = code.num_logical();
  rep.single_logical = rep.num_logical == 1;
  rep.undetectable_relation = undetectable_relation_holds(code);
  if (!rep.single_logical) {
    rep.detail = "code has " + std::to_string(rep.num_logical) + " logical qubits, expected 1";
  } else if (code.n() > kMaxStateQubits) {
    rep.detail = "invariance not checked: more than 16 qubits";
  } else {
    rep.leakage = code_space_leakage(code, pattern);
    rep.invariance = rep.leakage < 1e-10;
    if (!rep.invariance) rep.detail = "code space not invariant under U";
  }
  return rep;
}

}  // namespace colorgates

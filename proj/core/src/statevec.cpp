#include "colorgates/statevec.hpp"

#include <Eigen/Dense>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace colorgates {

namespace {

constexpr double kPi = std::numbers::pi;

cplx omega_power(int k) {  // exp(i pi k / 4)
  k = ((k % 8) + 8) % 8;
  return std::polar(1.0, kPi * k / 4.0);
}

std::uint64_t low_word(const BitVec& m) { return m.size() == 0 ? 0 : m.words()[0]; }

void check_qubits(std::size_t n) {
  if (n > kMaxStateQubits) {
    throw std::invalid_argument("statevector oracle supports at most 16 qubits, got " + std::to_string(n));
  }
}

// All elements of the span of the given rows, in Gray-code order.
std::vector<BitVec> enumerate_span(const std::vector<BitVec>& gens, std::size_t n) {
  std::vector<BitVec> out{BitVec(n)};
  out.reserve(std::size_t{1} << gens.size());
  for (const auto& g : gens) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] ^ g);
  }
  return out;
}

BitVec pick_logical(const BitMatrix& centralizer, const Gf2Span& stabilizers) {
  for (const auto& v : centralizer.row_vectors()) {
    if (!stabilizers.contains(v)) return v;
  }
  throw std::invalid_argument("code has no logical operator");
}

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
  check_qubits(n);
  amps_.assign(std::size_t{1} << n, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
  StateVector s(n);
  if (index >= s.dim()) throw std::out_of_range("basis state index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double nm = norm();
  if (nm == 0.0) throw std::logic_error("cannot normalize the zero vector");
  for (auto& a : amps_) a /= nm;
}

void StateVector::apply_x(const BitVec& mask) {
  if (mask.size() != n_) throw std::invalid_argument("apply_x: mask length mismatch");
  const auto m = low_word(mask);
  if (m == 0) return;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const std::size_t j = i ^ m;
    if (i < j) std::swap(amps_[i], amps_[j]);
  }
}

void StateVector::apply_z(const BitVec& mask) {
  if (mask.size() != n_) throw std::invalid_argument("apply_z: mask length mismatch");
  const auto m = low_word(mask);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (std::popcount(i & m) % 2 != 0) amps_[i] = -amps_[i];
  }
}

void StateVector::apply_t_powers(const std::vector<int>& exponents) {
  if (exponents.size() != n_) throw std::invalid_argument("apply_t_powers: one exponent per qubit");
  std::array<cplx, 8> phase{};
  for (int k = 0; k < 8; ++k) phase[k] = omega_power(k);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    int e = 0;
    for (std::size_t bits = i; bits != 0; bits &= bits - 1) e += exponents[std::countr_zero(bits)];
    amps_[i] *= phase[((e % 8) + 8) % 8];
  }
}

void StateVector::apply_cz(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  for (auto [a, b] : pairs) {
    if (a >= n_ || b >= n_ || a == b) throw std::invalid_argument("apply_cz: bad qubit pair");
  }
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    int parity = 0;
    for (auto [a, b] : pairs) parity ^= static_cast<int>(((i >> a) & (i >> b)) & 1U);
    if (parity) amps_[i] = -amps_[i];
  }
}

void StateVector::project_plus_x(const BitVec& mask) {
  StateVector shifted = *this;
  shifted.apply_x(mask);
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] = 0.5 * (amps_[i] + shifted.amps_[i]);
}

double StateVector::expectation_x(const BitVec& mask) const {
  StateVector s = *this;
  s.apply_x(mask);
  return inner(*this, s).real();
}

double StateVector::expectation_z(const BitVec& mask) const {
  StateVector s = *this;
  s.apply_z(mask);
  return inner(*this, s).real();
}

StateVector& StateVector::operator+=(const StateVector& o) {
  if (o.n_ != n_) throw std::invalid_argument("state dimension mismatch");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += o.amps_[i];
  return *this;
}

StateVector& StateVector::operator*=(cplx c) {
  for (auto& a : amps_) a *= c;
  return *this;
}

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("state dimension mismatch");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.amps_.size(); ++i) s += std::conj(a.amps_[i]) * b.amps_[i];
  return s;
}

// ---------------------------------------------------------------------------

std::vector<int> t_exponents(const TPattern& pattern, int power) {
  std::vector<int> e(pattern.size());
  for (std::size_t q = 0; q < e.size(); ++q) e[q] = ((pattern.exponent(q) * power) % 8 + 8) % 8;
  return e;
}

std::vector<int> t_exponents_on(const TPattern& pattern, const BitVec& support, int power) {
  auto e = t_exponents(pattern, power);
  for (std::size_t q = 0; q < e.size(); ++q) {
    if (!support.test(q)) e[q] = 0;
  }
  return e;
}

EncodingSpec encoding_of(const CssCode& code) {
  EncodingSpec s;
  s.n = code.n();
  s.x_checks = code.sx().row_vectors();
  s.z_checks = code.sz().row_vectors();
  s.logical_x = code.logical_mask() ? *code.logical_mask() : pick_logical(code.x_centralizer(), code.sx_span());
  s.logical_z = BitVec(s.n);
  const auto& zc = code.z_centralizer();
  if (code.logical_mask()) {
    s.logical_z = *code.logical_mask();
  } else {
    for (const auto& v : zc.row_vectors()) {
      if (dot(v, s.logical_x)) {
        s.logical_z = v;
        break;
      }
    }
  }
  return s;
}

EncodingSpec encoding_of(const FacetCode& facet) {
  EncodingSpec s;
  s.n = facet.qubits.size();
  BitMatrix checks(s.n);
  for (const auto& p : facet.plaquettes) {
    s.x_checks.push_back(p.qubits);
    s.z_checks.push_back(p.qubits);
    checks.push_back(p.qubits);
  }
  const auto cent = null_space(checks);
  const Gf2Span span(checks);
  s.logical_x = pick_logical(cent, span);
  for (const auto& v : cent.row_vectors()) {
    if (dot(v, s.logical_x)) {
      s.logical_z = v;
      break;
    }
  }
  if (s.logical_z.size() == 0) throw std::invalid_argument("facet code has no anticommuting logical pair");
  return s;
}

LogicalBasis logical_basis(const EncodingSpec& spec) {
  check_qubits(spec.n);
  // |0...0> is a +1 eigenstate of every Z check and of the logical Z.
  StateVector zero(spec.n);
  for (const auto& x : spec.x_checks) zero.project_plus_x(x);
  zero.normalize();
  StateVector one = zero;
  one.apply_x(spec.logical_x);
  return {std::move(zero), std::move(one)};
}

LogicalBasis logical_basis(const CssCode& code) { return logical_basis(encoding_of(code)); }

namespace {

// Norm of the part of psi outside span{zero, one}, formed explicitly so
// that it does not lose precision to cancellation.
double outside_norm(const LogicalBasis& basis, const StateVector& psi) {
  StateVector r = psi, part0 = basis.zero, part1 = basis.one;
  part0 *= -inner(basis.zero, psi);
  part1 *= -inner(basis.one, psi);
  r += part0;
  r += part1;
  return r.norm();
}

const char* gate_name(int m) {
  static const char* names[8] = {"I", "T", "P", "T^3", "Z", "T^5", "P^dag", "T^7"};
  return names[((m % 8) + 8) % 8];
}

}  // namespace

LogicalActionReport logical_action(const EncodingSpec& spec, const LogicalBasis& basis,
                                   const std::vector<int>& exponents) {
  (void)spec;
  StateVector u0 = basis.zero, u1 = basis.one;
  u0.apply_t_powers(exponents);
  u1.apply_t_powers(exponents);
  const cplx a = inner(basis.zero, u0), b = inner(basis.one, u1);
  const cplx c10 = inner(basis.one, u0), c01 = inner(basis.zero, u1);
  LogicalActionReport r;
  r.leakage = std::max(outside_norm(basis, u0), outside_norm(basis, u1));
  r.global_phase = std::arg(a);
  const double rel = std::arg(b / a);
  r.power_of_t = static_cast<int>(std::lround(rel / (kPi / 4))) % 8;
  if (r.power_of_t < 0) r.power_of_t += 8;
  r.gate = gate_name(r.power_of_t);
  const cplx g = std::polar(1.0, r.global_phase);
  r.deviation = std::max({std::abs(a - g), std::abs(b - g * omega_power(r.power_of_t)), std::abs(c10),
                          std::abs(c01), r.leakage});
  return r;
}

LogicalActionReport logical_action_check(const CssCode& code, const TPattern& pattern, int power) {
  const auto spec = encoding_of(code);
  return logical_action(spec, logical_basis(spec), t_exponents(pattern, power));
}

double code_space_leakage(const CssCode& code, const TPattern& pattern) {
  const auto basis = logical_basis(code);
  const auto e = t_exponents(pattern, 1);
  StateVector plus = basis.zero, plus_i = basis.zero;
  plus += basis.one;
  plus_i += [&] {
    StateVector s = basis.one;
    s *= cplx{0, 1};
    return s;
  }();
  plus.normalize();
  plus_i.normalize();
  double worst = 0;
  for (StateVector s : {basis.zero, basis.one, plus, plus_i}) {
    s.apply_t_powers(e);
    worst = std::max(worst, outside_norm(basis, s));
  }
  return worst;
}

TwoQubitActionReport facet_cz_action(const FacetCode& a, const FacetCode& b,
                                     const std::vector<std::size_t>& perm) {
  const auto sa = encoding_of(a), sb = encoding_of(b);
  if (perm.size() != sa.n) throw std::invalid_argument("facet_cz_action: permutation size mismatch");
  const auto ba = logical_basis(sa), bb = logical_basis(sb);
  const std::size_t na = sa.n, n = sa.n + sb.n;
  check_qubits(n);
  auto kron = [&](const StateVector& x, const StateVector& y) {
    StateVector s(n);
    s[0] = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (x[i] == cplx{}) continue;
      for (std::size_t j = 0; j < y.dim(); ++j) s[i | (j << na)] = x[i] * y[j];
    }
    return s;
  };
  std::vector<StateVector> joint;
  for (const auto* x : {&ba.zero, &ba.one}) {
    for (const auto* y : {&bb.zero, &bb.one}) joint.push_back(kron(*x, *y));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t q = 0; q < na; ++q) pairs.emplace_back(q, na + perm[q]);

  TwoQubitActionReport r;
  std::vector<cplx> diag;
  for (std::size_t k = 0; k < 4; ++k) {
    StateVector s = joint[k];
    s.apply_cz(pairs);
    StateVector residual = s;
    for (std::size_t l = 0; l < 4; ++l) {
      const cplx c = inner(joint[l], s);
      if (l == k) diag.push_back(c);
      StateVector part = joint[l];
      part *= -c;
      residual += part;
    }
    r.leakage = std::max(r.leakage, residual.norm());
  }
  const cplx ref = diag[0] / std::abs(diag[0]);
  const std::array<double, 4> cz{1, 1, 1, -1};
  for (std::size_t k = 0; k < 4; ++k) {
    r.diagonal.push_back(diag[k] / ref);
    r.deviation_from_cz = std::max(r.deviation_from_cz, std::abs(r.diagonal[k] - cz[k]));
  }
  r.deviation_from_cz = std::max(r.deviation_from_cz, r.leakage);
  return r;
}

// ---------------------------------------------------------------------------

double mixture_trace_distance(const std::vector<StateVector>& v, const std::vector<double>& p,
                              const std::vector<StateVector>& u, const std::vector<double>& q) {
  if (v.size() != p.size() || u.size() != q.size()) throw std::invalid_argument("weights mismatch");
  std::vector<const StateVector*> all;
  std::vector<double> w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    all.push_back(&v[i]);
    w.push_back(p[i]);
  }
  for (std::size_t j = 0; j < u.size(); ++j) {
    all.push_back(&u[j]);
    w.push_back(-q[j]);
  }
  if (all.empty()) return 0.0;
  // Restrict to the joint support: the states are sparse over the basis.
  std::vector<std::size_t> support;
  const std::size_t dim = all[0]->dim();
  for (std::size_t i = 0; i < dim; ++i) {
    for (const auto* s : all) {
      if ((*s)[i] != cplx{}) {
        support.push_back(i);
        break;
      }
    }
  }
  const auto m = static_cast<Eigen::Index>(all.size());
  Eigen::MatrixXcd V(static_cast<Eigen::Index>(support.size()), m);
  for (Eigen::Index c = 0; c < m; ++c) {
    const double scale = std::sqrt(std::abs(w[static_cast<std::size_t>(c)]));
    for (std::size_t r = 0; r < support.size(); ++r) {
      V(static_cast<Eigen::Index>(r), c) = scale * (*all[static_cast<std::size_t>(c)])[support[r]];
    }
  }
  // With V = Q R, rho_1 - rho_2 = V D V^dag = Q (R D R^dag) Q^dag and the
  // trace norm is that of the small Hermitian matrix R D R^dag.
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(V);
  const Eigen::Index k = std::min(V.rows(), m);
  const Eigen::MatrixXcd R = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  Eigen::VectorXd d(m);
  for (Eigen::Index c = 0; c < m; ++c) d(c) = w[static_cast<std::size_t>(c)] < 0 ? -1.0 : 1.0;
  const Eigen::MatrixXcd M = R * d.asDiagonal() * R.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> em(M, Eigen::EigenvaluesOnly);
  return 0.5 * em.eigenvalues().cwiseAbs().sum();
}

namespace {

Theorem1Report run_theorem1(const TgaContext& tga, const BitVec& x_mask, bool allow_w) {
  const auto& code = tga.code();
  const auto basis = logical_basis(code);
  const auto u = t_exponents(tga.pattern(), 1);
  std::vector<int> u_dag(u.size());
  for (std::size_t q = 0; q < u.size(); ++q) u_dag[q] = (8 - u[q]) % 8;
  const BitVec& lambda = tga.logical();

  Theorem1Report rep;
  rep.tolerable = tga.is_tolerable(x_mask);
  rep.used_w = allow_w && !rep.tolerable;
  const Coset e = tga.e_coset(rep.tolerable ? x_mask : x_mask ^ lambda);

  // Coset elements modulo S_Z, which acts trivially on encoded states.
  Gf2Span quotient = code.sz_span();
  std::vector<BitVec> gens;
  for (const auto& row : e.subgroup.basis().row_vectors()) {
    if (quotient.insert(row)) gens.push_back(row);
  }
  const auto e_elems = enumerate_span(gens, code.n());
  std::vector<BitVec> sx_gens;
  {
    Gf2Span s(code.n());
    for (const auto& row : code.sx().row_vectors()) {
      if (s.insert(row)) sx_gens.push_back(row);
    }
  }
  const auto sx_elems = enumerate_span(sx_gens, code.n());

  StateVector plus = basis.zero, plus_i = basis.one;
  plus += basis.one;
  plus.normalize();
  plus_i *= cplx{0, 1};
  plus_i += basis.zero;
  plus_i.normalize();

  for (const StateVector* psi : std::array<const StateVector*, 4>{&basis.zero, &basis.one, &plus, &plus_i}) {
    StateVector base = *psi;
    base.apply_x(x_mask);
    base.apply_t_powers(u);
    std::vector<StateVector> lhs;
    for (const auto& s : sx_elems) {
      StateVector t = base;
      t.apply_x(s);
      lhs.push_back(std::move(t));
    }
    StateVector r = *psi;
    if (rep.used_w) {
      r.apply_x(lambda);
      r.apply_t_powers(u);
      r.apply_x(lambda);
      r.apply_t_powers(u_dag);
    }
    r.apply_t_powers(u);
    std::vector<StateVector> rhs;
    for (const auto& h : e_elems) {
      StateVector t = r;
      t.apply_z(e.representative ^ h);
      t.apply_x(x_mask);
      rhs.push_back(std::move(t));
    }
    const double d = mixture_trace_distance(lhs, std::vector<double>(lhs.size(), 1.0 / lhs.size()), rhs,
                                            std::vector<double>(rhs.size(), 1.0 / rhs.size()));
    rep.distances.push_back(d);
    rep.max_distance = std::max(rep.max_distance, d);
  }
  return rep;
}

}  // namespace

Theorem1Report theorem1_check(const TgaContext& tga, const BitVec& x_mask) {
  return run_theorem1(tga, x_mask, true);
}

Theorem1Report theorem1_check_without_w(const TgaContext& tga, const BitVec& x_mask) {
  return run_theorem1(tga, x_mask, false);
}

std::vector<BitVec> diagonal_z_support(const CssCode& code, const TPattern& pattern, const BitVec& alpha,
                                       double tol) {
  const std::size_t n = code.n();
  check_qubits(n);
  const auto e = t_exponents_on(pattern, alpha, 2);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint64_t> checks;
  for (const auto& f : code.sz().row_vectors()) checks.push_back(low_word(f));
  std::vector<cplx> d(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    bool in_code = true;
    for (auto c : checks) in_code = in_code && std::popcount(i & c) % 2 == 0;
    if (!in_code) continue;
    int ph = 0;
    for (std::size_t bits = i; bits != 0; bits &= bits - 1) ph -= e[std::countr_zero(bits)];
    d[i] = omega_power(ph);
  }
  // Walsh-Hadamard transform gives the Z-mask coefficients.
  for (std::size_t h = 1; h < dim; h <<= 1) {
    for (std::size_t i = 0; i < dim; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const cplx x = d[j], y = d[j + h];
        d[j] = x + y;
        d[j + h] = x - y;
      }
    }
  }
  std::vector<BitVec> out;
  const double scale = 1.0 / static_cast<double>(dim);
  for (std::size_t z = 0; z < dim; ++z) {
    if (std::abs(d[z]) * scale > tol) out.push_back(BitVec::from_u64(n, z));
  }
  return out;
}

}  // namespace colorgates

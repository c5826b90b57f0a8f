#include "colorgates/cliffprop.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace colorgates {

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::kStandardP: return "standard-P";
    case GateKind::kFacetP: return "facet-P";
    case GateKind::kFacetCP: return "facet-CP";
    case GateKind::kCNot: return "CNOT";
  }
  return "?";
}

struct GateAccess {
  static CliffordGate make(GateKind kind, std::vector<const CssCode*> codes) {
    CliffordGate g;
    g.kind_ = kind;
    g.codes_ = std::move(codes);
    for (const auto* c : g.codes_) g.offsets_.push_back(g.offsets_.back() + c->n());
    g.p_powers_.assign(g.offsets_.back(), 0);
    return g;
  }
  static CliffordGate& fill_p(CliffordGate& g, const TPattern& pattern, const BitVec* only) {
    if (pattern.size() != g.codes_[0]->n()) throw std::invalid_argument("TPattern size does not match the code");
    for (std::size_t q = 0; q < pattern.size(); ++q) {
      if (only == nullptr || only->test(q)) g.p_powers_[q] = pattern.exponent(q) % 4;
    }
    return g;
  }
  static std::vector<std::size_t>& face_ab(CliffordGate& g) { return g.face_ab_; }
  static std::vector<std::size_t>& face_ba(CliffordGate& g) { return g.face_ba_; }
  static const std::vector<std::size_t>& face_ab(const CliffordGate& g) { return g.face_ab_; }
  static const std::vector<std::size_t>& face_ba(const CliffordGate& g) { return g.face_ba_; }
  static std::vector<std::size_t>& pairing(CliffordGate& g) { return g.pairing_; }
  static std::vector<std::pair<std::size_t, std::size_t>>& cz(CliffordGate& g) { return g.cz_; }
  static void set_facets(CliffordGate& g, std::size_t ra, std::size_t rb) {
    g.ra_ = ra;
    g.rb_ = rb;
  }
  static std::size_t offset(const CliffordGate& g, std::size_t i) { return g.offsets_[i]; }
};

namespace {

const Container& facet_at(const CssCode& code, std::size_t r) {
  const auto& facets = code.colex().facets();
  if (r >= facets.size()) throw std::invalid_argument("no facet " + std::to_string(r));
  return facets[r];
}

// Facet faces of `code` on facet r, keyed by qubit set.
std::map<std::vector<std::size_t>, std::size_t> facet_face_index(const CssCode& code, std::size_t r) {
  std::map<std::vector<std::size_t>, std::size_t> out;
  for (auto f : code.colex().facet_faces()[r]) out.emplace(code.colex().faces()[f].qubits.indices(), f);
  return out;
}

std::vector<std::size_t> map_faces(const CssCode& from, std::size_t rf, const CssCode& to, std::size_t rt,
                                   const std::vector<std::size_t>& qubit_map) {
  const auto target = facet_face_index(to, rt);
  std::vector<std::size_t> out(from.num_faces(), to.num_faces());
  for (auto f : from.colex().facet_faces()[rf]) {
    std::vector<std::size_t> img;
    for (auto q : from.colex().faces()[f].qubits.indices()) img.push_back(qubit_map[q]);
    std::sort(img.begin(), img.end());
    auto it = target.find(img);
    if (it == target.end()) throw std::logic_error("facet pairing does not preserve faces");
    out[f] = it->second;
  }
  return out;
}

BitVec push_faces(const BitVec& phi, const std::vector<std::size_t>& face_map, std::size_t target_faces) {
  BitVec out(target_faces);
  for (auto f : phi.indices()) {
    if (face_map[f] < target_faces) out.flip(face_map[f]);
  }
  return out;
}

void check_parts(const CliffordGate& gate, const std::vector<PauliOp>& parts) {
  if (parts.size() != gate.num_codes()) throw std::invalid_argument("expected one Pauli per code of the gate");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].x.size() != gate.code(i).n() || parts[i].z.size() != gate.code(i).n()) {
      throw std::invalid_argument("Pauli length does not match the code");
    }
  }
}

BitVec join(const CliffordGate& gate, const std::vector<BitVec>& masks) {
  BitVec out(gate.joint_size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (auto q : masks[i].indices()) out.set(GateAccess::offset(gate, i) + q);
  }
  return out;
}

std::vector<BitVec> split(const CliffordGate& gate, const BitVec& joint) {
  std::vector<BitVec> out;
  for (std::size_t i = 0; i < gate.num_codes(); ++i) out.emplace_back(gate.code(i).n());
  for (auto q : joint.indices()) {
    std::size_t i = 0;
    while (q >= GateAccess::offset(gate, i + 1)) ++i;
    out[i].set(q - GateAccess::offset(gate, i));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> facet_isomorphism(const FacetCode& a, const FacetCode& b) {
  const std::size_t m = a.qubits.size();
  if (b.qubits.size() != m || a.plaquettes.size() != b.plaquettes.size()) return {};
  std::set<std::vector<std::size_t>> target;
  for (const auto& p : b.plaquettes) target.insert(p.qubits.indices());
  // Plaquettes of a, each checked once its highest qubit is assigned.
  std::vector<std::vector<std::vector<std::size_t>>> due(m);
  for (const auto& p : a.plaquettes) {
    auto idx = p.qubits.indices();
    if (idx.empty()) return {};
    due[idx.back()].push_back(idx);
  }
  std::vector<std::size_t> image(m, m);
  std::vector<bool> used(m, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t q) {
    if (q == m) return true;
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      image[q] = c;
      bool ok = true;
      for (const auto& plaq : due[q]) {
        std::vector<std::size_t> img;
        for (auto v : plaq) img.push_back(image[v]);
        std::sort(img.begin(), img.end());
        if (!target.count(img)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[c] = true;
      if (extend(q + 1)) return true;
      used[c] = false;
    }
    image[q] = m;
    return false;
  };
  if (!extend(0)) return {};
  return image;
}

CliffordGate CliffordGate::standard_p(const CssCode& code, const TPattern& pattern) {
  auto g = GateAccess::make(GateKind::kStandardP, {&code});
  return GateAccess::fill_p(g, pattern, nullptr);
}

CliffordGate CliffordGate::facet_p(const CssCode& code, const TPattern& pattern, std::size_t r) {
  auto g = GateAccess::make(GateKind::kFacetP, {&code});
  GateAccess::set_facets(g, r, r);
  return GateAccess::fill_p(g, pattern, &facet_at(code, r).qubits);
}

CliffordGate CliffordGate::facet_cp(const CssCode& a, std::size_t ra, const CssCode& b, std::size_t rb) {
  facet_at(a, ra);
  facet_at(b, rb);
  auto g = GateAccess::make(GateKind::kFacetCP, {&a, &b});
  GateAccess::set_facets(g, ra, rb);
  const auto fa = facet_code(a.colex(), ra), fb = facet_code(b.colex(), rb);
  const auto local = facet_isomorphism(fa, fb);
  if (local.empty()) throw std::invalid_argument("facets are not isomorphic as 2-colexes");
  auto& pairing = GateAccess::pairing(g);
  pairing.assign(a.n(), b.n());
  std::vector<std::size_t> inverse(b.n(), a.n());
  for (std::size_t i = 0; i < local.size(); ++i) {
    pairing[fa.qubits[i]] = fb.qubits[local[i]];
    inverse[fb.qubits[local[i]]] = fa.qubits[i];
    GateAccess::cz(g).emplace_back(fa.qubits[i], a.n() + fb.qubits[local[i]]);
  }
  GateAccess::face_ab(g) = map_faces(a, ra, b, rb, pairing);
  GateAccess::face_ba(g) = map_faces(b, rb, a, ra, inverse);
  return g;
}

CliffordGate CliffordGate::cnot(const CssCode& a, const CssCode& b) {
  if (a.n() != b.n() || a.num_faces() != b.num_faces() || a.num_cells() != b.num_cells()) {
    throw std::invalid_argument("transversal CNOT needs two copies of the same code");
  }
  return GateAccess::make(GateKind::kCNot, {&a, &b});
}

std::string CliffordGate::describe() const {
  switch (kind_) {
    case GateKind::kFacetP: return "facet-P(r=" + std::to_string(ra_) + ")";
    case GateKind::kFacetCP: return "facet-CP(r_a=" + std::to_string(ra_) + ", r_b=" + std::to_string(rb_) + ")";
    default: return to_string(kind_);
  }
}

PhasedPauli conjugate_phased(const CliffordGate& gate, const std::vector<PauliOp>& parts) {
  check_parts(gate, parts);
  std::vector<BitVec> xs, zs;
  for (const auto& p : parts) {
    xs.push_back(p.x);
    zs.push_back(p.z);
  }
  BitVec x = join(gate, xs), z = join(gate, zs);
  PhasedPauli out;
  if (gate.kind() == GateKind::kCNot) {
    // X_a -> X_a X_b and Z_b -> Z_a Z_b; images of X^x and Z^z need no reordering.
    const std::size_t n = gate.code(0).n();
    BitVec x2 = x, z2 = z;
    for (auto q : x.indices()) {
      if (q < n) x2.flip(n + q);
    }
    for (auto q : z.indices()) {
      if (q >= n) z2.flip(q - n);
    }
    x = x2;
    z = z2;
  } else {
    std::vector<std::vector<std::size_t>> partners(gate.joint_size());
    for (auto [a, b] : gate.cz_pairs()) {
      partners[a].push_back(b);
      partners[b].push_back(a);
    }
    // Multiply the images D X_q D^dag = i^s X_q Z_q^s prod Z_partner in order.
    BitVec ax(gate.joint_size()), az(gate.joint_size());
    int phase = 0;
    for (auto q : x.indices()) {
      const int s = gate.p_powers()[q];
      BitVec qz(gate.joint_size());
      if (s % 2 == 1) qz.set(q);
      for (auto p : partners[q]) qz.flip(p);
      // (X^ax Z^az)(X_q Z^qz) = (-1)^{az_q} X^{ax+q} Z^{az+qz}
      if (az.test(q)) phase += 2;
      phase += s;
      ax.set(q);
      az ^= qz;
    }
    // Z^z commutes through the diagonal gate and sits to the right already.
    az ^= z;
    out.phase = phase % 4;
    x = ax;
    z = az;
  }
  const auto xp = split(gate, x), zp = split(gate, z);
  for (std::size_t i = 0; i < xp.size(); ++i) out.parts.push_back({xp[i], zp[i]});
  return out;
}

std::vector<PauliOp> conjugate_pauli(const CliffordGate& gate, const std::vector<PauliOp>& parts) {
  return conjugate_phased(gate, parts).parts;
}

std::vector<SyndromePair> syndrome_map(const CliffordGate& gate, const std::vector<SyndromePair>& s) {
  if (s.size() != gate.num_codes()) throw std::invalid_argument("expected one syndrome per code of the gate");
  auto out = s;
  switch (gate.kind()) {
    case GateKind::kStandardP:
      out[0].charge ^= gate.code(0).branching_points(s[0].flux);
      break;
    case GateKind::kFacetP:
      out[0].charge ^= gate.code(0).endpoints_on_facet(s[0].flux, gate.facet_a());
      break;
    case GateKind::kFacetCP: {
      const auto& a = gate.code(0);
      const auto& b = gate.code(1);
      out[1].charge ^=
          b.endpoints_on_facet(push_faces(s[0].flux, GateAccess::face_ab(gate), b.num_faces()), gate.facet_b());
      out[0].charge ^=
          a.endpoints_on_facet(push_faces(s[1].flux, GateAccess::face_ba(gate), a.num_faces()), gate.facet_a());
      break;
    }
    case GateKind::kCNot:
      out[1].flux ^= s[0].flux;
      out[0].charge ^= s[1].charge;
      break;
  }
  return out;
}

std::vector<PauliOp> reconstruct_propagated(const CliffordGate& gate, const std::vector<PauliOp>& parts) {
  check_parts(gate, parts);
  std::vector<SyndromePair> syn;
  std::vector<BitVec> allowed;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    syn.push_back(gate.code(i).syndrome(parts[i]));
    allowed.push_back(parts[i].x | parts[i].z);
  }
  if (gate.kind() == GateKind::kFacetCP) {
    const auto& pairing = gate.pairing();
    const auto base = allowed;
    for (auto q : base[0].indices()) {
      if (pairing[q] < gate.code(1).n()) allowed[1].set(pairing[q]);
    }
    for (std::size_t q = 0; q < pairing.size(); ++q) {
      if (pairing[q] < gate.code(1).n() && base[1].test(pairing[q])) allowed[0].set(q);
    }
  } else if (gate.kind() == GateKind::kCNot) {
    allowed[0] |= allowed[1];
    allowed[1] = allowed[0];
  }
  const auto mapped = syndrome_map(gate, syn);
  std::vector<PauliOp> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& code = gate.code(i);
    if (code.x_logical_within(allowed[i]) || code.z_logical_within(allowed[i])) {
      throw std::invalid_argument("support of the error contains a logical operator");
    }
    auto x = code.solve_x_within(mapped[i].flux, allowed[i]);
    auto z = code.solve_z_charge_within(mapped[i].charge, allowed[i]);
    if (!x || !z) throw std::logic_error("mapped syndrome has no operator inside the light cone");
    out.push_back({*x, *z});
  }
  return out;
}

bool equal_up_to_stabilizers(const CliffordGate& gate, const std::vector<PauliOp>& a,
                             const std::vector<PauliOp>& b) {
  if (a.size() != gate.num_codes() || b.size() != gate.num_codes()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!gate.code(i).sx_span().contains(a[i].x ^ b[i].x)) return false;
    if (!gate.code(i).sz_span().contains(a[i].z ^ b[i].z)) return false;
  }
  return true;
}

}  // namespace colorgates

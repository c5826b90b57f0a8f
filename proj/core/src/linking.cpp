#include "colorgates/linking.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace colorgates {

namespace {

// The two in-plane axes of a rectangle, increasing.
std::array<int, 2> in_plane(int axis) {
  if (axis == 0) return {1, 2};
  if (axis == 1) return {0, 2};
  return {0, 1};
}

bool inside(const Rect& r, const std::array<double, 3>& p) {
  const auto ax = in_plane(r.axis);
  for (int k = 0; k < 2; ++k) {
    if (!(p[ax[k]] > r.lo[k] && p[ax[k]] < r.hi[k])) return false;
  }
  return true;
}

// Segment a -> b crosses the open rectangle r.
bool crosses(const Rect& r, const std::array<double, 3>& a, const std::array<double, 3>& b) {
  const double da = a[r.axis] - r.plane, db = b[r.axis] - r.plane;
  if (!(da * db < 0)) return false;
  const double t = da / (da - db);
  std::array<double, 3> p{};
  for (int k = 0; k < 3; ++k) p[k] = a[k] + t * (b[k] - a[k]);
  return inside(r, p);
}

struct Segment {
  std::array<double, 3> a, b;
};

std::vector<Segment> boundary_of(const Rect& r) {
  const auto ax = in_plane(r.axis);
  auto point = [&](double u, double v) {
    std::array<double, 3> p{};
    p[r.axis] = r.plane;
    p[ax[0]] = u;
    p[ax[1]] = v;
    return p;
  };
  return {{point(r.lo[0], r.lo[1]), point(r.hi[0], r.lo[1])},
          {point(r.hi[0], r.lo[1]), point(r.hi[0], r.hi[1])},
          {point(r.hi[0], r.hi[1]), point(r.lo[0], r.hi[1])},
          {point(r.lo[0], r.hi[1]), point(r.lo[0], r.lo[1])}};
}

// Overlap segment of two perpendicular rectangles, if any.
std::optional<Segment> overlap_segment(const Rect& a, const Rect& b) {
  if (a.axis == b.axis) return std::nullopt;
  const int line = 3 - a.axis - b.axis;
  auto range = [&](const Rect& r, int axis) {
    const auto ax = in_plane(r.axis);
    const int k = ax[0] == axis ? 0 : 1;
    return std::pair{r.lo[k], r.hi[k]};
  };
  const auto [alo, ahi] = range(a, b.axis);  // b's plane must fall inside a
  const auto [blo, bhi] = range(b, a.axis);
  if (!(b.plane > alo && b.plane < ahi && a.plane > blo && a.plane < bhi)) return std::nullopt;
  const auto [la, ha] = range(a, line);
  const auto [lb, hb] = range(b, line);
  const double lo = std::max(la, lb), hi = std::min(ha, hb);
  if (!(lo < hi)) return std::nullopt;
  Segment s{};
  s.a[a.axis] = s.b[a.axis] = a.plane;
  s.a[b.axis] = s.b[b.axis] = b.plane;
  s.a[line] = lo;
  s.b[line] = hi;
  return s;
}

}  // namespace

Rect Rect::translated(const std::array<int, 3>& shift) const {
  Rect r = *this;
  r.plane += shift[axis];
  const auto ax = in_plane(axis);
  for (int k = 0; k < 2; ++k) {
    r.lo[k] += shift[ax[k]];
    r.hi[k] += shift[ax[k]];
  }
  return r;
}

int boundary_crossings(const Rect& a, const Rect& b) {
  int n = 0;
  for (const auto& s : boundary_of(a)) n += crosses(b, s.a, s.b) ? 1 : 0;
  return n;
}

int linking_parity(const Rect& a, const Rect& b) { return boundary_crossings(a, b) % 2; }

LinkGeometry default_link_geometry(int L) {
  if (L < 4) throw std::invalid_argument("linked loops need a torus with L >= 4");
  LinkGeometry g;
  if (L < 8) {
    // Tightest placement on a period-16 torus. The face colors repeat every 8
    // units, so the membranes are only about two color periods wide.
    g.m1 = Rect{0, 7, {3.5, 2.5}, {12.5, 8.5}};
    g.m2 = Rect{1, 7, {3.5, 5.5}, {12.5, 12.5}};
    g.probes = {Rect{2, 7, {4.5, 4.5}, {9.5, 9.5}}, Rect{2, 7, {5.5, 4.5}, {11.5, 10.5}}};
    return g;
  }
  g.m1 = Rect{0, 15, {6.5, 4.5}, {25.5, 20.5}};
  g.m2 = Rect{1, 15, {6.5, 10.5}, {25.5, 26.5}};
  // The overlap line is x = y = 15, z in (10.5, 20.5); each probe crosses it once.
  g.probes = {Rect{2, 15, {10.5, 10.5}, {19.5, 19.5}}, Rect{2, 13, {9.5, 11.5}, {21.5, 18.5}},
              Rect{2, 17, {11.5, 8.5}, {17.5, 20.5}}};
  return g;
}

LinkGeometry unlinked_geometry(int L) {
  auto g = default_link_geometry(L);
  if (L < 8) {
    g.m2 = Rect{1, 7, {3.5, 11.5}, {12.5, 14.5}};
  } else {
    g.m2 = Rect{1, 15, {6.5, 22.5}, {25.5, 28.5}};
  }
  return g;
}

LinkGeometry translated(const LinkGeometry& g, const std::array<int, 3>& shift) {
  LinkGeometry out{g.m1.translated(shift), g.m2.translated(shift), {}};
  for (const auto& p : g.probes) out.probes.push_back(p.translated(shift));
  return out;
}

// ---------------------------------------------------------------------------

LinkingLattice::LinkingLattice(TorusColex torus) : torus_(std::move(torus)), code_(torus_.colex) {}

BitVec LinkingLattice::surface(const Rect& r) const {
  const auto& cx = torus_.colex;
  const double P = torus_.period;
  BitVec out(cx.faces().size());
  for (std::size_t f = 0; f < cx.faces().size(); ++f) {
    const auto& face = cx.faces()[f];
    if (face.on_facet()) continue;
    const auto& c0 = torus_.cell_centers[face.containers[0].index];
    const auto d = torus_.delta(c0, torus_.cell_centers[face.containers[1].index]);
    bool hit = false;
    for (int sx = -1; sx <= 1 && !hit; ++sx) {
      for (int sy = -1; sy <= 1 && !hit; ++sy) {
        for (int sz = -1; sz <= 1 && !hit; ++sz) {
          const std::array<double, 3> a{c0[0] + sx * P, c0[1] + sy * P, c0[2] + sz * P};
          const std::array<double, 3> b{a[0] + d[0], a[1] + d[1], a[2] + d[2]};
          hit = crosses(r, a, b);
        }
      }
    }
    if (hit) out.set(f);
  }
  return out;
}

BitVec LinkingLattice::membrane(const Rect& r, ColorPair h) const { return code_.membrane_operator(surface(r), h); }

LinkedPairSetup build_linked_pair(const LinkingLattice& lat, ColorPair h1, ColorPair h2, const LinkGeometry& g) {
  if (lat.torus().L < 4) throw std::invalid_argument("linked loops need a torus with L >= 4");
  const auto& code = lat.code();
  LinkedPairSetup s{h1, h2, g.m1, g.m2, {}, {}, {}, {}, {}, linking_parity(g.m1, g.m2)};
  s.alpha1 = lat.membrane(g.m1, h1);
  s.alpha2 = lat.membrane(g.m2, h2);
  s.phi1 = code.flux_of(s.alpha1);
  s.phi2 = code.flux_of(s.alpha2);
  s.overlap = s.alpha1 & s.alpha2;
  for (const auto* phi : {&s.phi1, &s.phi2}) {
    if (phi->none() || !code.gauss_ok(*phi) || code.connected_components(*phi).size() != 1) {
      throw std::invalid_argument("membrane boundary is not a single flux loop");
    }
  }
  if (!overlap_charge_on_loops(code, s)) {
    throw std::invalid_argument("charge of the membrane overlap leaves the flux loops");
  }
  return s;
}

bool overlap_charge_on_loops(const CssCode& code, const LinkedPairSetup& s) {
  BitVec touched(code.num_cells());
  for (const auto* phi : {&s.phi1, &s.phi2}) {
    for (auto f : phi->indices()) {
      for (const auto& c : code.colex().faces()[f].containers) {
        if (c.kind == ContainerKind::kCell) touched.set(c.index);
      }
    }
  }
  return code.charge_of(s.overlap).is_subset_of(touched);
}

Charge transferred_charge(const LinkingLattice& lat, const LinkedPairSetup& s, const Rect& probe) {
  if (s.linking != 0) {
    const auto seg = overlap_segment(s.r1, s.r2);
    if (!seg || !crosses(probe, seg->a, seg->b)) {
      throw std::invalid_argument("probe is not pierced once by the membrane overlap");
    }
  }
  const auto surf = lat.surface(probe);
  std::array<int, 8> signs{};
  const auto fluxes = Flux::all();
  for (std::size_t i = 0; i < fluxes.size(); ++i) {
    const auto m = fluxes[i].mask();
    BitVec a3(lat.code().n());
    if (m == 0xF) {
      a3 = lat.code().membrane_operator(surf, ColorPair::from_mask(0x3)) ^
           lat.code().membrane_operator(surf, ColorPair::from_mask(0xC));
    } else if (m != 0) {
      a3 = lat.code().membrane_operator(surf, ColorPair::from_mask(m));
    }
    signs[i] = (s.overlap & a3).parity() ? -1 : 1;
  }
  auto c = charge_from_signs(signs);
  if (!c) throw std::logic_error("probe signs are not a character of the flux group");
  return *c;
}

LinkingTable linking_table(const LinkingLattice& lat, const LinkGeometry& g, std::size_t probe) {
  if (probe >= g.probes.size()) throw std::out_of_range("no such probe");
  LinkingTable t{};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const auto s = build_linked_pair(lat, ColorPair::from_index(i), ColorPair::from_index(j), g);
      t[i][j] = transferred_charge(lat, s, g.probes[probe]);
    }
  }
  return t;
}

namespace {

// Coordinates of a flux over the pairs k1k2, k1k3, k1k4.
std::vector<int> pair_basis(Flux f) {
  std::vector<int> idx;
  const std::array<std::uint8_t, 3> basis{0x3, 0x5, 0x9};
  for (int k = 0; k < 3; ++k) {
    if ((f.mask() >> (k + 1)) & 1U) idx.push_back(ColorPair::from_mask(basis[k]).index());
  }
  return idx;
}

}  // namespace

Charge expected_linking_charge(ColorPair a, ColorPair b) {
  const auto both = a.mask() & b.mask();
  if (a == b) return Charge();
  if (both == 0) return Charge(a.mask());
  return Charge(static_cast<std::uint8_t>(~(a.mask() | b.mask()) & 0xF));
}

LinkingTable expected_linking_table() {
  LinkingTable t{};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) t[i][j] = expected_linking_charge(ColorPair::from_index(i), ColorPair::from_index(j));
  }
  return t;
}

bool tables_equal(const LinkingTable& a, const LinkingTable& b) {
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (!(a[i][j] == b[i][j])) return false;
    }
  }
  return true;
}

std::string format_linking_table(const LinkingTable& t) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "";
  for (int j = 0; j < 6; ++j) os << std::setw(7) << ColorPair::from_index(j).name();
  os << "\n";
  for (int i = 0; i < 6; ++i) {
    os << std::setw(6) << ColorPair::from_index(i).name();
    for (int j = 0; j < 6; ++j) os << std::setw(7) << t[i][j].name();
    os << "\n";
  }
  return os.str();
}

Charge linking_charge(const LinkingTable& t, Flux a, Flux b) {
  Charge out;
  for (int i : pair_basis(a)) {
    for (int j : pair_basis(b)) out += t[i][j];
  }
  return out;
}

Charge net_exchange(const LinkingTable& t, const std::vector<LoopPair>& pairs) {
  Charge out;
  for (const auto& p : pairs) {
    if (p.linking % 2 != 0) out += linking_charge(t, p.h1, p.h2);
  }
  return out;
}

}  // namespace colorgates

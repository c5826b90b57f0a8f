#include "colorgates/colex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace colorgates {

std::string color_name(Color c) { return "k" + std::to_string(static_cast<int>(c) + 1); }

ColorPair::ColorPair(Color a, Color b) {
  if (a >= kNumColors || b >= kNumColors || a == b) {
    throw std::invalid_argument("ColorPair needs two distinct colors in 0..3");
  }
  mask_ = static_cast<std::uint8_t>((1U << a) | (1U << b));
}

ColorPair ColorPair::from_mask(std::uint8_t mask) {
  if (mask > 0xF || std::popcount(static_cast<unsigned>(mask)) != 2) {
    throw std::invalid_argument("ColorPair mask must have exactly two of four bits set");
  }
  ColorPair p;
  p.mask_ = mask;
  return p;
}

std::array<Color, 2> ColorPair::colors() const {
  std::array<Color, 2> out{};
  int k = 0;
  for (Color c = 0; c < kNumColors; ++c) {
    if (contains(c)) out[k++] = c;
  }
  return out;
}

int ColorPair::index() const {
  auto it = std::find(kPairMasks.begin(), kPairMasks.end(), mask_);
  if (it == kPairMasks.end()) throw std::logic_error("ColorPair: empty pair has no index");
  return static_cast<int>(it - kPairMasks.begin());
}

ColorPair ColorPair::from_index(int i) { return from_mask(kPairMasks.at(static_cast<std::size_t>(i))); }

std::string ColorPair::name() const {
  auto [a, b] = colors();
  return color_name(a) + color_name(b);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::array<std::optional<ContainerRef>, kNumColors>> build_membership(
    std::size_t n, const std::vector<Container>& cells, const std::vector<Container>& facets) {
  std::vector<std::array<std::optional<ContainerRef>, kNumColors>> m(n);
  auto add = [&](const std::vector<Container>& list, ContainerKind kind) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (auto q : list[i].qubits.indices()) {
        auto& slot = m[q][list[i].color];
        if (!slot) slot = ContainerRef{kind, i};
      }
    }
  };
  add(cells, ContainerKind::kCell);
  add(facets, ContainerKind::kFacet);
  return m;
}

void check_containers(std::size_t n, const std::vector<Container>& list, const char* what) {
  for (const auto& c : list) {
    if (c.qubits.size() != n) {
      throw std::invalid_argument(std::string(what) + " mask length does not match n_qubits");
    }
    if (c.color >= kNumColors) throw std::invalid_argument(std::string(what) + " color out of range");
  }
}

}  // namespace

std::vector<Edge> derive_edges(std::size_t n, const std::vector<Container>& cells,
                               const std::vector<Container>& facets) {
  auto membership = build_membership(n, cells, facets);
  auto get = [&](ContainerRef r) -> const BitVec& {
    return r.kind == ContainerKind::kCell ? cells[r.index].qubits : facets[r.index].qubits;
  };
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (Color k = 0; k < kNumColors; ++k) {
      std::optional<BitVec> common;
      bool complete = true;
      for (Color o = 0; o < kNumColors; ++o) {
        if (o == k) continue;
        if (!membership[v][o]) {
          complete = false;
          break;
        }
        const BitVec& q = get(*membership[v][o]);
        common = common ? (*common & q) : q;
      }
      if (!complete || common->count() != 2) continue;
      common->set(v, false);
      const std::size_t u = common->lowest();
      if (v < u) edges.push_back(Edge{k, v, u});
    }
  }
  return edges;
}

Colex Colex::assemble(std::size_t n_qubits, std::vector<Container> cells,
                      std::vector<Container> facets, std::optional<std::vector<Edge>> edges) {
  check_containers(n_qubits, cells, "cell");
  check_containers(n_qubits, facets, "facet");
  Colex cx;
  cx.n_ = n_qubits;
  cx.cells_ = std::move(cells);
  cx.facets_ = std::move(facets);
  cx.membership_ = build_membership(cx.n_, cx.cells_, cx.facets_);
  cx.edges_ = edges ? std::move(*edges) : derive_edges(cx.n_, cx.cells_, cx.facets_);

  cx.adjacency_.assign(cx.n_, {});
  for (const auto& e : cx.edges_) {
    if (e.a >= cx.n_ || e.b >= cx.n_ || e.a == e.b) throw std::invalid_argument("malformed edge");
    cx.adjacency_[e.a].push_back(e.b);
    cx.adjacency_[e.b].push_back(e.a);
  }

  // Faces: connected pieces of each overlapping cell-cell or cell-facet pair.
  cx.cell_faces_.assign(cx.cells_.size(), {});
  cx.facet_faces_.assign(cx.facets_.size(), {});
  std::vector<int> mark(cx.n_, 0);
  int stamp = 0;
  for (std::size_t i = 0; i < cx.cells_.size(); ++i) {
    std::set<std::pair<int, std::size_t>> partners;  // (kind, index), cells sorted first
    for (auto q : cx.cells_[i].qubits.indices()) {
      for (Color c = 0; c < kNumColors; ++c) {
        const auto& r = cx.membership_[q][c];
        if (!r || c == cx.cells_[i].color) continue;
        if (r->kind == ContainerKind::kCell && r->index <= i) continue;
        partners.insert({static_cast<int>(r->kind), r->index});
      }
    }
    for (auto [kind, j] : partners) {
      ContainerRef other{static_cast<ContainerKind>(kind), j};
      const Container& oc = cx.container(other);
      BitVec common = cx.cells_[i].qubits & oc.qubits;
      ++stamp;
      for (auto q : common.indices()) {
        if (mark[q] == stamp) continue;
        BitVec piece(cx.n_);
        std::vector<std::size_t> stack{q};
        mark[q] = stamp;
        while (!stack.empty()) {
          auto v = stack.back();
          stack.pop_back();
          piece.set(v);
          for (auto u : cx.adjacency_[v]) {
            if (mark[u] != stamp && common.test(u)) {
              mark[u] = stamp;
              stack.push_back(u);
            }
          }
        }
        Face f;
        f.label = ColorPair(cx.cells_[i].color, oc.color).complement();
        f.qubits = std::move(piece);
        f.containers = {ContainerRef{ContainerKind::kCell, i}, other};
        const std::size_t id = cx.faces_.size();
        cx.cell_faces_[i].push_back(id);
        if (other.kind == ContainerKind::kCell) {
          cx.cell_faces_[j].push_back(id);
        } else {
          cx.facet_faces_[j].push_back(id);
        }
        cx.faces_.push_back(std::move(f));
      }
    }
  }
  return cx;
}

std::optional<ContainerRef> Colex::container_of(std::size_t q, Color c) const {
  if (q >= n_ || c >= kNumColors) throw std::out_of_range("container_of: index out of range");
  return membership_[q][c];
}

// ---------------------------------------------------------------------------

bool ValidationReport::has(const std::string& rule) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const ValidationIssue& i) { return i.rule == rule; });
}

namespace {

std::string ref_name(ContainerRef r) {
  return (r.kind == ContainerKind::kCell ? "cell " : "facet ") + std::to_string(r.index);
}

}  // namespace

ValidationReport validate(const Colex& cx) {
  ValidationReport rep;
  auto issue = [&](std::string rule, std::string witness) {
    rep.issues.push_back({std::move(rule), std::move(witness)});
  };
  const std::size_t n = cx.n_qubits();

  // One container of each color at every vertex.
  std::vector<std::array<int, kNumColors>> count(n, {0, 0, 0, 0});
  for (const auto* list : {&cx.cells(), &cx.facets()}) {
    for (const auto& c : *list) {
      for (auto q : c.qubits.indices()) ++count[q][c.color];
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    for (Color c = 0; c < kNumColors; ++c) {
      if (count[q][c] != 1) {
        issue("one-per-color", "vertex " + std::to_string(q) + " lies in " +
                                   std::to_string(count[q][c]) + " containers of color " +
                                   color_name(c));
      }
    }
  }

  // Overlapping containers meet in exactly one face.
  std::map<std::pair<std::size_t, std::pair<int, std::size_t>>, int> faces_per_pair;
  for (const auto& f : cx.faces()) {
    ++faces_per_pair[{f.containers[0].index,
                      {static_cast<int>(f.containers[1].kind), f.containers[1].index}}];
  }
  for (const auto& [key, k] : faces_per_pair) {
    if (k != 1) {
      issue("single-face", "cell " + std::to_string(key.first) + " and " +
                               ref_name({static_cast<ContainerKind>(key.second.first), key.second.second}) +
                               " meet in " + std::to_string(k) + " separate faces");
    }
  }

  // Face labels, containment, and cycle shape.
  std::vector<int> edge_deg(n, 0);
  for (std::size_t fi = 0; fi < cx.faces().size(); ++fi) {
    const auto& f = cx.faces()[fi];
    const auto& a = cx.container(f.containers[0]);
    const auto& b = cx.container(f.containers[1]);
    if (a.color == b.color || f.label != ColorPair(a.color, b.color).complement()) {
      issue("face-label", "face " + std::to_string(fi));
    }
    if (!f.qubits.is_subset_of(a.qubits) || !f.qubits.is_subset_of(b.qubits)) {
      issue("face-containment", "face " + std::to_string(fi));
    }
    for (auto q : f.qubits.indices()) {
      int inside = 0;
      for (auto u : cx.adjacency()[q]) inside += f.qubits.test(u) ? 1 : 0;
      if (inside != 2) {
        issue("face-cycle", "face " + std::to_string(fi) + " vertex " + std::to_string(q));
        break;
      }
    }
  }

  // Edge color is the one color whose container differs at the two ends.
  for (std::size_t ei = 0; ei < cx.edges().size(); ++ei) {
    const auto& e = cx.edges()[ei];
    int shared = 0;
    bool own_shared = false;
    for (Color c = 0; c < kNumColors; ++c) {
      auto ra = cx.container_of(e.a, c);
      auto rb = cx.container_of(e.b, c);
      if (ra && rb && *ra == *rb) {
        ++shared;
        if (c == e.color) own_shared = true;
      }
    }
    if (shared != 3 || own_shared) issue("edge-color", "edge " + std::to_string(ei));
  }

  // Vertex degrees: at most one edge per color, all four when closed.
  std::vector<std::array<int, kNumColors>> deg(n, {0, 0, 0, 0});
  for (const auto& e : cx.edges()) {
    ++deg[e.a][e.color];
    ++deg[e.b][e.color];
  }
  for (std::size_t q = 0; q < n; ++q) {
    int total = 0;
    for (Color c = 0; c < kNumColors; ++c) {
      if (deg[q][c] > 1) issue("vertex-degree", "vertex " + std::to_string(q) + " repeats color " + color_name(c));
      total += deg[q][c];
    }
    if (cx.is_closed() && total != 4) {
      issue("vertex-degree", "vertex " + std::to_string(q) + " has degree " + std::to_string(total));
    }
  }

  // Tetrahedral boundary: four facets of distinct colors, pairwise adjacent.
  if (!cx.facets().empty()) {
    const auto& fs = cx.facets();
    std::array<int, kNumColors> per{0, 0, 0, 0};
    for (const auto& f : fs) ++per[f.color];
    if (fs.size() != 4 || per != std::array<int, kNumColors>{1, 1, 1, 1}) {
      issue("tetrahedral", std::to_string(fs.size()) + " facets with colors not one per color");
    } else {
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
          if (overlap(fs[i].qubits, fs[j].qubits) == 0) {
            issue("tetrahedral", "facets " + std::to_string(i) + " and " + std::to_string(j) + " do not meet");
          }
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

Colex build_tetra15() {
  // Qubit A-1 stands for the nonempty subset A of {1,2,3,4}, bit i-1 <-> i.
  constexpr std::size_t n = 15;
  std::vector<Container> cells, facets;
  for (Color i = 0; i < kNumColors; ++i) {
    BitVec in(n), out(n);
    for (unsigned a = 1; a <= n; ++a) {
      if ((a >> i) & 1U) {
        in.set(a - 1);
      } else {
        out.set(a - 1);
      }
    }
    cells.push_back({i, in});
    facets.push_back({i, out});
  }
  return Colex::assemble(n, std::move(cells), std::move(facets));
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

int min_image(int d, int period) {
  d = mod(d, period);
  return d > period / 2 ? d - period : d;
}

}  // namespace

std::array<int, 3> TorusColex::delta(const std::array<int, 3>& a, const std::array<int, 3>& b) const {
  return {min_image(b[0] - a[0], period), min_image(b[1] - a[1], period), min_image(b[2] - a[2], period)};
}

TorusColex build_torus_geometry(int L) {
  if (L < 2 || L % 2 != 0) throw std::invalid_argument("torus colex needs an even L >= 2");
  TorusColex t;
  t.L = L;
  t.period = 4 * L;
  const int P = t.period;

  std::vector<Color> cell_color;
  for (int px = 0; px < 2 * L; ++px) {
    for (int py = 0; py < 2 * L; ++py) {
      for (int pz = 0; pz < 2 * L; ++pz) {
        if (mod(px, 2) != mod(py, 2) || mod(py, 2) != mod(pz, 2)) continue;
        const bool odd = px % 2 != 0;
        const int s = odd ? (px - 1) / 2 + (py - 1) / 2 + (pz - 1) / 2 : px / 2 + py / 2 + pz / 2;
        cell_color.push_back(static_cast<Color>((odd ? 2 : 0) + (s % 2)));
        t.cell_centers.push_back({2 * px, 2 * py, 2 * pz});
      }
    }
  }

  // The 24 vertices of a truncated octahedron: permutations of (0, +-1, +-2).
  std::vector<std::array<int, 3>> offsets;
  for (int s1 : {-1, 1}) {
    for (int s2 : {-2, 2}) {
      std::array<int, 3> base{0, s1, s2};
      std::sort(base.begin(), base.end());
      do {
        offsets.push_back(base);
      } while (std::next_permutation(base.begin(), base.end()));
    }
  }

  std::map<std::array<int, 3>, std::size_t> vertex_id;
  std::vector<std::vector<std::size_t>> cell_vertices(t.cell_centers.size());
  for (std::size_t c = 0; c < t.cell_centers.size(); ++c) {
    for (const auto& o : offsets) {
      std::array<int, 3> v{};
      for (int k = 0; k < 3; ++k) v[k] = mod(t.cell_centers[c][k] + o[k], P);
      auto [it, fresh] = vertex_id.try_emplace(v, t.vertex_coords.size());
      if (fresh) t.vertex_coords.push_back(v);
      cell_vertices[c].push_back(it->second);
    }
  }
  const std::size_t n = t.vertex_coords.size();

  std::vector<Container> cells;
  std::vector<std::vector<std::size_t>> vertex_cells(n);
  for (std::size_t c = 0; c < cell_vertices.size(); ++c) {
    cells.push_back({cell_color[c], BitVec::from_indices(n, cell_vertices[c])});
    for (auto v : cell_vertices[c]) vertex_cells[v].push_back(c);
  }

  // Edges join vertices sqrt(2) apart; the color is the end cell left out.
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          if (dx * dx + dy * dy + dz * dz != 2) continue;
          const auto& p = t.vertex_coords[v];
          std::array<int, 3> u{mod(p[0] + dx, P), mod(p[1] + dy, P), mod(p[2] + dz, P)};
          auto it = vertex_id.find(u);
          if (it == vertex_id.end() || it->second <= v) continue;
          const auto& cu = vertex_cells[it->second];
          std::vector<std::size_t> missing;
          for (auto c : vertex_cells[v]) {
            if (std::find(cu.begin(), cu.end(), c) == cu.end()) missing.push_back(c);
          }
          if (missing.size() != 1) continue;
          edges.push_back(Edge{cell_color[missing[0]], v, it->second});
        }
      }
    }
  }
  t.colex = Colex::assemble(n, std::move(cells), {}, std::move(edges));
  return t;
}

Colex build_torus_colex(int L) { return build_torus_geometry(L).colex; }

Colex spherical_closure(const Colex& colex) {
  if (!colex.is_tetrahedral()) throw std::invalid_argument("spherical_closure needs a tetrahedral colex");
  const std::size_t n = colex.n_qubits() + 1;
  auto widen = [&](const BitVec& v) {
    BitVec w(n);
    for (auto q : v.indices()) w.set(q);
    return w;
  };
  std::vector<Container> cells;
  for (const auto& c : colex.cells()) cells.push_back({c.color, widen(c.qubits)});
  for (const auto& f : colex.facets()) {
    BitVec w = widen(f.qubits);
    w.set(n - 1);
    cells.push_back({f.color, w});
  }
  return Colex::assemble(n, std::move(cells), {});
}

FacetCode facet_code(const Colex& colex, std::size_t facet) {
  if (facet >= colex.facets().size()) throw std::out_of_range("facet_code: no such facet");
  FacetCode fc;
  fc.color = colex.facets()[facet].color;
  fc.qubits = colex.facets()[facet].qubits.indices();
  std::vector<std::size_t> local(colex.n_qubits(), 0);
  for (std::size_t i = 0; i < fc.qubits.size(); ++i) local[fc.qubits[i]] = i;
  for (auto fi : colex.facet_faces()[facet]) {
    const auto& f = colex.faces()[fi];
    BitVec m(fc.qubits.size());
    for (auto q : f.qubits.indices()) m.set(local[q]);
    const auto cell = f.containers[0].index;
    fc.plaquettes.push_back({colex.cells()[cell].color, m});
    fc.plaquette_cells.push_back(cell);
  }
  return fc;
}

ValidationReport validate_facet_code(const FacetCode& fc) {
  // Qubits on the rim of the facet miss the colors of the facets they touch,
  // so a plaquette color may be absent but never repeated.
  ValidationReport rep;
  const std::size_t n = fc.qubits.size();
  for (std::size_t q = 0; q < n; ++q) {
    std::array<int, kNumColors> per{0, 0, 0, 0};
    for (const auto& p : fc.plaquettes) per[p.color] += p.qubits.test(q) ? 1 : 0;
    if (per[0] + per[1] + per[2] + per[3] == 0) rep.issues.push_back({"covered", "local qubit " + std::to_string(q)});
    for (Color c = 0; c < kNumColors; ++c) {
      if (per[c] > (c == fc.color ? 0 : 1)) {
        rep.issues.push_back({"one-per-color", "local qubit " + std::to_string(q) + " color " + color_name(c)});
      }
    }
  }
  for (std::size_t i = 0; i < fc.plaquettes.size(); ++i) {
    for (std::size_t j = i + 1; j < fc.plaquettes.size(); ++j) {
      if (overlap(fc.plaquettes[i].qubits, fc.plaquettes[j].qubits) % 2 != 0) {
        rep.issues.push_back({"even-overlap", "plaquettes " + std::to_string(i) + " and " + std::to_string(j)});
      }
    }
  }
  return rep;
}

DualGraph dual_graph(const Colex& colex) {
  DualGraph g;
  for (const auto& c : colex.cells()) g.vertex_colors.push_back(c.color);
  for (const auto& f : colex.faces()) {
    DualGraph::DualEdge e;
    e.label = f.label;
    e.u = f.containers[0].index;
    if (!f.on_facet()) e.v = f.containers[1].index;
    g.edges.push_back(e);
  }
  return g;
}

std::size_t DualGraph::num_dangling() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const DualEdge& e) { return !e.v.has_value(); }));
}

}  // namespace colorgates

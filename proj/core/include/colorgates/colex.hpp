#pragma once

// 3-colexes: four-colored cell complexes in which every vertex (qubit) lies in
// exactly one cell or facet of each color. Faces and edges are derived from
// the containers, never stored as independent truth.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colorgates/gf2.hpp"

namespace colorgates {

inline constexpr int kNumColors = 4;

// Colors are 0..3 internally and printed as k1..k4.
using Color = std::uint8_t;
std::string color_name(Color c);

// Unordered pair of distinct colors, stored as a 4-bit mask with two bits set.
class ColorPair {
 public:
  constexpr ColorPair() = default;
  ColorPair(Color a, Color b);
  static ColorPair from_mask(std::uint8_t mask);

  constexpr std::uint8_t mask() const noexcept { return mask_; }
  bool contains(Color c) const noexcept { return (mask_ >> c) & 1U; }
  std::array<Color, 2> colors() const;
  ColorPair complement() const { return from_mask(static_cast<std::uint8_t>(~mask_ & 0xF)); }
  // Dense index 0..5 in mask order.
  int index() const;
  static ColorPair from_index(int i);
  std::string name() const;

  friend constexpr bool operator==(ColorPair, ColorPair) noexcept = default;

 private:
  std::uint8_t mask_ = 0;
};

inline constexpr std::array<std::uint8_t, 6> kPairMasks = {0x3, 0x5, 0x6, 0x9, 0xA, 0xC};

struct Container {
  Color color = 0;
  BitVec qubits;
};

enum class ContainerKind : std::uint8_t { kCell, kFacet };

struct ContainerRef {
  ContainerKind kind = ContainerKind::kCell;
  std::size_t index = 0;
  friend bool operator==(const ContainerRef&, const ContainerRef&) = default;
};

struct Face {
  ColorPair label;
  BitVec qubits;
  std::array<ContainerRef, 2> containers;  // first entry is always a cell
  bool on_facet() const noexcept { return containers[1].kind == ContainerKind::kFacet; }
};

struct Edge {
  Color color = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

class Colex {
 public:
  // Derives faces (connected pieces of cell-cell and cell-facet overlaps) and
  // edges from the containers. Builders that know their geometry may pass
  // explicit edges; they are then cross-checked by validate().
  static Colex assemble(std::size_t n_qubits, std::vector<Container> cells,
                        std::vector<Container> facets,
                        std::optional<std::vector<Edge>> edges = std::nullopt);

  std::size_t n_qubits() const noexcept { return n_; }
  const std::vector<Container>& cells() const noexcept { return cells_; }
  const std::vector<Container>& facets() const noexcept { return facets_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool is_closed() const noexcept { return facets_.empty(); }
  bool is_tetrahedral() const noexcept { return facets_.size() == 4; }

  const Container& container(ContainerRef r) const {
    return r.kind == ContainerKind::kCell ? cells_.at(r.index) : facets_.at(r.index);
  }
  // Container of color c holding qubit q, if any.
  std::optional<ContainerRef> container_of(std::size_t q, Color c) const;
  // Faces incident to each cell / lying on each facet.
  const std::vector<std::vector<std::size_t>>& cell_faces() const noexcept { return cell_faces_; }
  const std::vector<std::vector<std::size_t>>& facet_faces() const noexcept { return facet_faces_; }
  // Neighbors of each vertex along edges.
  const std::vector<std::vector<std::size_t>>& adjacency() const noexcept { return adjacency_; }

 private:
  std::size_t n_ = 0;
  std::vector<Container> cells_;
  std::vector<Container> facets_;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<std::array<std::optional<ContainerRef>, kNumColors>> membership_;
  std::vector<std::vector<std::size_t>> cell_faces_;
  std::vector<std::vector<std::size_t>> facet_faces_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Edges derived purely from containers: for each vertex and color k, the
// containers of the other three colors meet in exactly two vertices.
std::vector<Edge> derive_edges(std::size_t n_qubits, const std::vector<Container>& cells,
                               const std::vector<Container>& facets);

struct ValidationIssue {
  std::string rule;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
  bool has(const std::string& rule) const;
};

ValidationReport validate(const Colex& colex);

Colex build_tetra15();

// Bitruncated cubic honeycomb on the 3-torus. Cell centers sit at 2p with p
// all-even or all-odd modulo 2L; real coordinates have period 4L.
struct TorusColex {
  int L = 0;
  int period = 0;
  Colex colex;
  std::vector<std::array<int, 3>> cell_centers;
  std::vector<std::array<int, 3>> vertex_coords;

  // Minimal-image displacement b - a.
  std::array<int, 3> delta(const std::array<int, 3>& a, const std::array<int, 3>& b) const;
};
TorusColex build_torus_geometry(int L);
Colex build_torus_colex(int L);

// Adds one qubit and turns every facet into a cell containing it.
Colex spherical_closure(const Colex& colex);

// Two-dimensional color code living on one facet.
struct FacetCode {
  Color color = 0;
  std::vector<std::size_t> qubits;  // global index of each local qubit
  std::vector<Container> plaquettes;  // local masks, colors of the meeting cells
  std::vector<std::size_t> plaquette_cells;
};
FacetCode facet_code(const Colex& colex, std::size_t facet);
// Plaquette colors never repeat at a qubit, every qubit is covered and
// plaquettes overlap evenly.
ValidationReport validate_facet_code(const FacetCode& fc);

struct DualGraph {
  std::vector<Color> vertex_colors;  // one per cell
  struct DualEdge {
    ColorPair label;
    std::size_t u = 0;
    std::optional<std::size_t> v;  // empty for faces on a facet
  };
  std::vector<DualEdge> edges;  // one per face, same order
  std::size_t num_dangling() const;
};
DualGraph dual_graph(const Colex& colex);

}  // namespace colorgates

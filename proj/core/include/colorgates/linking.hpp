#pragma once

// Linked flux loops on the torus colex. A membrane is an axis-aligned
// rectangle; its faces are those whose dual segment (between the two cell
// centers) crosses it, and the membrane operator of flux h is X on the faces
// among them labeled with the complement of h. Two interlocking rectangles
// bound linked loops, and the charge they exchange under transversal T is
// read off by probing Z on the overlap of the membranes with a third one.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "colorgates/charges.hpp"
#include "colorgates/code.hpp"

namespace colorgates {

// Rectangle in the plane x[axis] = plane, spanning [lo, hi] in the other two
// axes (increasing axis order). Planes sit on odd coordinates and bounds on
// half-integers, so no dual segment meets the rectangle degenerately.
struct Rect {
  int axis = 0;
  double plane = 0;
  std::array<double, 2> lo{};
  std::array<double, 2> hi{};
  Rect translated(const std::array<int, 3>& shift) const;
};

// Number of times the boundary of a pierces the interior of b.
int boundary_crossings(const Rect& a, const Rect& b);
// Parity of the linking number of the two boundary loops.
int linking_parity(const Rect& a, const Rect& b);

struct LinkGeometry {
  Rect m1, m2;
  std::vector<Rect> probes;
};

// Interlocking membranes with two probes pierced once by their overlap.
LinkGeometry default_link_geometry(int L);
// The same membranes with m2 lifted clear of m1: linking number zero.
LinkGeometry unlinked_geometry(int L);
LinkGeometry translated(const LinkGeometry& g, const std::array<int, 3>& shift);

// The geometry context: the torus colex with coordinates and its code.
class LinkingLattice {
 public:
  explicit LinkingLattice(TorusColex torus);
  const TorusColex& torus() const noexcept { return torus_; }
  const CssCode& code() const noexcept { return code_; }
  // Faces whose dual segment crosses r.
  BitVec surface(const Rect& r) const;
  BitVec membrane(const Rect& r, ColorPair h) const;

 private:
  TorusColex torus_;
  CssCode code_;
};

struct LinkedPairSetup {
  ColorPair h1, h2;
  Rect r1, r2;
  BitVec alpha1, alpha2;  // membrane X masks
  BitVec phi1, phi2;      // their flux loops
  BitVec overlap;         // alpha1 & alpha2
  int linking = 0;        // parity
};

// Builds and validates the membranes: each flux loop is one nonempty
// Gauss-satisfying component, and the charge of Z on the overlap sits on
// cells the loops touch. Throws std::invalid_argument for L < 4 or a failed
// check.
LinkedPairSetup build_linked_pair(const LinkingLattice& lat, ColorPair h1, ColorPair h2, const LinkGeometry& g);
bool overlap_charge_on_loops(const CssCode& code, const LinkedPairSetup& s);

// Charge whose pairing with every probe flux is (-1)^{|a1 & a2 & a3|}.
// Throws if the probe is not pierced exactly once by the overlap segment
// (only for linked setups) or the signs are not a character.
Charge transferred_charge(const LinkingLattice& lat, const LinkedPairSetup& s, const Rect& probe);

using LinkingTable = std::array<std::array<Charge, 6>, 6>;  // indexed by ColorPair::index()
LinkingTable linking_table(const LinkingLattice& lat, const LinkGeometry& g, std::size_t probe = 0);

// The closed-form entry: zero on equal labels, the fourth color on labels
// sharing one color, and the label itself (as a charge) on disjoint labels.
Charge expected_linking_charge(ColorPair a, ColorPair b);
LinkingTable expected_linking_table();
bool tables_equal(const LinkingTable& a, const LinkingTable& b);
std::string format_linking_table(const LinkingTable& t);

// Bilinear extension of a table to arbitrary fluxes.
Charge linking_charge(const LinkingTable& t, Flux a, Flux b);

struct LoopPair {
  Flux h1, h2;
  int linking = 0;  // linking number, only its parity matters
};
Charge net_exchange(const LinkingTable& t, const std::vector<LoopPair>& pairs);

}  // namespace colorgates

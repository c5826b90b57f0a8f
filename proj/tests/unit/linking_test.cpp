#include "colorgates/linking.hpp"

#include <gtest/gtest.h>

#include <map>
#include <string>

namespace colorgates {
namespace {

const LinkingLattice& lattice8() {
  static const LinkingLattice lat(build_torus_geometry(8));
  return lat;
}

ColorPair pair(const std::string& s) {
  return ColorPair(static_cast<Color>(s[1] - '1'), static_cast<Color>(s[3] - '1'));
}

// Written out by hand from the rule: a label linked with itself exchanges
// nothing, labels sharing a color exchange the color neither uses, and
// disjoint labels exchange the pair charge (either pair, they agree mod k1+k2+k3+k4).
const std::map<std::pair<std::string, std::string>, std::string> kOracle = {
    {{"k1k2", "k1k3"}, "k4"},    {{"k1k2", "k2k3"}, "k4"},    {{"k1k2", "k1k4"}, "k3"},
    {{"k1k2", "k2k4"}, "k3"},    {{"k1k2", "k3k4"}, "k1+k2"}, {{"k1k3", "k2k3"}, "k4"},
    {{"k1k3", "k1k4"}, "k2"},    {{"k1k3", "k2k4"}, "k1+k3"}, {{"k1k3", "k3k4"}, "k2"},
    {{"k2k3", "k1k4"}, "k1+k4"}, {{"k2k3", "k2k4"}, "k1"},    {{"k2k3", "k3k4"}, "k1"},
    {{"k1k4", "k2k4"}, "k3"},    {{"k1k4", "k3k4"}, "k2"},    {{"k2k4", "k3k4"}, "k1"},
};

std::string oracle(ColorPair a, ColorPair b) {
  if (a == b) return "0";
  auto it = kOracle.find({a.name(), b.name()});
  if (it == kOracle.end()) it = kOracle.find({b.name(), a.name()});
  return it->second;
}

TEST(RectTest, CrossingsAndParity) {
  const auto g = default_link_geometry(8);
  EXPECT_EQ(boundary_crossings(g.m1, g.m2), 1);
  EXPECT_EQ(boundary_crossings(g.m2, g.m1), 1);
  EXPECT_EQ(linking_parity(g.m1, g.m2), 1);
  const auto u = unlinked_geometry(8);
  EXPECT_EQ(linking_parity(u.m1, u.m2), 0);
  const Rect a{0, 3, {0.5, 0.5}, {4.5, 4.5}}, far{1, 3, {10.5, 10.5}, {12.5, 12.5}};
  EXPECT_EQ(boundary_crossings(a, far), 0);
  EXPECT_EQ(linking_parity(a, far), 0);
  const auto t = a.translated({0, 2, 2});
  EXPECT_DOUBLE_EQ(t.lo[0], 2.5);
  EXPECT_DOUBLE_EQ(t.plane, 3);
}

TEST(ClosedForm, MatchesHandTable) {
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const auto a = ColorPair::from_index(i), b = ColorPair::from_index(j);
      EXPECT_EQ(expected_linking_charge(a, b).name(), oracle(a, b)) << a.name() << " " << b.name();
      EXPECT_EQ(expected_linking_charge(a, b), expected_linking_charge(b, a));
    }
  }
}

TEST(ClosedForm, BilinearExtensionAgrees) {
  const auto t = expected_linking_table();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const auto a = ColorPair::from_index(i), b = ColorPair::from_index(j);
      EXPECT_EQ(linking_charge(t, a, b), t[i][j]);
    }
  }
  for (auto a : Flux::all()) {
    for (auto b : Flux::all()) {
      for (auto c : Flux::all()) {
        EXPECT_EQ(linking_charge(t, a + b, c), linking_charge(t, a, c) + linking_charge(t, b, c));
      }
    }
  }
}

TEST(NetExchange, OnlyOddLinksCount) {
  const auto t = expected_linking_table();
  const Flux a = pair("k1k2"), b = pair("k1k3"), c = pair("k3k4");
  EXPECT_TRUE(net_exchange(t, {}).zero());
  EXPECT_TRUE(net_exchange(t, {{a, b, 2}}).zero());
  EXPECT_EQ(net_exchange(t, {{a, b, 1}}).name(), "k4");
  EXPECT_EQ(net_exchange(t, {{a, b, 1}, {a, c, 3}, {b, c, 0}}), Charge::color(3) + Charge(0x3));
  EXPECT_TRUE(net_exchange(t, {{a, b, 1}, {a, b, -1}}).zero());
}

TEST(LinkedPair, SetupInvariants) {
  const auto& lat = lattice8();
  const auto g = default_link_geometry(8);
  const auto s = build_linked_pair(lat, pair("k1k2"), pair("k1k3"), g);
  EXPECT_EQ(s.linking, 1);
  EXPECT_EQ(s.overlap, s.alpha1 & s.alpha2);
  EXPECT_EQ(lat.code().flux_of(s.alpha1), s.phi1);
  EXPECT_EQ(lat.code().flux_of(s.alpha2), s.phi2);
  EXPECT_TRUE(overlap_charge_on_loops(lat.code(), s));

  // A Z on a qubit whose cells no loop face touches carries stray charge.
  BitVec touched(lat.code().num_cells());
  for (auto f : (s.phi1 | s.phi2).indices()) {
    for (const auto& c : lat.code().colex().faces()[f].containers) {
      if (c.kind == ContainerKind::kCell) touched.set(c.index);
    }
  }
  auto moved = s;
  for (std::size_t q = 0; q < lat.code().n(); ++q) {
    const auto ch = lat.code().charge_of(BitVec::from_indices(lat.code().n(), {q}));
    if ((ch & touched).none()) {
      moved.overlap.flip(q);
      break;
    }
  }
  ASSERT_NE(moved.overlap, s.overlap);
  EXPECT_FALSE(overlap_charge_on_loops(lat.code(), moved));
}

TEST(LinkedPair, RejectsSmallLattice) {
  const LinkingLattice lat(build_torus_geometry(2));
  EXPECT_THROW(build_linked_pair(lat, pair("k1k2"), pair("k1k3"), default_link_geometry(2)), std::invalid_argument);
}

TEST(LinkingTable, LatticeEightMatchesOracle) {
  const auto t = linking_table(lattice8(), default_link_geometry(8));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const auto a = ColorPair::from_index(i), b = ColorPair::from_index(j);
      EXPECT_EQ(t[i][j].name(), oracle(a, b)) << a.name() << " " << b.name();
    }
  }
}

TEST(LinkingTable, ProbeIndependent) {
  const auto g = default_link_geometry(8);
  const auto t0 = linking_table(lattice8(), g, 0);
  for (std::size_t p = 1; p < g.probes.size(); ++p) EXPECT_TRUE(tables_equal(t0, linking_table(lattice8(), g, p)));
}

TEST(LinkingTable, TranslationInvariant) {
  const auto g = default_link_geometry(8);
  const auto& lat = lattice8();
  for (const auto& shift : {std::array<int, 3>{8, 0, 0}, std::array<int, 3>{0, 8, 8}}) {
    const auto gt = translated(g, shift);
    for (auto [a, b] : {std::pair<std::string, std::string>{"k1k2", "k3k4"}, {"k1k3", "k2k3"}, {"k2k4", "k1k4"}}) {
      const auto s = build_linked_pair(lat, pair(a), pair(b), gt);
      EXPECT_EQ(transferred_charge(lat, s, gt.probes[0]).name(), oracle(pair(a), pair(b)));
    }
  }
}

TEST(LinkingTable, UnlinkedIsZero) {
  const auto t = linking_table(lattice8(), unlinked_geometry(8));
  for (const auto& row : t) {
    for (const auto& c : row) EXPECT_TRUE(c.zero());
  }
}

TEST(LinkingTable, Formatting) {
  const auto s = format_linking_table(expected_linking_table());
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 7);
  EXPECT_NE(s.find("k1+k2"), std::string::npos);
}

}  // namespace
}  // namespace colorgates

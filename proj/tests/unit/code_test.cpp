#include "colorgates/code.hpp"

#include <gtest/gtest.h>

#include <random>

namespace colorgates {
namespace {

std::size_t q(unsigned subset) { return subset - 1; }

BitVec random_mask(std::size_t n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution bit(p);
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, bit(rng));
  return v;
}

class Tetra : public ::testing::Test {
 protected:
  CssCode code{build_tetra15()};
};

TEST_F(Tetra, Ranks) {
  EXPECT_EQ(code.rank_sx(), 4U);
  EXPECT_EQ(code.rank_sz(), 10U);
  EXPECT_EQ(code.num_logical(), 1U);
}

TEST_F(Tetra, CssCommutation) {
  for (const auto& x : code.sx().row_vectors()) {
    for (const auto& z : code.sz().row_vectors()) EXPECT_EQ(symplectic_commutator(x, z), 1);
  }
}

TEST_F(Tetra, IdentityHasEmptySyndrome) {
  const auto s = code.syndrome(PauliOp::identity(15));
  EXPECT_TRUE(s.charge.none());
  EXPECT_TRUE(s.flux.none());
}

TEST_F(Tetra, ZOnFullSubsetHitsEveryCell) {
  const auto s = code.syndrome(PauliOp::z_type(BitVec::from_indices(15, {q(0b1111)})));
  EXPECT_EQ(s.charge.count(), 4U);
  EXPECT_TRUE(s.flux.none());
}

// The flux of X on {1} is every face containing that qubit, found here by
// scanning face masks directly.
TEST_F(Tetra, SingleQubitFlux) {
  for (std::size_t v = 0; v < 15; ++v) {
    const auto phi = code.flux_of(BitVec::from_indices(15, {v}));
    BitVec expected(code.num_faces());
    for (std::size_t f = 0; f < code.num_faces(); ++f) expected.set(f, code.colex().faces()[f].qubits.test(v));
    EXPECT_EQ(phi, expected);
    EXPECT_TRUE(code.gauss_ok(phi));
  }
}

TEST_F(Tetra, SyndromeIsLinear) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    PauliOp a{random_mask(15, rng), random_mask(15, rng)}, b{random_mask(15, rng), random_mask(15, rng)};
    auto sa = code.syndrome(a);
    sa += code.syndrome(b);
    EXPECT_EQ(code.syndrome(a * b), sa);
  }
}

TEST_F(Tetra, MonopoleVanishesOnSyndromes) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 50; ++k) {
    for (auto f : code.monopole(code.flux_of(random_mask(15, rng)))) EXPECT_TRUE(f.zero());
  }
}

TEST_F(Tetra, MonopoleOfSingleFace) {
  for (std::size_t f = 0; f < code.num_faces(); ++f) {
    const auto m = code.monopole(BitVec::from_indices(code.num_faces(), {f}));
    const auto& face = code.colex().faces()[f];
    for (std::size_t c = 0; c < code.num_cells(); ++c) {
      const bool end = face.containers[0].index == c ||
                       (!face.on_facet() && face.containers[1].index == c);
      EXPECT_EQ(m[c], end ? Flux(face.label) : Flux());
    }
  }
}

TEST_F(Tetra, MonopoleOfAllCellFaces) {
  for (std::size_t c = 0; c < code.num_cells(); ++c) {
    BitVec phi(code.num_faces());
    for (auto f : code.colex().cell_faces()[c]) phi.set(f);
    EXPECT_TRUE(code.monopole(phi)[c].zero());
  }
}

// Exhaustive Gauss's law on |phi| <= 3; the has_preimage result must
// reproduce phi.
TEST_F(Tetra, PreimageIffGauss) {
  const std::size_t m = code.num_faces();
  std::size_t with = 0;
  auto check = [&](const BitVec& phi) {
    const auto x = code.has_preimage(phi);
    EXPECT_EQ(x.has_value(), code.gauss_ok(phi));
    if (x) {
      EXPECT_EQ(code.flux_of(*x), phi);
      ++with;
    }
  };
  check(BitVec(m));
  for (std::size_t a = 0; a < m; ++a) {
    check(BitVec::from_indices(m, {a}));
    for (std::size_t b = a + 1; b < m; ++b) {
      check(BitVec::from_indices(m, {a, b}));
      for (std::size_t c = b + 1; c < m; ++c) check(BitVec::from_indices(m, {a, b, c}));
    }
  }
  EXPECT_GT(with, 1U);
}

TEST_F(Tetra, ComponentsSplitAcrossCells) {
  // {1} lies only in cell k1, {2,3,4} in cells k2, k3, k4.
  const auto x = BitVec::from_indices(15, {q(0b0001), q(0b1110)});
  const auto phi = code.flux_of(x);
  const auto comps = code.connected_components(phi);
  ASSERT_EQ(comps.size(), 2U);
  std::size_t total = 0;
  for (const auto& c : comps) {
    total += c.faces.count();
    EXPECT_TRUE(c.gauss_ok);
  }
  EXPECT_EQ(total, phi.count());
  EXPECT_TRUE(code.connected_components(BitVec(code.num_faces())).empty());
}

TEST_F(Tetra, ChargeConservation) { EXPECT_TRUE(code.charge_conservation_check()); }

TEST_F(Tetra, CorruptedCellBreaksConservation) {
  auto cells = code.colex().cells();
  cells[0].qubits.flip(q(0b0010));
  const CssCode bad(Colex::assemble(15, cells, code.colex().facets()));
  EXPECT_FALSE(bad.charge_conservation_check());
}

TEST_F(Tetra, EmptyFluxHasNoBranchesOrEnds) {
  const BitVec none(code.num_faces());
  EXPECT_TRUE(code.branching_points(none).none());
  for (std::size_t r = 0; r < 4; ++r) EXPECT_TRUE(code.endpoints_on_facet(none, r).none());
}

TEST_F(Tetra, EndpointsCountOnlyFacetFaces) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    const auto phi = code.flux_of(random_mask(15, rng));
    for (std::size_t r = 0; r < 4; ++r) {
      BitVec expected(code.num_cells());
      for (auto f : code.colex().facet_faces()[r]) {
        if (phi.test(f)) expected.set(code.colex().faces()[f].containers[0].index);
      }
      EXPECT_EQ(code.endpoints_on_facet(phi, r), expected);
    }
  }
}

TEST_F(Tetra, SolveOffFacet) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 200; ++k) {
    const auto phi = code.flux_of(random_mask(15, rng, 0.15));
    for (std::size_t r = 0; r < 4; ++r) {
      bool touches = false;
      for (auto f : code.colex().facet_faces()[r]) touches = touches || phi.test(f);
      if (touches) continue;
      const auto allowed = ~code.colex().facets()[r].qubits;
      const auto x = code.solve_x_within(phi, allowed);
      ASSERT_TRUE(x.has_value());
      EXPECT_EQ(code.flux_of(*x), phi);
      EXPECT_TRUE(x->is_subset_of(allowed));
    }
  }
  EXPECT_FALSE(code.solve_x_within(code.flux_of(BitVec::from_indices(15, {0})), BitVec(15)).has_value());
}

TEST_F(Tetra, FacetLogicals) {
  for (std::size_t r = 0; r < 4; ++r) {
    const auto& xr = code.colex().facets()[r].qubits;
    for (const auto& z : code.sz().row_vectors()) EXPECT_EQ(symplectic_commutator(xr, z), 1);
    for (const auto& x : code.sx().row_vectors()) EXPECT_EQ(symplectic_commutator(x, xr), 1);
    for (std::size_t s = 0; s < 4; ++s) EXPECT_EQ(symplectic_commutator(xr, code.colex().facets()[s].qubits), -1);
  }
}

// The boundary of a face, walked as a cycle of edges.
std::vector<std::size_t> face_cycle(const Colex& cx, const BitVec& face) {
  std::vector<std::size_t> inside;
  for (std::size_t e = 0; e < cx.edges().size(); ++e) {
    if (face.test(cx.edges()[e].a) && face.test(cx.edges()[e].b)) inside.push_back(e);
  }
  std::vector<std::size_t> path{inside.front()};
  std::vector<bool> used(inside.size());
  used[0] = true;
  std::size_t at = cx.edges()[inside.front()].b;
  for (std::size_t step = 1; step < inside.size(); ++step) {
    for (std::size_t i = 0; i < inside.size(); ++i) {
      const auto& e = cx.edges()[inside[i]];
      if (used[i] || (e.a != at && e.b != at)) continue;
      used[i] = true;
      path.push_back(inside[i]);
      at = e.a == at ? e.b : e.a;
      break;
    }
  }
  return path;
}

TEST(TorusCode, ContractibleStringIsStabilizer) {
  const CssCode code(build_torus_colex(4));
  for (std::size_t f = 0; f < code.num_faces(); f += 37) {
    const auto& face = code.colex().faces()[f];
    const auto path = face_cycle(code.colex(), face.qubits);
    EXPECT_EQ(path.size(), face.qubits.count());
    for (Color k : face.label.colors()) {
      const auto z = code.string_operator(path, k);
      EXPECT_EQ(z, face.qubits);
      EXPECT_TRUE(code.sz_span().contains(z));
    }
  }
}

TEST(TorusCode, ClosedMembraneHasNoFlux) {
  const CssCode code(build_torus_colex(4));
  for (std::size_t c = 0; c < code.num_cells(); c += 9) {
    BitVec surf(code.num_faces());
    for (auto f : code.colex().cell_faces()[c]) surf.set(f);
    for (int i = 0; i < 6; ++i) {
      const auto x = code.membrane_operator(surf, ColorPair::from_index(i));
      EXPECT_TRUE(code.flux_of(x).none());
    }
  }
}

TEST(TorusCode, Counts) {
  const CssCode code(build_torus_colex(4));
  EXPECT_EQ(code.num_logical(), 9U);
  EXPECT_TRUE(code.charge_conservation_check());
}

TEST(TorusCode, StringValidation) {
  const CssCode code(build_torus_colex(2));
  EXPECT_THROW(code.string_operator({0, 0}, 0), std::invalid_argument);
  EXPECT_THROW(code.string_operator({code.colex().edges().size()}, 0), std::invalid_argument);
}

}  // namespace
}  // namespace colorgates

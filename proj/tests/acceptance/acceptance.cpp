// Acceptance run: one PASS/FAIL line per criterion, then a summary. Every
// tolerance, case count and time budget is pinned below. Exit status is 0
// only when all criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "colorgates/checks.hpp"
#include "colorgates/cliffprop.hpp"
#include "colorgates/code.hpp"
#include "colorgates/linking.hpp"
#include "colorgates/noise.hpp"
#include "colorgates/statevec.hpp"
#include "colorgates/tga.hpp"

namespace colorgates {
namespace {

constexpr std::uint64_t kSeed = 20240601;

constexpr double kBudgetAxioms = 10;
constexpr double kBudgetLogicalT = 30;
constexpr double kBudgetTheorem1 = 600;
constexpr double kBudgetExactlyOne = 300;
constexpr double kBudgetLinking = 120;
constexpr double kBudgetNoise = 300;

constexpr double kTolLogicalT = 1e-10;
constexpr double kTolTheorem1 = 1e-9;
constexpr std::size_t kPropertyCases = 200;
constexpr std::size_t kPropRandom = 1000;
constexpr std::size_t kGaussRandom = 10000;
constexpr double kNoiseP = 0.005;
constexpr std::size_t kNoiseTrials = 100000;
constexpr double kNoiseSigmas = 3.0;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;  // informational lines printed under the verdict
  std::string transcript;          // deterministic record of random cases, compared for determinism
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

BitVec random_mask(std::size_t n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution bit(p);
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, bit(rng));
  return v;
}

BitVec random_in_span(const BitMatrix& gens, std::mt19937_64& rng) {
  BitVec v(gens.cols());
  for (const auto& g : gens.row_vectors()) {
    if (rng() & 1U) v ^= g;
  }
  return v;
}

std::vector<BitVec> enumerate(const BitMatrix& gens) {
  std::vector<BitVec> out{BitVec(gens.cols())};
  for (const auto& g : gens.row_vectors()) {
    const auto size = out.size();
    for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] ^ g);
  }
  return out;
}

std::string hex(const BitVec& v) { return v.to_string(); }

struct Tetra {
  CssCode code{build_tetra15()};
  TPattern pattern = TPattern::from_bipartition(code.colex());
  TgaContext tga{code, pattern};
  BitVec facet = code.colex().facets()[0].qubits;

  bool central_odd(const BitVec& z) const {
    if (!(z & facet).parity()) return false;
    for (const auto& x : code.sx().row_vectors()) {
      if ((z & x).parity()) return false;
    }
    return true;
  }
  // Tolerability by enumerating G_a: no element commutes with S_X while
  // anticommuting with the facet logical.
  bool tolerable_oracle(const BitVec& alpha) const {
    BitMatrix cent = code.sx();
    cent.push_back(facet);
    Gf2Span g(code.sz_span());
    for (const auto& beta : enumerate(cent)) g.insert(alpha & beta);
    for (const auto& z : enumerate(g.basis())) {
      if (central_odd(z)) return false;
    }
    return true;
  }
  BitVec make_tolerable(BitVec a) const {
    if (!tga.is_tolerable(a)) a ^= facet;
    return a;
  }
};

const Tetra& tetra() {
  static const Tetra t;
  return t;
}

Outcome ac1_axioms() {
  const auto& t = tetra();
  const auto rep = check_axioms(t.code, t.pattern);
  // Both inclusions of the undetectable relation, checked here on their own.
  Gf2Span prod(t.code.z_centralizer().cols());
  const auto cent = t.code.x_centralizer();
  for (std::size_t i = 0; i < cent.rows(); ++i) {
    for (std::size_t j = i; j < cent.rows(); ++j) prod.insert(cent.row(i) & cent.row(j));
  }
  const Gf2Span zc(t.code.z_centralizer());
  bool forward = true, backward = true;
  const auto prod_basis = prod.basis();
  for (const auto& v : prod_basis.row_vectors()) forward = forward && zc.contains(v);
  for (const auto& v : t.code.z_centralizer().row_vectors()) backward = backward && prod.contains(v);
  Outcome o;
  o.pass = rep.ok() && forward && backward && validate(t.code.colex()).ok();
  o.detail = std::string("css ") + (rep.css ? "ok" : "FAIL") + ", invariance " + (rep.invariance ? "ok" : "FAIL") +
             fmt(" (leakage %.1e)", rep.leakage) + ", logical qubits " + std::to_string(rep.num_logical) +
             ", row spaces " + (forward && backward ? "equal" : "differ");
  return o;
}

Outcome ac2_logical_t() {
  const auto& t = tetra();
  const auto u1 = logical_action_check(t.code, t.pattern, 1);
  const auto u2 = logical_action_check(t.code, t.pattern, 2);
  double worst = std::max(u1.deviation, u2.deviation);
  bool names = u1.gate == "T" && u2.gate == "P";
  const auto spec = encoding_of(t.code);
  const auto basis = logical_basis(spec);
  std::string facets;
  for (std::size_t r = 0; r < 4; ++r) {
    const auto g = CliffordGate::facet_p(t.code, t.pattern, r);
    std::vector<int> e(t.code.n());
    for (std::size_t q = 0; q < t.code.n(); ++q) e[q] = 2 * g.p_powers()[q];
    const auto rep = logical_action(spec, basis, e);
    worst = std::max(worst, rep.deviation);
    names = names && rep.gate == "P";
    facets += (r ? "," : "") + rep.gate;
  }
  Outcome o;
  o.pass = names && worst < kTolLogicalT;
  o.detail = "U=" + u1.gate + " U^2=" + u2.gate + " facet-P=" + facets + fmt(", max deviation %.2e", worst) +
             fmt(" (tol %.0e)", kTolLogicalT);
  return o;
}

Outcome ac3_theorem1() {
  const auto& t = tetra();
  double worst = 0;
  std::size_t cases = 0, wrong_branch = 0;
  auto run = [&](const BitVec& x, bool expect_tolerable) {
    const auto rep = theorem1_check(t.tga, x);
    worst = std::max(worst, rep.max_distance);
    ++cases;
    if (rep.tolerable != expect_tolerable || rep.used_w == expect_tolerable) ++wrong_branch;
  };
  for (std::size_t a = 0; a < 15; ++a) run(BitVec::from_indices(15, {a}), true);
  for (std::size_t a = 0; a < 15; ++a) {
    for (std::size_t b = a + 1; b < 15; ++b) run(BitVec::from_indices(15, {a, b}), true);
  }
  run(t.facet, false);
  Outcome o;
  o.pass = cases == 121 && wrong_branch == 0 && worst < kTolTheorem1;
  o.detail = std::to_string(cases) + " errors (15 single, 105 pairs, facet logical), wrong branch " +
             std::to_string(wrong_branch) + fmt(", max trace distance %.2e", worst) + fmt(" (tol %.0e)", kTolTheorem1);
  return o;
}

Outcome ac4_properties(std::uint64_t seed) {
  const auto& t = tetra();
  const auto& code = t.code;
  const auto& tga = t.tga;
  std::mt19937_64 rng(seed);
  std::ostringstream tx;
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // cases, failures
  auto record = [&](const std::string& name, bool ok) {
    auto& e = tally[name];
    ++e.first;
    if (!ok) ++e.second;
  };
  BitMatrix cent = code.sx();
  cent.push_back(t.facet);

  for (std::size_t k = 0; k < kPropertyCases; ++k) {
    const auto a = random_mask(15, rng);
    const auto beta = random_in_span(code.sx(), rng);
    const auto gamma = random_in_span(cent, rng);
    tx << hex(a) << hex(beta) << hex(gamma);
    bool ok = tga.group_G(a ^ beta) == tga.group_G(a) && tga.group_H(a ^ gamma) == tga.group_H(a);
    if (tga.is_tolerable(a)) ok = ok && tga.e_coset(a ^ beta).same_as(tga.e_coset(a));
    record("shift-invariance", ok);

    const bool tol = tga.is_tolerable(a);
    tx << tol;
    record("tolerable-criteria-agree", tol == tga.tolerable_by_rank(a) && tol == tga.tolerable_by_centralizer(a) &&
                                  tol == tga.tolerable_by_definition(a) && tol == t.tolerable_oracle(a));
    record("one-of-logical-pair", tol != tga.is_tolerable(a ^ t.facet));
    record("tolerable-stabilizer-shift", tol == tga.is_tolerable(a ^ beta));

    bool logical_free = true;
    for (const auto& z : enumerate(tga.group_H(a).basis())) logical_free = logical_free && !t.central_odd(z);
    record("h-logical-free", logical_free);
  }

  for (std::size_t k = 0, cases = 0; cases < kPropertyCases && k < 100 * kPropertyCases; ++k) {
    const auto a = t.make_tolerable(random_mask(15, rng));
    const auto w = t.make_tolerable(random_mask(15, rng));
    if (!tga.is_tolerable(a ^ w)) continue;
    ++cases;
    tx << hex(a) << hex(w);
    record("erasure-coset", tga.erasure_identity_check(a, w));
  }

  // Separated pairs from the support criterion: it must imply separation,
  // and the factorized residue must land in the coset of the sum.
  for (std::size_t k = 0, cases = 0; cases < kPropertyCases && k < 100 * kPropertyCases; ++k) {
    std::vector<BitVec> alphas{t.make_tolerable(random_mask(15, rng, 0.15)),
                               t.make_tolerable(random_mask(15, rng, 0.15))};
    if (!tga.separation_criterion(alphas)) continue;
    ++cases;
    tx << hex(alphas[0]) << hex(alphas[1]);
    const bool sep = tga.separated({code.flux_of(alphas[0]), code.flux_of(alphas[1])});
    record("support-criterion-separated", sep);
    std::vector<BitVec> zs;
    for (const auto& a : alphas) {
      const auto e = tga.e_coset(a);
      zs.push_back(e.representative ^ random_in_span(e.subgroup.basis(), rng));
    }
    record("factorization-in-coset", tga.factor_e(alphas, zs).in_coset);
  }

  for (std::size_t k = 0, cases = 0; cases < kPropertyCases && k < 100 * kPropertyCases; ++k) {
    const auto x = random_mask(15, rng, 0.12);
    const auto comps = code.connected_components(code.flux_of(x));
    if (comps.size() < 2) continue;
    ++cases;
    tx << hex(x);
    std::vector<BitVec> phis;
    BitVec product(15);
    for (const auto& c : comps) {
      phis.push_back(c.faces);
      product ^= tga.tolerable_preimage(c.faces);
    }
    record("separability-components", tga.separated(phis) && tga.is_tolerable(product));
  }

  Outcome o;
  o.pass = true;
  std::string worst;
  for (const auto& [name, e] : tally) {
    o.pass = o.pass && e.second == 0 && e.first >= kPropertyCases;
    o.notes.push_back(name + ": " + std::to_string(e.first) + " cases, " + std::to_string(e.second) + " failures");
    tx << name << e.first << e.second;
  }
  o.detail = std::to_string(tally.size()) + " algebraic checks, at least " + std::to_string(kPropertyCases) +
             " cases each, seed " + std::to_string(seed);
  o.transcript = tx.str();
  return o;
}

// Groups every X mask by syndrome and splits each group into its two
// logical classes by a direct stabilizer-span test.
Outcome ac5_exactly_one() {
  const auto& t = tetra();
  std::map<std::string, BitVec> reference;
  std::map<std::pair<std::string, bool>, std::pair<std::size_t, std::size_t>> counts;  // masks, tolerable
  for (std::uint64_t m = 0; m < (1U << 15); ++m) {
    const auto a = BitVec::from_u64(15, m);
    const auto key = hex(t.code.flux_of(a));
    const auto [it, fresh] = reference.emplace(key, a);
    const bool same_class = t.code.sx_span().contains(a ^ it->second);
    auto& c = counts[{key, same_class}];
    ++c.first;
    c.second += t.tga.is_tolerable(a);
  }
  std::size_t bad = 0;
  for (const auto& [key, ref] : reference) {
    const auto a = counts[{key, true}], b = counts[{key, false}];
    const bool a_all = a.second == a.first, a_none = a.second == 0;
    const bool b_all = b.second == b.first, b_none = b.second == 0;
    if (a.first == 0 || b.first == 0 || !((a_all && b_none) || (a_none && b_all))) ++bad;
  }
  Outcome o;
  o.pass = bad == 0 && reference.size() == (1U << 15) / 32;
  o.detail = "32768 masks, " + std::to_string(reference.size()) + " syndromes, syndromes without exactly one class " +
             std::to_string(bad);
  return o;
}

Outcome ac6_propagation(std::uint64_t seed) {
  const auto& t = tetra();
  const auto& a = t.code;
  const CssCode b(build_tetra15());
  std::vector<CliffordGate> gates{CliffordGate::standard_p(a, t.pattern)};
  for (std::size_t r = 0; r < 4; ++r) gates.push_back(CliffordGate::facet_p(a, t.pattern, r));
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t s = 0; s < 4; ++s) gates.push_back(CliffordGate::facet_cp(a, r, b, s));
  }
  gates.push_back(CliffordGate::cnot(a, b));
  std::mt19937_64 rng(seed);
  std::ostringstream tx;
  std::size_t cases = 0, bad = 0;
  auto probe = [&](const CliffordGate& g, const std::vector<PauliOp>& p) {
    ++cases;
    std::vector<SyndromePair> s;
    for (std::size_t i = 0; i < p.size(); ++i) s.push_back(g.code(i).syndrome(p[i]));
    const auto img = conjugate_pauli(g, p);
    const auto mapped = syndrome_map(g, s);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!(mapped[i] == g.code(i).syndrome(img[i]))) {
        ++bad;
        return;
      }
    }
  };
  for (const auto& g : gates) {
    const std::size_t nc = g.num_codes();
    for (std::size_t c = 0; c < nc; ++c) {
      for (std::size_t q = 0; q < 15; ++q) {
        for (int z = 0; z < 2; ++z) {
          std::vector<PauliOp> p(nc, PauliOp::identity(15));
          (z ? p[c].z : p[c].x).set(q);
          probe(g, p);
        }
      }
    }
    for (std::size_t k = 0; k < kPropRandom; ++k) {
      std::vector<PauliOp> p;
      for (std::size_t c = 0; c < nc; ++c) p.push_back({random_mask(15, rng, 0.3), random_mask(15, rng, 0.3)});
      for (const auto& q : p) tx << hex(q.x) << hex(q.z);
      probe(g, p);
    }
  }

  // Branching points and facet endpoints counted face by face.
  auto branching = [&](const BitVec& phi) {
    BitVec out(a.num_cells());
    for (std::size_t c = 0; c < a.num_cells(); ++c) {
      std::array<int, 6> per{};
      for (auto f : a.colex().cell_faces()[c]) {
        if (phi.test(f)) ++per[a.colex().faces()[f].label.index()];
      }
      for (int k : per) {
        if (k % 2) out.set(c);
      }
    }
    return out;
  };
  auto ends_on = [&](const BitVec& phi, std::size_t r) {
    BitVec out(a.num_cells());
    for (std::size_t f = 0; f < a.num_faces(); ++f) {
      const auto& face = a.colex().faces()[f];
      if (phi.test(f) && face.on_facet() && face.containers[1].index == r) out.set(face.containers[0].index);
    }
    return out;
  };
  std::size_t formula_cases = 0, formula_bad = 0;
  auto formula = [&](const BitVec& x) {
    ++formula_cases;
    const auto s = a.syndrome(PauliOp::x_type(x));
    bool ok = syndrome_map(gates[0], {s})[0].charge == (s.charge ^ branching(s.flux));
    for (std::size_t r = 0; r < 4; ++r) ok = ok && syndrome_map(gates[1 + r], {s})[0].charge == ends_on(s.flux, r);
    if (!ok) ++formula_bad;
  };
  for (std::size_t q = 0; q < 15; ++q) formula(BitVec::from_indices(15, {q}));
  for (std::size_t k = 0; k < kPropRandom; ++k) {
    const auto x = random_mask(15, rng, 0.2);
    tx << hex(x);
    formula(x);
  }

  Outcome o;
  o.pass = bad == 0 && formula_bad == 0;
  o.detail = std::to_string(gates.size()) + " gates, " + std::to_string(cases) + " Paulis, mismatches " +
             std::to_string(bad) + "; br/end_r on " + std::to_string(formula_cases) + " X errors, mismatches " +
             std::to_string(formula_bad);
  tx << cases << bad << formula_bad;
  o.transcript = tx.str();
  return o;
}

Outcome ac7_linking() {
  Outcome o;
  const auto expected = expected_linking_table();
  auto attempt = [&](int L, std::string& why) {
    const LinkingLattice lat(build_torus_geometry(L));
    const auto g = default_link_geometry(L);
    bool ok = true;
    try {
      const auto t0 = linking_table(lat, g, 0);
      std::size_t wrong = 0;
      for (int i = 0; i < 6; ++i) {
        for (int j = i; j < 6; ++j) wrong += !(t0[i][j] == expected[i][j]);
      }
      if (wrong) {
        ok = false;
        why += std::to_string(wrong) + " of 21 label pairs wrong; ";
      }
      for (std::size_t p = 1; p < g.probes.size(); ++p) {
        if (!tables_equal(t0, linking_table(lat, g, p))) {
          ok = false;
          why += "probe " + std::to_string(p) + " differs; ";
        }
      }
      const auto u = linking_table(lat, unlinked_geometry(L));
      if (!tables_equal(u, LinkingTable{})) {
        ok = false;
        why += "unlinked control nonzero; ";
      }
    } catch (const std::exception& e) {
      ok = false;
      why += std::string("exception: ") + e.what() + "; ";
    }
    return ok;
  };
  std::string why4;
  o.pass = attempt(4, why4);
  o.detail = o.pass ? "torus L=4: 21 label pairs match, probes agree, unlinked control zero"
                    : "torus L=4: " + why4 + "membranes are too small for the period-8 face coloring";
  std::string why8;
  const auto t0 = Clock::now();
  const bool ok8 = attempt(8, why8);
  o.notes.push_back(std::string("torus L=8 (informational): ") +
                    (ok8 ? "21 label pairs match, 3 probes agree, unlinked control zero" : why8) +
                    fmt(", %.1fs", std::chrono::duration<double>(Clock::now() - t0).count()));
  return o;
}

Outcome ac8_gauss(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::ostringstream tx;
  Outcome o;
  o.pass = true;
  for (const auto* name : {"tetra15", "torus L=2"}) {
    const CssCode code(std::string(name) == "tetra15" ? build_tetra15() : build_torus_colex(2));
    const std::size_t m = code.num_faces();
    std::size_t cases = 0, bad = 0, valid = 0;
    auto probe = [&](const BitVec& phi) {
      ++cases;
      const bool g = code.gauss_ok(phi);
      valid += g;
      if (g != code.has_preimage(phi).has_value()) ++bad;
    };
    probe(BitVec(m));
    for (std::size_t i = 0; i < m; ++i) {
      probe(BitVec::from_indices(m, {i}));
      for (std::size_t j = i + 1; j < m; ++j) {
        probe(BitVec::from_indices(m, {i, j}));
        for (std::size_t k = j + 1; k < m; ++k) probe(BitVec::from_indices(m, {i, j, k}));
      }
    }
    // Half uniform face sets, half fluxes of random X errors with one face
    // possibly toggled, so both branches are exercised.
    for (std::size_t k = 0; k < kGaussRandom; ++k) {
      BitVec phi = k % 2 ? random_mask(m, rng) : code.flux_of(random_mask(code.n(), rng, 0.1));
      if (k % 4 == 2) phi.flip(rng() % m);
      tx << hex(phi);
      probe(phi);
    }
    tx << name << cases << bad << valid;
    o.pass = o.pass && bad == 0;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + name + ": " + std::to_string(cases) + " fluxes (" +
                std::to_string(valid) + " Gauss-valid), mismatches " + std::to_string(bad);
  }
  if (!o.pass) {
    o.notes.push_back(
        "torus L=2 has cell pairs meeting in two squares; two-face loops around the torus satisfy Gauss's law "
        "but are not syndromes");
  }
  o.transcript = tx.str();
  return o;
}

struct NoiseRun {
  std::string trials, hist;
};

Outcome ac9_noise(NoiseRun& run) {
  Outcome o;
  const CssCode torus(build_torus_colex(4));
  const auto s = confinement_stats(torus, NoiseModel{kNoiseP, kSeed}, kNoiseTrials, 0);
  run = {trials_csv(s), histogram_csv(s)};
  const bool decays = histogram_decays(s.binned_histogram, kNoiseSigmas);

  const auto& t = tetra();
  std::size_t typical = 0, intolerable = 0, wrong_flux = 0;
  for (std::uint64_t m = 0; m < (1U << 15); ++m) {
    const auto phi = t.code.flux_of(BitVec::from_u64(15, m));
    const auto r = component_decoder(t.code, phi);
    if (!(t.code.flux_of(r.x) == phi)) ++wrong_flux;
    bool atypical = false;
    for (const auto& c : r.components) atypical = atypical || c.atypical;
    if (atypical) continue;
    ++typical;
    if (!t.tga.is_tolerable(r.x)) ++intolerable;
  }
  o.pass = decays && s.decoder_failures == 0 && wrong_flux == 0 && intolerable == 0;
  std::string bins;
  for (const auto& [bin, count] : s.binned_histogram) {
    if (bin > 6) break;
    bins += (bins.empty() ? "" : " ") + std::to_string(count);
  }
  o.detail = "torus L=4 p=" + fmt("%.3f", kNoiseP) + " " + std::to_string(kNoiseTrials) + " trials: histogram " +
             (decays ? "decays" : "does not decay") + " (bins " + bins + "), decoder failures " +
             std::to_string(s.decoder_failures) + "; tetra15: " + std::to_string(typical) +
             " typical of 32768, intolerable " + std::to_string(intolerable) + ", wrong flux " +
             std::to_string(wrong_flux);
  return o;
}

Outcome ac10_determinism(const std::vector<std::pair<std::string, std::string>>& first, const NoiseRun& noise) {
  Outcome o;
  std::vector<std::string> differ;
  const std::vector<std::function<Outcome()>> again{[] { return ac4_properties(kSeed); },
                                                    [] { return ac6_propagation(kSeed + 1); },
                                                    [] { return ac8_gauss(kSeed + 2); }};
  for (std::size_t i = 0; i < again.size(); ++i) {
    if (again[i]().transcript != first[i].second) differ.push_back(first[i].first);
  }
  const CssCode torus(build_torus_colex(4));
  const auto s = confinement_stats(torus, NoiseModel{kNoiseP, kSeed}, kNoiseTrials, 1);
  if (trials_csv(s) != noise.trials || histogram_csv(s) != noise.hist) differ.push_back("AC9");
  o.pass = differ.empty();
  o.detail = "AC4, AC6, AC8 transcripts and AC9 CSVs rerun (noise on 1 thread)";
  if (!differ.empty()) {
    o.detail += ", differ:";
    for (const auto& d : differ) o.detail += " " + d;
  }
  return o;
}

}  // namespace
}  // namespace colorgates

int main() {
  using namespace colorgates;
  int failures = 0;
  auto report = [&](const std::string& id, double budget, const std::function<Outcome()>& fn) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget > 0 && s > budget) {
      o.pass = false;
      o.detail += fmt(", over time budget of %.0fs", budget);
    }
    failures += !o.pass;
    std::printf("%-5s %s %7.2fs  %s\n", id.c_str(), o.pass ? "PASS" : "FAIL", s, o.detail.c_str());
    for (const auto& n : o.notes) std::printf("%-5s %s %7s  %s\n", "", "    ", "", n.c_str());
    std::fflush(stdout);
    return o;
  };

  std::vector<std::pair<std::string, std::string>> transcripts;
  NoiseRun noise;
  report("AC1", kBudgetAxioms, ac1_axioms);
  report("AC2", kBudgetLogicalT, ac2_logical_t);
  report("AC3", kBudgetTheorem1, ac3_theorem1);
  transcripts.emplace_back("AC4", report("AC4", 0, [] { return ac4_properties(kSeed); }).transcript);
  report("AC5", kBudgetExactlyOne, ac5_exactly_one);
  transcripts.emplace_back("AC6", report("AC6", 0, [] { return ac6_propagation(kSeed + 1); }).transcript);
  report("AC7", kBudgetLinking, ac7_linking);
  transcripts.emplace_back("AC8", report("AC8", 0, [] { return ac8_gauss(kSeed + 2); }).transcript);
  report("AC9", kBudgetNoise, [&] { return ac9_noise(noise); });
  report("AC10", 0, [&] { return ac10_determinism(transcripts, noise); });
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#include "colorgates/checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "colorgates/cliffprop.hpp"
#include "colorgates/statevec.hpp"

namespace colorgates {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  SuiteStatus status;
  std::string detail;
};

Outcome pass(std::string d) { return {SuiteStatus::kPass, std::move(d)}; }
Outcome fail(std::string d) { return {SuiteStatus::kFail, std::move(d)}; }
Outcome skip(std::string d) { return {SuiteStatus::kSkip, std::move(d)}; }

BitVec random_mask(std::size_t n, std::mt19937_64& rng) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1U) v.set(i);
  }
  return v;
}

Outcome colex_suite(const CssCode& code) {
  const auto rep = validate(code.colex());
  if (rep.ok()) {
    return pass(std::to_string(code.n()) + " qubits, " + std::to_string(code.num_cells()) + " cells, " +
                std::to_string(code.colex().facets().size()) + " facets");
  }
  return fail(rep.issues.front().rule + ": " + rep.issues.front().witness + " (" +
              std::to_string(rep.issues.size()) + " issues)");
}

Outcome axiom_suite(const CssCode& code, const TPattern& pattern) {
  const auto rep = check_axioms(code, pattern);
  std::string d = std::string("css ") + (rep.css ? "ok" : "FAIL") + ", logical qubits " +
                  std::to_string(rep.num_logical) + ", undetectable relation " +
                  (rep.undetectable_relation ? "ok" : "FAIL");
  if (rep.single_logical && code.n() <= kMaxStateQubits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ", leakage %.2e", rep.leakage);
    d += buf;
  }
  if (!rep.detail.empty()) d += " (" + rep.detail + ")";
  return rep.ok() ? pass(d) : fail(d);
}

Outcome logical_t_suite(const CssCode& code, const TPattern& pattern) {
  if (code.num_logical() != 1) return skip("needs one logical qubit");
  if (code.n() > kMaxStateQubits) return skip("more than 16 qubits");
  constexpr double kTol = 1e-10;
  double worst = 0;
  std::string wrong;
  const auto t1 = logical_action_check(code, pattern, 1);
  const auto t2 = logical_action_check(code, pattern, 2);
  worst = std::max({worst, t1.deviation, t2.deviation});
  if (t1.gate != "T") wrong += " U acts as " + t1.gate + ";";
  if (t2.gate != "P") wrong += " U^2 acts as " + t2.gate + ";";
  const auto spec = encoding_of(code);
  const auto basis = logical_basis(spec);
  for (std::size_t r = 0; r < code.colex().facets().size(); ++r) {
    const auto g = CliffordGate::facet_p(code, pattern, r);
    std::vector<int> e(code.n());
    for (std::size_t q = 0; q < code.n(); ++q) e[q] = 2 * g.p_powers()[q];
    const auto rep = logical_action(spec, basis, e);
    worst = std::max(worst, rep.deviation);
    if (rep.gate != "P") wrong += " facet-P " + std::to_string(r) + " acts as " + rep.gate + ";";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation %.2e", worst);
  if (!wrong.empty()) return fail(std::string(buf) + ";" + wrong);
  return worst < kTol ? pass(buf) : fail(buf);
}

Outcome tolerability_suite(const CssCode& code, const TPattern& pattern, std::mt19937_64& rng) {
  if (code.num_logical() != 1) return skip("needs one logical qubit");
  const TgaContext tga(code, pattern);
  const bool exhaustive = code.n() <= 16;
  const std::size_t count = exhaustive ? (std::size_t{1} << code.n()) : 2000;
  std::size_t disagree = 0, not_one = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto a = exhaustive ? BitVec::from_u64(code.n(), i) : random_mask(code.n(), rng);
    const bool t = tga.is_tolerable(a);
    if (t != tga.tolerable_by_rank(a) || t != tga.tolerable_by_centralizer(a) || t != tga.tolerable_by_definition(a)) {
      ++disagree;
    }
    if (t == tga.is_tolerable(a ^ tga.logical())) ++not_one;
  }
  const std::string d = std::to_string(count) + (exhaustive ? " masks (all)" : " random masks") +
                        ", criteria disagree " + std::to_string(disagree) + ", classes not exactly one tolerable " +
                        std::to_string(not_one);
  return disagree == 0 && not_one == 0 ? pass(d) : fail(d);
}

Outcome gauss_suite(const CssCode& code, std::mt19937_64& rng) {
  const std::size_t m = code.num_faces();
  std::size_t cases = 0, bad = 0;
  auto probe = [&](const BitVec& phi) {
    ++cases;
    if (code.gauss_ok(phi) != code.has_preimage(phi).has_value()) ++bad;
  };
  for (std::size_t i = 0; i < m; ++i) {
    probe(BitVec::from_indices(m, {i}));
    for (std::size_t j = i + 1; j < m && m <= 512; ++j) probe(BitVec::from_indices(m, {i, j}));
  }
  // Random fluxes of X errors plus a random face keep both branches populated.
  for (int k = 0; k < 500; ++k) {
    auto phi = code.flux_of(random_mask(code.n(), rng));
    probe(phi);
    phi.flip(rng() % m);
    probe(phi);
  }
  const std::string d = std::to_string(cases) + " fluxes, mismatches " + std::to_string(bad);
  return bad == 0 ? pass(d) : fail(d);
}

Outcome propagation_suite(const CssCode& code, const TPattern& pattern, std::mt19937_64& rng) {
  if (code.num_logical() != 1 || code.colex().facets().size() != 4) return skip("needs a tetrahedral code");
  std::vector<CliffordGate> gates{CliffordGate::standard_p(code, pattern)};
  for (std::size_t r = 0; r < 4; ++r) gates.push_back(CliffordGate::facet_p(code, pattern, r));
  gates.push_back(CliffordGate::facet_cp(code, 0, code, 1));
  gates.push_back(CliffordGate::cnot(code, code));
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
      for (std::size_t q = 0; q < code.n(); ++q) {
        for (int z = 0; z < 2; ++z) {
          std::vector<PauliOp> p(nc, PauliOp::identity(code.n()));
          (z ? p[c].z : p[c].x).set(q);
          probe(g, p);
        }
      }
    }
    for (int k = 0; k < 100; ++k) {
      std::vector<PauliOp> p;
      for (std::size_t c = 0; c < nc; ++c) p.push_back({random_mask(code.n(), rng), random_mask(code.n(), rng)});
      probe(g, p);
    }
  }
  const std::string d = std::to_string(gates.size()) + " gates, " + std::to_string(cases) + " Paulis, mismatches " +
                        std::to_string(bad);
  return bad == 0 ? pass(d) : fail(d);
}

}  // namespace

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::kPass: return "PASS";
    case SuiteStatus::kFail: return "FAIL";
    case SuiteStatus::kSkip: return "SKIP";
  }
  return "?";
}

std::vector<SuiteResult> run_check_suites(const CssCode& code, const TPattern& pattern, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> suites{
      {"colex", [&] { return colex_suite(code); }},
      {"axioms", [&] { return axiom_suite(code, pattern); }},
      {"logical-t", [&] { return logical_t_suite(code, pattern); }},
      {"tolerability", [&] { return tolerability_suite(code, pattern, rng); }},
      {"gauss", [&] { return gauss_suite(code, rng); }},
      {"propagation", [&] { return propagation_suite(code, pattern, rng); }},
  };
  std::vector<SuiteResult> out;
  for (const auto& [name, run] : suites) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back({name, o.status, o.detail, s});
  }
  return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results) {
    if (r.status == SuiteStatus::kFail) return false;
  }
  return true;
}

std::string format_suite_table(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  char buf[64];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "%-14s %s ", r.name.c_str(), to_string(r.status).c_str());
    os << buf << r.detail << "\n";
  }
  return os.str();
}

}  // namespace colorgates

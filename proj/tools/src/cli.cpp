#include "colorgates/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorgates/checks.hpp"
#include "colorgates/cliffprop.hpp"
#include "colorgates/colex_io.hpp"
#include "colorgates/linking.hpp"
#include "colorgates/noise.hpp"
#include "colorgates/pauli_io.hpp"
#include "colorgates/statevec.hpp"
#include "colorgates/tga.hpp"

namespace colorgates::cli {

namespace {

std::string index_list(const BitVec& v) {
  if (v.none()) return "-";
  std::string s;
  for (auto i : v.indices()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(i);
  }
  return s;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

// Keeps the colex alive for codes that borrow it.
struct LoadedCode {
  std::shared_ptr<const Colex> colex;
  std::unique_ptr<CssCode> code;
  TPattern pattern;
};

LoadedCode load_code(const std::string& spec) {
  LoadedCode lc;
  lc.colex = std::make_shared<const Colex>(resolve_colex(spec));
  lc.code = std::make_unique<CssCode>(lc.colex);
  lc.pattern = TPattern::from_bipartition(*lc.colex);
  return lc;
}

// ---------------------------------------------------------------------------

int colex_validate(const std::string& spec, std::ostream& out) {
  const auto colex = resolve_colex(spec);
  const auto rep = validate(colex);
  if (rep.ok()) {
    out << "valid\n";
    return kOk;
  }
  out << "invalid: " << rep.issues.size() << " issues\n";
  for (const auto& i : rep.issues) out << "  " << i.rule << ": " << i.witness << "\n";
  return kCheckFailed;
}

int colex_info(const std::string& spec, std::ostream& out) {
  const auto colex = resolve_colex(spec);
  out << "qubits " << colex.n_qubits() << "\n";
  out << "cells " << colex.cells().size() << "\n";
  out << "facets " << colex.facets().size() << "\n";
  out << "faces " << colex.faces().size() << "\n";
  out << "edges " << colex.edges().size() << "\n";
  out << "closed " << yes_no(colex.is_closed()) << "\n";
  std::array<std::size_t, kNumColors> cells{}, facets{};
  for (const auto& c : colex.cells()) ++cells[c.color];
  for (const auto& f : colex.facets()) ++facets[f.color];
  for (Color c = 0; c < kNumColors; ++c) {
    out << "color " << color_name(c) << " cells " << cells[c] << " facets " << facets[c] << "\n";
  }
  std::map<int, std::size_t> labels;
  for (const auto& f : colex.faces()) ++labels[f.label.index()];
  for (int i = 0; i < 6; ++i) out << "label " << ColorPair::from_index(i).name() << " faces " << labels[i] << "\n";
  return kOk;
}

int code_syndrome(const std::string& spec, const std::string& pauli_path, std::ostream& out) {
  const auto lc = load_code(spec);
  const auto& code = *lc.code;
  const auto p = load_pauli_file(pauli_path, {code.n()}).front();
  const auto s = code.syndrome(p);
  out << "x_weight " << p.x.count() << "\n";
  out << "z_weight " << p.z.count() << "\n";
  out << "charge " << s.charge.count() << ":";
  for (auto c : s.charge.indices()) out << " c" << c << ":" << color_name(code.colex().cells()[c].color);
  out << "\nflux " << s.flux.count() << ":";
  for (auto f : s.flux.indices()) out << " f" << f << ":" << code.colex().faces()[f].label.name();
  out << "\ngauss " << (code.gauss_ok(s.flux) ? "ok" : "violated") << "\n";
  return kOk;
}

int tga_tolerable(const std::string& spec, const std::string& pauli_path, std::ostream& out) {
  const auto lc = load_code(spec);
  const TgaContext tga(*lc.code, lc.pattern);
  const auto alpha = load_pauli_file(pauli_path, {lc.code->n()}).front().x;
  out << "alpha X " << index_list(alpha) << "\n";
  out << "g_mod8 " << tga.g_mod8(alpha) << "\n";
  out << "rank_G " << tga.group_G(alpha).rank() << "\n";
  out << "rank_H " << tga.group_H(alpha).rank() << "\n";
  out << "tolerable " << yes_no(tga.is_tolerable(alpha)) << "\n";
  out << "by_rank " << yes_no(tga.tolerable_by_rank(alpha)) << "\n";
  out << "by_centralizer " << yes_no(tga.tolerable_by_centralizer(alpha)) << "\n";
  out << "by_definition " << yes_no(tga.tolerable_by_definition(alpha)) << "\n";
  return kOk;
}

int tga_ecoset(const std::string& spec, const std::string& pauli_path, std::ostream& out) {
  const auto lc = load_code(spec);
  const TgaContext tga(*lc.code, lc.pattern);
  const auto alpha = load_pauli_file(pauli_path, {lc.code->n()}).front().x;
  if (!tga.is_tolerable(alpha)) throw std::invalid_argument("X " + index_list(alpha) + " is not tolerable");
  const auto e = tga.e_coset(alpha);
  out << "representative Z " << index_list(e.representative) << "\n";
  out << "subgroup_rank " << e.subgroup.rank() << "\n";
  for (const auto& row : e.subgroup.basis().row_vectors()) out << "generator Z " << index_list(row) << "\n";
  return kOk;
}

struct GateSpec {
  GateKind kind = GateKind::kStandardP;
  std::size_t ra = 0, rb = 0;
};

std::size_t parse_facet(const std::string& s, const std::string& spec) {
  if (s.size() != 1 || s[0] < '0' || s[0] > '3') throw std::invalid_argument("bad facet index in gate spec '" + spec + "'");
  return static_cast<std::size_t>(s[0] - '0');
}

GateSpec parse_gate_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string t; std::getline(ss, t, ':');) parts.push_back(t);
  GateSpec g;
  if (parts.size() == 1 && parts[0] == "standard-p") return g;
  if (parts.size() == 1 && parts[0] == "cnot") {
    g.kind = GateKind::kCNot;
    return g;
  }
  if (parts.size() == 2 && parts[0] == "facet-p") {
    g.kind = GateKind::kFacetP;
    g.ra = parse_facet(parts[1], spec);
    return g;
  }
  if (parts.size() == 3 && parts[0] == "facet-cp") {
    g.kind = GateKind::kFacetCP;
    g.ra = parse_facet(parts[1], spec);
    g.rb = parse_facet(parts[2], spec);
    return g;
  }
  throw std::invalid_argument("unknown gate spec '" + spec + "' (standard-p, facet-p:R, facet-cp:RA:RB, cnot)");
}

int prop_apply(const std::string& gate_text, const std::string& pauli_path, const std::string& spec,
               const std::string& out_path, std::ostream& out) {
  const auto gs = parse_gate_spec(gate_text);
  const auto lc = load_code(spec);
  const auto& code = *lc.code;
  const bool on_facets = gs.kind == GateKind::kFacetP || gs.kind == GateKind::kFacetCP;
  if (on_facets && code.colex().facets().size() != 4) {
    throw std::invalid_argument("facet gates need a tetrahedral colex");
  }
  const auto gate = [&] {
    switch (gs.kind) {
      case GateKind::kStandardP: return CliffordGate::standard_p(code, lc.pattern);
      case GateKind::kFacetP: return CliffordGate::facet_p(code, lc.pattern, gs.ra);
      case GateKind::kFacetCP: return CliffordGate::facet_cp(code, gs.ra, code, gs.rb);
      case GateKind::kCNot: return CliffordGate::cnot(code, code);
    }
    throw std::logic_error("unreachable");
  }();
  std::vector<std::size_t> sizes(gate.num_codes(), code.n());
  const auto parts = load_pauli_file(pauli_path, sizes);
  const auto img = conjugate_phased(gate, parts);
  std::string text = "# " + gate.describe() + "\n# phase i^" + std::to_string(img.phase) + "\n";
  text += format_paulis(img.parts);
  emit(text, out_path, out);
  return kOk;
}

int oracle_theorem1(const std::string& spec, std::optional<std::size_t> qubit, const std::string& pauli_path,
                    std::ostream& out) {
  const auto lc = load_code(spec);
  const auto& code = *lc.code;
  if (code.n() > kMaxStateQubits) throw std::invalid_argument("the statevector oracle needs at most 16 qubits");
  const TgaContext tga(code, lc.pattern);
  std::vector<BitVec> errors;
  if (qubit) {
    if (*qubit >= code.n()) throw std::invalid_argument("qubit " + std::to_string(*qubit) + " out of range");
    errors.push_back(BitVec::from_indices(code.n(), {*qubit}));
  } else if (!pauli_path.empty()) {
    errors.push_back(load_pauli_file(pauli_path, {code.n()}).front().x);
  } else {
    for (std::size_t q = 0; q < code.n(); ++q) errors.push_back(BitVec::from_indices(code.n(), {q}));
  }
  constexpr double kTol = 1e-9;
  double worst = 0;
  out << "error\ttolerable\tw\td_zero\td_one\td_plus\td_plus_i\tmax\n";
  for (const auto& x : errors) {
    const auto r = theorem1_check(tga, x);
    out << "X " << index_list(x) << "\t" << yes_no(r.tolerable) << "\t" << (r.used_w ? "used" : "1");
    for (double d : r.distances) out << "\t" << sci(d);
    out << "\t" << sci(r.max_distance) << "\n";
    worst = std::max(worst, r.max_distance);
  }
  out << "max_distance " << sci(worst) << " tolerance " << sci(kTol) << " " << (worst < kTol ? "PASS" : "FAIL") << "\n";
  return worst < kTol ? kOk : kCheckFailed;
}

int oracle_logical_t(const std::string& spec, int power, std::ostream& out) {
  const auto lc = load_code(spec);
  if (lc.code->n() > kMaxStateQubits) throw std::invalid_argument("the statevector oracle needs at most 16 qubits");
  const auto r = logical_action_check(*lc.code, lc.pattern, power);
  constexpr double kTol = 1e-10;
  out << "power " << power << "\n";
  out << "gate " << r.gate << "\n";
  out << "power_of_t " << r.power_of_t << "\n";
  out << "deviation " << sci(r.deviation) << "\n";
  out << "leakage " << sci(r.leakage) << "\n";
  out << (r.deviation < kTol ? "PASS" : "FAIL") << "\n";
  return r.deviation < kTol ? kOk : kCheckFailed;
}

struct NoiseArgs {
  std::string colex;
  double p = 0;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string out, hist;
  unsigned threads = 0;
};

int noise_mc(const NoiseArgs& a, std::ostream& out) {
  if (!(a.p >= 0 && a.p < 1)) throw std::invalid_argument("--p must lie in [0, 1)");
  const auto lc = load_code(a.colex);
  const auto stats = confinement_stats(*lc.code, NoiseModel{a.p, a.seed}, a.trials, a.threads);
  write_file_atomic(a.out, trials_csv(stats));
  if (!a.hist.empty()) write_file_atomic(a.hist, histogram_csv(stats));
  out << "trials " << stats.trials << "\n";
  out << "mean_flux_weight " << stats.mean_flux_weight() << "\n";
  out << "mean_components " << stats.mean_components() << "\n";
  out << "bin_width " << stats.bin_width << "\n";
  out << "histogram_decays " << yes_no(histogram_decays(stats.binned_histogram)) << "\n";
  out << "decoder_failures " << stats.decoder_failures << "\n";
  return stats.decoder_failures == 0 ? kOk : kCheckFailed;
}

int linking_table_cmd(int L, std::size_t probe, std::ostream& out) {
  const LinkingLattice lat(build_torus_geometry(L));
  const auto linked = default_link_geometry(L);
  const auto unlinked = unlinked_geometry(L);
  bool ok = true;
  try {
    const auto t = linking_table(lat, linked, probe);
    out << "linked (probe " << probe << ")\n" << format_linking_table(t);
    const bool match = tables_equal(t, expected_linking_table());
    out << "matches closed form " << yes_no(match) << "\n";
    ok = ok && match;
  } catch (const std::logic_error& e) {
    out << "linked (probe " << probe << ") failed: " << e.what() << "\n";
    ok = false;
  }
  const auto c = linking_table(lat, unlinked, probe);
  out << "unlinked control\n" << format_linking_table(c);
  const bool zero = tables_equal(c, LinkingTable{});
  out << "control zero " << yes_no(zero) << "\n";
  return ok && zero ? kOk : kCheckFailed;
}

int check_all(const std::string& spec, std::uint64_t seed, std::ostream& out) {
  const auto lc = load_code(spec);
  const auto results = run_check_suites(*lc.code, lc.pattern, seed);
  out << format_suite_table(results);
  const bool ok = all_passed(results);
  out << (ok ? "all suites passed" : "some suites failed") << "\n";
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transversal-T color code toolkit", "colorgates"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* colex = app.add_subcommand("colex", "Colex files and built-in colexes")->require_subcommand(1);
  std::string colex_spec, pauli_path, out_path, gate_text;
  {
    auto* v = colex->add_subcommand("validate", "Check the colex rules");
    v->add_option("colex", colex_spec, "File, tetra15, tetra15+closure or torus:L")->required();
    v->callback([&] { action = [&] { return colex_validate(colex_spec, out); }; });
    auto* i = colex->add_subcommand("info", "Counts and color census");
    i->add_option("colex", colex_spec)->required();
    i->callback([&] { action = [&] { return colex_info(colex_spec, out); }; });
  }

  auto* code = app.add_subcommand("code", "Stabilizer code queries")->require_subcommand(1);
  {
    auto* s = code->add_subcommand("syndrome", "Charge and flux of a Pauli");
    s->add_option("colex", colex_spec)->required();
    s->add_option("pauli", pauli_path, "Pauli file")->required();
    s->callback([&] { action = [&] { return code_syndrome(colex_spec, pauli_path, out); }; });
  }

  auto* tga = app.add_subcommand("tga", "Transversal-T algebra")->require_subcommand(1);
  {
    auto* t = tga->add_subcommand("tolerable", "Tolerability of the X part of a Pauli");
    t->add_option("colex", colex_spec)->required();
    t->add_option("pauli", pauli_path)->required();
    t->callback([&] { action = [&] { return tga_tolerable(colex_spec, pauli_path, out); }; });
    auto* e = tga->add_subcommand("ecoset", "The coset E_alpha of a tolerable X error");
    e->add_option("colex", colex_spec)->required();
    e->add_option("pauli", pauli_path)->required();
    e->callback([&] { action = [&] { return tga_ecoset(colex_spec, pauli_path, out); }; });
  }

  auto* prop = app.add_subcommand("prop", "Pauli propagation through Clifford gates")->require_subcommand(1);
  std::string prop_colex = "tetra15";
  {
    auto* a = prop->add_subcommand("apply", "Conjugate a Pauli file by a gate");
    a->add_option("gate", gate_text, "standard-p, facet-p:R, facet-cp:RA:RB or cnot")->required();
    a->add_option("pauli", pauli_path)->required();
    a->add_option("--colex", prop_colex, "Colex of every code block")->capture_default_str();
    a->add_option("--out", out_path, "Output Pauli file (default stdout)");
    a->callback([&] { action = [&] { return prop_apply(gate_text, pauli_path, prop_colex, out_path, out); }; });
  }

  auto* oracle = app.add_subcommand("oracle", "Statevector oracles")->require_subcommand(1);
  std::string oracle_colex = "tetra15";
  std::optional<std::size_t> qubit;
  int power = 1;
  {
    auto* t = oracle->add_subcommand("theorem1", "Channel comparison for X errors");
    t->add_option("colex", oracle_colex)->capture_default_str();
    auto* q = t->add_option("--qubit", qubit, "Single-qubit X error");
    auto* f = t->add_option("--pauli", pauli_path, "Pauli file with the X error");
    q->excludes(f);
    t->callback([&] { action = [&] { return oracle_theorem1(oracle_colex, qubit, pauli_path, out); }; });
    auto* l = oracle->add_subcommand("logicalT", "Logical action of the transversal gate");
    l->add_option("colex", oracle_colex)->capture_default_str();
    l->add_option("--power", power, "Power of the transversal gate")->capture_default_str();
    l->callback([&] { action = [&] { return oracle_logical_t(oracle_colex, power, out); }; });
  }

  auto* noise = app.add_subcommand("noise", "Local X noise")->require_subcommand(1);
  NoiseArgs na;
  {
    auto* m = noise->add_subcommand("mc", "Monte Carlo flux confinement statistics");
    m->add_option("colex", na.colex)->required();
    m->add_option("--p", na.p, "Flip probability per qubit")->required();
    m->add_option("--trials", na.trials)->capture_default_str();
    m->add_option("--seed", na.seed)->required();
    m->add_option("--out", na.out, "Per-trial CSV")->required();
    m->add_option("--hist", na.hist, "Histogram CSV");
    m->add_option("--threads", na.threads, "Worker threads, 0 for hardware concurrency")->capture_default_str();
    m->callback([&] { action = [&] { return noise_mc(na, out); }; });
  }

  auto* linking = app.add_subcommand("linking", "Linked flux loops on the torus")->require_subcommand(1);
  int L = 0;
  std::size_t probe = 0;
  {
    auto* t = linking->add_subcommand("table", "Linking-charge table and unlinked control");
    t->add_option("L", L, "Torus size")->required();
    t->add_option("--probe", probe, "Probe index")->capture_default_str();
    t->callback([&] { action = [&] { return linking_table_cmd(L, probe, out); }; });
  }

  auto* check = app.add_subcommand("check", "Self-check suites")->require_subcommand(1);
  std::string check_colex = "tetra15";
  std::uint64_t check_seed = 1;
  {
    auto* a = check->add_subcommand("all", "Run every suite");
    a->add_option("--colex", check_colex)->capture_default_str();
    a->add_option("--seed", check_seed)->capture_default_str();
    a->callback([&] { action = [&] { return check_all(check_colex, check_seed, out); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace colorgates::cli

#include "colorgates/noise.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace colorgates {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void check_model(const NoiseModel& m) {
  if (!(m.p >= 0.0 && m.p < 1.0)) throw std::invalid_argument("error rate must satisfy 0 <= p < 1");
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(splitmix64(master) ^ trial);
}

BitVec sample_error(std::size_t n, const NoiseModel& model, std::uint64_t trial) {
  check_model(model);
  BitVec x(n);
  if (model.p == 0.0) return x;
  std::mt19937_64 gen(trial_seed(model.seed, trial));
  for (std::size_t q = 0; q < n; ++q) {
    // 53 random bits as a double in [0, 1); fixed across standard libraries.
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (u < model.p) x.set(q);
  }
  return x;
}

DecoderResult component_decoder(const CssCode& code, const BitVec& phi) {
  const auto& facets = code.colex().facets();
  DecoderResult out{BitVec(code.n()), {}};
  BitVec leftover(code.num_faces());
  for (const auto& comp : code.connected_components(phi)) {
    DecodedComponent d{comp.faces, std::nullopt, false};
    std::optional<BitVec> x;
    if (!facets.empty()) {
      for (std::size_t r = 0; r < facets.size(); ++r) {
        if (((comp.facets >> r) & 1U) == 0) {
          d.avoided_facet = r;
          break;
        }
      }
      if (d.avoided_facet) {
        x = code.solve_x_within(comp.faces, ~facets[*d.avoided_facet].qubits);
      } else {
        d.atypical = true;
      }
    } else {
      x = code.has_preimage(comp.faces);
    }
    if (x) {
      out.x ^= *x;
    } else {
      d.avoided_facet.reset();
      leftover ^= comp.faces;
    }
    out.components.push_back(std::move(d));
  }
  if (leftover.any()) {
    auto rest = code.has_preimage(leftover);
    if (!rest) throw std::invalid_argument("flux configuration is not a syndrome");
    out.x ^= *rest;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<ContainerRef> touched_containers(const CssCode& code, const BitVec& phi) {
  std::vector<bool> cell(code.num_cells(), false), facet(code.colex().facets().size(), false);
  for (auto f : phi.indices()) {
    const auto& face = code.colex().faces()[f];
    cell[face.containers[0].index] = true;
    if (face.on_facet()) {
      facet[face.containers[1].index] = true;
    } else {
      cell[face.containers[1].index] = true;
    }
  }
  std::vector<ContainerRef> out;
  for (std::size_t c = 0; c < cell.size(); ++c) {
    if (cell[c]) out.push_back({ContainerKind::kCell, c});
  }
  for (std::size_t r = 0; r < facet.size(); ++r) {
    if (facet[r]) out.push_back({ContainerKind::kFacet, r});
  }
  return out;
}

namespace {

// Shortest path from `from` to any qubit of `target` through `through`
// (plus the target itself); the path qubits, or nothing.
std::optional<std::vector<std::size_t>> bfs_path(const Colex& cx, const BitVec& from, const BitVec& target,
                                                 const BitVec* through) {
  const std::size_t n = cx.n_qubits();
  std::vector<std::size_t> prev(n, n);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  for (auto q : from.indices()) {
    seen[q] = true;
    queue.push_back(q);
  }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    if (target.test(v)) {
      std::vector<std::size_t> path;
      for (auto u = v; !from.test(u); u = prev[u]) path.push_back(u);
      return path;
    }
    for (auto u : cx.adjacency()[v]) {
      if (seen[u]) continue;
      if (through != nullptr && !through->test(u) && !target.test(u)) continue;
      seen[u] = true;
      prev[u] = v;
      queue.push_back(u);
    }
  }
  return std::nullopt;
}

}  // namespace

QSet build_qset(const CssCode& code, const BitVec& phi) {
  const auto& cx = code.colex();
  QSet out{BitVec(code.n()), touched_containers(code, phi)};
  if (phi.none()) return out;
  out.qubits = cx.faces()[phi.lowest()].qubits;
  BitVec inside(code.n());
  for (const auto& ref : out.touched) {
    if (ref.kind == ContainerKind::kCell) inside |= cx.container(ref).qubits;
  }
  for (const auto& ref : out.touched) {
    const auto& target = cx.container(ref).qubits;
    if ((out.qubits & target).any()) continue;
    auto path = bfs_path(cx, out.qubits, target, &inside);
    if (!path) path = bfs_path(cx, out.qubits, target, nullptr);
    if (!path) throw std::logic_error("colex graph is disconnected");
    for (auto q : *path) out.qubits.set(q);
  }
  return out;
}

bool qset_valid(const CssCode& code, const QSet& q) {
  const auto& cx = code.colex();
  for (const auto& ref : q.touched) {
    if ((cx.container(ref).qubits & q.qubits).none()) return false;
  }
  if (q.qubits.none()) return q.touched.empty();
  BitVec reached(code.n());
  std::deque<std::size_t> queue{q.qubits.lowest()};
  reached.set(queue.front());
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto u : cx.adjacency()[v]) {
      if (q.qubits.test(u) && !reached.test(u)) {
        reached.set(u);
        queue.push_back(u);
      }
    }
  }
  return reached == q.qubits;
}

ClusterResult cluster_partition(const TgaContext& tga, const std::vector<BitVec>& components) {
  const std::size_t m = components.size();
  std::vector<BitVec> alphas;
  for (const auto& phi : components) alphas.push_back(tga.tolerable_preimage(phi));
  ClusterResult out;
  out.trivial.assign(m, std::vector<bool>(m, true));
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool trivial = tga.H_of(components[i] ^ components[j]).contains(alphas[i] & alphas[j]);
      out.trivial[i][j] = out.trivial[j][i] = trivial;
      if (!trivial) parent[find(j)] = find(i);
    }
  }
  std::vector<std::size_t> slot(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = find(i);
    if (slot[r] == m) {
      slot[r] = out.clusters.size();
      out.clusters.emplace_back();
    }
    out.clusters[slot[r]].push_back(i);
  }
  return out;
}

std::optional<BitVec> coset_member_within(const Coset& coset, const BitVec& allowed) {
  const auto outside = (~allowed).indices();
  if (outside.empty()) return coset.representative;
  const auto& basis = coset.subgroup.basis();
  BitMatrix restricted(outside.size());
  for (const auto& row : basis.row_vectors()) {
    BitVec r(outside.size());
    for (std::size_t i = 0; i < outside.size(); ++i) r.set(i, row.test(outside[i]));
    restricted.push_back(std::move(r));
  }
  BitVec rhs(outside.size());
  for (std::size_t i = 0; i < outside.size(); ++i) rhs.set(i, coset.representative.test(outside[i]));
  auto y = Gf2Solver(restricted).solve(rhs);
  if (!y) return std::nullopt;
  return coset.representative ^ basis.combine(*y);
}

// ---------------------------------------------------------------------------

double ConfinementStats::mean_flux_weight() const {
  if (records.empty()) return 0.0;
  double s = 0;
  for (const auto& r : records) s += static_cast<double>(r.flux_weight);
  return s / static_cast<double>(records.size());
}

double ConfinementStats::mean_components() const {
  if (records.empty()) return 0.0;
  double s = 0;
  for (const auto& r : records) s += static_cast<double>(r.components);
  return s / static_cast<double>(records.size());
}

ConfinementStats confinement_stats(const CssCode& code, const NoiseModel& model, std::size_t trials,
                                   unsigned threads) {
  check_model(model);
  ConfinementStats out;
  out.model = model;
  out.trials = trials;
  out.records.resize(trials);
  std::size_t width = code.num_faces();
  for (std::size_t q = 0; q < code.n(); ++q) {
    width = std::min(width, code.flux_of(BitVec::from_indices(code.n(), {q})).count());
  }
  out.bin_width = std::max<std::size_t>(width, 1);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
  std::vector<std::map<std::size_t, std::size_t>> local(threads);
  auto work = [&](unsigned w) {
    const std::size_t lo = trials * w / threads, hi = trials * (w + 1) / threads;
    for (std::size_t t = lo; t < hi; ++t) {
      auto& rec = out.records[t];
      rec.trial = t;
      rec.seed = trial_seed(model.seed, t);
      const auto x = sample_error(code.n(), model, t);
      const auto phi = code.flux_of(x);
      rec.error_weight = x.count();
      rec.flux_weight = phi.count();
      const auto comps = code.connected_components(phi);
      rec.components = comps.size();
      for (const auto& c : comps) {
        const auto size = c.faces.count();
        rec.largest_component = std::max(rec.largest_component, size);
        ++local[w][size];
      }
      try {
        rec.decoder_ok = code.flux_of(component_decoder(code, phi).x) == phi;
      } catch (const std::invalid_argument&) {
        rec.decoder_ok = false;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();
  for (const auto& h : local) {
    for (auto [size, count] : h) out.size_histogram[size] += count;
  }
  for (auto [size, count] : out.size_histogram) {
    out.binned_histogram[(size + out.bin_width - 1) / out.bin_width] += count;
  }
  for (const auto& r : out.records) out.decoder_failures += r.decoder_ok ? 0 : 1;
  return out;
}

bool histogram_decays(const std::map<std::size_t, std::size_t>& hist, double sigmas) {
  if (hist.empty()) return true;
  const std::size_t last = hist.rbegin()->first;
  auto at = [&](std::size_t b) {
    auto it = hist.find(b);
    return it == hist.end() ? 0.0 : static_cast<double>(it->second);
  };
  for (std::size_t b = hist.begin()->first; b < last; ++b) {
    const double a = at(b), c = at(b + 1);
    if (c > a + sigmas * std::sqrt(a + c)) return false;
  }
  return true;
}

std::string trials_csv(const ConfinementStats& s) {
  std::ostringstream o;
  o << "trial,seed,error_weight,flux_weight,components,largest_component,decoder_ok\n";
  for (const auto& r : s.records) {
    o << r.trial << ',' << r.seed << ',' << r.error_weight << ',' << r.flux_weight << ',' << r.components << ','
      << r.largest_component << ',' << (r.decoder_ok ? 1 : 0) << '\n';
  }
  return o.str();
}

std::string histogram_csv(const ConfinementStats& s) {
  std::ostringstream o;
  o << "bin,faces_min,faces_max,components,per_trial\n";
  o.precision(10);
  for (auto [bin, count] : s.binned_histogram) {
    const std::size_t lo = bin == 0 ? 0 : (bin - 1) * s.bin_width + 1;
    o << bin << ',' << lo << ',' << bin * s.bin_width << ',' << count << ','
      << (s.trials ? static_cast<double>(count) / static_cast<double>(s.trials) : 0.0) << '\n';
  }
  return o.str();
}

}  // namespace colorgates

#pragma once

// Local X noise, confinement statistics of flux syndromes, the
// component-wise decoder and the Q(phi) / cluster constructions.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colorgates/code.hpp"
#include "colorgates/tga.hpp"

namespace colorgates {

struct NoiseModel {
  double p = 0.0;  // independent X flip probability per qubit, 0 <= p < 1
  std::uint64_t seed = 0;
};

// Seed of the generator used for a given trial: splitmix64 of the pair, so
// any trial can be replayed on its own.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

// X mask of trial `trial`.
BitVec sample_error(std::size_t n, const NoiseModel& model, std::uint64_t trial);

struct DecodedComponent {
  BitVec faces;
  std::optional<std::size_t> avoided_facet;  // facet the representative keeps off
  bool atypical = false;                     // touches every facet
};

struct DecoderResult {
  BitVec x;  // representative with flux phi
  std::vector<DecodedComponent> components;
};

// Per component, an X mask off one facet the component does not reach;
// atypical components fall back to any preimage. Throws std::invalid_argument
// when phi is not a syndrome.
DecoderResult component_decoder(const CssCode& code, const BitVec& phi);

struct QSet {
  BitVec qubits;
  std::vector<ContainerRef> touched;  // every cell and facet with a face in phi
};

// Touched containers of phi, cells first.
std::vector<ContainerRef> touched_containers(const CssCode& code, const BitVec& phi);

// Grows a connected qubit set from one face of phi, adding shortest paths to
// each touched container not yet reached; paths stay inside touched cells
// when they can.
QSet build_qset(const CssCode& code, const BitVec& phi);
// Connectivity in the colex graph and coverage of every touched container.
bool qset_valid(const CssCode& code, const QSet& q);

struct ClusterResult {
  std::vector<std::vector<std::size_t>> clusters;  // component indices
  std::vector<std::vector<bool>> trivial;          // pairwise z(phi_i, phi_j) trivial
};

// z(phi_i, phi_j) = Z of the overlap of tolerable preimages; trivial when it
// lies in H(phi_i + phi_j). Clusters join components through non-trivial pairs.
ClusterResult cluster_partition(const TgaContext& tga, const std::vector<BitVec>& components);

// A member of the coset supported inside `allowed`, if any.
std::optional<BitVec> coset_member_within(const Coset& coset, const BitVec& allowed);

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t error_weight = 0;
  std::size_t flux_weight = 0;
  std::size_t components = 0;
  std::size_t largest_component = 0;  // faces
  bool decoder_ok = true;             // decoder output reproduces phi
};

struct ConfinementStats {
  NoiseModel model;
  std::size_t trials = 0;
  std::size_t bin_width = 1;  // faces per histogram bin: the smallest single-qubit flux
  std::vector<TrialRecord> records;
  std::map<std::size_t, std::size_t> size_histogram;  // raw component size in faces -> count
  std::map<std::size_t, std::size_t> binned_histogram;  // ceil(size / bin_width) -> count
  std::size_t decoder_failures = 0;
  double mean_flux_weight() const;
  double mean_components() const;
};

// Runs `trials` independent trials on `threads` workers; the result does not
// depend on the thread count.
ConfinementStats confinement_stats(const CssCode& code, const NoiseModel& model, std::size_t trials,
                                   unsigned threads = 0);

// Each bin no more than 3 sigma above the previous one (Poisson errors).
bool histogram_decays(const std::map<std::size_t, std::size_t>& hist, double sigmas = 3.0);

std::string trials_csv(const ConfinementStats& s);
std::string histogram_csv(const ConfinementStats& s);

}  // namespace colorgates

#pragma once

// Versioned `.colex.json` documents and the built-in named colexes.
//
//   {"format": "colorgates.colex", "version": 1, "n_qubits": 15,
//    "cells":  [{"color": 0, "qubits": [...]}, ...],
//    "facets": [{"color": 0, "qubits": [...]}, ...],
//    "faces":  [{"label": [2, 3], "qubits": [...]}]     (optional cache)
//    "edges":  [{"color": 1, "endpoints": [0, 2]}]      (optional)}
//
// Colors are 0..3. Stored faces are only a cache: they are re-derived and
// must match as a set, otherwise loading fails.

#include <filesystem>
#include <string>

#include "colorgates/colex.hpp"

namespace colorgates {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string colex_to_json(const Colex& colex, bool include_derived = true);
Colex colex_from_json(const std::string& text);

Colex load_colex_file(const std::filesystem::path& path);
void save_colex_file(const Colex& colex, const std::filesystem::path& path);

// "tetra15", "tetra15+closure", "torus:L", or a path to a .colex.json file.
Colex resolve_colex(const std::string& spec);

// Writes through a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace colorgates

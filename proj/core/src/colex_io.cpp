#include "colorgates/colex_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace colorgates {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "colorgates.colex";
constexpr int kVersion = 1;

json containers_json(const std::vector<Container>& list) {
  json arr = json::array();
  for (const auto& c : list) arr.push_back({{"color", c.color}, {"qubits", c.qubits.indices()}});
  return arr;
}

BitVec mask_from(const json& qubits, std::size_t n, const std::string& where) {
  if (!qubits.is_array()) throw FormatError(where + ": qubits must be an array");
  BitVec v(n);
  for (const auto& q : qubits) {
    if (!q.is_number_unsigned() || q.get<std::size_t>() >= n) {
      throw FormatError(where + ": qubit index out of range");
    }
    if (v.test(q.get<std::size_t>())) throw FormatError(where + ": duplicate qubit index");
    v.set(q.get<std::size_t>());
  }
  return v;
}

std::vector<Container> containers_from(const json& doc, const char* key, std::size_t n) {
  std::vector<Container> out;
  if (!doc.contains(key)) return out;
  if (!doc[key].is_array()) throw FormatError(std::string(key) + " must be an array");
  for (std::size_t i = 0; i < doc[key].size(); ++i) {
    const auto& e = doc[key][i];
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("color") || !e.contains("qubits")) {
      throw FormatError(where + ": expected {color, qubits}");
    }
    if (!e["color"].is_number_unsigned() || e["color"].get<int>() >= kNumColors) {
      throw FormatError(where + ": color must be 0..3");
    }
    out.push_back({static_cast<Color>(e["color"].get<int>()), mask_from(e["qubits"], n, where)});
  }
  return out;
}

}  // namespace

std::string colex_to_json(const Colex& colex, bool include_derived) {
  json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["n_qubits"] = colex.n_qubits();
  doc["cells"] = containers_json(colex.cells());
  doc["facets"] = containers_json(colex.facets());
  if (include_derived) {
    json faces = json::array();
    for (const auto& f : colex.faces()) {
      auto [a, b] = f.label.colors();
      faces.push_back({{"label", {a, b}}, {"qubits", f.qubits.indices()}});
    }
    doc["faces"] = faces;
    json edges = json::array();
    for (const auto& e : colex.edges()) edges.push_back({{"color", e.color}, {"endpoints", {e.a, e.b}}});
    doc["edges"] = edges;
  }
  return doc.dump(1) + "\n";
}

Colex colex_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kFormat) {
    throw FormatError("not a colorgates.colex document");
  }
  if (doc.value("version", 0) != kVersion) throw FormatError("unsupported colex version");
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_unsigned()) {
    throw FormatError("n_qubits missing or not a count");
  }
  const auto n = doc["n_qubits"].get<std::size_t>();
  auto cells = containers_from(doc, "cells", n);
  auto facets = containers_from(doc, "facets", n);

  std::optional<std::vector<Edge>> edges;
  if (doc.contains("edges")) {
    edges.emplace();
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const auto& e = doc["edges"][i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.contains("color") || !e.contains("endpoints") || e["endpoints"].size() != 2) {
        throw FormatError(where + ": expected {color, endpoints[2]}");
      }
      auto a = e["endpoints"][0].get<std::size_t>();
      auto b = e["endpoints"][1].get<std::size_t>();
      if (a >= n || b >= n || a == b) throw FormatError(where + ": bad endpoints");
      edges->push_back(Edge{static_cast<Color>(e["color"].get<int>()), std::min(a, b), std::max(a, b)});
    }
  }
  Colex cx = Colex::assemble(n, std::move(cells), std::move(facets), std::move(edges));

  if (doc.contains("faces")) {
    std::set<std::pair<std::uint8_t, std::vector<std::size_t>>> stored, derived;
    for (const auto& f : doc["faces"]) {
      if (!f.contains("label") || f["label"].size() != 2) throw FormatError("faces: label must have two colors");
      auto label = ColorPair(f["label"][0].get<Color>(), f["label"][1].get<Color>());
      stored.insert({label.mask(), mask_from(f["qubits"], n, "faces").indices()});
    }
    for (const auto& f : cx.faces()) derived.insert({f.label.mask(), f.qubits.indices()});
    if (stored != derived) throw FormatError("stored faces disagree with faces derived from containers");
  }
  return cx;
}

Colex load_colex_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return colex_from_json(ss.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  } catch (const std::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void save_colex_file(const Colex& colex, const std::filesystem::path& path) {
  write_file_atomic(path, colex_to_json(colex));
}

Colex resolve_colex(const std::string& spec) {
  if (spec == "tetra15") return build_tetra15();
  if (spec == "tetra15+closure") return spherical_closure(build_tetra15());
  if (spec.rfind("torus:", 0) == 0) {
    int L = 0;
    try {
      std::size_t used = 0;
      L = std::stoi(spec.substr(6), &used);
      if (used != spec.size() - 6) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw FormatError("torus size must be an integer: " + spec);
    }
    return build_torus_colex(L);
  }
  return load_colex_file(spec);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace colorgates

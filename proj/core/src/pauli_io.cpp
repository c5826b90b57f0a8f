#include "colorgates/pauli_io.hpp"

#include <fstream>
#include <sstream>

namespace colorgates {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what);
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    fail(line, "expected a qubit index, got '" + tok + "'");
  }
  if (pos != tok.size() || tok.front() == '-' || tok.front() == '+') {
    fail(line, "expected a qubit index, got '" + tok + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<PauliOp> parse_paulis(const std::string& text, const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("parse_paulis: no target codes");
  std::vector<PauliOp> out;
  for (auto n : sizes) out.push_back(PauliOp::identity(n));
  std::size_t current = 0, line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    std::vector<std::string> toks;
    for (std::string t; words >> t;) toks.push_back(t);
    if (head == "code") {
      if (toks.size() != 1) fail(line_no, "'code' takes one index");
      current = parse_index(toks[0], line_no);
      if (current >= sizes.size()) fail(line_no, "code index " + toks[0] + " out of range");
      continue;
    }
    if (head != "X" && head != "Z") fail(line_no, "expected X, Z or code, got '" + head + "'");
    BitVec& target = head == "X" ? out[current].x : out[current].z;
    for (const auto& t : toks) {
      const auto q = parse_index(t, line_no);
      if (q >= sizes[current]) {
        fail(line_no, "qubit " + t + " out of range for " + std::to_string(sizes[current]) + " qubits");
      }
      target.flip(q);
    }
  }
  return out;
}

PauliOp parse_pauli(const std::string& text, std::size_t n) { return parse_paulis(text, {n}).front(); }

std::string format_pauli(const PauliOp& p) {
  std::string s;
  auto line = [&](char tag, const BitVec& m) {
    if (m.none()) return;
    s += tag;
    for (auto q : m.indices()) s += " " + std::to_string(q);
    s += '\n';
  };
  line('X', p.x);
  line('Z', p.z);
  return s;
}

std::string format_paulis(const std::vector<PauliOp>& parts) {
  if (parts.size() == 1) return format_pauli(parts[0]);
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += "code " + std::to_string(i) + "\n" + format_pauli(parts[i]);
  return s;
}

std::vector<PauliOp> load_pauli_file(const std::filesystem::path& path, const std::vector<std::size_t>& sizes) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open Pauli file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_paulis(buf.str(), sizes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace colorgates

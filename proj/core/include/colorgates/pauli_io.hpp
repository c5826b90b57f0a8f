#pragma once

// Text format for phase-free Pauli operators: one `X <qubits...>` or
// `Z <qubits...>` line per factor. Repeated factors multiply. A `code <i>`
// line switches to the i-th operator of a multi-code list. `#` starts a
// comment.

#include <filesystem>
#include <string>
#include <vector>

#include "colorgates/code.hpp"
#include "colorgates/colex_io.hpp"

namespace colorgates {

// Errors carry the 1-based line number in the message.
std::vector<PauliOp> parse_paulis(const std::string& text, const std::vector<std::size_t>& sizes);
PauliOp parse_pauli(const std::string& text, std::size_t n);

std::string format_paulis(const std::vector<PauliOp>& parts);
std::string format_pauli(const PauliOp& p);

std::vector<PauliOp> load_pauli_file(const std::filesystem::path& path, const std::vector<std::size_t>& sizes);

}  // namespace colorgates

// JSON serialization for lattices and matrices. Input schema:
// {"label": optional string, "gram": [[int, ...], ...]} with a square,
// symmetric integer matrix. Arbitrary-precision scalars are emitted as
// decimal strings; gram entries must fit in 64-bit integers.
#pragma once

#include "latk/lattice.hpp"

#include <string>

namespace latk {

Lattice lattice_from_json(const std::string& text);
std::string lattice_to_json(const Lattice& L, bool with_gram = true, int indent = -1);

// dispatch on the argument shape: leading '{' parses as JSON, leading '@'
// reads the named file (JSON), anything else goes through the lattice DSL
Lattice lattice_from_arg(const std::string& arg);

std::string read_file(const std::string& path);

}  // namespace latk

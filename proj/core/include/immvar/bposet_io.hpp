#pragma once

#include "immvar/bposet.hpp"

#include <string>

namespace immvar {

// Hasse diagram in Graphviz DOT, edges drawn upward; same-rank clusters when
// the poset is graded. Byte-deterministic.
std::string to_dot(const BPoset& p);

// Structural JSON: elements, cover edges, gradedness/rank data, lattice
// flags. Byte-deterministic.
std::string to_json_string(const BPoset& p);

} // namespace immvar

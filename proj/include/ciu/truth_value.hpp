#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ciu {

// Element of A_n: bit tuple (x_0, ..., x_n) with no adjacent (0,0) pair.
using TruthValue = std::vector<std::uint8_t>;

// Invariant check: x_k = 0 implies x_{k+1} = 1.
bool no_adjacent_zeros(const TruthValue& x);

// x_0 == 1
bool is_designated(const TruthValue& x);

// "(1,0,1)"; length-1 tuples render as bare "0" / "1".
std::string render_value(const TruthValue& x);

}  // namespace ciu

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ciu/errors.hpp"
#include "ciu/truth_value.hpp"

namespace ciu {

inline constexpr std::uint64_t kDefaultMaxSupport = 1'000'000;
inline constexpr int kDefaultMaxExpansionIndex = 30;

// Fb(1) = Fb(2) = 1, Fb(k) = Fb(k-1) + Fb(k-2). Defined for k >= 1 only;
// overflow past 64 bits raises ResourceLimitError.
std::uint64_t fib(int k);

// sigma(0) = "1", sigma(1) = "10", applied letterwise and concatenated.
std::string sigma(std::string_view word);

// W(1) = "0", W(k+1) = sigma(W(k)); |W(k)| = Fb(k).
std::string expansion(int k, int max_index = kDefaultMaxExpansionIndex);

// Depth-first paths of length n+1 below a virtual root labeled 1: a node
// labeled 1 has children (1, 0) in that order, a node labeled 0 has the
// single child 1. Exactly fib(n+3) tuples; as a set this is A_n.
std::vector<TruthValue> branch_sequences(
    int n, std::uint64_t max_support = kDefaultMaxSupport);

}  // namespace ciu

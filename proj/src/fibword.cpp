#include "ciu/fibword.hpp"

#include <stdexcept>

namespace ciu {

std::uint64_t fib(int k) {
  if (k < 1) throw std::domain_error("fib: index must be >= 1");
  std::uint64_t a = 1, b = 1;  // Fb(1), Fb(2)
  if (k <= 2) return 1;
  for (int i = 3; i <= k; ++i) {
    std::uint64_t next;
    if (__builtin_add_overflow(a, b, &next))
      throw ResourceLimitError("fib(" + std::to_string(k) +
                               ") overflows 64-bit arithmetic");
    a = b;
    b = next;
  }
  return b;
}

std::string sigma(std::string_view word) {
  std::string out;
  out.reserve(word.size() * 2);
  for (char c : word) {
    if (c == '0')
      out += '1';
    else if (c == '1')
      out += "10";
    else
      throw std::invalid_argument("sigma: word must be over {0,1}");
  }
  return out;
}

std::string expansion(int k, int max_index) {
  if (k < 1) throw std::domain_error("expansion: index must be >= 1");
  if (k > max_index)
    throw ResourceLimitError("expansion index " + std::to_string(k) +
                             " exceeds limit " + std::to_string(max_index));
  std::string w = "0";
  for (int i = 2; i <= k; ++i) w = sigma(w);
  return w;
}

namespace {

void walk(TruthValue& path, std::size_t len, std::vector<TruthValue>& out) {
  if (path.size() == len) {
    out.push_back(path);
    return;
  }
  std::uint8_t last = path.empty() ? 1 : path.back();
  if (last == 1) {
    path.push_back(1);
    walk(path, len, out);
    path.back() = 0;
    walk(path, len, out);
    path.pop_back();
  } else {
    path.push_back(1);
    walk(path, len, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<TruthValue> branch_sequences(int n, std::uint64_t max_support) {
  if (n < 0) throw std::domain_error("branch_sequences: level must be >= 0");
  std::uint64_t count = fib(n + 3);
  if (count > max_support)
    throw ResourceLimitError("branch count fib(" + std::to_string(n + 3) +
                             ") = " + std::to_string(count) +
                             " exceeds limit " + std::to_string(max_support));
  std::vector<TruthValue> out;
  out.reserve(count);
  TruthValue path;
  walk(path, static_cast<std::size_t>(n) + 1, out);
  return out;
}

}  // namespace ciu

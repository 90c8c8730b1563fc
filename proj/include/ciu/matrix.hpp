#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ciu/errors.hpp"
#include "ciu/fibword.hpp"
#include "ciu/formula.hpp"
#include "ciu/truth_value.hpp"

namespace ciu {

inline constexpr std::uint64_t kDefaultMaxTableEntries = 10'000'000;
inline constexpr std::size_t kDefaultMaxIsoSize = 10;

// A_n by one-coordinate extension of A_{n-1}: append 1 after a trailing 0,
// either bit after a trailing 1. Ascending lexicographic order.
std::vector<TruthValue> build_support_recursive(
    int n, std::uint64_t max_support = kDefaultMaxSupport);

// A_n by filtering all 2^(n+1) tuples through the adjacent-00 prohibition;
// independent construction used as an internal oracle.
std::vector<TruthValue> build_support_direct(
    int n, std::uint64_t max_support = kDefaultMaxSupport);

// D_n = { x in A_n : x_0 = 1 }.
std::vector<TruthValue> designated_set(
    int n, std::uint64_t max_support = kDefaultMaxSupport);

// ~(x_0, ..., x_n) = (x_1, ..., x_n, -x_n); for length 1 this is plain
// complementation.
TruthValue neg_op(const TruthValue& x);

// z_0 = x_0 -> y_0 on bits, then z_k = -z_{k-1}.
TruthValue imp_op(const TruthValue& x, const TruthValue& y);

// The matrix M_n = (A_n, D_n); operations are computed on the fly.
struct LogicMatrix {
  int n = 0;
  std::vector<TruthValue> values;  // ascending lexicographic
  std::vector<bool> designated;    // mask over values

  std::size_t index_of(const TruthValue& x) const;
};

LogicMatrix build_matrix(int n, std::uint64_t max_support = kDefaultMaxSupport);

// Fully tabulated finite C-matrix, for export and isomorphism search.
struct GenericMatrix {
  int n = 0;
  std::vector<TruthValue> values;
  std::vector<std::size_t> designated;  // indices into values, ascending
  std::vector<std::size_t> neg_table;
  std::vector<std::vector<std::size_t>> imp_table;

  std::size_t size() const { return values.size(); }
};

GenericMatrix materialize(const LogicMatrix& m,
                          std::uint64_t max_entries = kDefaultMaxTableEntries);

// First bijection (lexicographic permutation order) preserving both
// operation tables and designation, or nullopt. Exhaustive; sizes above
// max_size are rejected.
std::optional<std::vector<std::size_t>> find_isomorphism(
    const GenericMatrix& a, const GenericMatrix& b,
    std::size_t max_size = kDefaultMaxIsoSize);

// JSON schema with keys n, values, designated, neg, imp in that order.
std::string export_json(const GenericMatrix& m);
GenericMatrix import_json(const std::string& text);

// Homomorphic extension of an atom assignment into A_n.
TruthValue eval_matrix(const std::map<std::string, TruthValue>& assignment,
                       const FormulaPtr& f);

}  // namespace ciu

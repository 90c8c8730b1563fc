#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ciu/errors.hpp"
#include "ciu/formula.hpp"
#include "ciu/truth_value.hpp"

namespace ciu {

inline constexpr std::uint64_t kDefaultMaxSeeds = 10'000'000;

// Per-atom initial sequence (v(a), v(~a), ..., v(~^n a)); generator of a
// canonical Ciu^n-bivaluation.
struct BivalSeed {
  int n = 0;
  std::map<std::string, TruthValue> assignment;
};

// Atom assignment into A_n; the seed/valuation correspondence is the
// identity on this carrier.
struct MatrixValuation {
  int n = 0;
  std::map<std::string, TruthValue> assignment;
};

// Lexicographic stream of all |A_n|^m seeds over the given atoms (atom
// order, then tuple order). The per-atom tuple pool is built here by
// filtering raw bit tuples, independently of the matrix module.
class SeedEnumerator {
 public:
  SeedEnumerator(int n, std::vector<std::string> atoms,
                 std::uint64_t max_total = kDefaultMaxSeeds);

  std::uint64_t total() const { return total_; }
  bool next(BivalSeed& out);

 private:
  int n_;
  std::vector<std::string> atoms_;
  std::vector<TruthValue> tuples_;
  std::vector<std::size_t> odometer_;
  std::uint64_t total_;
  bool done_ = false;
};

std::vector<BivalSeed> enumerate_seeds(int n,
                                       const std::vector<std::string>& atoms,
                                       std::uint64_t max_total = kDefaultMaxSeeds);

// Scalar recursion: ~^k a with k <= n reads the seed bit; any other
// negation complements its body; implication is classical.
int eval_bival(const BivalSeed& seed, const FormulaPtr& f);

MatrixValuation to_matrix_valuation(const BivalSeed& seed);
BivalSeed from_matrix_valuation(const MatrixValuation& w);

struct ConditionViolation {
  std::string condition;  // "1", "2.n", "3", "4"
  FormulaPtr witness;
};

using BivalEvalFn = std::function<int(const BivalSeed&, const FormulaPtr&)>;

// Checks every instance of the bivaluation closure conditions whose
// participating formulas all lie in the given (subformula-closed) set.
// A custom evaluator can be injected for fault testing.
std::vector<ConditionViolation> audit_conditions(
    const BivalSeed& seed, const std::vector<FormulaPtr>& formulas,
    const BivalEvalFn& eval = {});

}  // namespace ciu

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ciu/bival.hpp"
#include "ciu/formula.hpp"
#include "ciu/matrix.hpp"

namespace ciu {

inline constexpr std::uint64_t kDefaultMaxEvals = 10'000'000;

struct EntailmentVerdict {
  bool holds = false;
  // Atom assignment designating every premise and not the conclusion;
  // absent iff holds. Lexicographically first failing assignment under
  // the canonical enumeration order.
  std::optional<std::map<std::string, TruthValue>> countermodel;
  std::uint64_t examined = 0;
};

// Exhaustive check over all atom assignments into A_n, extended
// homomorphically through the matrix operations.
EntailmentVerdict entails_matrix(int n, const Sequent& s,
                                 std::uint64_t max_evals = kDefaultMaxEvals);

// Exhaustive check over all canonical bivaluation seeds, evaluated by the
// scalar bivaluation recursion.
EntailmentVerdict entails_bival(int n, const Sequent& s,
                                std::uint64_t max_evals = kDefaultMaxEvals);

struct CrossCheckResult {
  EntailmentVerdict matrix;
  EntailmentVerdict bival;
  bool agree = false;
};

CrossCheckResult cross_check(int n, const Sequent& s,
                             std::uint64_t max_evals = kDefaultMaxEvals);

EntailmentVerdict is_tautology(int n, const FormulaPtr& f,
                               std::uint64_t max_evals = kDefaultMaxEvals);

struct HierarchyViolation {
  Sequent sequent;
  int n_low = 0;
  int n_high = 0;
};

// holds at n_high must imply holds at n_low; returns the (expected empty)
// violation list.
std::vector<HierarchyViolation> hierarchy_check(
    int n_low, int n_high, const std::vector<Sequent>& samples,
    std::uint64_t max_evals = kDefaultMaxEvals);

struct MetatheoryReport {
  std::uint64_t rng_seed = 0;
  int trials = 0;
  int checks_passed = 0;
  std::vector<std::string> failures;
};

// Sampled (Ext)/(Mon)/(Str) checks plus reflexivity of p -> p.
MetatheoryReport metatheory_sample(int n, int trials, std::uint64_t rng_seed,
                                   std::uint64_t max_evals = kDefaultMaxEvals);

struct ParaconsistencyRow {
  int n = 0;
  bool explosion_holds = false;  // p, ~p |- q
  bool dne_holds = false;        // p |- ~~p
};

std::vector<ParaconsistencyRow> paraconsistency_report(
    int n_max, std::uint64_t max_evals = kDefaultMaxEvals);

// Seeded sampling helpers shared by the CLI and the test suites.
FormulaPtr random_formula(std::mt19937_64& rng,
                          const std::vector<std::string>& atoms, int max_depth);
Sequent random_sequent(std::mt19937_64& rng,
                       const std::vector<std::string>& atoms, int max_depth,
                       int max_premises);

}  // namespace ciu

#include "ciu/consequence.hpp"

#include <algorithm>

namespace ciu {

namespace {

void check_enumeration_guard(std::size_t base, std::size_t exponent, int n,
                             std::uint64_t max_evals) {
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    total *= base;
    if (total > max_evals)
      throw ResourceLimitError(
          "entailment check needs fib(" + std::to_string(n + 3) + ")^" +
          std::to_string(exponent) + " = " + std::to_string(base) + "^" +
          std::to_string(exponent) + " valuations, exceeding limit " +
          std::to_string(max_evals));
  }
}

std::vector<FormulaPtr> dedup_premises(const Sequent& s) {
  FormulaSet set(s.premises.begin(), s.premises.end());
  return {set.begin(), set.end()};
}

}  // namespace

EntailmentVerdict entails_matrix(int n, const Sequent& s,
                                 std::uint64_t max_evals) {
  const std::vector<std::string> atoms = atoms_of(s);
  const std::vector<TruthValue> values = build_support_recursive(n, max_evals);
  check_enumeration_guard(values.size(), atoms.size(), n, max_evals);
  const std::vector<FormulaPtr> premises = dedup_premises(s);

  EntailmentVerdict verdict;
  std::vector<std::size_t> odometer(atoms.size(), 0);
  std::map<std::string, TruthValue> assignment;
  bool done = false;
  while (!done) {
    assignment.clear();
    for (std::size_t i = 0; i < atoms.size(); ++i)
      assignment.emplace(atoms[i], values[odometer[i]]);
    ++verdict.examined;

    bool premises_hold = true;
    for (const FormulaPtr& p : premises)
      if (!is_designated(eval_matrix(assignment, p))) {
        premises_hold = false;
        break;
      }
    if (premises_hold && !is_designated(eval_matrix(assignment, s.conclusion))) {
      verdict.holds = false;
      verdict.countermodel = assignment;
      return verdict;
    }

    done = true;
    std::size_t i = atoms.size();
    while (i > 0) {
      --i;
      if (++odometer[i] < values.size()) {
        done = false;
        break;
      }
      odometer[i] = 0;
    }
  }
  verdict.holds = true;
  return verdict;
}

EntailmentVerdict entails_bival(int n, const Sequent& s,
                                std::uint64_t max_evals) {
  const std::vector<std::string> atoms = atoms_of(s);
  const std::vector<FormulaPtr> premises = dedup_premises(s);
  SeedEnumerator seeds(n, atoms, max_evals);

  EntailmentVerdict verdict;
  BivalSeed seed;
  while (seeds.next(seed)) {
    ++verdict.examined;
    bool premises_hold = true;
    for (const FormulaPtr& p : premises)
      if (eval_bival(seed, p) != 1) {
        premises_hold = false;
        break;
      }
    if (premises_hold && eval_bival(seed, s.conclusion) != 1) {
      verdict.holds = false;
      verdict.countermodel = seed.assignment;
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

CrossCheckResult cross_check(int n, const Sequent& s, std::uint64_t max_evals) {
  CrossCheckResult r;
  r.matrix = entails_matrix(n, s, max_evals);
  r.bival = entails_bival(n, s, max_evals);
  r.agree = r.matrix.holds == r.bival.holds;
  return r;
}

EntailmentVerdict is_tautology(int n, const FormulaPtr& f,
                               std::uint64_t max_evals) {
  return entails_matrix(n, Sequent{{}, f}, max_evals);
}

std::vector<HierarchyViolation> hierarchy_check(
    int n_low, int n_high, const std::vector<Sequent>& samples,
    std::uint64_t max_evals) {
  if (n_low > n_high)
    throw std::invalid_argument("hierarchy_check: n_low must be <= n_high");
  std::vector<HierarchyViolation> violations;
  for (const Sequent& s : samples) {
    if (entails_matrix(n_high, s, max_evals).holds &&
        !entails_matrix(n_low, s, max_evals).holds)
      violations.push_back({s, n_low, n_high});
  }
  return violations;
}

FormulaPtr random_formula(std::mt19937_64& rng,
                          const std::vector<std::string>& atoms,
                          int max_depth) {
  std::uniform_int_distribution<int> shape(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  int roll = max_depth <= 0 ? 0 : shape(rng);
  switch (roll) {
    case 0:
      return make_atom(atoms[pick(rng)]);
    case 1:
      return make_neg(random_formula(rng, atoms, max_depth - 1));
    default:
      return make_imp(random_formula(rng, atoms, max_depth - 1),
                      random_formula(rng, atoms, max_depth - 1));
  }
}

Sequent random_sequent(std::mt19937_64& rng,
                       const std::vector<std::string>& atoms, int max_depth,
                       int max_premises) {
  std::uniform_int_distribution<int> count(0, max_premises);
  Sequent s;
  int m = count(rng);
  for (int i = 0; i < m; ++i)
    s.premises.push_back(random_formula(rng, atoms, max_depth));
  s.conclusion = random_formula(rng, atoms, max_depth);
  return s;
}

MetatheoryReport metatheory_sample(int n, int trials, std::uint64_t rng_seed,
                                   std::uint64_t max_evals) {
  MetatheoryReport report;
  report.rng_seed = rng_seed;
  report.trials = trials;
  std::mt19937_64 rng(rng_seed);
  const std::vector<std::string> atoms = {"p", "q"};

  auto record = [&report](bool ok, const std::string& what) {
    if (ok)
      ++report.checks_passed;
    else
      report.failures.push_back(what);
  };

  for (int t = 0; t < trials; ++t) {
    Sequent s = random_sequent(rng, atoms, 4, 3);

    // (Ext): a premise is always entailed
    if (!s.premises.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, s.premises.size() - 1);
      Sequent ext{s.premises, s.premises[pick(rng)]};
      record(entails_matrix(n, ext, max_evals).holds,
             "(Ext) failed on " + render(ext.conclusion));
    }

    bool holds = entails_matrix(n, s, max_evals).holds;

    // (Mon): adding premises preserves entailment
    if (holds) {
      Sequent mon = s;
      mon.premises.push_back(random_formula(rng, atoms, 3));
      record(entails_matrix(n, mon, max_evals).holds,
             "(Mon) failed on " + render(s.conclusion));
    }

    // (Str): positive entailments survive substitution
    if (holds) {
      std::map<std::string, FormulaPtr> sub;
      for (const std::string& a : atoms)
        sub.emplace(a, random_formula(rng, atoms, 2));
      Sequent st;
      for (const FormulaPtr& p : s.premises)
        st.premises.push_back(substitute(p, sub));
      st.conclusion = substitute(s.conclusion, sub);
      record(entails_matrix(n, st, max_evals).holds,
             "(Str) failed on " + render(s.conclusion));
    }
  }

  // reflexivity of p -> p
  FormulaPtr p = make_atom("p");
  record(is_tautology(n, make_imp(p, p), max_evals).holds,
         "reflexivity p -> p failed");
  return report;
}

std::vector<ParaconsistencyRow> paraconsistency_report(
    int n_max, std::uint64_t max_evals) {
  const Sequent explosion = parse_sequent("p, ~p |- q");
  const Sequent dne = parse_sequent("p |- ~~p");
  std::vector<ParaconsistencyRow> rows;
  for (int n = 0; n <= n_max; ++n)
    rows.push_back({n, entails_matrix(n, explosion, max_evals).holds,
                    entails_matrix(n, dne, max_evals).holds});
  return rows;
}

}  // namespace ciu

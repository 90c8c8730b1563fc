#include "ciu/bival.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace ciu {

namespace {

// Raw filter over 2^(n+1) bit tuples: the forbidden pattern
// v(~^k a) = 0 and v(~^{k+1} a) = 0 is exactly an adjacent 00 pair.
std::vector<TruthValue> seed_tuples(int n) {
  if (n < 0) throw std::domain_error("seed level must be >= 0");
  const int len = n + 1;
  std::vector<TruthValue> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
    TruthValue t(len);
    bool ok = true;
    for (int i = 0; i < len; ++i)
      t[i] = static_cast<std::uint8_t>((code >> (len - 1 - i)) & 1);
    for (int i = 0; ok && i + 1 < len; ++i)
      if (t[i] == 0 && t[i + 1] == 0) ok = false;
    if (ok) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

SeedEnumerator::SeedEnumerator(int n, std::vector<std::string> atoms,
                               std::uint64_t max_total)
    : n_(n), atoms_(std::move(atoms)), tuples_(seed_tuples(n)),
      odometer_(atoms_.size(), 0) {
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    total *= tuples_.size();
    if (total > max_total)
      throw ResourceLimitError(
          "seed enumeration needs " + std::to_string(tuples_.size()) + "^" +
          std::to_string(atoms_.size()) + " seeds, exceeding limit " +
          std::to_string(max_total));
  }
  total_ = static_cast<std::uint64_t>(total);
}

bool SeedEnumerator::next(BivalSeed& out) {
  if (done_) return false;
  out.n = n_;
  out.assignment.clear();
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    out.assignment.emplace(atoms_[i], tuples_[odometer_[i]]);
  // advance; last atom cycles fastest, so the stream is lexicographic
  // over (atom order, tuple order)
  std::size_t i = atoms_.size();
  while (i > 0) {
    --i;
    if (++odometer_[i] < tuples_.size()) return true;
    odometer_[i] = 0;
  }
  done_ = true;
  return true;
}

std::vector<BivalSeed> enumerate_seeds(int n,
                                       const std::vector<std::string>& atoms,
                                       std::uint64_t max_total) {
  SeedEnumerator en(n, atoms, max_total);
  std::vector<BivalSeed> out;
  out.reserve(en.total());
  BivalSeed s;
  while (en.next(s)) out.push_back(s);
  return out;
}

int eval_bival(const BivalSeed& seed, const FormulaPtr& f) {
  std::unordered_map<const Formula*, int> memo;
  auto lookup = [&seed](const std::string& name) -> const TruthValue& {
    auto it = seed.assignment.find(name);
    if (it == seed.assignment.end())
      throw std::out_of_range("unbound atom: " + name);
    return it->second;
  };
  std::function<int(const FormulaPtr&)> go = [&](const FormulaPtr& g) -> int {
    auto hit = memo.find(g.get());
    if (hit != memo.end()) return hit->second;
    int r = 0;
    switch (g->kind) {
      case Formula::Kind::Atom:
        r = lookup(g->atom)[0];
        break;
      case Formula::Kind::Imp:
        r = (go(g->left) == 0 || go(g->right) == 1) ? 1 : 0;
        break;
      case Formula::Kind::Neg: {
        NegTower t = neg_decompose(g);
        if (t.core->kind == Formula::Kind::Atom &&
            t.k <= static_cast<std::size_t>(seed.n))
          r = lookup(t.core->atom)[t.k];
        else
          r = 1 - go(g->left);
        break;
      }
    }
    memo.emplace(g.get(), r);
    return r;
  };
  return go(f);
}

MatrixValuation to_matrix_valuation(const BivalSeed& seed) {
  return MatrixValuation{seed.n, seed.assignment};
}

BivalSeed from_matrix_valuation(const MatrixValuation& w) {
  return BivalSeed{w.n, w.assignment};
}

std::vector<ConditionViolation> audit_conditions(
    const BivalSeed& seed, const std::vector<FormulaPtr>& formulas,
    const BivalEvalFn& eval) {
  const BivalEvalFn& v = eval ? eval : BivalEvalFn(&eval_bival);
  const std::size_t n = static_cast<std::size_t>(seed.n);

  FormulaSet set(formulas.begin(), formulas.end());
  std::vector<ConditionViolation> out;

  for (const FormulaPtr& g : set) {
    if (g->kind == Formula::Kind::Neg) {
      // (1): v(~phi) = 0 implies v(phi) = 1, with phi = body of g
      if (v(seed, g) == 0 && v(seed, g->left) != 1)
        out.push_back({"1", g});
      // (2.n): g = ~^{n+1} phi; ~^n phi is a subformula of g
      NegTower t = neg_decompose(g);
      if (t.k >= n + 1 && v(seed, g) == 1 && v(seed, g->left) != 0) {
        // restrict to exactly the (2.n) instance shape: g = ~(~^n phi)
        FormulaPtr tower_n = g->left;
        NegTower tn = neg_decompose(tower_n);
        if (tn.k >= n) out.push_back({"2.n", g});
      }
      // (3): v(~(phi -> psi)) = 1 implies v(phi -> psi) = 0
      if (g->left->kind == Formula::Kind::Imp && v(seed, g) == 1 &&
          v(seed, g->left) != 0)
        out.push_back({"3", g});
    } else if (g->kind == Formula::Kind::Imp) {
      // (4): v(phi -> psi) = 1 iff v(phi) = 0 or v(psi) = 1
      bool lhs = v(seed, g) == 1;
      bool rhs = v(seed, g->left) == 0 || v(seed, g->right) == 1;
      if (lhs != rhs) out.push_back({"4", g});
    }
  }
  return out;
}

}  // namespace ciu

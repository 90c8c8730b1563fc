#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ciu/errors.hpp"

namespace ciu {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// AST node of the language L(C) over the signature {~, ->}.
// Immutable; subtrees may be shared freely.
struct Formula {
  enum class Kind { Atom, Neg, Imp };

  Kind kind;
  std::string atom;  // Kind::Atom
  FormulaPtr left;   // Neg body / Imp antecedent
  FormulaPtr right;  // Imp consequent
};

FormulaPtr make_atom(std::string name);
FormulaPtr make_neg(FormulaPtr body);
FormulaPtr make_imp(FormulaPtr lhs, FormulaPtr rhs);

// Structural three-way comparison (Atom < Neg < Imp, then components).
int compare(const Formula& a, const Formula& b);
bool equal(const Formula& a, const Formula& b);
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) { return equal(*a, *b); }

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return compare(*a, *b) < 0;
  }
};
using FormulaSet = std::set<FormulaPtr, FormulaLess>;

// f decomposed as ~^k core with core not a negation.
struct NegTower {
  std::size_t k = 0;
  FormulaPtr core;
};

struct Sequent {
  std::vector<FormulaPtr> premises;
  FormulaPtr conclusion;
};

// Grammar: atoms [a-z][a-z0-9_]*, '~' (stackable, tightest), '->'
// right-associative, parentheses; the unicode connectives are accepted
// as input synonyms. Throws ParseError with a byte offset.
FormulaPtr parse(const std::string& text);

// "phi1, phi2 |- psi"; the premise list may be empty.
Sequent parse_sequent(const std::string& text);

// Minimal-parenthesization text; parse(render(f)) reproduces f.
std::string render(const Formula& f);
inline std::string render(const FormulaPtr& f) { return render(*f); }

NegTower neg_decompose(const FormulaPtr& f);

// f in K_n* := { ~^k a : a atomic, 0 <= k < n }. K_0* is empty.
bool in_k_star(const FormulaPtr& f, int n);

// Distinct atom names, sorted lexicographically.
std::vector<std::string> atoms_of(const FormulaPtr& f);
std::vector<std::string> atoms_of(const Sequent& s);

// Simultaneous substitution; atoms absent from the map are fixed.
FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, FormulaPtr>& map);

}  // namespace ciu

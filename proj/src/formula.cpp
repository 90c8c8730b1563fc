#include "ciu/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string_view>
#include <utility>

namespace ciu {

FormulaPtr make_atom(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->atom = std::move(name);
  return f;
}

FormulaPtr make_neg(FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Neg;
  f->left = std::move(body);
  return f;
}

FormulaPtr make_imp(FormulaPtr lhs, FormulaPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Imp;
  f->left = std::move(lhs);
  f->right = std::move(rhs);
  return f;
}

int compare(const Formula& a, const Formula& b) {
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  switch (a.kind) {
    case Formula::Kind::Atom:
      return a.atom.compare(b.atom);
    case Formula::Kind::Neg:
      return compare(*a.left, *b.left);
    case Formula::Kind::Imp: {
      int c = compare(*a.left, *b.left);
      return c != 0 ? c : compare(*a.right, *b.right);
    }
  }
  return 0;
}

bool equal(const Formula& a, const Formula& b) { return compare(a, b) == 0; }

namespace {

constexpr std::string_view kNegUtf8 = "\xc2\xac";      // ¬
constexpr std::string_view kImpUtf8 = "\xe2\x8a\x83";  // ⊃

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FormulaPtr parse_formula_to_end() {
    FormulaPtr f = parse_imp();
    expect_end("end of input");
    return f;
  }

  Sequent parse_sequent_to_end() {
    Sequent s;
    skip_ws();
    if (!try_token("|-")) {
      s.premises.push_back(parse_imp());
      while (true) {
        skip_ws();
        if (try_token(",")) {
          s.premises.push_back(parse_imp());
          continue;
        }
        if (try_token("|-")) break;
        throw ParseError(pos_, "',' or '|-'");
      }
    }
    s.conclusion = parse_imp();
    skip_ws();
    if (peek_token("|-")) throw ParseError(pos_, "end of input (single turnstile)");
    expect_end("end of input");
    return s;
  }

 private:
  FormulaPtr parse_imp() {
    FormulaPtr lhs = parse_unary();
    skip_ws();
    if (try_token("->") || try_token(kImpUtf8))
      return make_imp(std::move(lhs), parse_imp());
    return lhs;
  }

  FormulaPtr parse_unary() {
    skip_ws();
    std::size_t negs = 0;
    while (try_token("~") || try_token(kNegUtf8)) {
      ++negs;
      skip_ws();
    }
    FormulaPtr f = parse_primary();
    for (std::size_t i = 0; i < negs; ++i) f = make_neg(std::move(f));
    return f;
  }

  FormulaPtr parse_primary() {
    skip_ws();
    if (try_token("(")) {
      FormulaPtr f = parse_imp();
      skip_ws();
      if (!try_token(")")) throw ParseError(pos_, "')'");
      return f;
    }
    if (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
              (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_'))
        ++pos_;
      return make_atom(text_.substr(start, pos_ - start));
    }
    throw ParseError(pos_, "atom, '~' or '('");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_token(std::string_view tok) const {
    return text_.compare(pos_, tok.size(), tok) == 0;
  }

  bool try_token(std::string_view tok) {
    if (!peek_token(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect_end(const char* what) {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, what);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse(const std::string& text) {
  return Parser(text).parse_formula_to_end();
}

Sequent parse_sequent(const std::string& text) {
  return Parser(text).parse_sequent_to_end();
}

std::string render(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      return f.atom;
    case Formula::Kind::Neg:
      if (f.left->kind == Formula::Kind::Imp)
        return "~(" + render(*f.left) + ")";
      return "~" + render(*f.left);
    case Formula::Kind::Imp: {
      std::string lhs = f.left->kind == Formula::Kind::Imp
                            ? "(" + render(*f.left) + ")"
                            : render(*f.left);
      return lhs + " -> " + render(*f.right);
    }
  }
  return {};
}

NegTower neg_decompose(const FormulaPtr& f) {
  NegTower t;
  t.core = f;
  while (t.core->kind == Formula::Kind::Neg) {
    ++t.k;
    t.core = t.core->left;
  }
  return t;
}

bool in_k_star(const FormulaPtr& f, int n) {
  NegTower t = neg_decompose(f);
  return t.core->kind == Formula::Kind::Atom &&
         static_cast<long long>(t.k) < static_cast<long long>(n);
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      out.insert(f.atom);
      break;
    case Formula::Kind::Neg:
      collect_atoms(*f.left, out);
      break;
    case Formula::Kind::Imp:
      collect_atoms(*f.left, out);
      collect_atoms(*f.right, out);
      break;
  }
}

}  // namespace

std::vector<std::string> atoms_of(const FormulaPtr& f) {
  std::set<std::string> names;
  collect_atoms(*f, names);
  return {names.begin(), names.end()};
}

std::vector<std::string> atoms_of(const Sequent& s) {
  std::set<std::string> names;
  for (const auto& p : s.premises) collect_atoms(*p, names);
  collect_atoms(*s.conclusion, names);
  return {names.begin(), names.end()};
}

FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, FormulaPtr>& map) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      auto it = map.find(f->atom);
      return it != map.end() ? it->second : f;
    }
    case Formula::Kind::Neg:
      return make_neg(substitute(f->left, map));
    case Formula::Kind::Imp:
      return make_imp(substitute(f->left, map), substitute(f->right, map));
  }
  return f;
}

}  // namespace ciu

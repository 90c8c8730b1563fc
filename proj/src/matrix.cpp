#include "ciu/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ciu {

bool no_adjacent_zeros(const TruthValue& x) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i] == 0 && x[i + 1] == 0) return false;
  return true;
}

bool is_designated(const TruthValue& x) { return !x.empty() && x[0] == 1; }

std::string render_value(const TruthValue& x) {
  if (x.size() == 1) return x[0] ? "1" : "0";
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += x[i] ? '1' : '0';
  }
  out += ')';
  return out;
}

namespace {

void check_support_guard(int n, std::uint64_t max_support) {
  if (n < 0) throw std::domain_error("support level must be >= 0");
  std::uint64_t size;
  try {
    size = fib(n + 3);
  } catch (const ResourceLimitError&) {
    throw ResourceLimitError("|A_" + std::to_string(n) + "| = fib(" +
                             std::to_string(n + 3) +
                             ") overflows 64-bit arithmetic");
  }
  if (size > max_support)
    throw ResourceLimitError("|A_" + std::to_string(n) + "| = fib(" +
                             std::to_string(n + 3) + ") = " +
                             std::to_string(size) + " exceeds limit " +
                             std::to_string(max_support));
}

}  // namespace

std::vector<TruthValue> build_support_recursive(int n,
                                                std::uint64_t max_support) {
  check_support_guard(n, max_support);
  std::vector<TruthValue> support = {{0}, {1}};  // A_0
  for (int level = 1; level <= n; ++level) {
    std::vector<TruthValue> next;
    next.reserve(support.size() * 2);
    for (const TruthValue& x : support) {
      TruthValue ext = x;
      if (x.back() == 1) {
        ext.push_back(0);
        next.push_back(ext);
        ext.back() = 1;
        next.push_back(std::move(ext));
      } else {
        ext.push_back(1);
        next.push_back(std::move(ext));
      }
    }
    // extension order (x+0, x+1) keeps the list ascending
    support = std::move(next);
  }
  return support;
}

std::vector<TruthValue> build_support_direct(int n, std::uint64_t max_support) {
  check_support_guard(n, max_support);
  const int len = n + 1;
  std::vector<TruthValue> support;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
    TruthValue x(len);
    for (int i = 0; i < len; ++i)
      x[i] = static_cast<std::uint8_t>((code >> (len - 1 - i)) & 1);
    if (no_adjacent_zeros(x)) support.push_back(std::move(x));
  }
  return support;
}

std::vector<TruthValue> designated_set(int n, std::uint64_t max_support) {
  std::vector<TruthValue> out;
  for (TruthValue& x : build_support_recursive(n, max_support))
    if (is_designated(x)) out.push_back(std::move(x));
  return out;
}

TruthValue neg_op(const TruthValue& x) {
  if (x.empty() || !no_adjacent_zeros(x))
    throw std::invalid_argument("neg_op: malformed truth value " +
                                render_value(x));
  TruthValue out(x.begin() + 1, x.end());
  out.push_back(static_cast<std::uint8_t>(1 - x.back()));
  return out;
}

TruthValue imp_op(const TruthValue& x, const TruthValue& y) {
  if (x.empty() || x.size() != y.size())
    throw std::invalid_argument("imp_op: length mismatch");
  TruthValue out(x.size());
  out[0] = (x[0] == 1 && y[0] == 0) ? 0 : 1;
  for (std::size_t k = 1; k < out.size(); ++k)
    out[k] = static_cast<std::uint8_t>(1 - out[k - 1]);
  return out;
}

std::size_t LogicMatrix::index_of(const TruthValue& x) const {
  auto it = std::lower_bound(values.begin(), values.end(), x);
  if (it == values.end() || *it != x)
    throw std::invalid_argument("value " + render_value(x) +
                                " not in A_" + std::to_string(n));
  return static_cast<std::size_t>(it - values.begin());
}

LogicMatrix build_matrix(int n, std::uint64_t max_support) {
  LogicMatrix m;
  m.n = n;
  m.values = build_support_recursive(n, max_support);
  m.designated.reserve(m.values.size());
  for (const TruthValue& x : m.values) m.designated.push_back(is_designated(x));
  return m;
}

GenericMatrix materialize(const LogicMatrix& m, std::uint64_t max_entries) {
  const std::uint64_t size = m.values.size();
  if (size * size > max_entries)
    throw ResourceLimitError("implication table needs " +
                             std::to_string(size * size) +
                             " entries, limit " + std::to_string(max_entries));
  GenericMatrix g;
  g.n = m.n;
  g.values = m.values;
  for (std::size_t i = 0; i < m.values.size(); ++i)
    if (m.designated[i]) g.designated.push_back(i);
  g.neg_table.reserve(size);
  for (const TruthValue& x : m.values)
    g.neg_table.push_back(m.index_of(neg_op(x)));
  g.imp_table.reserve(size);
  for (const TruthValue& x : m.values) {
    std::vector<std::size_t> row;
    row.reserve(size);
    for (const TruthValue& y : m.values) row.push_back(m.index_of(imp_op(x, y)));
    g.imp_table.push_back(std::move(row));
  }
  return g;
}

std::optional<std::vector<std::size_t>> find_isomorphism(
    const GenericMatrix& a, const GenericMatrix& b, std::size_t max_size) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t s = a.size();
  if (s > max_size)
    throw ResourceLimitError("isomorphism search limited to size " +
                             std::to_string(max_size) + ", got " +
                             std::to_string(s));
  std::vector<bool> des_a(s, false), des_b(s, false);
  for (std::size_t i : a.designated) des_a.at(i) = true;
  for (std::size_t i : b.designated) des_b.at(i) = true;

  std::vector<std::size_t> perm(s);
  for (std::size_t i = 0; i < s; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < s; ++i) {
      if (des_a[i] != des_b[perm[i]] || perm[a.neg_table[i]] != b.neg_table[perm[i]])
        ok = false;
      for (std::size_t j = 0; ok && j < s; ++j)
        if (perm[a.imp_table[i][j]] != b.imp_table[perm[i]][perm[j]]) ok = false;
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::string export_json(const GenericMatrix& m) {
  nlohmann::ordered_json j;
  j["n"] = m.n;
  j["values"] = m.values;
  j["designated"] = m.designated;
  j["neg"] = m.neg_table;
  j["imp"] = m.imp_table;
  return j.dump(2);
}

GenericMatrix import_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("matrix JSON: ") + e.what());
  }
  GenericMatrix m;
  try {
    m.n = j.at("n").get<int>();
    m.values = j.at("values").get<std::vector<TruthValue>>();
    m.designated = j.at("designated").get<std::vector<std::size_t>>();
    m.neg_table = j.at("neg").get<std::vector<std::size_t>>();
    m.imp_table = j.at("imp").get<std::vector<std::vector<std::size_t>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("matrix JSON: ") + e.what());
  }
  const std::size_t s = m.values.size();
  auto check_index = [s](std::size_t i) {
    if (i >= s) throw std::invalid_argument("matrix JSON: index out of range");
  };
  for (const TruthValue& v : m.values)
    for (std::uint8_t bit : v)
      if (bit > 1) throw std::invalid_argument("matrix JSON: non-bit value");
  for (std::size_t i : m.designated) check_index(i);
  if (m.neg_table.size() != s || m.imp_table.size() != s)
    throw std::invalid_argument("matrix JSON: table size mismatch");
  for (std::size_t i : m.neg_table) check_index(i);
  for (const auto& row : m.imp_table) {
    if (row.size() != s)
      throw std::invalid_argument("matrix JSON: table size mismatch");
    for (std::size_t i : row) check_index(i);
  }
  return m;
}

TruthValue eval_matrix(const std::map<std::string, TruthValue>& assignment,
                       const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      auto it = assignment.find(f->atom);
      if (it == assignment.end())
        throw std::out_of_range("unbound atom: " + f->atom);
      return it->second;
    }
    case Formula::Kind::Neg:
      return neg_op(eval_matrix(assignment, f->left));
    case Formula::Kind::Imp:
      return imp_op(eval_matrix(assignment, f->left),
                    eval_matrix(assignment, f->right));
  }
  throw std::logic_error("unreachable");
}

}  // namespace ciu

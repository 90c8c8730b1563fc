#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ciu/bival.hpp"
#include "ciu/consequence.hpp"
#include "ciu/fibword.hpp"
#include "ciu/formula.hpp"
#include "ciu/matrix.hpp"

namespace {

// 0 success/holds, 1 semantic negative, 2 usage/parse, 3 resource limit,
// 4 oracle disagreement
constexpr int kExitHolds = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitDisagree = 4;

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string format_tables(const ciu::GenericMatrix& g) {
  std::size_t width = 2;  // "->"
  for (const auto& v : g.values)
    width = std::max(width, ciu::render_value(v).size());

  std::ostringstream out;
  out << pad("~", width) << " |";
  for (const auto& v : g.values) out << ' ' << pad(ciu::render_value(v), width);
  out << '\n' << pad("", width) << " |";
  for (std::size_t i = 0; i < g.size(); ++i)
    out << ' ' << pad(ciu::render_value(g.values[g.neg_table[i]]), width);
  out << "\n\n";

  out << pad("->", width) << " |";
  for (const auto& v : g.values) out << ' ' << pad(ciu::render_value(v), width);
  out << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << pad(ciu::render_value(g.values[i]), width) << " |";
    for (std::size_t j = 0; j < g.size(); ++j)
      out << ' ' << pad(ciu::render_value(g.values[g.imp_table[i][j]]), width);
    out << '\n';
  }
  return out.str();
}

void print_countermodel(const std::map<std::string, ciu::TruthValue>& cm) {
  std::cout << "countermodel:\n";
  for (const auto& [atom, value] : cm)
    std::cout << atom << " = " << ciu::render_value(value) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ciuciura hierarchy Ciu^n: finite matrices, bivaluations and "
               "consequence checking"};
  app.require_subcommand(1);

  std::uint64_t max_support = ciu::kDefaultMaxSupport;
  std::uint64_t max_evals = ciu::kDefaultMaxEvals;
  app.add_option("--max-support", max_support, "support size guard")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-evals", max_evals, "valuation enumeration guard")
      ->envname("CIU_MAX_EVALS")
      ->check(CLI::PositiveNumber);

  int exit_code = kExitHolds;

  // gen
  auto* gen = app.add_subcommand("gen", "generate and export the matrix M_n");
  int gen_n = 0;
  std::string gen_format = "json", gen_out;
  gen->add_option("n", gen_n, "hierarchy level")->required();
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->callback([&] {
    auto g = ciu::materialize(ciu::build_matrix(gen_n, max_support));
    std::string text = gen_format == "json" ? ciu::export_json(g) + "\n"
                                            : format_tables(g);
    if (gen_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(gen_out, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot write file: " + gen_out);
      out << text;
    }
  });

  // entails
  auto* entails = app.add_subcommand("entails", "decide Gamma |- phi at level n");
  int ent_n = 0;
  std::string ent_sequent, ent_oracle = "matrix";
  entails->add_option("n", ent_n, "hierarchy level")->required();
  entails->add_option("sequent", ent_sequent, "e.g. \"p, ~p |- q\"")->required();
  entails->add_option("--oracle", ent_oracle, "decision route")
      ->check(CLI::IsMember({"matrix", "bival", "both"}));
  entails->callback([&] {
    ciu::Sequent s = ciu::parse_sequent(ent_sequent);
    if (ent_oracle == "both") {
      auto r = ciu::cross_check(ent_n, s, max_evals);
      if (!r.agree) {
        std::cout << "oracles disagree: matrix says "
                  << (r.matrix.holds ? "holds" : "fails") << ", bival says "
                  << (r.bival.holds ? "holds" : "fails") << "\n";
        if (r.matrix.countermodel) print_countermodel(*r.matrix.countermodel);
        if (r.bival.countermodel) print_countermodel(*r.bival.countermodel);
        exit_code = kExitDisagree;
        return;
      }
      std::cout << "oracles agree\n";
      if (r.matrix.holds) {
        std::cout << "holds\n";
      } else {
        print_countermodel(*r.matrix.countermodel);
        exit_code = kExitNegative;
      }
      return;
    }
    auto v = ent_oracle == "matrix" ? ciu::entails_matrix(ent_n, s, max_evals)
                                    : ciu::entails_bival(ent_n, s, max_evals);
    if (v.holds) {
      std::cout << "holds\n";
    } else {
      print_countermodel(*v.countermodel);
      exit_code = kExitNegative;
    }
  });

  // taut
  auto* taut = app.add_subcommand("taut", "tautology check at level n");
  int taut_n = 0;
  std::string taut_formula;
  taut->add_option("n", taut_n, "hierarchy level")->required();
  taut->add_option("formula", taut_formula, "formula text")->required();
  taut->callback([&] {
    auto v = ciu::is_tautology(taut_n, ciu::parse(taut_formula), max_evals);
    if (v.holds) {
      std::cout << "tautology\n";
    } else {
      print_countermodel(*v.countermodel);
      exit_code = kExitNegative;
    }
  });

  // report
  auto* report = app.add_subcommand(
      "report", "cardinality and paraconsistency table for 0 <= n <= n_max");
  int report_n_max = 0;
  report->add_option("n_max", report_n_max, "top hierarchy level")->required();
  report->callback([&] {
    std::vector<std::uint64_t> support_sizes, designated_sizes;
    auto rows = ciu::paraconsistency_report(report_n_max, max_evals);
    std::cout << "n   |A_n|     Fb(n+3)   |D_n|     explosion  DNE\n";
    bool ok = true;
    for (const auto& row : rows) {
      auto support = ciu::build_support_recursive(row.n, max_support);
      auto designated = ciu::designated_set(row.n, max_support);
      support_sizes.push_back(support.size());
      designated_sizes.push_back(designated.size());
      std::uint64_t expected = ciu::fib(row.n + 3);
      ok = ok && support.size() == expected;
      bool classical = row.n == 0;
      ok = ok && row.explosion_holds == classical && row.dne_holds == classical;
      std::cout << pad(std::to_string(row.n), 3) << ' '
                << pad(std::to_string(support.size()), 9) << ' '
                << pad(std::to_string(expected), 9) << ' '
                << pad(std::to_string(designated.size()), 9) << ' '
                << pad(row.explosion_holds ? "holds" : "fails", 10) << ' '
                << (row.dne_holds ? "holds" : "fails") << "\n";
    }
    for (std::size_t i = 0; i + 1 < support_sizes.size(); ++i)
      ok = ok && designated_sizes[i + 1] == support_sizes[i];
    if (!ok) exit_code = kExitNegative;
  });

  // iso
  auto* iso = app.add_subcommand("iso", "brute-force matrix isomorphism check");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a, "matrix JSON file")->required();
  iso->add_option("b", iso_b, "matrix JSON file")->required();
  iso->callback([&] {
    auto a = ciu::import_json(read_file(iso_a));
    auto b = ciu::import_json(read_file(iso_b));
    auto bijection = ciu::find_isomorphism(a, b);
    if (!bijection) {
      std::cout << "not isomorphic\n";
      exit_code = kExitNegative;
      return;
    }
    std::cout << "isomorphic\n";
    for (std::size_t i = 0; i < bijection->size(); ++i)
      std::cout << i << " -> " << (*bijection)[i] << "\n";
  });

  // fib / fib-word
  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci number Fb(k)");
  int fib_k = 0;
  fib_cmd->add_option("k", fib_k, "index, k >= 1")->required();
  fib_cmd->callback([&] { std::cout << ciu::fib(fib_k) << "\n"; });

  auto* word_cmd = app.add_subcommand("fib-word", "binary expansion word W(k)");
  int word_k = 0;
  word_cmd->add_option("k", word_k, "index, k >= 1")->required();
  word_cmd->callback([&] { std::cout << ciu::expansion(word_k) << "\n"; });

  // equiv-check
  auto* equiv = app.add_subcommand(
      "equiv-check", "cross-check matrix vs bivaluation verdicts on random sequents");
  int eq_n = 0, eq_atoms = 2, eq_depth = 6, eq_samples = 100;
  std::uint64_t eq_seed = 0;
  equiv->add_option("n", eq_n, "hierarchy level")->required();
  equiv->add_option("--atoms", eq_atoms, "number of distinct atoms")
      ->check(CLI::Range(1, 6));
  equiv->add_option("--depth", eq_depth, "max formula depth");
  equiv->add_option("--samples", eq_samples, "number of random sequents");
  equiv->add_option("--seed", eq_seed, "RNG seed");
  equiv->callback([&] {
    static const std::vector<std::string> names = {"p", "q", "r", "s", "t", "u"};
    std::vector<std::string> atoms(names.begin(), names.begin() + eq_atoms);
    std::mt19937_64 rng(eq_seed);
    for (int i = 0; i < eq_samples; ++i) {
      ciu::Sequent s = ciu::random_sequent(rng, atoms, eq_depth, 2);
      auto r = ciu::cross_check(eq_n, s, max_evals);
      if (!r.agree) {
        std::cout << "seed=" << eq_seed << " disagreement on sample " << i
                  << ": ";
        for (std::size_t j = 0; j < s.premises.size(); ++j)
          std::cout << (j ? ", " : "") << ciu::render(s.premises[j]);
        std::cout << " |- " << ciu::render(s.conclusion) << "\n";
        exit_code = kExitDisagree;
        return;
      }
    }
    std::cout << "seed=" << eq_seed << " checked " << eq_samples
              << " sequents at n=" << eq_n << ": oracles agree\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const ciu::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ciu::ResourceLimitError& e) {
    std::cerr << e.what() << "\n";
    return kExitResource;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}

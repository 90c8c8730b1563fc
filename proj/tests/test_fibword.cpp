#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ciu/fibword.hpp"
#include "ciu/matrix.hpp"

using namespace ciu;

TEST_CASE("fib values") {
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(7) == 13);
  CHECK(fib(13) == 233);
  CHECK(fib(43) == 433494437);
  CHECK_THROWS_AS(fib(0), std::domain_error);
  CHECK_THROWS_AS(fib(-3), std::domain_error);
  CHECK_THROWS_AS(fib(200), ResourceLimitError);
}

TEST_CASE("sigma substitution") {
  CHECK(sigma("0") == "1");
  CHECK(sigma("1") == "10");
  CHECK(sigma("101") == "10110");
  CHECK(sigma("") == "");
  CHECK_THROWS_AS(sigma("102"), std::invalid_argument);
}

TEST_CASE("expansion words") {
  CHECK(expansion(1) == "0");
  CHECK(expansion(2) == "1");
  CHECK(expansion(3) == "10");
  CHECK(expansion(4) == "101");
  CHECK(expansion(5) == "10110");
  CHECK_THROWS_AS(expansion(0), std::domain_error);
  CHECK_THROWS_AS(expansion(31), ResourceLimitError);
  CHECK(expansion(31, 31).size() == fib(31));
}

TEST_CASE("expansion length equals fib") {
  for (int k = 1; k <= 25; ++k) CHECK(expansion(k, 25).size() == fib(k));
}

TEST_CASE("branch_sequences fixtures") {
  CHECK(branch_sequences(0) ==
        std::vector<TruthValue>{{1}, {0}});
  CHECK(branch_sequences(1) ==
        std::vector<TruthValue>{{1, 1}, {1, 0}, {0, 1}});
  // b_1 ... b_5 in the depth-first order
  CHECK(branch_sequences(2) ==
        std::vector<TruthValue>{
            {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 1, 0}});
}

TEST_CASE("branch_sequences count and invariant") {
  for (int n = 0; n <= 20; ++n) {
    auto branches = branch_sequences(n);
    CHECK(branches.size() == fib(n + 3));
    for (const auto& b : branches) CHECK(no_adjacent_zeros(b));
  }
}

TEST_CASE("branch set equals the support constructions") {
  for (int n = 0; n <= 15; ++n) {
    auto branches = branch_sequences(n);
    std::set<TruthValue> branch_set(branches.begin(), branches.end());
    auto direct = build_support_direct(n);
    CHECK(branch_set == std::set<TruthValue>(direct.begin(), direct.end()));
  }
}

TEST_CASE("branch guard") {
  CHECK_THROWS_AS(branch_sequences(40), ResourceLimitError);
  CHECK_THROWS_AS(branch_sequences(-1), std::domain_error);
}

#include "doctest.h"

#include <map>
#include <string>

#include "cpbase/characters.hpp"

using namespace cpb;

TEST_CASE("hook length degrees") {
  CHECK(hook_degree(Partition{6}) == 1);
  CHECK(hook_degree(Partition{1, 1, 1, 1}) == 1);
  CHECK(hook_degree(Partition{2, 1}) == 2);
  CHECK(hook_degree(Partition{2, 2}) == 2);
  CHECK(hook_degree(Partition{3, 1}) == 3);
  CHECK(hook_degree(Partition{3, 2}) == 5);
  CHECK(hook_degree(Partition{3, 2, 1}) == 16);
  CHECK(hook_degree(Partition{19, 1}) == 19);        // (m-1,1) at m=20
  CHECK(hook_degree(Partition{18, 2}) == 170);       // (m-2,2) at m=20: m(m-3)/2
  CHECK(hook_degree(Partition{12, 3}) == 350);
}

TEST_CASE("character values on small hand-checked tables") {
  // S_3, classes (1,1,1), (2,1), (3).
  const std::map<std::string, std::vector<long>> s3 = {
      {"(3)", {1, 1, 1}}, {"(2,1)", {2, 0, -1}}, {"(1,1,1)", {1, -1, 1}}};
  const std::vector<Partition> classes3 = {Partition{1, 1, 1}, Partition{2, 1}, Partition{3}};
  for (const auto& [name, vals] : s3)
    for (std::size_t c = 0; c < classes3.size(); ++c) {
      Partition lambda;
      for (const Partition& p : partitions(3))
        if (p.to_string() == name) lambda = p;
      CHECK(character_value(lambda, classes3[c]) == vals[c]);
    }

  // S_4 classes in the order (1^4), (2,1,1), (2,2), (3,1), (4).
  const std::vector<Partition> classes4 = {Partition{1, 1, 1, 1}, Partition{2, 1, 1},
                                           Partition{2, 2}, Partition{3, 1}, Partition{4}};
  const std::map<std::string, std::vector<long>> s4 = {
      {"(4)", {1, 1, 1, 1, 1}},
      {"(3,1)", {3, 1, -1, 0, -1}},
      {"(2,2)", {2, 0, 2, -1, 0}},
      {"(2,1,1)", {3, -1, -1, 0, 1}},
      {"(1,1,1,1)", {1, -1, 1, 1, -1}}};
  for (const auto& [name, vals] : s4)
    for (std::size_t c = 0; c < classes4.size(); ++c) {
      Partition lambda;
      for (const Partition& p : partitions(4))
        if (p.to_string() == name) lambda = p;
      CHECK_MESSAGE(character_value(lambda, classes4[c]) == vals[c], name, " at class ", c);
    }
}

TEST_CASE("sign character and hook degrees via the recursion") {
  // chi^{(1^m)} on an even class is 1.
  std::vector<unsigned> tc = {3, 1, 1};  // (3,1,1) in S_5
  CHECK(character_value(Partition{1, 1, 1, 1, 1}, Partition(tc)) == 1);
  // Value at the identity class equals the hook degree, for every partition.
  for (unsigned m = 1; m <= 10; ++m) {
    std::vector<unsigned> ones(m, 1);
    CharacterEvaluator ev{Partition(ones)};
    for (const Partition& lambda : partitions(m)) CHECK(ev.value(lambda) == hook_degree(lambda));
  }
}

TEST_CASE("duality twists by the class sign") {
  for (unsigned m = 3; m <= 8; ++m)
    for (const Partition& rho : partitions(m)) {
      CharacterEvaluator ev{rho};
      const int sign = cycle_type_sign(rho);
      for (const Partition& lambda : partitions(m))
        CHECK(character_value(dual(lambda), rho) == sign * ev.value(lambda));
    }
}

TEST_CASE("table values at the 3-cycle class") {
  CHECK(character_value(Partition{19, 1}, Partition{3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}) == 16);
  CHECK(character_value(Partition{18, 2}, Partition{3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}) == 119);
}

TEST_CASE("row orthogonality of the full table") {
  for (unsigned m = 2; m <= 7; ++m) {
    CharTable t = char_table(m);
    const std::size_t k = t.index.size();
    for (std::size_t r1 = 0; r1 < k; ++r1)
      for (std::size_t r2 = r1; r2 < k; ++r2) {
        Int dot = 0;
        for (std::size_t c = 0; c < k; ++c) dot += t.sizes[c] * t.values[r1][c] * t.values[r2][c];
        CHECK(dot == (r1 == r2 ? factorial(m) : Int(0)));
      }
  }
}

TEST_CASE("degrees square-sum to the group order") {
  for (unsigned m = 1; m <= 12; ++m) {
    Int sum = 0;
    for (const Partition& lambda : partitions(m)) {
      Int d = hook_degree(lambda);
      sum += d * d;
    }
    CHECK(sum == factorial(m));
  }
}

TEST_CASE("order mismatch is rejected") {
  CHECK_THROWS_AS((void)character_value(Partition{3, 1}, Partition{3}), OrderMismatch);
}

TEST_CASE("closed-form rows") {
  auto rows15 = shallow_character_rows(15);
  REQUIRE(rows15.size() == 7);
  for (const auto& row : rows15) {
    CHECK(row.degree == row.degree_closed);
    CHECK(row.three_cycle == row.three_cycle_closed);
  }
  CHECK(rows15[0].degree == 1);
  CHECK(rows15[0].three_cycle == 1);
  CHECK(rows15[3].lambda == Partition{13, 1, 1});
  CHECK(rows15[3].degree == 91);   // (m-1)(m-2)/2 at m=15
  CHECK(rows15[5].lambda == Partition{12, 2, 1});
  CHECK(rows15[5].three_cycle == 319);  // (m-3)(m-5)(m-7)/3 - 1 at m=15

  auto rows20 = shallow_character_rows(20);
  CHECK(rows20[1].degree == 19);
  CHECK(rows20[1].three_cycle == 16);

  CHECK_THROWS_AS((void)shallow_character_rows(14), OutOfRange);
}

TEST_CASE("three-cycle gap at m=4, by hand") {
  // Partitions (3,1), (2,2), (2,1,1); degrees 3, 2, 3; values at (3,1):
  // 0, -1, 0. Scaled slack (m-1)(deg-val) - deg: 6, 7, 6 — all nonnegative,
  // so zero violations, and min slack 6/3 = 2.
  auto rep = verify_three_cycle_gap(4);
  CHECK(rep.checked == 3);
  CHECK(rep.violations.empty());
  CHECK(rep.min_slack == Rational(2));
  CHECK(rep.m == 4);
}

TEST_CASE("three-cycle gap bounds") {
  CHECK_THROWS_AS((void)verify_three_cycle_gap(2), OutOfRange);
  CHECK_THROWS_AS((void)verify_three_cycle_gap(23), OutOfRange);
  auto rep = verify_three_cycle_gap(15);
  CHECK(rep.violations.empty());
  CHECK(rep.checked == partitions(15).size() - 2);
}

TEST_CASE("character ratios and their maximum") {
  CHECK(mr_via_table(3) == Rational(1, 2));
  CHECK(mr_via_table(4) == Rational(1, 2));
  CHECK(mr_via_table(5) == Rational(1, 2));
  for (unsigned m = 3; m <= 9; ++m) CHECK(mr_via_table(m) < 1);
  CHECK_THROWS_AS((void)mr_via_table(13), OutOfRange);

  CHECK_FALSE(ratio_at(Partition{6}, Partition{3, 1, 1, 1}).has_value());       // linear
  CHECK_FALSE(ratio_at(Partition{1, 1, 1}, Partition{2, 1}).has_value());       // linear (sign)
  CHECK(ratio_at(Partition{2, 1}, Partition{3}) == Rational(1, 2));             // |-1| / 2
  CHECK_FALSE(ratio_at(Partition{2, 1}, Partition{1, 1, 1}).has_value());       // identity class
}

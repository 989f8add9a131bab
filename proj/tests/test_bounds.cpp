#include <catch2/catch_amalgamated.hpp>

#include <cmreg/cmreg.hpp>

using namespace cmreg;

TEST_CASE("bound polynomial F") {
  RatPoly x = RatPoly::x();
  CHECK(bound_polynomial_F(1) == x);
  CHECK(bound_polynomial_F(2) == x * x + RatPoly::constant(2) * x);
  CHECK(eval_bound(bound_polynomial_F(2), 1) == 3);
  CHECK(eval_bound(bound_polynomial_F(3), 1) == 13);
  CHECK(eval_bound(bound_polynomial_F(1), 5) == 5);
  CHECK(eval_bound(bound_polynomial_F(2), 0) == 0);
  CHECK(eval_bound(bound_polynomial_F(3), 0) == 0);
  CHECK_THROWS_AS(bound_polynomial_F(0), error);
}

TEST_CASE("bound polynomial Q") {
  RatPoly x = RatPoly::x();
  CHECK(bound_polynomial_Q(1) == x - RatPoly::constant(1));
  CHECK(bound_polynomial_Q(2) == x * x);
  CHECK(eval_bound(bound_polynomial_Q(3), 1) == 4);
  CHECK(eval_bound(bound_polynomial_Q(3), 2) == 29);
  CHECK(eval_bound(bound_polynomial_Q(1), 4) == 3);
  CHECK_THROWS_AS(bound_polynomial_Q(0), error);
}

TEST_CASE("kleiman bounds") {
  auto [r22, e22] = kleiman_bounds(2, Int(2));
  CHECK(r22 == 3);
  CHECK(e22 == 4);
  auto [r21, e21] = kleiman_bounds(2, Int(1));
  CHECK(r21 == 0);
  CHECK(e21 == 2);
  auto [r32, e32] = kleiman_bounds(3, Int(2));
  CHECK(r32 == 13);
  CHECK(e32 == 6);
}

TEST_CASE("section cohomology decay check") {
  // dims allowed: h1(j) <= t * C(j + d - 1, d - 1)
  CHECK(!lemma32_check({Int(2), Int(1), Int(0)}, Int(2), 2).has_value());
  auto bad = lemma32_check({Int(2), Int(9)}, Int(2), 2);
  REQUIRE(bad.has_value());
  CHECK(*bad == 1); // 9 > 2 * C(2, 1)
}

TEST_CASE("parameter hilbert function cap") {
  // h(n) <= l*C(n + d - 2, d - 1) + C(n + d - 2, d - 2)
  std::vector<Int> fine{1, 3, 5, 7};
  CHECK(!parameter_hf_bound_check(fine, 2, Int(2)).has_value());
  std::vector<Int> toobig{1, 4};
  auto bad = parameter_hf_bound_check(toobig, 2, Int(2));
  REQUIRE(bad.has_value());
  CHECK(*bad == 1); // 4 > 2*C(1,1) + C(1,0) = 3
}

TEST_CASE("local regularity bound from a section table") {
  // m + sum of the first m+1 section dimensions
  CHECK(local_mumford_bound({Int(1), Int(2), Int(1)}, 2) == 6);
  CHECK(local_mumford_bound({Int(1), Int(0)}, 0) == 1);
  CHECK_THROWS_AS(local_mumford_bound({Int(1)}, 3), error);
}

TEST_CASE("tangent cone and abhyankar bounds") {
  CHECK(cm_tangent_cone_bound(2, Int(3)) == 9);
  CHECK(cm_tangent_cone_bound(1, Int(4)) == 3);
  CHECK(abhyankar_bound(3, Int(5)) == 7);
  CHECK(abhyankar_bound(1, Int(1)) == 1);
  CHECK_THROWS_AS(cm_tangent_cone_bound(0, Int(1)), error);
  CHECK_THROWS_AS(abhyankar_bound(1, Int(0)), error);
}

TEST_CASE("bound growth is monotone in dimension") {
  for (long e = 1; e <= 4; ++e) {
    Int prev = 0;
    for (int d = 1; d <= 5; ++d) {
      Int cur = eval_bound(bound_polynomial_F(d), e);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("abhyankar never exceeds the kleiman embedding bound") {
  for (int d = 1; d <= 4; ++d)
    for (long e = 1; e <= 6; ++e)
      CHECK(abhyankar_bound(d, Int(e)) <= kleiman_bounds(d, Int(e)).second);
}

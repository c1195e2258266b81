#include "coxk3/json_io.hpp"

#include "coxk3/builtins.hpp"

#include <doctest.h>

#include <random>

using namespace coxk3;
using json = nlohmann::json;

TEST_CASE("matrices serialize as decimal strings") {
  IMat m = make_mat({{1, -2}, {0, 7}});
  json j = io::to_json(m);
  CHECK(j[0][0] == "1");
  CHECK(j[0][1] == "-2");
  CHECK(mat_eq(io::mat_from_json(j), m));
  // numbers are accepted on input as well
  CHECK(mat_eq(io::mat_from_json(json::parse("[[1,-2],[0,7]]")), m));
  CHECK_THROWS_AS(io::mat_from_json(json::parse("[[1],[2,3]]")), Error);
  CHECK_THROWS_AS(io::mat_from_json(json::parse("[[\"x\"]]")), Error);
}

TEST_CASE("round trips") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  SUBCASE("big integers survive") {
    Int big("123456789012345678901234567890");
    CHECK(io::int_from_json(io::to_json(big)) == big);
    CHECK(io::int_from_json(io::to_json(Int(-big))) == -big);
  }
  SUBCASE("random vectors and matrices") {
    for (int t = 0; t < 20; ++t) {
      IVec v(3);
      for (int i = 0; i < 3; ++i) v(i) = dist(rng);
      CHECK(vec_eq(io::vec_from_json(io::to_json(v)), v));
    }
  }
  SUBCASE("fans") {
    for (const char* name : {"builtin:F0", "builtin:F4", "builtin:Bl2F4", "builtin:Sigma0"}) {
      toric::Fan f = builtins::fan_by_name(name);
      toric::Fan back = io::fan_from_json(io::to_json(f));
      REQUIRE(back.rays.size() == f.rays.size());
      for (size_t i = 0; i < f.rays.size(); ++i) CHECK(vec_eq(back.rays[i], f.rays[i]));
      CHECK(back.max_cones == f.max_cones);
    }
  }
  SUBCASE("presentations with both relation kinds") {
    graded::GradedPresentation p = builtins::base_presentation("Bl3F4");
    p.relations.emplace_back(graded::GenericRelation{make_vec({2, 4, 0, 4, 2}), "T9^2 - f"});
    graded::GradedPresentation back = io::presentation_from_json(io::to_json(p));
    CHECK(mat_eq(back.q, p.q));
    REQUIRE(back.relations.size() == 2);
    CHECK(poly_eq(std::get<Polynomial>(back.relations[0]), std::get<Polynomial>(p.relations[0])));
    CHECK(vec_eq(std::get<graded::GenericRelation>(back.relations[1]).degree,
                 make_vec({2, 4, 0, 4, 2})));
  }
}

TEST_CASE("polynomial parser") {
  Polynomial p = parse_polynomial("T2*T4 + T3*T6 + T7*T8", 8);
  CHECK(p.terms.size() == 3);
  CHECK(to_string(parse_polynomial(to_string(p), 8)) == to_string(p));

  Polynomial q = parse_polynomial("-3*T1^2*T3 + 5 - T2");
  CHECK(q.nvars == 3);
  CHECK(q.terms.size() == 3);

  Polynomial cancel = parse_polynomial("T1 - T1", 1);
  CHECK(cancel.zero());

  CHECK_THROWS_AS(parse_polynomial("", 2), Error);
  CHECK_THROWS_AS(parse_polynomial("T0", 2), Error);
  CHECK_THROWS_AS(parse_polynomial("T9", 2), Error);
  CHECK_THROWS_AS(parse_polynomial("T1 +* T2", 2), Error);
}

TEST_CASE("text helpers") {
  IMat m = io::parse_matrix_text("0 3; 3 0");
  CHECK(mat_eq(m, make_mat({{0, 3}, {3, 0}})));
  IVec v = io::parse_vector_text("2,2");
  CHECK(vec_eq(v, make_vec({2, 2})));
  CHECK_THROWS_AS(io::parse_matrix_text(""), Error);
}

TEST_CASE("cone serialization") {
  cones::Cone c = cones::positive_hull({make_vec({1, 0}), make_vec({-1, 0}), make_vec({0, 1})}, 2);
  json j = io::to_json(c);
  CHECK(j["pointed"] == false);
  CHECK(j.contains("lineality"));
  cones::Cone p = cones::positive_hull({make_vec({2, 0}), make_vec({1, 1})}, 2);
  json jp = io::to_json(p);
  CHECK(jp["pointed"] == true);
  CHECK(jp["rays"].size() == 2);
}

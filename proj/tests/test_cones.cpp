#include "coxk3/cones.hpp"

#include <doctest.h>

#include <random>

using namespace coxk3;
using namespace coxk3::cones;

namespace {

Cone hull2(std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<IVec> v;
  for (const auto& g : gens) v.push_back(make_vec(g));
  return positive_hull(v, static_cast<int>(gens.begin()->size()));
}

std::vector<IVec> random_rays(std::mt19937& rng, int dim, int count) {
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<IVec> out;
  while (static_cast<int>(out.size()) < count) {
    IVec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = dist(rng);
    if (!is_zero(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("positive hull drops interior generators and primitivizes") {
  Cone c = hull2({{1, 0}, {0, 1}, {1, 1}});
  REQUIRE(c.rays.size() == 2);
  CHECK(vec_eq(c.rays[0], make_vec({0, 1})));
  CHECK(vec_eq(c.rays[1], make_vec({1, 0})));
  CHECK(c.pointed());

  Cone p = hull2({{2, 2}});
  REQUIRE(p.rays.size() == 1);
  CHECK(vec_eq(p.rays[0], make_vec({1, 1})));
}

TEST_CASE("lineality detection") {
  Cone half = hull2({{1, 0}, {-1, 0}, {0, 1}});
  CHECK_FALSE(half.pointed());
  REQUIRE(half.lineality.size() == 1);
  CHECK(vec_eq(half.lineality[0], make_vec({1, 0})));
  CHECK(contains(half, make_vec({-7, 2})));
  CHECK_FALSE(contains(half, make_vec({0, -1})));

  Cone plane = hull2({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  CHECK(plane.lineality.size() == 2);
  CHECK(plane.rays.empty());
}

TEST_CASE("hull is idempotent") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 2 + trial % 3;
    Cone c = positive_hull(random_rays(rng, dim, 5), dim);
    Cone c2 = positive_hull(generators(c), dim);
    CHECK(equal(c, c2));
  }
}

TEST_CASE("hull dimension cap") {
  std::vector<IVec> v{IVec(IVec::Zero(6))};
  v[0](0) = 1;
  CHECK_THROWS_AS(positive_hull(v, 6), Error);
}

TEST_CASE("intersection fixtures") {
  Cone quadrant = hull2({{1, 0}, {0, 1}});
  Cone wedge = hull2({{1, 1}, {1, -1}});
  Cone got = intersect(quadrant, wedge);
  CHECK(equal(got, hull2({{1, 0}, {1, 1}})));

  CHECK(equal(intersect(quadrant, quadrant), quadrant));

  Cone zero = intersect(hull2({{1, 0}}), hull2({{0, 1}}));
  CHECK(zero.trivial());
}

TEST_CASE("intersection is commutative and associative") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    int dim = 2 + trial % 2;
    Cone a = positive_hull(random_rays(rng, dim, 4), dim);
    Cone b = positive_hull(random_rays(rng, dim, 4), dim);
    Cone c = positive_hull(random_rays(rng, dim, 4), dim);
    CHECK(equal(intersect(a, b), intersect(b, a)));
    CHECK(equal(intersect(intersect(a, b), c), intersect(a, intersect(b, c))));
  }
}

TEST_CASE("moving cone") {
  SUBCASE("doubled product degrees give the full quadrant") {
    std::vector<IVec> degs = {make_vec({1, 0}), make_vec({0, 1}), make_vec({1, 0}),
                              make_vec({0, 1})};
    CHECK(equal(moving_cone(degs, 2), hull2({{1, 0}, {0, 1}})));
  }
  SUBCASE("a single simple degree collapses the intersection") {
    std::vector<IVec> degs = {make_vec({1, 0}), make_vec({1, 0}), make_vec({0, 1})};
    CHECK(equal(moving_cone(degs, 2), hull2({{1, 0}})));
  }
  SUBCASE("one degree gives the zero cone") {
    CHECK(moving_cone({make_vec({1, 0})}, 2).trivial());
  }
  SUBCASE("always inside the hull") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 15; ++trial) {
      auto degs = random_rays(rng, 2, 4);
      CHECK(subset_of(moving_cone(degs, 2), positive_hull(degs, 2)));
    }
  }
}

TEST_CASE("dual cone under an intersection form") {
  Cone eff = hull2({{1, 0}, {0, 1}});
  SUBCASE("mixed square case") {
    for (long k = 3; k <= 8; ++k) {
      IMat g(2, 2);
      g << Int(-2), Int(k), Int(k), Int(0);
      Cone nef = dual_cone_under_form(eff, intlin::GramForm(g));
      CHECK(equal(nef, positive_hull({primitive(make_vec({k, 2})), make_vec({0, 1})}, 2)));
    }
  }
  SUBCASE("two negative squares") {
    for (long k = 3; k <= 8; ++k) {
      IMat g(2, 2);
      g << Int(-2), Int(k), Int(k), Int(-2);
      Cone nef = dual_cone_under_form(eff, intlin::GramForm(g));
      CHECK(equal(nef,
                  positive_hull({primitive(make_vec({k, 2})), primitive(make_vec({2, k}))}, 2)));
    }
  }
  SUBCASE("hyperbolic case is self-dual") {
    IMat g(2, 2);
    g << Int(0), Int(3), Int(3), Int(0);
    CHECK(equal(dual_cone_under_form(eff, intlin::GramForm(g)), eff));
  }
  SUBCASE("degenerate form rejected") {
    CHECK_THROWS_AS(dual_cone_under_form(eff, intlin::GramForm(make_mat({{2, 0}, {0, 0}}))),
                    Error);
  }
  SUBCASE("applying the dual twice returns the cone") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> dist(-4, 4);
    int done = 0;
    while (done < 20) {
      IMat g(2, 2);
      g(0, 0) = 2 * dist(rng);
      g(1, 1) = 2 * dist(rng);
      g(0, 1) = dist(rng);
      g(1, 0) = g(0, 1);
      if (det(g) == 0) continue;
      Cone c = positive_hull(random_rays(rng, 2, 3), 2);
      if (c.trivial() || !c.pointed()) continue;
      ++done;
      intlin::GramForm form(g, g(0, 0) % 2 == 0 && g(1, 1) % 2 == 0);
      Cone back = dual_cone_under_form(dual_cone_under_form(c, form), form);
      CHECK(equal(back, c));
    }
  }
}

TEST_CASE("intersection handles lineality") {
  Cone upper = hull2({{1, 0}, {-1, 0}, {0, 1}});
  Cone right = hull2({{0, 1}, {0, -1}, {1, 0}});
  Cone got = intersect(upper, right);
  CHECK(got.pointed());
  CHECK(equal(got, hull2({{1, 0}, {0, 1}})));
  // a halfplane meets itself in itself
  CHECK(equal(intersect(upper, upper), upper));
}

TEST_CASE("the moving cone of the blown-up surface contains the chosen weight") {
  // the GIT weight used to present the two-point blow-up lies in the moving
  // cone of its degree columns
  std::vector<IVec> degrees = {make_vec({1, 0, 0, 0}), make_vec({0, 1, 0, 0}),
                               make_vec({0, 0, 1, 0}), make_vec({0, 0, 0, 1}),
                               make_vec({1, 3, 1, 2}), make_vec({0, 1, -1, 1})};
  Cone mov = moving_cone(degrees, 4);
  CHECK_FALSE(mov.trivial());
  CHECK(contains(mov, make_vec({3, 11, 2, 10})));
  CHECK(subset_of(mov, positive_hull(degrees, 4)));
}

TEST_CASE("every output ray is primitive") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    int dim = 2 + trial % 3;
    Cone c = positive_hull(random_rays(rng, dim, 5), dim);
    for (const IVec& r : c.rays) CHECK(content(r) == 1);
    for (const IVec& l : c.lineality) CHECK(content(l) == 1);
  }
}

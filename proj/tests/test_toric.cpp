#include "coxk3/toric.hpp"

#include "coxk3/builtins.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace coxk3;
using namespace coxk3::toric;

namespace {

// match rays of b to rays of a; returns the permutation or throws
std::vector<int> ray_permutation(const Fan& a, const Fan& b) {
  std::vector<int> perm;
  for (const IVec& r : a.rays) {
    int found = -1;
    for (size_t j = 0; j < b.rays.size(); ++j)
      if (vec_eq(r, b.rays[j])) found = static_cast<int>(j);
    REQUIRE(found >= 0);
    perm.push_back(found);
  }
  return perm;
}

}  // namespace

TEST_CASE("fan validation") {
  Fan bad;
  bad.lattice_rank = 2;
  bad.rays = {make_vec({2, 0}), make_vec({0, 1})};
  bad.max_cones = {{0, 1}};
  CHECK_THROWS_AS(validate(bad), Error);  // non-primitive ray

  Fan nospan;
  nospan.lattice_rank = 2;
  nospan.rays = {make_vec({1, 0}), make_vec({-1, 0})};
  nospan.max_cones = {{0}, {1}};
  CHECK_THROWS_AS(validate(nospan), Error);  // rays span a line only

  CHECK_NOTHROW(validate(builtins::p1xp1()));
  CHECK_NOTHROW(validate(builtins::sigma0()));
  CHECK(complete_2d(builtins::p1xp1()));
  CHECK(complete_2d(builtins::hirzebruch(4)));
  CHECK(complete_2d(builtins::bl2_f4()));

  Fan gap;  // one max cone missing: not complete
  gap.lattice_rank = 2;
  gap.rays = {make_vec({1, 0}), make_vec({0, 1}), make_vec({-1, 0}), make_vec({0, -1})};
  gap.max_cones = {{0, 1}, {1, 2}, {2, 3}};
  CHECK_FALSE(complete_2d(gap));
}

TEST_CASE("cox construction") {
  SUBCASE("product of two lines") {
    auto pres = cox_construction(builtins::p1xp1());
    CHECK(pres.variables.size() == 4);
    CHECK(intlin::unimodular_row_equivalent(pres.q, make_mat({{1, 0, 1, 0}, {0, 1, 0, 1}})));
  }
  SUBCASE("fourth Hirzebruch surface") {
    auto pres = cox_construction(builtins::hirzebruch(4));
    CHECK(intlin::unimodular_row_equivalent(pres.q, make_mat({{0, 1, 0, 1}, {1, 0, 1, 4}})));
  }
  SUBCASE("two-point blow-up of the fourth Hirzebruch surface") {
    auto pres = cox_construction(builtins::bl2_f4());
    CHECK(intlin::unimodular_row_equivalent(pres.q, builtins::published_matrix("bl2f4")));
  }
  SUBCASE("the Gale dual property holds on every builtin fan") {
    for (const char* name : {"builtin:P2", "builtin:F0", "builtin:F4", "builtin:Bl2F4",
                             "builtin:Sigma0", "builtin:F1"}) {
      auto pres = cox_construction(builtins::fan_by_name(name));
      IMat z = pres.q * pres.p.transpose();
      for (Eigen::Index i = 0; i < z.rows(); ++i)
        for (Eigen::Index j = 0; j < z.cols(); ++j) CHECK(z(i, j) == 0);
      CHECK(intlin::is_surjective_lattice_map(pres.q));
    }
  }
}

TEST_CASE("stellar subdivision") {
  SUBCASE("one blow-up of the product surface") {
    Fan f = stellar_subdivide(builtins::p1xp1(), {0, 1});
    CHECK(f.rays.size() == 5);
    CHECK(vec_eq(f.rays.back(), make_vec({1, 1})));
    CHECK(complete_2d(f));
  }
  SUBCASE("two blow-ups reach the six-ray fan") {
    Fan f4 = builtins::hirzebruch(4);
    // zero section is the ray (0,-1): blow up its two fixed points
    Fan once = stellar_subdivide(f4, {2, 3});
    Fan twice = stellar_subdivide(once, {3, 0});
    CHECK(twice.rays.size() == 6);
    CHECK(complete_2d(twice));
    Fan target = builtins::bl2_f4();
    std::vector<int> perm = ray_permutation(target, twice);
    // degree matrices agree after matching the ray orders
    IMat q1 = cox_construction(twice).q;
    IMat q2 = cox_construction(target).q;
    IMat q1_perm(q1.rows(), q1.cols());
    for (Eigen::Index j = 0; j < q1.cols(); ++j)
      q1_perm.col(j) = q1.col(perm[static_cast<size_t>(j)]);
    CHECK(intlin::unimodular_row_equivalent(q1_perm, q2));
  }
  SUBCASE("ambient three-dimensional fan") {
    Fan s1 = stellar_subdivide(builtins::sigma0(), {4, 6});
    CHECK(s1.rays.size() == 8);
    CHECK(s1.max_cones.size() == 12);
    CHECK(vec_eq(s1.rays.back(), make_vec({0, 1, 0})));
    // support is unchanged: the two replaced cones cover the original one
    std::set<std::set<int>> cones;
    for (const auto& c : s1.max_cones) cones.insert(std::set<int>(c.begin(), c.end()));
    CHECK(cones.count({3, 4, 7}));
    CHECK(cones.count({3, 6, 7}));
    CHECK(cones.count({4, 5, 7}));
    CHECK(cones.count({5, 6, 7}));
    CHECK_FALSE(cones.count({3, 4, 6}));
  }
  SUBCASE("error paths") {
    CHECK_THROWS_AS(stellar_subdivide(builtins::p1xp1(), {0, 2}), Error);  // not a cone
    Fan f = builtins::p1xp1();
    CHECK_THROWS_AS(stellar_subdivide(stellar_subdivide(f, {0, 1}), {0, 1}), Error);

    Fan skew;  // ray sum (2,2) is not primitive
    skew.lattice_rank = 2;
    skew.rays = {make_vec({1, 0}), make_vec({1, 2}), make_vec({-1, -1})};
    skew.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    validate(skew);
    CHECK_THROWS_AS(stellar_subdivide(skew, {0, 1}), Error);
  }
}

TEST_CASE("proper transform") {
  SUBCASE("hypersurface of the pipeline") {
    Polynomial f0 = parse_polynomial("T7 - T2*T4 + T3*T6", 7);
    ProperTransform pt = proper_transform(f0, {4, 6});
    CHECK(pt.divided_power == 0);
    CHECK(poly_eq(pt.f1, parse_polynomial("T7*T8 - T2*T4 + T3*T6", 8)));
  }
  SUBCASE("common factor is divided out") {
    Polynomial f0 = parse_polynomial("T1 + T2", 2);
    ProperTransform pt = proper_transform(f0, {0, 1});
    CHECK(pt.divided_power == 1);
    CHECK(poly_eq(pt.f1, parse_polynomial("T1 + T2", 3)));
  }
  SUBCASE("one factor in each term") {
    Polynomial f0 = parse_polynomial("T1*T2 - T3*T4", 4);
    ProperTransform pt = proper_transform(f0, {0, 2});
    CHECK(pt.divided_power == 1);
    CHECK(same_support(pt.f1, parse_polynomial("T1*T2 - T3*T4", 5)));
  }
  SUBCASE("inverse substitution recovers the input") {
    Polynomial f0 = parse_polynomial("T7 - T2*T4 + T3*T6", 7);
    ProperTransform pt = proper_transform(f0, {4, 6});
    // set the exceptional variable to one: with d = 0 this is the input
    Polynomial back = poly_zero(7);
    for (const Term& t : pt.f1.terms) {
      Term s = t;
      s.exps.resize(7);
      back.terms.push_back(s);
    }
    back = normalized(std::move(back));
    CHECK(poly_eq(back, f0));
  }
}

TEST_CASE("admissibility") {
  SUBCASE("pipeline polynomial passes") {
    AdmissibilityReport r = admissibility_check(parse_polynomial("T7 - T2*T4 + T3*T6", 7), {4, 6});
    CHECK(r.verdict == Admissibility::pass);
    CHECK(same_support(r.lowest_part, parse_polynomial("T2*T4 - T3*T6", 7)));
  }
  SUBCASE("a proper power fails") {
    AdmissibilityReport r = admissibility_check(parse_polynomial("T1^2", 2), {0, 1});
    CHECK(r.verdict == Admissibility::fail);
  }
  SUBCASE("reducible binomial lowest part fails") {
    AdmissibilityReport r = admissibility_check(parse_polynomial("T1^2 - T2^2 + T3", 3), {2});
    CHECK(r.verdict == Admissibility::fail);
  }
  SUBCASE("five terms are undecided") {
    Polynomial f = parse_polynomial("T1 + T2 + T3 + T4 + T5", 5);
    CHECK(admissibility_check(f, {}).verdict == Admissibility::unknown);
  }
  SUBCASE("orbit test failure") {
    // every term vanishes on the blown-down orbit
    Polynomial f = parse_polynomial("T1*T3 + T2*T4", 4);
    AdmissibilityReport r = admissibility_check(f, {0, 1});
    CHECK(r.verdict == Admissibility::fail);
    CHECK(r.reason.find("orbit") != std::string::npos);
  }
}

TEST_CASE("hypersurface embedding") {
  SUBCASE("pipeline case") {
    graded::GradedPresentation pres = builtins::base_presentation("Bl2F4");
    pres.relations.emplace_back(parse_polynomial("T2*T4 - T3*T6", 6));
    HypersurfaceEmbedding emb = embed_hypersurface(pres);
    CHECK(emb.ambient_q.cols() == 7);
    CHECK(vec_eq(emb.ambient_q.col(6), make_vec({0, 1, 0, 1})));
    CHECK(poly_eq(emb.f0, parse_polynomial("T7 - T2*T4 + T3*T6", 7)));
  }
  SUBCASE("degree preservation") {
    graded::GradedPresentation pres;
    pres.q = make_mat({{1, 1, 1}});
    pres.relations.emplace_back(parse_polynomial("T1*T2 - T3^2", 3));
    HypersurfaceEmbedding emb = embed_hypersurface(pres);
    CHECK(emb.ambient_q(0, 3) == 2);
  }
  SUBCASE("rejects anything but one nonzero relation") {
    graded::GradedPresentation free;
    free.q = make_mat({{1, 1}});
    CHECK_THROWS_AS(embed_hypersurface(free), Error);
    free.relations.emplace_back(poly_zero(2));
    CHECK_THROWS_AS(embed_hypersurface(free), Error);
    graded::GradedPresentation two = builtins::base_presentation("dP5");
    CHECK_THROWS_AS(embed_hypersurface(two), Error);
  }
}

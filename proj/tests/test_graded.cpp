#include "coxk3/graded.hpp"

#include "coxk3/builtins.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace coxk3;
using namespace coxk3::graded;

namespace {

GradedPresentation pres_of(const IMat& q) {
  GradedPresentation p;
  p.q = q;
  return p;
}

// independent oracle: dimension of the degree-w piece of the quotient by
// explicit relations, via exact linear algebra over the monomial basis
Int rank_oracle(const GradedPresentation& pres, const IVec& w) {
  auto monos = monomials_of_degree(pres.q, w);
  std::map<std::vector<int>, int> index;
  for (const auto& m : monos) index.emplace(m, static_cast<int>(index.size()));
  std::vector<QVec> rows;
  for (const Relation& rel : pres.relations) {
    const Polynomial& f = std::get<Polynomial>(rel);
    IVec shift = w - relation_degree(pres, rel);
    for (const auto& m : monomials_of_degree(pres.q, shift)) {
      QVec row = QVec::Zero(static_cast<Eigen::Index>(monos.size()));
      for (const Term& t : f.terms) {
        std::vector<int> e = t.exps;
        for (size_t i = 0; i < e.size(); ++i) e[i] += m[i];
        row(index.at(e)) = t.coeff;
      }
      rows.push_back(row);
    }
  }
  // rank by Gaussian elimination
  int rank = 0;
  for (size_t c = 0; c < monos.size() && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
      if (rows[r](static_cast<Eigen::Index>(c)) != 0) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank) continue;
      if (rows[r](static_cast<Eigen::Index>(c)) == 0) continue;
      Rat f = rows[r](static_cast<Eigen::Index>(c)) / rows[static_cast<size_t>(rank)](static_cast<Eigen::Index>(c));
      rows[r] -= rows[static_cast<size_t>(rank)] * f;
    }
    ++rank;
  }
  return Int(static_cast<long>(monos.size()) - rank);
}

}  // namespace

TEST_CASE("count_monomials") {
  IMat q = make_mat({{1, 0, 1, 0}, {0, 1, 0, 1}});
  CHECK(count_monomials(q, make_vec({2, 2})) == 9);
  CHECK(count_monomials(make_mat({{1}}), make_vec({3})) == 1);
  CHECK(count_monomials(q, make_vec({0, 0})) == 1);
  CHECK(count_monomials(q, make_vec({-1, 2})) == 0);

  SUBCASE("rank-2 generator count at twice the middle degree") {
    // degrees w1 x2, w2 x2, u x(k-2) for k = 4
    IMat gens = make_mat({{1, 1, 0, 0, 1, 1}, {0, 0, 1, 1, 1, 1}});
    CHECK(count_monomials(gens, make_vec({2, 2})) == 20);
  }
  SUBCASE("non-pointed grading is rejected") {
    CHECK_THROWS_AS(count_monomials(make_mat({{1, -1}}), make_vec({0})), Error);
    CHECK_THROWS_AS(count_monomials(make_mat({{1, 0}, {0, 0}}).transpose().eval(),
                                    make_vec({1})),
                    Error);
  }
  SUBCASE("vanishes outside the hull of the degrees") {
    IMat gens = make_mat({{1, 2}, {1, 1}});
    CHECK(count_monomials(gens, make_vec({-1, 5})) == 0);
    CHECK(count_monomials(gens, make_vec({3, 2})) == 1);
  }
}

TEST_CASE("homogeneity check") {
  SUBCASE("published three-point blow-up presentation passes") {
    GradedPresentation p = builtins::base_presentation("Bl3F4");
    auto rep = homogeneity_check(p);
    CHECK(rep.pass);
    CHECK(vec_eq(relation_degree(p, p.relations[0]), make_vec({0, 1, 0, 1, 0})));
  }
  SUBCASE("published rank-5 chain matrix fails with the recorded degrees") {
    GradedPresentation p;
    p.q = builtins::published_matrix("rhoX5ii");
    p.relations.emplace_back(builtins::published_rhoX5ii_relation());
    auto rep = homogeneity_check(p);
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.failures.size() == 1);
    std::vector<IVec> degs = rep.failures[0].term_degrees;
    std::sort(degs.begin(), degs.end(), lex_less);
    CHECK(vec_eq(degs[0], make_vec({0, 1, -1, 2, 0})));
    CHECK(vec_eq(degs[1], make_vec({0, 1, 0, 0, 1})));
    CHECK(vec_eq(degs[2], make_vec({0, 1, 0, 1, 0})));
  }
  SUBCASE("Pluecker relations are homogeneous for the published grading") {
    GradedPresentation p = builtins::base_presentation("dP5");
    CHECK(homogeneity_check(p).pass);
    CHECK(vec_eq(relation_degree(p, p.relations[0]), make_vec({1, -1, 0, 0, 0})));
  }
}

TEST_CASE("complete intersection hilbert values") {
  SUBCASE("product double cover at the first mixed degree") {
    GradedPresentation p;
    p.q = builtins::published_matrix("rhoX2i");
    p.relations.emplace_back(GenericRelation{make_vec({4, 4}), "T5^2 - f"});
    CHECK(ci_hilbert(p, make_vec({1, 1})) == 4);
    CHECK(ci_hilbert(p, make_vec({4, 4})) == count_monomials(p.q, make_vec({4, 4})) - 1);
  }
  SUBCASE("free ring reduces to plain counting") {
    GradedPresentation p = pres_of(make_mat({{1, 0, 1, 0}, {0, 1, 0, 1}}));
    CHECK(ci_hilbert(p, make_vec({2, 2})) == count_monomials(p.q, make_vec({2, 2})));
  }
  SUBCASE("the k = 3 hypersurface model agrees with the section-count oracle") {
    // five generators, one relation at (3,3): dimensions match Riemann-Roch
    GradedPresentation p = pres_of(make_mat({{1, 1, 0, 0, 1}, {0, 0, 1, 1, 1}}));
    p.relations.emplace_back(GenericRelation{make_vec({3, 3}), "f"});
    CHECK(ci_hilbert(p, make_vec({3, 3})) == 29);  // = (3u)^2/2 + 2 with u^2 = 6
    CHECK(ci_hilbert(p, make_vec({2, 2})) == 14);
  }
  SUBCASE("CI hilbert values are never negative on a sweep") {
    GradedPresentation p;
    p.q = builtins::published_matrix("rhoX2i");
    p.relations.emplace_back(GenericRelation{make_vec({4, 4}), "T5^2 - f"});
    for (long a = 0; a <= 5; ++a)
      for (long b = 0; b <= 5; ++b) CHECK(ci_hilbert(p, make_vec({a, b})) >= 0);
  }
  SUBCASE("rejected when the relation count is off") {
    GradedPresentation p = pres_of(builtins::published_matrix("rhoX5i").leftCols(10));
    CHECK_THROWS_AS(ci_hilbert(p, make_vec({1, 0, 0, 0, 0})), Error);
  }
}

TEST_CASE("canonical class") {
  CHECK(vec_eq(canonical_class(pres_of(make_mat({{1, 0, 1, 0}, {0, 1, 0, 1}}))),
               make_vec({-2, -2})));
  CHECK(vec_eq(canonical_class(builtins::base_presentation("Bl3F4")),
               make_vec({-1, -2, 0, -2, -1})));
  GradedPresentation k3pres;
  k3pres.q = builtins::published_matrix("rhoX2i");
  k3pres.relations.emplace_back(GenericRelation{make_vec({4, 4}), "T5^2 - f"});
  CHECK(is_zero(canonical_class(k3pres)));
  GradedPresentation notci = pres_of(builtins::published_matrix("rhoX5i"));
  notci.relations.emplace_back(GenericRelation{make_vec({1, -1, 0, 0, 0}), "f1"});
  CHECK_THROWS_AS(canonical_class(notci), Error);
}

TEST_CASE("standard monomial count") {
  SUBCASE("no relations") {
    GradedPresentation p = pres_of(make_mat({{1, 1, 1}}));
    CHECK(standard_monomial_count(p, make_vec({2})) == count_monomials(p.q, make_vec({2})));
  }
  SUBCASE("one binomial relation") {
    GradedPresentation p = pres_of(make_mat({{1, 1, 1}}));
    p.relations.emplace_back(parse_polynomial("T1*T2 - T3^2", 3));
    CHECK(standard_monomial_count(p, make_vec({2})) == 5);
  }
  SUBCASE("Pluecker ideal at small degrees matches the rank oracle") {
    GradedPresentation p = builtins::base_presentation("dP5");
    for (const auto& w : {make_vec({1, -1, 0, 0, 0}), make_vec({2, -1, -1, -1, -1}),
                          make_vec({2, -2, -1, -1, 0}), make_vec({3, -2, -2, -1, -1})}) {
      CHECK(standard_monomial_count(p, w) == rank_oracle(p, w));
    }
  }
  SUBCASE("invariant under variable relabeling") {
    GradedPresentation p = pres_of(make_mat({{1, 1, 1, 1}}));
    p.relations.emplace_back(parse_polynomial("T1*T2 - T3*T4", 4));
    GradedPresentation q = pres_of(make_mat({{1, 1, 1, 1}}));
    q.relations.emplace_back(parse_polynomial("T4*T3 - T2*T1", 4));
    for (long d = 1; d <= 4; ++d)
      CHECK(standard_monomial_count(p, make_vec({d})) == standard_monomial_count(q, make_vec({d})));
  }
  SUBCASE("generic relations are rejected") {
    GradedPresentation p = pres_of(make_mat({{1, 1}}));
    p.relations.emplace_back(GenericRelation{make_vec({2}), "f"});
    CHECK_THROWS_AS(standard_monomial_count(p, make_vec({2})), Error);
  }
  SUBCASE("S-pair cap can be exceeded") {
    GradedPresentation p = pres_of(make_mat({{1, 1, 1}}));
    p.relations.emplace_back(parse_polynomial("T1*T2 - T3^2", 3));
    p.relations.emplace_back(parse_polynomial("T2*T3 - T1^2", 3));
    CHECK_THROWS_AS(standard_monomial_count(p, make_vec({6}), 1), Error);
  }
  SUBCASE("agrees with ci_hilbert where both apply") {
    GradedPresentation p = builtins::base_presentation("Bl3F4");
    for (const auto& w : {make_vec({0, 1, 0, 1, 0}), make_vec({1, 1, 0, 1, 0}),
                          make_vec({0, 2, 0, 2, 0})}) {
      CHECK(standard_monomial_count(p, w) == ci_hilbert(p, w));
    }
  }
}

TEST_CASE("presentation equivalence") {
  SUBCASE("column permutation of itself") {
    GradedPresentation p;
    p.q = builtins::published_matrix("rhoX2ii");
    p.relations.emplace_back(GenericRelation{make_vec({6, 12}), "T5^2 - f"});
    GradedPresentation shuffled;
    shuffled.q = IMat(p.q.rows(), p.q.cols());
    std::vector<int> perm = {3, 0, 4, 1, 2};
    for (Eigen::Index j = 0; j < p.q.cols(); ++j)
      shuffled.q.col(j) = p.q.col(perm[static_cast<size_t>(j)]);
    shuffled.relations = p.relations;
    CHECK(presentation_equivalent(p, shuffled));
  }
  SUBCASE("distinct lattices are inequivalent") {
    GradedPresentation a, b;
    a.q = builtins::published_matrix("rhoX2i");
    b.q = builtins::published_matrix("rhoX2iii");
    a.relations.emplace_back(GenericRelation{make_vec({4, 4}), "f"});
    b.relations.emplace_back(GenericRelation{IVec(builtins::published_matrix("rhoX2iii").col(4) * Int(2)), "f"});
    CHECK_FALSE(presentation_equivalent(a, b));
  }
  SUBCASE("no unimodular map sends a primitive column to an imprimitive one") {
    GradedPresentation a, b;
    a.q = make_mat({{1, 0}, {0, 1}});
    b.q = make_mat({{1, 0}, {0, 2}});
    CHECK_FALSE(presentation_equivalent(a, b));
  }
  SUBCASE("relation degrees must correspond") {
    GradedPresentation a, b;
    a.q = builtins::published_matrix("rhoX2i");
    b.q = a.q;
    a.relations.emplace_back(GenericRelation{make_vec({4, 4}), "f"});
    b.relations.emplace_back(GenericRelation{make_vec({2, 2}), "f"});
    CHECK_FALSE(presentation_equivalent(a, b));
  }
}

#pragma once

// Multigraded polynomial rings and quotient presentations: monomial
// counting at a degree, homogeneity validation, complete-intersection
// Hilbert values, the canonical-class identity, standard monomials modulo
// a capped Groebner basis, and presentation equivalence.

#include "coxk3/numeric.hpp"
#include "coxk3/poly.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace coxk3::graded {

/// A relation is either an explicit polynomial (its degree is computed) or
/// a generic placeholder known only by degree.
struct GenericRelation {
  IVec degree;
  std::string label;
};

using Relation = std::variant<Polynomial, GenericRelation>;

bool is_explicit(const Relation& r);

struct GradedPresentation {
  IMat q;  // degree matrix, one column per generator
  std::vector<Relation> relations;

  Eigen::Index grading_rank() const { return q.rows(); }
  Eigen::Index generators() const { return q.cols(); }
};

/// Degree of a relation; explicit relations must be homogeneous under q.
IVec relation_degree(const GradedPresentation& pres, const Relation& r);

/// Integer functional strictly positive on every column of q; throws when
/// the grading is not pointed (enumeration would be infinite).
IVec pointedness_certificate(const IMat& q);

/// Number of x in Z^r_{>=0} with q x = w.
Int count_monomials(const IMat& q, const IVec& w);

/// The exponent vectors themselves; used by oracles and the Groebner path.
std::vector<std::vector<int>> monomials_of_degree(const IMat& q, const IVec& w);

struct HomogeneityFailure {
  size_t relation_index;
  std::vector<IVec> term_degrees;
};

struct HomogeneityReport {
  bool pass = true;
  std::vector<HomogeneityFailure> failures;
};

HomogeneityReport homogeneity_check(const GradedPresentation& pres);

/// Codimension test: #relations == #generators - (2 + grading rank).
bool is_complete_intersection(const GradedPresentation& pres);

/// Inclusion-exclusion Hilbert value for a complete intersection.
Int ci_hilbert(const GradedPresentation& pres, const IVec& w);

/// Sum of relation degrees minus sum of generator degrees (CI or free).
IVec canonical_class(const GradedPresentation& pres);

/// Standard monomials of degree w modulo a degree-truncated Groebner basis
/// (grevlex refined by the pointedness weight).  Explicit relations only.
Int standard_monomial_count(const GradedPresentation& pres, const IVec& w,
                            long spair_cap = 100000);

/// Equality up to a column permutation and a unimodular change of the
/// grading basis carrying the relation degrees along.
bool presentation_equivalent(const GradedPresentation& p1, const GradedPresentation& p2);

}  // namespace coxk3::graded

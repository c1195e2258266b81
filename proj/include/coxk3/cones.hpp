#pragma once

// Rational polyhedral cones in the rational class group, exact arithmetic
// throughout.  Cones are stored canonically: primitive extremal rays of the
// pointed part, lex-sorted, plus a Hermite-canonical basis of the lineality
// lattice when the cone is not pointed.

#include "coxk3/intlin.hpp"
#include "coxk3/numeric.hpp"

#include <vector>

namespace coxk3::cones {

inline constexpr int kMaxDim = 5;

struct Cone {
  int ambient_dim = 0;
  std::vector<IVec> rays;
  std::vector<IVec> lineality;

  bool pointed() const { return lineality.empty(); }
  bool trivial() const { return rays.empty() && lineality.empty(); }
};

/// Minimal canonical description of cone(vectors).
Cone positive_hull(const std::vector<IVec>& vectors, int ambient_dim);

/// Generators including +/- the lineality basis.
std::vector<IVec> generators(const Cone& c);

bool contains(const Cone& c, const IVec& x);

/// Structural equality of the canonical forms.
bool equal(const Cone& a, const Cone& b);

bool subset_of(const Cone& inner, const Cone& outer);

/// { x : x . a >= 0 for all listed a }.
Cone cone_from_constraints(const std::vector<IVec>& constraints, int ambient_dim);

Cone dual_cone(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

/// Intersection over all leave-one-out positive hulls of the degrees.
Cone moving_cone(const std::vector<IVec>& degrees, int ambient_dim);

/// { x : x^T G g >= 0 for every generator g of c }; G nondegenerate.
Cone dual_cone_under_form(const Cone& c, const intlin::GramForm& g);

}  // namespace coxk3::cones

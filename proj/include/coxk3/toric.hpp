#pragma once

// Fans for smooth complete toric surfaces (plus the one three-dimensional
// ambient fan needed here), the Cox construction, stellar subdivision, and
// the proper-transform recipe for toric ambient modifications.

#include "coxk3/graded.hpp"
#include "coxk3/intlin.hpp"
#include "coxk3/numeric.hpp"
#include "coxk3/poly.hpp"

#include <string>
#include <vector>

namespace coxk3::toric {

struct Fan {
  int lattice_rank = 0;
  std::vector<IVec> rays;                   // primitive, pairwise distinct
  std::vector<std::vector<int>> max_cones;  // 0-based ray index sets, simplicial
};

/// Enforce the Fan invariants: primitive distinct rays, simplicial max
/// cones, rays spanning the lattice.  Throws on violation.
void validate(const Fan& fan);

/// Completeness of a 2-D fan: the max cones are exactly the consecutive
/// pairs of the angular ray ordering.
bool complete_2d(const Fan& fan);

struct ToricCoxPresentation {
  IMat p;                          // rays as columns
  IMat q;                          // Gale dual degree matrix
  std::vector<std::string> variables;  // "T1".."Tr"
};

/// Degrees deg(T_i) = Q(e_i) with Q a Gale dual of the ray matrix.
ToricCoxPresentation cox_construction(const Fan& fan);

/// Insert the ray through the sum of the selected rays (which must already
/// be primitive) and star-subdivide every incident maximal cone.  The new
/// ray is appended after the existing ones.
Fan stellar_subdivide(const Fan& fan, const std::vector<int>& cone_indices);

struct ProperTransform {
  Polynomial f1;
  int divided_power = 0;  // exponent of the exceptional variable divided out
};

/// Substitute T_i -> T_i * T_new for the blown indices, then divide by the
/// largest power of T_new that keeps a polynomial.
ProperTransform proper_transform(const Polynomial& f0, const std::vector<int>& blown_indices);

enum class Admissibility { pass, fail, unknown };

struct AdmissibilityReport {
  Admissibility verdict = Admissibility::unknown;
  std::string reason;
  Polynomial lowest_part;  // g_{k0} under the 0/1 grading of the blown variables
};

/// Admissibility of f0 for the ambient modification: the lowest-degree part
/// under the 0/1 grading must be irreducible in at least two variables, and
/// V(f0) must meet the torus orbit with the blown coordinates set to zero.
/// Exact on the <=3-term fragment; otherwise "unknown".
AdmissibilityReport admissibility_check(const Polynomial& f0, const std::vector<int>& blown_indices);

struct HypersurfaceEmbedding {
  IMat ambient_q;   // generator degrees plus one new column deg(g)
  Polynomial f0;    // T_new - g
};

/// Present a one-relation quotient as a hypersurface in an ambient ring
/// with one extra variable of degree deg(g).
HypersurfaceEmbedding embed_hypersurface(const graded::GradedPresentation& pres);

}  // namespace coxk3::toric

#pragma once

// Exact integer linear algebra: Smith/Hermite normal forms, saturated
// kernels, Gale duality, lattice invariants of symmetric forms, and
// representation testing for even rank-2 forms of signature (1,1).

#include "coxk3/numeric.hpp"

#include <optional>
#include <utility>

namespace coxk3::intlin {

/// U*M*V = D with U, V unimodular and D diagonal, d1 | d2 | ...
struct SmithDecomposition {
  IMat u;
  IMat d;
  IMat v;
};

SmithDecomposition smith_normal_form(const IMat& m);

/// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Int> invariant_factors(const IMat& m);

Eigen::Index rank_of(const IMat& m);

/// True iff m: Z^cols -> Z^rows is onto, i.e. all invariant factors are 1.
bool is_surjective_lattice_map(const IMat& m);

/// Canonical row Hermite form of the lattice spanned by the rows of m.
/// Two integer matrices span the same row lattice iff their forms coincide.
IMat hermite_row_basis(const IMat& m);

/// Columns form a saturated basis of { x : m x = 0 }, in a canonical
/// (Hermite-reduced) shape.
IMat kernel_lattice(const IMat& m);

/// For surjective p, a surjective q with q * p^T = 0 whose rows span the
/// full orthogonal complement of the rows of p.  Throws if p is not
/// surjective (ray generators that do not span the lattice).
IMat gale_dual(const IMat& p);

/// q1 = U q2 for some unimodular U.  Decided as equality of the saturated
/// kernel lattices; both inputs must be surjective of equal shape.
bool unimodular_row_equivalent(const IMat& q1, const IMat& q2);

/// Symmetric integer matrix modeling an even lattice.
struct GramForm {
  IMat gram;
  bool even = true;

  GramForm(IMat g, bool even_flag = true);
  Eigen::Index rank() const { return gram.rows(); }
};

GramForm direct_sum(const GramForm& a, const GramForm& b);
GramForm twist(const GramForm& a, const Int& k);

/// "U", "U(2)", "A1", "(2)" and sums/twists like "U(2)+A1^3".
GramForm parse_form_expression(const std::string& expr);

/// Exact inertia (positives, negatives) of a nondegenerate symmetric form,
/// by rational congruence diagonalization.
std::pair<int, int> signature(const GramForm& g);

struct TwoElementaryInvariants {
  int rank = 0;
  int a = 0;
  int delta = 0;
};

inline bool operator==(const TwoElementaryInvariants& x, const TwoElementaryInvariants& y) {
  return x.rank == y.rank && x.a == y.a && x.delta == y.delta;
}

/// (rank, a, delta) when the discriminant group is 2-elementary; nullopt
/// otherwise.  Throws on degenerate or odd input.
std::optional<TwoElementaryInvariants> two_elementary(const GramForm& g);

struct Representation {
  bool exists = false;
  IVec witness;  // satisfies w^T G w = target when exists
  std::string method;
  std::string bound;  // recorded search/cycle bound, for auditability
};

/// Does the even (1,1) binary form represent target (0 or -2)?
/// Target 0 is a perfect-square test on -det; target -2 walks the cycle of
/// reduced indefinite forms (the recorded bound documents its validity
/// range |t| < sqrt(disc)/2, which every even case here satisfies).
Representation represents(const GramForm& g, const Int& target);

}  // namespace coxk3::intlin

#pragma once

// K3-specific oracles and predictors: Riemann-Roch section counts for
// rank-2 class groups, effective/nef cone data, generator and relation
// predictions, the rank-2..5 classification table, double-cover
// presentation transforms, and del Pezzo curve enumeration.

#include "coxk3/cones.hpp"
#include "coxk3/graded.hpp"
#include "coxk3/intlin.hpp"
#include "coxk3/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coxk3::k3 {

/// Rank-2 class lattice of an algebraic K3 surface: even, signature (1,1).
struct RankTwoScenario {
  intlin::GramForm form;

  explicit RankTwoScenario(intlin::GramForm g);
  Int w1_sq() const { return form.gram(0, 0); }
  Int w2_sq() const { return form.gram(1, 1); }
  Int pairing() const { return form.gram(0, 1); }
};

/// Effective cone in the scenarios covered here: generators of square 0/-2
/// with pairing >= 2, and the (4,-4,0) index-two case.
cones::Cone eff_cone_rank2(const RankTwoScenario& s);

/// dim R(X)_w by Riemann-Roch plus fixed-component reduction.
Int h0_rank2(const RankTwoScenario& s, const IVec& w);

struct PolyhedralityResult {
  bool polyhedral = false;
  IVec witness;
  Int witness_square;
  std::string method;
  std::string bound;
};

/// Polyhedral effective cone iff some class has square 0 or -2.
PolyhedralityResult polyhedral_rank2(const intlin::GramForm& g);

enum class Completeness { exact, lower_bound };

struct PredictionResult {
  std::vector<IVec> generator_degrees;  // with multiplicity
  std::vector<IVec> relation_degrees;   // with multiplicity
  Completeness completeness = Completeness::exact;
  std::string provenance;
};

PredictionResult predict_rank2(const RankTwoScenario& s);

/// Input data for the double-cover presentation transform.
struct CoverSpec {
  graded::GradedPresentation base;
  IVec base_canonical;
  int branch_components = 1;
  // class of the rational branch component (two-component case); must be a
  // generator degree and the first basis vector of the grading
  std::optional<IVec> rational_component_class;
  std::string section_label = "T^2 - f";
};

/// Cox presentation of the double cover: one branch component keeps the
/// grading and adds the ramification section in degree -K; two components
/// rescale the grading by diag(2,1,...,1) and halve the pulled-back branch
/// class.  Throws on non-integral transformed degrees or a non-effective
/// branch class.
graded::GradedPresentation adjoin_cover(const CoverSpec& spec);

struct ClassificationRow {
  intlin::GramForm form;
  std::string quotient_surface;
  std::string branch_divisor;
  int branch_components = 1;
  Int branch_genus;  // genus of the non-rational component
  intlin::TwoElementaryInvariants invariants;
};

/// The rank rho rows of the quotient classification (2 <= rho <= 5).
std::vector<ClassificationRow> classification_table(int rho);

/// Genus of the non-rational branch component by adjunction.
/// One component: B ~ -2K.  Two: B = C1 + C_B with C1 rational.
Int branch_genus(const Int& k_squared, int components,
                 std::optional<std::pair<Int, Int>> c1_data = std::nullopt);

enum class CurveKind { lines, conics };

struct CurveSearch {
  std::vector<IVec> classes;  // canonical (lex) order
  std::string bound;
};

/// (-1)-curves (lines) or conic classes on the del Pezzo surface of Picard
/// number k, basis (h, e_1..e_{k-1}), K = -3h + sum e_i.
CurveSearch delpezzo_curves(int k, CurveKind kind);

/// Cox presentation prediction for the double cover of the del Pezzo
/// surface of Picard number k (5 <= k <= 9).
PredictionResult predict_delpezzo_cover(int k);

/// Number of hyperbolic lattices of the given rank with polyhedral
/// effective cone (3 <= rho <= 20); reference table data.
int nikulin_count(int rho);

}  // namespace coxk3::k3

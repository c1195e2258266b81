#include "coxk3/k3.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace coxk3::k3 {

RankTwoScenario::RankTwoScenario(intlin::GramForm g) : form(std::move(g)) {
  if (form.rank() != 2) throw Error("RankTwoScenario: rank must be 2");
  if (!form.even) throw Error("RankTwoScenario: form must be even");
  if (signature(form) != std::make_pair(1, 1))
    throw Error("RankTwoScenario: signature must be (1,1)");
}

namespace {

bool is_pic_eff_case(const RankTwoScenario& s) {
  return s.w1_sq() == 4 && s.w2_sq() == -4 && s.pairing() == 0;
}

bool is_basis_case(const RankTwoScenario& s) {
  auto sq_ok = [](const Int& x) { return x == 0 || x == -2; };
  return sq_ok(s.w1_sq()) && sq_ok(s.w2_sq()) && s.pairing() >= 2;
}

Int square(const RankTwoScenario& s, const IVec& w) { return dot(w, s.form.gram * w); }

}  // namespace

cones::Cone eff_cone_rank2(const RankTwoScenario& s) {
  if (is_basis_case(s)) {
    return cones::positive_hull({make_vec({1, 0}), make_vec({0, 1})}, 2);
  }
  if (is_pic_eff_case(s)) {
    return cones::positive_hull({make_vec({1, 1}), make_vec({1, -1})}, 2);
  }
  throw Error("eff_cone_rank2: scenario outside the covered cases");
}

Int h0_rank2(const RankTwoScenario& s, const IVec& w) {
  cones::Cone eff = eff_cone_rank2(s);
  if (!cones::contains(eff, w)) throw Error("h0_rank2: class is not effective");
  IVec cur = w;
  for (int iter = 0; iter <= 4096; ++iter) {
    if (is_zero(cur)) return 1;
    // nef against the generators of the effective cone (the dual pairing)
    IVec bad;
    bool nef = true;
    for (const IVec& e : eff.rays) {
      if (dot(cur, s.form.gram * e) < 0) {
        nef = false;
        bad = e;
        break;
      }
    }
    if (nef) {
      Int sq = square(s, cur);
      if (sq > 0) return sq / 2 + 2;
      if (sq == 0) return content(cur) + 1;  // composed with a pencil
      throw Error("h0_rank2: nef class of negative square");
    }
    // the negative generator pairing badly is a fixed component; peel it off
    if (dot(bad, s.form.gram * bad) >= 0)
      throw Error("h0_rank2: reduction hit an isotropic generator");
    cur -= bad;
    if (!cones::contains(eff, cur)) throw Error("h0_rank2: reduction left the effective cone");
  }
  throw Error("h0_rank2: reduction cap exceeded (invalid scenario)");
}

PolyhedralityResult polyhedral_rank2(const intlin::GramForm& g) {
  PolyhedralityResult out;
  intlin::Representation rep = intlin::represents(g, 0);
  if (!rep.exists) rep = intlin::represents(g, -2);
  out.polyhedral = rep.exists;
  out.method = rep.method;
  out.bound = rep.bound;
  if (rep.exists) {
    out.witness = rep.witness;
    out.witness_square = dot(rep.witness, g.gram * rep.witness);
  }
  return out;
}

PredictionResult predict_rank2(const RankTwoScenario& s) {
  PredictionResult out;
  const IVec w1 = make_vec({1, 0}), w2 = make_vec({0, 1});
  Int k = s.pairing();

  if (s.w1_sq() == 0 && s.w2_sq() == 0 && k >= 3) {
    out.provenance = "gen-2";
    out.completeness = Completeness::exact;
    out.generator_degrees = {w1, w1, w2, w2};
    for (Int i = 0; i < k - 2; ++i) out.generator_degrees.push_back(make_vec({1, 1}));
    if (k == 3) {
      out.relation_degrees.push_back(make_vec({3, 3}));
    } else {
      Int n = k * (k - 3) / 2;
      for (Int i = 0; i < n; ++i) out.relation_degrees.push_back(make_vec({2, 2}));
    }
    return out;
  }
  if (s.w1_sq() == -2 && s.w2_sq() == 0 && k >= 1) {
    out.provenance = "gens-0-2";
    out.completeness = Completeness::lower_bound;
    out.generator_degrees.push_back(w1);
    for (Int a = 0; a * 2 <= k; ++a) out.generator_degrees.push_back(make_vec({a.get_si(), 1}));
    if (k % 2 == 1 && k > 1) {
      IVec extra(2);
      extra << k, 2;
      out.generator_degrees.push_back(extra);
    }
    return out;
  }
  if (s.w1_sq() == -2 && s.w2_sq() == -2 && k >= 3) {
    out.provenance = "gens-2-2";
    out.completeness = Completeness::lower_bound;
    for (Int a = 0; a * 2 <= k; ++a) {
      out.generator_degrees.push_back(make_vec({a.get_si(), 1}));
      if (a != 1) out.generator_degrees.push_back(make_vec({1, a.get_si()}));
    }
    if (k % 2 == 1 && k > 1) {
      IVec e1(2), e2(2);
      e1 << k, 2;
      e2 << 2, k;
      out.generator_degrees.push_back(e1);
      out.generator_degrees.push_back(e2);
    }
    std::sort(out.generator_degrees.begin(), out.generator_degrees.end(), lex_less);
    return out;
  }
  if (is_pic_eff_case(s)) {
    out.provenance = "pic-eff";
    out.completeness = Completeness::exact;
    out.generator_degrees = {make_vec({1, 1}), make_vec({1, 1}), make_vec({1, -1}),
                             make_vec({1, -1}), w1, w1, w1, w1};
    for (int i = 0; i < 4; ++i) out.relation_degrees.push_back(make_vec({2, 0}));
    return out;
  }
  throw Error("predict_rank2: scenario outside the covered cases");
}

graded::GradedPresentation adjoin_cover(const CoverSpec& spec) {
  const graded::GradedPresentation& base = spec.base;
  Eigen::Index d = base.grading_rank();
  if (spec.base_canonical.size() != d) throw Error("adjoin_cover: canonical class rank mismatch");
  const IVec& ky = spec.base_canonical;
  IVec minus2k = ky * Int(-2);

  // the full branch class must be effective in the base
  cones::Cone eff = cones::positive_hull(columns_of(base.q), static_cast<int>(d));
  if (!cones::contains(eff, minus2k)) throw Error("adjoin_cover: branch class -2K is not effective");

  graded::GradedPresentation out;
  if (spec.branch_components == 1) {
    out.q = IMat(d, base.generators() + 1);
    out.q.leftCols(base.generators()) = base.q;
    out.q.col(base.generators()) = -ky;
    for (const graded::Relation& r : base.relations) {
      if (const auto* poly = std::get_if<Polynomial>(&r))
        out.relations.emplace_back(extend_vars(*poly, static_cast<int>(base.generators()) + 1));
      else
        out.relations.push_back(r);
    }
    out.relations.push_back(graded::GenericRelation{minus2k, spec.section_label});
    return out;
  }
  if (spec.branch_components != 2) throw Error("adjoin_cover: 1 or 2 branch components");
  if (!spec.rational_component_class)
    throw Error("adjoin_cover: two components need the rational component class");
  const IVec& w1 = *spec.rational_component_class;
  if (w1.size() != d) throw Error("adjoin_cover: component class rank mismatch");
  IVec e1 = IVec::Zero(d);
  e1(0) = 1;
  if (!vec_eq(w1, e1))
    throw Error("adjoin_cover: basis must start with the rational component class");
  Eigen::Index comp_gen = -1;
  for (Eigen::Index j = 0; j < base.generators(); ++j)
    if (vec_eq(IVec(base.q.col(j)), w1)) {
      if (comp_gen >= 0) throw Error("adjoin_cover: ambiguous component generator");
      comp_gen = j;
    }
  if (comp_gen < 0)
    throw Error("adjoin_cover: rational component class is not a generator degree");

  // residual branch component and its effectivity
  IVec cb = minus2k - w1;
  if (!cones::contains(eff, cb))
    throw Error("adjoin_cover: residual branch class is not effective");

  auto transform = [&](const IVec& v) {
    IVec t = v;
    t(0) *= 2;
    return t;
  };
  auto halve = [&](const IVec& v) {
    IVec t = v;
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      if (t(i) % 2 != 0) throw Error("adjoin_cover: non-integral transformed degree");
      t(i) /= 2;
    }
    return t;
  };

  out.q = IMat(d, base.generators() + 1);
  for (Eigen::Index j = 0; j < base.generators(); ++j)
    out.q.col(j) = (j == comp_gen) ? e1 : transform(base.q.col(j));
  IVec section_deg = halve(transform(cb));
  out.q.col(base.generators()) = section_deg;

  for (const graded::Relation& r : base.relations) {
    if (const auto* poly = std::get_if<Polynomial>(&r)) {
      // the relation itself pulls back verbatim; its degree transforms by A
      out.relations.emplace_back(extend_vars(*poly, static_cast<int>(base.generators()) + 1));
    } else {
      const auto& g = std::get<graded::GenericRelation>(r);
      out.relations.emplace_back(graded::GenericRelation{transform(g.degree), g.label});
    }
  }
  out.relations.push_back(graded::GenericRelation{transform(cb), spec.section_label});
  return out;
}

Int branch_genus(const Int& k_squared, int components,
                 std::optional<std::pair<Int, Int>> c1_data) {
  auto genus = [](const Int& self, const Int& with_k) -> Int {
    Int num = self + with_k;
    if (num % 2 != 0) throw Error("branch_genus: non-integral genus");
    return 1 + num / 2;
  };
  if (components == 1) {
    // B ~ -2K: g = 1 + (4K^2 - 2K^2)/2 = K^2 + 1
    return genus(k_squared * 4, k_squared * -2);
  }
  if (components != 2) throw Error("branch_genus: 1 or 2 components");
  if (!c1_data) throw Error("branch_genus: two components need (c1^2, c1.K)");
  const auto& [c1sq, c1k] = *c1_data;
  if (c1sq + c1k != -2) throw Error("branch_genus: rational component violates adjunction");
  // C_B = -2K - C1
  Int cbsq = k_squared * 4 + c1k * 4 + c1sq;
  Int cbk = k_squared * -2 - c1k;
  return genus(cbsq, cbk);
}

std::vector<ClassificationRow> classification_table(int rho) {
  if (rho < 2 || rho > 5) throw Error("classification_table: rank out of range [2,5]");
  using intlin::parse_form_expression;
  std::vector<ClassificationRow> rows;
  auto push = [&](const std::string& expr, const std::string& surface, const std::string& branch,
                  int comps, const Int& ksq, std::optional<std::pair<Int, Int>> c1) {
    ClassificationRow row{parse_form_expression(expr), surface, branch, comps,
                          branch_genus(ksq, comps, c1), intlin::TwoElementaryInvariants{}};
    auto inv = intlin::two_elementary(row.form);
    if (!inv) throw Error("classification_table: form is not 2-elementary");
    row.invariants = *inv;
    rows.push_back(std::move(row));
  };
  if (rho == 2) {
    push("U", "F4", "P1 + C10", 2, 8, std::make_pair(Int(-4), Int(2)));
    push("U(2)", "F0", "C9", 1, 8, std::nullopt);
    push("(2)+A1", "Bl1(P2)", "C9", 1, 8, std::nullopt);
    return rows;
  }
  int k = rho;
  Int ksq = 10 - k;  // blow-up of an 8 = K^2 surface in k-2 points
  std::string suffix = k > 3 ? "^" + std::to_string(k - 2) : "";
  std::string blow = "Bl" + std::to_string(k - 2);
  push("U+A1" + suffix, blow + "(F4)", "P1 + C" + std::to_string(12 - k), 2, ksq,
       std::make_pair(Int(-4), Int(2)));
  push("U(2)+A1" + suffix, blow + "(F0)", "C" + std::to_string(11 - k), 1, ksq, std::nullopt);
  return rows;
}

namespace {

// exhaustive search for classes with given square and pairing with K;
// the form on K-perp is negative definite, which bounds every coefficient
CurveSearch curve_search(int k, const Int& self, const Int& with_k) {
  int m = k - 1;  // number of exceptional classes
  CurveSearch out;
  // E = (a0, a1..am): a0^2 - sum ai^2 = self, 3a0 + sum ai = -with_k
  // Cauchy-Schwarz: (sum ai)^2 <= m * sum ai^2 bounds a0
  Int lin = -with_k;
  std::vector<Int> a(static_cast<size_t>(m) + 1);
  Int a0_bound = 0;
  {
    // (lin - 3 a0)^2 <= m (a0^2 - self) gives a quadratic inequality in a0
    // solved here by scanning (coefficients are tiny)
    Int limit = 100;
    for (Int a0 = -limit; a0 <= limit; ++a0) {
      Int lhs = (lin - a0 * 3) * (lin - a0 * 3);
      Int rhs = Int(m) * (a0 * a0 - self);
      Int mag = abs(a0);
      if (lhs <= rhs && mag > a0_bound) a0_bound = mag;
    }
  }
  out.bound = "|a0| <= " + a0_bound.get_str() + " from negativity on K-perp";
  std::function<void(int, Int, Int)> rec = [&](int idx, Int sum_rest, Int sumsq_rest) {
    // remaining coordinates idx..m must satisfy sum = sum_rest, sumsq = sumsq_rest
    if (sumsq_rest < 0) return;
    int vars_left = m - idx + 1;
    if (vars_left == 0) {
      if (sum_rest == 0 && sumsq_rest == 0) {
        IVec v(static_cast<Eigen::Index>(m) + 1);
        for (int i = 0; i <= m; ++i) v(i) = a[static_cast<size_t>(i)];
        out.classes.push_back(v);
      }
      return;
    }
    // |sum_rest| <= vars_left * max |ai| and sum_rest^2 <= vars_left * sumsq_rest
    if (sum_rest * sum_rest > Int(vars_left) * sumsq_rest) return;
    Int lim = isqrt(sumsq_rest);
    for (Int x = -lim; x <= lim; ++x) {
      a[static_cast<size_t>(idx)] = x;
      rec(idx + 1, sum_rest - x, sumsq_rest - x * x);
    }
  };
  for (Int a0 = -a0_bound; a0 <= a0_bound; ++a0) {
    a[0] = a0;
    Int sum_rest = lin - a0 * 3;
    Int sumsq_rest = a0 * a0 - self;
    rec(1, sum_rest, sumsq_rest);
  }
  std::sort(out.classes.begin(), out.classes.end(), lex_less);
  return out;
}

}  // namespace

CurveSearch delpezzo_curves(int k, CurveKind kind) {
  if (k < 5 || k > 9) throw Error("delpezzo_curves: Picard number out of range [5,9]");
  if (kind == CurveKind::lines) return curve_search(k, -1, -1);
  return curve_search(k, 0, -2);
}

PredictionResult predict_delpezzo_cover(int k) {
  if (k < 5 || k > 9) throw Error("predict_delpezzo_cover: Picard number out of range [5,9]");
  PredictionResult out;
  out.provenance = "doubledelp";
  out.completeness = Completeness::exact;
  CurveSearch lines = delpezzo_curves(k, CurveKind::lines);
  CurveSearch conics = delpezzo_curves(k, CurveKind::conics);
  IVec minus_k(static_cast<Eigen::Index>(k));
  minus_k(0) = 3;
  for (int i = 1; i < k; ++i) minus_k(i) = -1;
  out.generator_degrees = lines.classes;
  out.generator_degrees.push_back(minus_k);  // the ramification section
  if (k == 9) out.generator_degrees.push_back(minus_k);  // pull-back of an anticanonical section
  out.relation_degrees = conics.classes;
  out.relation_degrees.push_back(minus_k * Int(2));
  return out;
}

int nikulin_count(int rho) {
  if (rho < 3 || rho > 20) throw Error("nikulin_count: rank out of range [3,20]");
  switch (rho) {
    case 3: return 27;
    case 4: return 17;
    case 5:
    case 6: return 10;
    case 7: return 9;
    case 8: return 12;
    case 9: return 10;
    case 10: return 9;
    case 11:
    case 12: return 4;
    case 13:
    case 14: return 3;
    case 15:
    case 16:
    case 17:
    case 18:
    case 19: return 1;
    case 20: return 0;
  }
  return 0;
}

}  // namespace coxk3::k3

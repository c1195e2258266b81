#include "coxk3/toric.hpp"

#include <algorithm>
#include <set>

namespace coxk3::toric {

void validate(const Fan& fan) {
  if (fan.lattice_rank < 1) throw Error("fan: lattice rank must be positive");
  if (fan.rays.empty()) throw Error("fan: no rays");
  for (const IVec& r : fan.rays) {
    if (static_cast<int>(r.size()) != fan.lattice_rank) throw Error("fan: ray rank mismatch");
    if (is_zero(r)) throw Error("fan: zero ray");
    if (content(r) != 1) throw Error("fan: ray is not primitive");
  }
  for (size_t i = 0; i < fan.rays.size(); ++i)
    for (size_t j = i + 1; j < fan.rays.size(); ++j)
      if (vec_eq(fan.rays[i], fan.rays[j])) throw Error("fan: duplicate ray");
  for (const auto& c : fan.max_cones) {
    if (c.empty()) throw Error("fan: empty max cone");
    std::set<int> seen;
    std::vector<IVec> gens;
    for (int i : c) {
      if (i < 0 || i >= static_cast<int>(fan.rays.size())) throw Error("fan: cone index out of range");
      if (!seen.insert(i).second) throw Error("fan: repeated index in cone");
      gens.push_back(fan.rays[static_cast<size_t>(i)]);
    }
    IMat m = from_columns(gens, fan.lattice_rank);
    if (intlin::rank_of(m) != static_cast<Eigen::Index>(gens.size()))
      throw Error("fan: max cone is not simplicial");
  }
  IMat p = from_columns(fan.rays, fan.lattice_rank);
  if (!intlin::is_surjective_lattice_map(p)) throw Error("fan: rays do not span the lattice");
}

namespace {

// angular position of a 2-D ray: quadrant sweep + cross products, exact
bool angle_less(const IVec& a, const IVec& b) {
  auto half = [](const IVec& v) {
    // 0 for upper half (y > 0, or y == 0 and x > 0), 1 for lower
    if (v(1) > 0 || (v(1) == 0 && v(0) > 0)) return 0;
    return 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Int cross = a(0) * b(1) - a(1) * b(0);
  return cross > 0;
}

}  // namespace

bool complete_2d(const Fan& fan) {
  if (fan.lattice_rank != 2) throw Error("complete_2d: fan is not two-dimensional");
  std::vector<int> order(fan.rays.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return angle_less(fan.rays[static_cast<size_t>(i)], fan.rays[static_cast<size_t>(j)]);
  });
  std::set<std::set<int>> expected;
  for (size_t i = 0; i < order.size(); ++i) {
    int a = order[i], b = order[(i + 1) % order.size()];
    // consecutive rays must span a strictly convex cone
    const IVec &va = fan.rays[static_cast<size_t>(a)], &vb = fan.rays[static_cast<size_t>(b)];
    Int cross = va(0) * vb(1) - va(1) * vb(0);
    if (cross <= 0 && order.size() > 2) return false;
    expected.insert({a, b});
  }
  std::set<std::set<int>> actual;
  for (const auto& c : fan.max_cones) actual.insert(std::set<int>(c.begin(), c.end()));
  return expected == actual;
}

ToricCoxPresentation cox_construction(const Fan& fan) {
  validate(fan);
  ToricCoxPresentation out;
  out.p = from_columns(fan.rays, fan.lattice_rank);
  out.q = intlin::gale_dual(out.p);
  for (size_t i = 0; i < fan.rays.size(); ++i) out.variables.push_back("T" + std::to_string(i + 1));
  return out;
}

Fan stellar_subdivide(const Fan& fan, const std::vector<int>& cone_indices) {
  validate(fan);
  std::set<int> sel(cone_indices.begin(), cone_indices.end());
  if (sel.size() < 2) throw Error("stellar_subdivide: need at least two rays");
  bool is_face = false;
  for (const auto& c : fan.max_cones) {
    std::set<int> cs(c.begin(), c.end());
    if (std::includes(cs.begin(), cs.end(), sel.begin(), sel.end())) {
      is_face = true;
      break;
    }
  }
  if (!is_face) throw Error("stellar_subdivide: index set is not a cone of the fan");

  IVec star = IVec::Zero(fan.lattice_rank);
  for (int i : sel) star += fan.rays[static_cast<size_t>(i)];
  if (is_zero(star)) throw Error("stellar_subdivide: ray sum vanishes");
  if (content(star) != 1) throw Error("stellar_subdivide: ray sum is not primitive");
  for (const IVec& r : fan.rays)
    if (vec_eq(r, star)) throw Error("stellar_subdivide: subdivision ray already present");

  Fan out;
  out.lattice_rank = fan.lattice_rank;
  out.rays = fan.rays;
  out.rays.push_back(star);
  int star_idx = static_cast<int>(out.rays.size()) - 1;

  for (const auto& c : fan.max_cones) {
    std::set<int> cs(c.begin(), c.end());
    if (!std::includes(cs.begin(), cs.end(), sel.begin(), sel.end())) {
      out.max_cones.push_back(c);
      continue;
    }
    for (int drop : sel) {
      std::vector<int> nc;
      for (int i : c)
        if (i != drop) nc.push_back(i);
      nc.push_back(star_idx);
      out.max_cones.push_back(nc);
    }
  }
  validate(out);
  return out;
}

ProperTransform proper_transform(const Polynomial& f0, const std::vector<int>& blown_indices) {
  for (const Term& t : f0.terms)
    for (int e : t.exps)
      if (e < 0) throw Error("proper_transform: negative exponent");
  if (f0.zero()) throw Error("proper_transform: zero polynomial");
  for (int i : blown_indices)
    if (i < 0 || i >= f0.nvars) throw Error("proper_transform: blown index out of range");
  int star = f0.nvars;
  Polynomial sub = substitute_multiply(f0, blown_indices, star);
  int d = min_exponent(sub, star);
  ProperTransform out;
  out.f1 = divide_by_power(std::move(sub), star, d);
  out.divided_power = d;
  return out;
}

namespace {

// merged exponent gcd of a list of terms
int exps_gcd(const std::vector<Term>& terms) {
  Int g = 0;
  for (const Term& t : terms)
    for (int e : t.exps) g = gcd(g, Int(e));
  return static_cast<int>(g.get_si());
}

int support_size(const Polynomial& p) {
  int n = 0;
  for (int v = 0; v < p.nvars; ++v)
    for (const Term& t : p.terms)
      if (t.exps[static_cast<size_t>(v)] > 0) {
        ++n;
        break;
      }
  return n;
}

// monomial gcd across all terms
std::vector<int> content_monomial(const Polynomial& p) {
  std::vector<int> m(static_cast<size_t>(p.nvars), 0);
  if (p.zero()) return m;
  for (int v = 0; v < p.nvars; ++v) {
    int mn = p.terms[0].exps[static_cast<size_t>(v)];
    for (const Term& t : p.terms) mn = std::min(mn, t.exps[static_cast<size_t>(v)]);
    m[static_cast<size_t>(v)] = mn;
  }
  return m;
}

bool has_monomial_content(const Polynomial& p) {
  for (int e : content_monomial(p))
    if (e > 0) return true;
  return false;
}

// exact irreducibility over C for <= 3 terms; nullopt = outside the fragment
std::optional<bool> irreducible_small(const Polynomial& g) {
  size_t nt = g.terms.size();
  if (nt == 0) return false;
  if (nt == 1) {
    // monomials: irreducible only as a single variable to the first power
    int total = 0;
    for (int e : g.terms[0].exps) total += e;
    return total == 1;
  }
  if (has_monomial_content(g)) return false;
  if (nt == 2) {
    // binomial with coprime joint exponents is irreducible over C; a common
    // exponent divisor d >= 2 splits it as a difference of d-th powers
    return exps_gcd(g.terms) == 1;
  }
  if (nt == 3) {
    // perfect square of a binomial: A^2 + 2AB + B^2 (the only proper-power
    // pattern with three terms)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        int c = 3 - a - b;
        const Term &ta = g.terms[static_cast<size_t>(a)], &tb = g.terms[static_cast<size_t>(b)],
                   &tc = g.terms[static_cast<size_t>(c)];
        bool even_ok = true;
        std::vector<int> half_sum(ta.exps.size());
        for (size_t v = 0; v < ta.exps.size(); ++v) {
          if (ta.exps[v] % 2 || tb.exps[v] % 2) {
            even_ok = false;
            break;
          }
          half_sum[v] = ta.exps[v] / 2 + tb.exps[v] / 2;
        }
        if (!even_ok) continue;
        if (half_sum == tc.exps && tc.coeff * tc.coeff == ta.coeff * tb.coeff * 4) return false;
      }
    // a variable of exponent one confined to a single term whose monomial
    // cofactor shares no variable with the other terms forces irreducibility
    for (int v = 0; v < g.nvars; ++v) {
      int carrier = -1;
      bool linear = true;
      for (size_t t = 0; t < 3; ++t) {
        int e = g.terms[t].exps[static_cast<size_t>(v)];
        if (e == 0) continue;
        if (e > 1 || carrier >= 0) {
          linear = false;
          break;
        }
        carrier = static_cast<int>(t);
      }
      if (!linear || carrier < 0) continue;
      // cofactor of v in the carrier term, versus the remaining binomial
      const Term& tc = g.terms[static_cast<size_t>(carrier)];
      bool disjoint = true;
      for (int u = 0; u < g.nvars && disjoint; ++u) {
        if (u == v || tc.exps[static_cast<size_t>(u)] == 0) continue;
        for (size_t t = 0; t < 3; ++t) {
          if (static_cast<int>(t) == carrier) continue;
          if (g.terms[t].exps[static_cast<size_t>(u)] > 0) {
            disjoint = false;
            break;
          }
        }
      }
      if (disjoint) return true;  // linear in v with coprime cofactor
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

AdmissibilityReport admissibility_check(const Polynomial& f0, const std::vector<int>& blown_indices) {
  AdmissibilityReport rep;
  if (f0.zero()) {
    rep.verdict = Admissibility::fail;
    rep.reason = "zero polynomial";
    return rep;
  }
  int k0 = weighted_degree(f0.terms[0], blown_indices);
  for (const Term& t : f0.terms) k0 = std::min(k0, weighted_degree(t, blown_indices));
  Polynomial g = poly_zero(f0.nvars);
  for (const Term& t : f0.terms)
    if (weighted_degree(t, blown_indices) == k0) g.terms.push_back(t);
  g = normalized(std::move(g));
  rep.lowest_part = g;

  if (support_size(g) < 2) {
    rep.verdict = Admissibility::fail;
    rep.reason = "lowest part involves fewer than two variables";
    return rep;
  }
  std::optional<bool> irr = irreducible_small(g);
  if (!irr.has_value()) {
    rep.verdict = Admissibility::unknown;
    rep.reason = "irreducibility undecided outside the <=3-term fragment";
    return rep;
  }
  if (!*irr) {
    rep.verdict = Admissibility::fail;
    rep.reason = "lowest part is reducible";
    return rep;
  }

  // orbit test: with the blown coordinates set to zero, the restriction must
  // be nonzero and vanish somewhere on the open torus; over C that means it
  // has at least two terms
  Polynomial h = set_vars_to_zero(f0, blown_indices);
  if (h.zero()) {
    rep.verdict = Admissibility::fail;
    rep.reason = "hypersurface contains the blown-down orbit closure";
    return rep;
  }
  if (h.terms.size() < 2) {
    rep.verdict = Admissibility::fail;
    rep.reason = "restriction to the orbit is a monomial, no torus zero";
    return rep;
  }
  rep.verdict = Admissibility::pass;
  rep.reason = "lowest part irreducible; orbit intersection nonempty";
  return rep;
}

HypersurfaceEmbedding embed_hypersurface(const graded::GradedPresentation& pres) {
  if (pres.relations.size() != 1) throw Error("embed_hypersurface: exactly one relation required");
  const auto* g = std::get_if<Polynomial>(&pres.relations[0]);
  if (!g || g->zero()) throw Error("embed_hypersurface: relation must be a nonzero polynomial");
  IVec dg = graded::relation_degree(pres, pres.relations[0]);
  Eigen::Index r = pres.generators();
  HypersurfaceEmbedding out;
  out.ambient_q = IMat(pres.grading_rank(), r + 1);
  out.ambient_q.leftCols(r) = pres.q;
  out.ambient_q.col(r) = dg;
  Polynomial tnew = monomial(static_cast<int>(r) + 1,
                             [&] {
                               std::vector<int> e(static_cast<size_t>(r) + 1, 0);
                               e[static_cast<size_t>(r)] = 1;
                               return e;
                             }());
  out.f0 = sub(tnew, extend_vars(*g, static_cast<int>(r) + 1));
  return out;
}

}  // namespace coxk3::toric

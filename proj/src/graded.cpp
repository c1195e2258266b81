#include "coxk3/graded.hpp"

#include "coxk3/cones.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace coxk3::graded {

bool is_explicit(const Relation& r) { return std::holds_alternative<Polynomial>(r); }

namespace {

IVec term_degree(const IMat& q, const Term& t) {
  IVec d = IVec::Zero(q.rows());
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    int e = t.exps[static_cast<size_t>(j)];
    if (e != 0) d += q.col(j) * Int(e);
  }
  return d;
}

}  // namespace

IVec relation_degree(const GradedPresentation& pres, const Relation& r) {
  if (const auto* g = std::get_if<GenericRelation>(&r)) {
    if (g->degree.size() != pres.grading_rank()) throw Error("relation degree rank mismatch");
    return g->degree;
  }
  const Polynomial& p = std::get<Polynomial>(r);
  if (p.zero()) throw Error("relation_degree: zero relation");
  if (p.nvars != static_cast<int>(pres.generators()))
    throw Error("relation_degree: variable count mismatch");
  IVec d = term_degree(pres.q, p.terms[0]);
  for (const Term& t : p.terms)
    if (!vec_eq(term_degree(pres.q, t), d))
      throw Error("relation_degree: relation is not homogeneous");
  return d;
}

IVec pointedness_certificate(const IMat& q) {
  for (Eigen::Index j = 0; j < q.cols(); ++j)
    if (is_zero(IVec(q.col(j)))) throw Error("pointedness_certificate: zero generator degree");
  cones::Cone hull = cones::positive_hull(columns_of(q), static_cast<int>(q.rows()));
  if (!hull.pointed()) throw Error("pointedness_certificate: grading is not pointed");
  cones::Cone dual = cones::dual_cone(hull);
  IVec lambda = IVec::Zero(q.rows());
  for (const IVec& r : cones::generators(dual)) lambda += r;
  for (Eigen::Index j = 0; j < q.cols(); ++j)
    if (dot(lambda, IVec(q.col(j))) <= 0)
      throw Error("pointedness_certificate: certificate construction failed");
  return lambda;
}

namespace {

void enumerate_monomials(const IMat& q, const IVec& w, const IVec& lambda,
                         const std::function<void(const std::vector<int>&)>& emit) {
  Eigen::Index r = q.cols();
  std::vector<Int> weights(static_cast<size_t>(r));
  for (Eigen::Index j = 0; j < r; ++j) weights[static_cast<size_t>(j)] = dot(lambda, IVec(q.col(j)));
  std::vector<int> exps(static_cast<size_t>(r), 0);
  std::function<void(Eigen::Index, IVec, Int)> rec = [&](Eigen::Index j, IVec rem, Int budget) {
    if (budget < 0) return;
    if (j == r) {
      if (budget == 0 && is_zero(rem)) emit(exps);
      return;
    }
    if (j == r - 1) {
      // last variable: the exponent is forced by the weight budget
      const Int& wt = weights[static_cast<size_t>(j)];
      if (budget % wt != 0) return;
      Int e = budget / wt;
      if (e > 1000000) throw Error("count_monomials: exponent bound exceeded");
      IVec left = rem - q.col(j) * e;
      if (is_zero(left)) {
        exps[static_cast<size_t>(j)] = static_cast<int>(e.get_si());
        emit(exps);
        exps[static_cast<size_t>(j)] = 0;
      }
      return;
    }
    Int emax = budget / weights[static_cast<size_t>(j)];
    if (emax > 1000000) throw Error("count_monomials: exponent bound exceeded");
    IVec cur = rem;
    for (Int e = 0; e <= emax; ++e) {
      exps[static_cast<size_t>(j)] = static_cast<int>(e.get_si());
      rec(j + 1, cur, budget - weights[static_cast<size_t>(j)] * e);
      cur -= q.col(j);
    }
    exps[static_cast<size_t>(j)] = 0;
  };
  Int budget = dot(lambda, w);
  if (budget < 0) return;
  rec(0, w, budget);
}

}  // namespace

Int count_monomials(const IMat& q, const IVec& w) {
  if (w.size() != q.rows()) throw Error("count_monomials: degree rank mismatch");
  IVec lambda = pointedness_certificate(q);
  Int n = 0;
  enumerate_monomials(q, w, lambda, [&](const std::vector<int>&) { ++n; });
  return n;
}

std::vector<std::vector<int>> monomials_of_degree(const IMat& q, const IVec& w) {
  IVec lambda = pointedness_certificate(q);
  std::vector<std::vector<int>> out;
  enumerate_monomials(q, w, lambda, [&](const std::vector<int>& e) { out.push_back(e); });
  return out;
}

HomogeneityReport homogeneity_check(const GradedPresentation& pres) {
  HomogeneityReport rep;
  for (size_t i = 0; i < pres.relations.size(); ++i) {
    const auto* p = std::get_if<Polynomial>(&pres.relations[i]);
    if (!p) continue;
    if (p->zero()) continue;
    std::vector<IVec> degs;
    bool ok = true;
    for (const Term& t : p->terms) {
      degs.push_back(term_degree(pres.q, t));
      if (!vec_eq(degs.back(), degs.front())) ok = false;
    }
    if (!ok) {
      rep.pass = false;
      rep.failures.push_back({i, std::move(degs)});
    }
  }
  return rep;
}

bool is_complete_intersection(const GradedPresentation& pres) {
  Eigen::Index codim = pres.generators() - (2 + pres.grading_rank());
  return codim >= 0 && static_cast<Eigen::Index>(pres.relations.size()) == codim;
}

Int ci_hilbert(const GradedPresentation& pres, const IVec& w) {
  if (!is_complete_intersection(pres))
    throw Error("ci_hilbert: presentation is not a complete intersection");
  std::vector<IVec> rel_degs;
  for (const Relation& r : pres.relations) rel_degs.push_back(relation_degree(pres, r));
  size_t n = rel_degs.size();
  Int total = 0;
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    IVec target = w;
    int bits = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) {
        target -= rel_degs[i];
        ++bits;
      }
    Int c = count_monomials(pres.q, target);
    total += (bits % 2 == 0) ? c : Int(-c);
  }
  return total;
}

IVec canonical_class(const GradedPresentation& pres) {
  if (!pres.relations.empty() && !is_complete_intersection(pres))
    throw Error("canonical_class: identity applies to complete intersections only");
  IVec k = IVec::Zero(pres.grading_rank());
  for (const Relation& r : pres.relations) k += relation_degree(pres, r);
  for (Eigen::Index j = 0; j < pres.q.cols(); ++j) k -= pres.q.col(j);
  return k;
}

// ---------------------------------------------------------------------------
// Groebner machinery for standard_monomial_count.
//
// Monomial order: weighted degree first (the pointedness certificate, so
// degree-truncation is sound for multigraded-homogeneous input), then
// graded reverse lexicographic.  Deterministic throughout.

namespace {

struct GB {
  const IMat& q;
  IVec lambda;
  std::vector<Int> var_weights;

  explicit GB(const IMat& degree_matrix) : q(degree_matrix) {
    lambda = pointedness_certificate(q);
    for (Eigen::Index j = 0; j < q.cols(); ++j)
      var_weights.push_back(dot(lambda, IVec(q.col(j))));
  }

  Int wdeg(const std::vector<int>& e) const {
    Int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += var_weights[i] * e[i];
    return d;
  }

  int tdeg(const std::vector<int>& e) const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }

  // true when a > b in the order
  bool greater(const std::vector<int>& a, const std::vector<int>& b) const {
    Int wa = wdeg(a), wb = wdeg(b);
    if (wa != wb) return wa > wb;
    int ta = tdeg(a), tb = tdeg(b);
    if (ta != tb) return ta > tb;
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];  // grevlex
    }
    return false;
  }

  const Term& leading(const Polynomial& p) const {
    size_t best = 0;
    for (size_t i = 1; i < p.terms.size(); ++i)
      if (greater(p.terms[i].exps, p.terms[best].exps)) best = i;
    return p.terms[best];
  }

  static bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  Polynomial reduce(Polynomial f, const std::vector<Polynomial>& basis) const {
    Polynomial out = poly_zero(f.nvars);
    long guard = 0;
    while (!f.zero()) {
      if (++guard > 2000000) throw Error("groebner: reduction guard tripped");
      const Term lt = leading(f);
      bool reduced = false;
      for (const Polynomial& g : basis) {
        const Term& lg = leading(g);
        if (!divides(lg.exps, lt.exps)) continue;
        std::vector<int> sh(lt.exps.size());
        for (size_t i = 0; i < sh.size(); ++i) sh[i] = lt.exps[i] - lg.exps[i];
        Polynomial m = monomial(f.nvars, sh, lt.coeff / lg.coeff);
        f = sub(f, mul(m, g));
        reduced = true;
        break;
      }
      if (!reduced) {
        out.terms.push_back(lt);
        f = sub(f, monomial(f.nvars, lt.exps, lt.coeff));
      }
    }
    return normalized(std::move(out));
  }

  std::vector<Polynomial> buchberger(std::vector<Polynomial> basis, const Int& degree_cap,
                                     long spair_cap) const {
    struct Pair {
      size_t i, j;
      Int deg;
    };
    auto lcm_exps = [](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> l(a.size());
      for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
      return l;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](size_t upto) {
      for (size_t i = 0; i < upto; ++i) {
        Int d = wdeg(lcm_exps(leading(basis[i]).exps, leading(basis[upto]).exps));
        if (d <= degree_cap) pairs.push_back({i, upto, d});
      }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);
    long processed = 0;
    while (!pairs.empty()) {
      // smallest degree, then lowest indices: deterministic
      size_t best = 0;
      for (size_t t = 1; t < pairs.size(); ++t) {
        const Pair &a = pairs[t], &b = pairs[best];
        if (a.deg < b.deg || (a.deg == b.deg && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = t;
      }
      Pair pr = pairs[best];
      pairs.erase(pairs.begin() + static_cast<long>(best));
      if (++processed > spair_cap)
        throw Error("groebner: S-pair cap exceeded (raise COXK3_SPAIR_CAP)");
      const Polynomial &f = basis[pr.i], &g = basis[pr.j];
      const Term &lf = leading(f), &lg = leading(g);
      std::vector<int> l = lcm_exps(lf.exps, lg.exps);
      std::vector<int> sf(l.size()), sg(l.size());
      for (size_t t = 0; t < l.size(); ++t) {
        sf[t] = l[t] - lf.exps[t];
        sg[t] = l[t] - lg.exps[t];
      }
      Polynomial s = sub(mul(monomial(f.nvars, sf, Rat(1) / lf.coeff), f),
                         mul(monomial(g.nvars, sg, Rat(1) / lg.coeff), g));
      Polynomial rem = reduce(std::move(s), basis);
      if (!rem.zero()) {
        basis.push_back(rem);
        push_pairs(basis.size() - 1);
      }
    }
    return basis;
  }
};

}  // namespace

Int standard_monomial_count(const GradedPresentation& pres, const IVec& w, long spair_cap) {
  std::vector<Polynomial> gens;
  for (const Relation& r : pres.relations) {
    const auto* p = std::get_if<Polynomial>(&r);
    if (!p) throw Error("standard_monomial_count: generic relations present");
    if (p->zero()) continue;
    relation_degree(pres, r);  // degree truncation needs homogeneous input
    gens.push_back(*p);
  }
  GB gb(pres.q);
  Int cap = dot(gb.lambda, w);
  auto monos = monomials_of_degree(pres.q, w);
  if (gens.empty()) return Int(static_cast<long>(monos.size()));
  std::vector<Polynomial> basis = gb.buchberger(std::move(gens), cap, spair_cap);
  std::vector<std::vector<int>> lts;
  for (const Polynomial& g : basis) lts.push_back(gb.leading(g).exps);
  Int count = 0;
  for (const auto& m : monos) {
    bool standard = true;
    for (const auto& lt : lts)
      if (GB::divides(lt, m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
  }
  return count;
}

namespace {

// Solve u * a_i = b_i over Q for the d x d matrix u given d independent
// column pairs; returns false when no integral unimodular solution exists.
bool solve_unimodular(const std::vector<std::pair<IVec, IVec>>& pairs, Eigen::Index d, IMat& u) {
  QMat a(d, d), b(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      a(i, j) = Rat(pairs[static_cast<size_t>(j)].first(i));
      b(i, j) = Rat(pairs[static_cast<size_t>(j)].second(i));
    }
  }
  // u = b * a^{-1}: solve a^T u^T = b^T column by column
  QMat at = a.transpose();
  IMat ut(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    QVec rhs(d);
    for (Eigen::Index i = 0; i < d; ++i) rhs(i) = b(j, i);
    QVec x;
    if (!solve_rational(at, rhs, x)) return false;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (x(i).get_den() != 1) return false;
      ut(j, i) = x(i).get_num();
    }
  }
  u = ut;
  Int dd = det(u);
  return dd == 1 || dd == -1;
}

}  // namespace

bool presentation_equivalent(const GradedPresentation& p1, const GradedPresentation& p2) {
  if (p1.generators() != p2.generators() || p1.grading_rank() != p2.grading_rank()) return false;
  if (p1.relations.size() != p2.relations.size()) return false;
  Eigen::Index n = p1.generators(), d = p1.grading_rank();
  std::vector<IVec> c1 = columns_of(p1.q), c2 = columns_of(p2.q);

  std::vector<IVec> rel1, rel2;
  for (const Relation& r : p1.relations) rel1.push_back(relation_degree(p1, r));
  for (const Relation& r : p2.relations) rel2.push_back(relation_degree(p2, r));

  std::vector<int> assign(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);

  std::function<bool(Eigen::Index, const std::optional<IMat>&)> search =
      [&](Eigen::Index j, const std::optional<IMat>& u) -> bool {
    if (j == n) {
      if (!u) return false;
      // verify the relation degrees correspond under the same map
      std::vector<IVec> mapped;
      for (const IVec& r : rel1) mapped.push_back(*u * r);
      std::vector<IVec> want = rel2;
      std::sort(mapped.begin(), mapped.end(), lex_less);
      std::sort(want.begin(), want.end(), lex_less);
      for (size_t i = 0; i < mapped.size(); ++i)
        if (!vec_eq(mapped[i], want[i])) return false;
      return true;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (used[static_cast<size_t>(i)]) continue;
      if (u && !vec_eq(*u * c1[static_cast<size_t>(i)], c2[static_cast<size_t>(j)])) continue;
      assign[static_cast<size_t>(j)] = static_cast<int>(i);
      used[static_cast<size_t>(i)] = true;
      std::optional<IMat> next = u;
      bool viable = true;
      if (!u) {
        // try to pin the basis change once enough independent pairs exist
        std::vector<std::pair<IVec, IVec>> pairs;
        std::vector<IVec> chosen;
        for (Eigen::Index t = 0; t <= j; ++t) {
          pairs.emplace_back(c1[static_cast<size_t>(assign[static_cast<size_t>(t)])],
                             c2[static_cast<size_t>(t)]);
          chosen.push_back(pairs.back().first);
        }
        if (intlin::rank_of(from_columns(chosen, d)) == d) {
          // pick d independent pairs
          std::vector<std::pair<IVec, IVec>> indep;
          std::vector<IVec> acc;
          for (auto& pr : pairs) {
            acc.push_back(pr.first);
            if (intlin::rank_of(from_columns(acc, d)) == static_cast<Eigen::Index>(acc.size()))
              indep.push_back(pr);
            else
              acc.pop_back();
            if (static_cast<Eigen::Index>(indep.size()) == d) break;
          }
          IMat u0;
          if (solve_unimodular(indep, d, u0)) {
            // check all assigned columns under the pinned map
            bool all_ok = true;
            for (Eigen::Index t = 0; t <= j && all_ok; ++t)
              all_ok = vec_eq(u0 * c1[static_cast<size_t>(assign[static_cast<size_t>(t)])],
                              c2[static_cast<size_t>(t)]);
            if (all_ok)
              next = u0;
            else
              viable = false;
          } else {
            viable = false;
          }
        }
      }
      if (viable && search(j + 1, next)) return true;
      used[static_cast<size_t>(i)] = false;
      assign[static_cast<size_t>(j)] = -1;
    }
    return false;
  };
  return search(0, std::nullopt);
}

}  // namespace coxk3::graded

#include "coxk3/cones.hpp"

#include "linprog.hpp"

#include <algorithm>

namespace coxk3::cones {

namespace {

bool member_of(const std::vector<IVec>& gens, const IVec& x) {
  Eigen::Index dim = x.size();
  QMat a(dim, static_cast<Eigen::Index>(gens.size()));
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < dim; ++i) a(i, j) = Rat(gens[static_cast<size_t>(j)](i));
  QVec b(dim);
  for (Eigen::Index i = 0; i < dim; ++i) b(i) = Rat(x(i));
  return detail::nonneg_solve(a, b);
}

std::vector<IVec> cleanup(std::vector<IVec> v) {
  std::vector<IVec> out;
  for (IVec& x : v) {
    if (is_zero(x)) continue;
    IVec p = primitive(std::move(x));
    bool dup = false;
    for (const IVec& y : out)
      if (vec_eq(p, y)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

/// Saturated lattice basis of span(vs), Hermite-canonical, as column vectors.
std::vector<IVec> saturated_span(const std::vector<IVec>& vs, int dim) {
  if (vs.empty()) return {};
  IMat m = from_columns(vs, dim);
  IMat perp = intlin::kernel_lattice(m.transpose());  // columns: span(vs)^perp
  IMat basis = intlin::kernel_lattice(perp.transpose());
  std::vector<IVec> out = columns_of(basis);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

std::vector<IVec> generators(const Cone& c) {
  std::vector<IVec> g = c.rays;
  for (const IVec& l : c.lineality) {
    g.push_back(l);
    g.push_back(-l);
  }
  return g;
}

bool contains(const Cone& c, const IVec& x) {
  if (static_cast<int>(x.size()) != c.ambient_dim) throw Error("contains: dimension mismatch");
  if (is_zero(x)) return true;
  if (c.trivial()) return false;
  return member_of(generators(c), x);
}

bool equal(const Cone& a, const Cone& b) {
  if (a.ambient_dim != b.ambient_dim) return false;
  if (a.rays.size() != b.rays.size() || a.lineality.size() != b.lineality.size()) return false;
  for (size_t i = 0; i < a.rays.size(); ++i)
    if (!vec_eq(a.rays[i], b.rays[i])) return false;
  for (size_t i = 0; i < a.lineality.size(); ++i)
    if (!vec_eq(a.lineality[i], b.lineality[i])) return false;
  return true;
}

bool subset_of(const Cone& inner, const Cone& outer) {
  for (const IVec& g : generators(inner))
    if (!contains(outer, g)) return false;
  return true;
}

Cone positive_hull(const std::vector<IVec>& vectors, int ambient_dim) {
  if (ambient_dim < 1 || ambient_dim > kMaxDim)
    throw Error("positive_hull: ambient dimension out of supported range");
  for (const IVec& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim) throw Error("positive_hull: dimension mismatch");

  Cone c;
  c.ambient_dim = ambient_dim;
  std::vector<IVec> gens = cleanup(vectors);
  if (gens.empty()) return c;

  // lineality = span of the generators whose negative also lies in the cone
  std::vector<IVec> two_sided;
  for (const IVec& g : gens)
    if (member_of(gens, -g)) two_sided.push_back(g);
  c.lineality = saturated_span(two_sided, ambient_dim);

  if (c.lineality.empty()) {
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<IVec> others;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      if (others.empty() || !member_of(others, gens[i])) c.rays.push_back(gens[i]);
    }
    std::sort(c.rays.begin(), c.rays.end(), lex_less);
    return c;
  }

  // quotient by the lineality lattice via a unimodular change of basis
  IMat k = from_columns(c.lineality, ambient_dim);
  intlin::SmithDecomposition s = intlin::smith_normal_form(k);
  Eigen::Index l = k.cols();
  // rows l..dim-1 of u*k vanish, so u maps the lineality lattice onto the
  // first l coordinates; quotient coordinates are the trailing rows of u*x
  std::vector<IVec> imgs;
  for (const IVec& g : gens) {
    IVec ux = s.u * g;
    IVec q = ux.tail(ambient_dim - l);
    if (!is_zero(q)) imgs.push_back(std::move(q));
  }
  imgs = cleanup(imgs);
  IMat uinv_cols = IMat::Zero(ambient_dim, ambient_dim - l);
  {
    // columns of u^{-1} for the quotient coordinates; u is unimodular so
    // solve u * x = e_i exactly over the rationals and round (entries are
    // integers by unimodularity)
    QMat uq = to_rational(s.u);
    for (Eigen::Index j = l; j < ambient_dim; ++j) {
      QVec e = QVec::Zero(ambient_dim);
      e(j) = 1;
      QVec x;
      if (!solve_rational(uq, e, x)) throw Error("positive_hull: singular basis change");
      for (Eigen::Index i = 0; i < ambient_dim; ++i) {
        if (x(i).get_den() != 1) throw Error("positive_hull: non-integral basis change");
        uinv_cols(i, j - l) = x(i).get_num();
      }
    }
  }
  for (size_t i = 0; i < imgs.size(); ++i) {
    std::vector<IVec> others;
    for (size_t j = 0; j < imgs.size(); ++j)
      if (j != i) others.push_back(imgs[j]);
    if (others.empty() || !member_of(others, imgs[i]))
      c.rays.push_back(primitive(uinv_cols * imgs[i]));
  }
  std::sort(c.rays.begin(), c.rays.end(), lex_less);
  return c;
}

Cone cone_from_constraints(const std::vector<IVec>& constraints, int ambient_dim) {
  // double description: start from the full space, cut one halfspace at a time
  std::vector<IVec> lin;
  for (int i = 0; i < ambient_dim; ++i) {
    IVec e = IVec::Zero(ambient_dim);
    e(i) = 1;
    lin.push_back(e);
  }
  std::vector<IVec> rays;

  for (const IVec& a : constraints) {
    if (static_cast<int>(a.size()) != ambient_dim)
      throw Error("cone_from_constraints: dimension mismatch");
    if (is_zero(a)) continue;

    Eigen::Index hit = -1;
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        hit = static_cast<Eigen::Index>(i);
        break;
      }
    if (hit >= 0) {
      IVec l0 = lin[static_cast<size_t>(hit)];
      if (dot(a, l0) < 0) l0 = -l0;
      Int al0 = dot(a, l0);
      std::vector<IVec> new_lin;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<Eigen::Index>(i) == hit) continue;
        IVec l = lin[i] * al0 - l0 * dot(a, lin[i]);
        if (!is_zero(l)) new_lin.push_back(primitive(l));
      }
      std::vector<IVec> new_rays;
      new_rays.push_back(primitive(l0));
      for (const IVec& r : rays) {
        IVec w = r * al0 - l0 * dot(a, r);
        if (!is_zero(w)) new_rays.push_back(primitive(w));
      }
      lin = std::move(new_lin);
      rays = std::move(new_rays);
      continue;
    }

    std::vector<IVec> pos, zero, neg;
    std::vector<Int> vals;
    for (const IVec& r : rays) {
      Int v = dot(a, r);
      if (v > 0)
        pos.push_back(r);
      else if (v == 0)
        zero.push_back(r);
      else
        neg.push_back(r);
    }
    std::vector<IVec> new_rays = pos;
    for (const IVec& z : zero) new_rays.push_back(z);
    for (const IVec& p : pos)
      for (const IVec& n : neg) {
        IVec w = n * dot(a, p) - p * dot(a, n);
        if (!is_zero(w)) new_rays.push_back(primitive(w));
      }
    rays = cleanup(new_rays);
  }

  std::vector<IVec> gens = rays;
  for (const IVec& l : lin) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return positive_hull(gens, ambient_dim);
}

Cone dual_cone(const Cone& c) { return cone_from_constraints(generators(c), c.ambient_dim); }

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim != b.ambient_dim) throw Error("intersect: dimension mismatch");
  std::vector<IVec> constraints;
  for (const Cone* c : {&a, &b}) {
    Cone d = dual_cone(*c);
    for (const IVec& g : generators(d)) constraints.push_back(g);
  }
  return cone_from_constraints(constraints, a.ambient_dim);
}

Cone moving_cone(const std::vector<IVec>& degrees, int ambient_dim) {
  if (degrees.empty()) throw Error("moving_cone: empty degree list");
  Cone acc;
  bool first = true;
  for (size_t i = 0; i < degrees.size(); ++i) {
    std::vector<IVec> rest;
    for (size_t j = 0; j < degrees.size(); ++j)
      if (j != i) rest.push_back(degrees[j]);
    Cone h = positive_hull(rest, ambient_dim);
    acc = first ? h : intersect(acc, h);
    first = false;
    if (acc.trivial()) break;
  }
  return acc;
}

Cone dual_cone_under_form(const Cone& c, const intlin::GramForm& g) {
  if (static_cast<int>(g.rank()) != c.ambient_dim)
    throw Error("dual_cone_under_form: dimension mismatch");
  if (det(g.gram) == 0) throw Error("dual_cone_under_form: degenerate form");
  std::vector<IVec> constraints;
  for (const IVec& v : generators(c)) constraints.push_back(g.gram * v);
  return cone_from_constraints(constraints, c.ambient_dim);
}

}  // namespace coxk3::cones

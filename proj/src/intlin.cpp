#include "coxk3/intlin.hpp"

#include <algorithm>
#include <sstream>

namespace coxk3::intlin {

namespace {

void swap_rows(IMat& a, IMat& u, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  a.row(i).swap(a.row(j));
  u.row(i).swap(u.row(j));
}

void swap_cols(IMat& a, IMat& v, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  a.col(i).swap(a.col(j));
  v.col(i).swap(v.col(j));
}

// row_i -= q * row_t, mirrored in u
void row_axpy(IMat& a, IMat& u, Eigen::Index i, Eigen::Index t, const Int& q) {
  if (q == 0) return;
  a.row(i) -= a.row(t) * q;
  u.row(i) -= u.row(t) * q;
}

void col_axpy(IMat& a, IMat& v, Eigen::Index j, Eigen::Index t, const Int& q) {
  if (q == 0) return;
  a.col(j) -= a.col(t) * q;
  v.col(j) -= v.col(t) * q;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IMat& m) {
  Eigen::Index rows = m.rows(), cols = m.cols();
  IMat a = m;
  IMat u = IMat::Identity(rows, rows);
  IMat v = IMat::Identity(cols, cols);

  Eigen::Index t = 0;
  while (t < std::min(rows, cols)) {
    // smallest nonzero entry of the trailing block as pivot
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        if (pi < 0 || abs(a(i, j)) < abs(a(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    swap_rows(a, u, t, pi);
    swap_cols(a, v, t, pj);

    for (;;) {
      // clear column t
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        while (a(i, t) != 0) {
          row_axpy(a, u, i, t, fdiv(a(i, t), a(t, t)));
          if (a(i, t) != 0) {
            swap_rows(a, u, t, i);
            dirty = true;
          }
        }
      }
      // clear row t
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        while (a(t, j) != 0) {
          col_axpy(a, v, j, t, fdiv(a(t, j), a(t, t)));
          if (a(t, j) != 0) {
            swap_cols(a, v, t, j);
            dirty = true;
          }
        }
      }
      if (dirty) continue;

      // enforce that the pivot divides the whole trailing block
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = t + 1; i < rows && bi < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      a.row(t) += a.row(bi);
      u.row(t) += u.row(bi);
      (void)bj;
    }

    if (a(t, t) < 0) {
      a.row(t) *= Int(-1);
      u.row(t) *= Int(-1);
    }
    ++t;
  }
  return {u, a, v};
}

std::vector<Int> invariant_factors(const IMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  std::vector<Int> out;
  for (Eigen::Index i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
    if (s.d(i, i) != 0) out.push_back(s.d(i, i));
  return out;
}

Eigen::Index rank_of(const IMat& m) {
  return static_cast<Eigen::Index>(invariant_factors(m).size());
}

bool is_surjective_lattice_map(const IMat& m) {
  std::vector<Int> f = invariant_factors(m);
  if (static_cast<Eigen::Index>(f.size()) != m.rows()) return false;
  for (const Int& d : f)
    if (d != 1) return false;
  return true;
}

IMat hermite_row_basis(const IMat& m) {
  Eigen::Index rows = m.rows(), cols = m.cols();
  IMat a = m;
  IMat dummy = IMat::Identity(rows, rows);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // reduce column c below r to a single entry via row gcds
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0 && (p < 0 || abs(a(i, c)) < abs(a(p, c)))) p = i;
    if (p < 0) continue;
    swap_rows(a, dummy, r, p);
    bool again = true;
    while (again) {
      again = false;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        row_axpy(a, dummy, i, r, fdiv(a(i, c), a(r, c)));
        if (a(i, c) != 0) {
          swap_rows(a, dummy, r, i);
          again = true;
        }
      }
    }
    if (a(r, c) < 0) a.row(r) *= Int(-1);
    // reduce entries above the pivot into [0, pivot)
    for (Eigen::Index i = 0; i < r; ++i) row_axpy(a, dummy, i, r, fdiv(a(i, c), a(r, c)));
    ++r;
  }
  return a.topRows(r);
}

IMat kernel_lattice(const IMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
    if (s.d(i, i) != 0) ++r;
  Eigen::Index n = m.cols();
  IMat basis = s.v.rightCols(n - r);
  // canonicalize so kernel equality is plain matrix equality
  IMat h = hermite_row_basis(basis.transpose());
  return h.transpose();
}

IMat gale_dual(const IMat& p) {
  if (!is_surjective_lattice_map(p))
    throw Error("gale_dual: matrix is not surjective (generators do not span the lattice)");
  return kernel_lattice(p).transpose();
}

bool unimodular_row_equivalent(const IMat& q1, const IMat& q2) {
  if (q1.rows() != q2.rows() || q1.cols() != q2.cols())
    throw Error("unimodular_row_equivalent: shape mismatch");
  if (!is_surjective_lattice_map(q1) || !is_surjective_lattice_map(q2))
    throw Error("unimodular_row_equivalent: inputs must be surjective");
  return mat_eq(kernel_lattice(q1), kernel_lattice(q2));
}

GramForm::GramForm(IMat g, bool even_flag) : gram(std::move(g)), even(even_flag) {
  if (gram.rows() != gram.cols()) throw Error("GramForm: matrix not square");
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = i + 1; j < gram.cols(); ++j)
      if (gram(i, j) != gram(j, i)) throw Error("GramForm: matrix not symmetric");
  if (even)
    for (Eigen::Index i = 0; i < gram.rows(); ++i)
      if (gram(i, i) % 2 != 0) throw Error("GramForm: odd diagonal entry in even form");
}

GramForm direct_sum(const GramForm& a, const GramForm& b) {
  Eigen::Index n = a.rank(), m = b.rank();
  IMat g = IMat::Zero(n + m, n + m);
  g.topLeftCorner(n, n) = a.gram;
  g.bottomRightCorner(m, m) = b.gram;
  return GramForm(g, a.even && b.even);
}

GramForm twist(const GramForm& a, const Int& k) {
  IMat g = a.gram * k;
  bool even = a.even || (k % 2 == 0);
  return GramForm(g, even);
}

namespace {

GramForm named_form(const std::string& name) {
  if (name == "U") return GramForm(make_mat({{0, 1}, {1, 0}}));
  if (name == "A1") return GramForm(make_mat({{-2}}));
  if (name == "(2)") return GramForm(make_mat({{2}}));
  if (name == "(-2)") return GramForm(make_mat({{-2}}));
  throw Error("unknown form name: " + name);
}

}  // namespace

GramForm parse_form_expression(const std::string& expr) {
  // grammar: sum of atoms; atom = NAME [ "(" int ")" ] [ "^" int ]
  std::vector<GramForm> parts;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < expr.size() && isspace(static_cast<unsigned char>(expr[i]))) ++i;
  };
  skip_ws();
  while (i < expr.size()) {
    std::string name;
    if (expr[i] == '(') {
      size_t close = expr.find(')', i);
      if (close == std::string::npos) throw Error("form expression: unbalanced parenthesis");
      name = expr.substr(i, close - i + 1);
      i = close + 1;
    } else {
      while (i < expr.size() && (isalnum(static_cast<unsigned char>(expr[i])))) ++i, name += expr[i - 1];
    }
    if (name.empty()) throw Error("form expression: expected a form name in '" + expr + "'");
    GramForm g = named_form(name);
    skip_ws();
    if (i < expr.size() && expr[i] == '(') {
      size_t close = expr.find(')', i);
      if (close == std::string::npos) throw Error("form expression: unbalanced twist");
      Int k(expr.substr(i + 1, close - i - 1));
      g = twist(g, k);
      i = close + 1;
      skip_ws();
    }
    if (i < expr.size() && expr[i] == '^') {
      ++i;
      skip_ws();
      size_t j = i;
      while (j < expr.size() && isdigit(static_cast<unsigned char>(expr[j]))) ++j;
      if (j == i) throw Error("form expression: missing exponent");
      long e = std::stol(expr.substr(i, j - i));
      if (e < 1) throw Error("form expression: exponent must be positive");
      i = j;
      GramForm pow = g;
      for (long t = 1; t < e; ++t) pow = direct_sum(pow, g);
      g = pow;
      skip_ws();
    }
    parts.push_back(g);
    skip_ws();
    if (i < expr.size()) {
      if (expr[i] != '+') throw Error("form expression: expected '+' in '" + expr + "'");
      ++i;
      skip_ws();
    }
  }
  if (parts.empty()) throw Error("form expression: empty");
  GramForm out = parts[0];
  for (size_t k = 1; k < parts.size(); ++k) out = direct_sum(out, parts[k]);
  return out;
}

std::pair<int, int> signature(const GramForm& g) {
  Eigen::Index n = g.rank();
  QMat a = to_rational(g.gram);
  int pos = 0, neg = 0;
  for (Eigen::Index t = 0; t < n; ++t) {
    if (a(t, t) == 0) {
      Eigen::Index swp = -1, add = -1;
      for (Eigen::Index i = t + 1; i < n; ++i) {
        if (a(i, i) != 0 && swp < 0) swp = i;
        if (a(t, i) != 0 && add < 0) add = i;
      }
      if (swp >= 0) {
        a.row(t).swap(a.row(swp));
        a.col(t).swap(a.col(swp));
      } else if (add >= 0) {
        // zero diagonal but nonzero pairing: fold the hyperbolic direction in
        a.row(t) += a.row(add);
        a.col(t) += a.col(add);
      } else {
        throw Error("signature: degenerate form");
      }
    }
    for (Eigen::Index i = t + 1; i < n; ++i) {
      if (a(i, t) == 0) continue;
      Rat f = a(i, t) / a(t, t);
      a.row(i) -= a.row(t) * f;
      a.col(i) -= a.col(t) * f;
    }
    if (a(t, t) > 0)
      ++pos;
    else
      ++neg;
  }
  return {pos, neg};
}

std::optional<TwoElementaryInvariants> two_elementary(const GramForm& g) {
  if (!g.even) throw Error("two_elementary: form must be even");
  if (det(g.gram) == 0) throw Error("two_elementary: degenerate form");
  SmithDecomposition s = smith_normal_form(g.gram);
  Eigen::Index n = g.rank();
  int a = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Int& d = s.d(i, i);
    if (d == 2)
      ++a;
    else if (d != 1)
      return std::nullopt;
  }
  // discriminant group generators are (column i of V)/d_i; on a 2-elementary
  // group the square is additive mod Z, so generators suffice for delta
  int delta = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (s.d(i, i) != 2) continue;
    IVec v = s.v.col(i);
    Int q = dot(v, g.gram * v);  // square of generator times d_i^2 = 4
    if (q % 4 != 0) delta = 1;
  }
  TwoElementaryInvariants inv;
  inv.rank = static_cast<int>(n);
  inv.a = a;
  inv.delta = delta;
  return inv;
}

namespace {

// Binary form a x^2 + b xy + c y^2 (b is twice the Gram off-diagonal).
struct BinForm {
  Int a, b, c;
};

Int eval_gram(const IMat& gram, const IVec& w) { return dot(w, gram * w); }

bool is_reduced(const BinForm& f, const Int& disc, const Int& s) {
  // 0 < b < sqrt(disc) and sqrt(disc) - b < 2|a| < sqrt(disc) + b
  if (f.b <= 0) return false;
  if (f.b * f.b >= disc) return false;
  Int twoa = abs(f.a) * 2;
  if ((twoa + f.b) * (twoa + f.b) <= disc) return false;  // need sqrt(disc) < 2|a| + b
  if (twoa > f.b && (twoa - f.b) * (twoa - f.b) >= disc) return false;  // need 2|a| - b < sqrt(disc)
  (void)s;
  return true;
}

// One reduction/cycle step; accumulates the change of basis in m.
BinForm rho(const BinForm& f, const Int& disc, const Int& s, IMat& m) {
  Int cc = f.c;
  Int absc = abs(cc);
  Int bp;
  if (absc > s) {
    // bring b' = -b mod 2|c| into (-|c|, |c|]
    Int r = f.b;
    mpz_fdiv_r(r.get_mpz_t(), Int(-f.b).get_mpz_t(), Int(absc * 2).get_mpz_t());
    bp = r;  // in [0, 2|c|)
    if (bp > absc) bp -= absc * 2;
  } else {
    // unique b' = -b mod 2|c| in [s - 2|c| + 1, s]
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), Int(s + f.b).get_mpz_t(), Int(absc * 2).get_mpz_t());
    bp = s - r;
  }
  Int cp = (bp * bp - disc) / (cc * 4);
  Int step = (bp + f.b) / (cc * 2);
  IMat n = IMat::Zero(2, 2);
  n(0, 0) = 0;
  n(0, 1) = -1;
  n(1, 0) = 1;
  n(1, 1) = step;
  m = m * n;
  return {cc, bp, cp};
}

Representation represent_isotropic(const IMat& gram, const Int& target, const IVec& iso) {
  // basis (v1, v2) with v1 the primitive isotropic vector
  IVec v1 = primitive(iso);
  Int p = v1(0), q = v1(1);
  Int x0, y0, gg;
  mpz_gcdext(gg.get_mpz_t(), y0.get_mpz_t(), x0.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  // p*y0 + q*x0 = 1; take v2 = (-x0, y0) so det(v1 v2) = p*y0 + q*x0 = 1
  IVec v2(2);
  v2 << -x0, y0;
  Int m = dot(v1, gram * v2);
  if (m == 0) throw Error("represents: degenerate form");
  if (m < 0) {
    v2 = -v2;
    m = -m;
  }
  Int h = dot(v2, gram * v2);
  // shift v2 by multiples of v1: h -> h mod 2m
  Int t = fdiv(h, m * 2);
  v2 -= v1 * t;
  h -= t * m * 2;
  Representation rep;
  rep.method = "isotropic normal form";
  rep.bound = "exact congruence test modulo 2m, m = " + m.get_str();
  // value on (x, 1) is 2 m x + h; need target, and |y| >= 2 is impossible
  // for even target -2 since 2 m x y + h y^2 = -2 forces y | 2 and y odd
  Int num = target - h;
  if (num % (m * 2) == 0) {
    Int x = num / (m * 2);
    IVec w = v1 * x + v2;
    if (eval_gram(gram, w) != target) throw Error("represents: internal witness check failed");
    rep.exists = true;
    rep.witness = primitive(w);
  }
  return rep;
}

}  // namespace

Representation represents(const GramForm& g, const Int& target) {
  if (g.rank() != 2) throw Error("represents: form must have rank 2");
  if (!g.even) throw Error("represents: form must be even");
  if (signature(g) != std::make_pair(1, 1)) throw Error("represents: signature must be (1,1)");
  if (target != 0 && target != -2) throw Error("represents: target must be 0 or -2");

  const IMat& gram = g.gram;
  Int a = gram(0, 0), b = gram(0, 1), c = gram(1, 1);
  Int d = b * b - a * c;  // = -det, positive by signature

  if (target == 0) {
    Representation rep;
    rep.method = "isotropy: -det perfect square test";
    rep.bound = "exact";
    if (!is_perfect_square(d)) return rep;
    rep.exists = true;
    if (a == 0) {
      rep.witness = make_vec({1, 0});
    } else {
      Int s = isqrt(d);
      IVec w(2);
      w << s - b, a;
      rep.witness = primitive(w);
    }
    if (eval_gram(gram, rep.witness) != 0) throw Error("represents: internal witness check failed");
    return rep;
  }

  // target -2
  if (is_perfect_square(d)) {
    Int s = isqrt(d);
    IVec iso(2);
    if (a == 0)
      iso << 1, 0;
    else
      iso << s - b, a;
    return represent_isotropic(gram, target, iso);
  }

  // anisotropic: cycle of reduced indefinite forms.  disc = 4(b^2 - ac) is
  // never in {8, 12} for an even form, so |target| = 2 < sqrt(disc)/2 always
  // holds and leading coefficients of the cycle decide representability.
  Int disc = d * 4;
  Int s = isqrt(disc);
  BinForm f{a, b * 2, c};
  IMat m = IMat::Identity(2, 2);
  Representation rep;
  rep.method = "reduction cycle of the indefinite binary form";

  auto witness_from = [&](const IMat& trans) {
    IVec w = trans.col(0);
    if (eval_gram(gram, w) != target) throw Error("represents: internal witness check failed");
    rep.exists = true;
    rep.witness = primitive(w);
  };

  if (f.a == target) {
    rep.bound = "leading coefficient";
    witness_from(m);
    return rep;
  }

  long guard = 0;
  while (!is_reduced(f, disc, s)) {
    f = rho(f, disc, s, m);
    if (++guard > 10000) throw Error("represents: reduction did not terminate");
  }
  BinForm start = f;
  IMat mstart = m;
  long cycle_len = 0;
  do {
    if (f.a == target) {
      rep.bound = "cycle test, valid for |t| < sqrt(" + disc.get_str() + ")/2";
      witness_from(m);
      return rep;
    }
    f = rho(f, disc, s, m);
    ++cycle_len;
    if (cycle_len > 100000) throw Error("represents: cycle did not close");
  } while (!(f.a == start.a && f.b == start.b && f.c == start.c && cycle_len > 0));
  (void)mstart;
  rep.bound = "cycle of length " + std::to_string(cycle_len) + ", valid for |t| < sqrt(" +
              disc.get_str() + ")/2";
  return rep;
}

}  // namespace coxk3::intlin

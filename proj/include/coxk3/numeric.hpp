#pragma once

// Exact scalar types and Eigen glue shared by every module.
//
// All arithmetic in this library is exact: integers are GMP mpz_class,
// rationals are GMP mpq_class.  Eigen is used as the dense container and
// expression layer on top of these scalars.  Two rules keep gmpxx's
// expression templates out of Eigen's way: never write `literal * matrix`
// (use `matrix * Int(k)`), and canonicalize any mpq_class built from a
// numerator/denominator pair.

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 60
  };
};

}  // namespace Eigen

namespace coxk3 {

using Int = mpz_class;
using Rat = mpq_class;

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Library-wide error type; thrown on violated preconditions and bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool is_perfect_square(const Int& a) {
  if (a < 0) return false;
  return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& a) {
  if (a < 0) throw Error("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

/// gcd of the entries, >= 0; content of the zero vector is 0.
inline Int content(const IVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

inline bool is_zero(const IVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

/// Divide out the content, keeping direction.  Zero stays zero.
inline IVec primitive(IVec v) {
  Int g = content(v);
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
  return v;
}

inline Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw Error("dot: size mismatch");
  Int s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

inline bool lex_less(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    int c = cmp(a(i), b(i));
    if (c != 0) return c < 0;
  }
  return false;
}

inline bool vec_eq(const IVec& a, const IVec& b) {
  return a.size() == b.size() && !lex_less(a, b) && !lex_less(b, a);
}

inline bool mat_eq(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline IMat from_columns(const std::vector<IVec>& cols, Eigen::Index rows) {
  IMat m(rows, static_cast<Eigen::Index>(cols.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (cols[static_cast<size_t>(j)].size() != rows)
      throw Error("from_columns: ragged input");
    m.col(j) = cols[static_cast<size_t>(j)];
  }
  return m;
}

inline std::vector<IVec> columns_of(const IMat& m) {
  std::vector<IVec> out;
  out.reserve(static_cast<size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

inline IVec make_vec(std::initializer_list<long> xs) {
  IVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

inline IMat make_mat(std::initializer_list<std::initializer_list<long>> rows) {
  Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  Eigen::Index c = r > 0 ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IMat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw Error("make_mat: ragged rows");
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline QMat to_rational(const IMat& m) {
  QMat q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  return q;
}

/// Fraction-free determinant (Bareiss); exact for any square integer matrix.
Int det(const IMat& m);

/// Exact rational solve a*x = b via Gaussian elimination.
/// Returns false if the system is inconsistent; requires square nonsingular a
/// when `require_unique`.
bool solve_rational(const QMat& a, const QVec& b, QVec& x);

}  // namespace coxk3

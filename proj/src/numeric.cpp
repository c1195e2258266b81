#include "coxk3/numeric.hpp"

namespace coxk3 {

Int det(const IMat& m) {
  if (m.rows() != m.cols()) throw Error("det: matrix not square");
  Eigen::Index n = m.rows();
  if (n == 0) return 1;
  IMat a = m;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = t / prev;  // Bareiss: division is exact
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Int d = a(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

bool solve_rational(const QMat& a, const QVec& b, QVec& x) {
  Eigen::Index rows = a.rows(), cols = a.cols();
  QMat m(rows, cols + 1);
  m.block(0, 0, rows, cols) = a;
  m.col(cols) = b;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_col;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = rank; i < rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.row(rank).swap(m.row(p));
    Rat inv = m(rank, c);
    for (Eigen::Index j = c; j <= cols; ++j) m(rank, j) /= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == rank || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (Eigen::Index j = c; j <= cols; ++j) m(i, j) -= f * m(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (Eigen::Index i = rank; i < rows; ++i)
    if (m(i, cols) != 0) return false;  // inconsistent
  x = QVec::Zero(cols);
  for (Eigen::Index i = 0; i < rank; ++i) x(pivot_col[static_cast<size_t>(i)]) = m(i, cols);
  return true;
}

}  // namespace coxk3

#include "linprog.hpp"

#include <vector>

namespace coxk3::detail {

bool nonneg_solve(const QMat& a, const QVec& b, QVec* solution) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index n = a.cols();

  // tableau over columns [lambda | artificials | rhs], minimizing the sum of
  // artificials; rows flipped so the rhs is nonnegative
  QMat t(rows, n + rows + 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    Rat s = b(i) < 0 ? Rat(-1) : Rat(1);
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = a(i, j) * s;
    for (Eigen::Index j = 0; j < rows; ++j) t(i, n + j) = (i == j) ? Rat(1) : Rat(0);
    t(i, n + rows) = b(i) * s;
  }

  std::vector<Eigen::Index> basis(static_cast<size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) basis[static_cast<size_t>(i)] = n + i;

  // reduced cost row for min sum(artificials): z_j - c_j = sum over basic rows
  QVec cost(n + rows);
  Rat obj(0);
  for (Eigen::Index j = 0; j < n + rows; ++j) {
    Rat s(0);
    for (Eigen::Index i = 0; i < rows; ++i) s += t(i, j);
    cost(j) = s - Rat(j >= n ? 1 : 0);
  }
  for (Eigen::Index i = 0; i < rows; ++i) obj += t(i, n + rows);

  for (;;) {
    // Bland: smallest index with positive reduced cost
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + rows; ++j)
      if (cost(j) > 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    // ratio test, Bland tie-break on basis index
    Eigen::Index leave = -1;
    Rat best(0);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (t(i, enter) <= 0) continue;
      Rat ratio = t(i, n + rows) / t(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded phase-one cannot happen, bail out
    Rat piv = t(leave, enter);
    for (Eigen::Index j = 0; j <= n + rows; ++j) t(leave, j) /= piv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rat f = t(i, enter);
      for (Eigen::Index j = 0; j <= n + rows; ++j) t(i, j) -= f * t(leave, j);
    }
    Rat cf = cost(enter);
    for (Eigen::Index j = 0; j < n + rows; ++j) cost(j) -= cf * t(leave, j);
    obj -= cf * t(leave, n + rows);
    basis[static_cast<size_t>(leave)] = enter;
  }

  if (obj != 0) return false;
  if (solution) {
    *solution = QVec::Zero(n);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (basis[static_cast<size_t>(i)] < n) (*solution)(basis[static_cast<size_t>(i)]) = t(i, n + rows);
  }
  return true;
}

}  // namespace coxk3::detail

#ifndef SUSYSPEC_TESTS_HELPERS_HPP
#define SUSYSPEC_TESTS_HELPERS_HPP

#include <random>

#include "susyspec/linalg.hpp"

namespace susyspec::testing {

inline LinearOp sigma_x() {
  LinearOp m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline LinearOp sigma_y() {
  LinearOp m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}
inline LinearOp sigma_z() {
  LinearOp m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Vector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> d(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(d(rng), d(rng));
  return v;
}

inline LinearOp random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> d(0.0, 1.0);
  LinearOp m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

inline LinearOp random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  Eigen::HouseholderQR<LinearOp> qr(random_matrix(rng, n, n));
  return qr.householderQ() * LinearOp::Identity(n, n);
}

/// Rank by Gaussian elimination with partial pivoting. Deliberately a second
/// route, independent of the SVD-based span machinery it cross-checks.
inline Eigen::Index elimination_rank(LinearOp m, double tol) {
  Eigen::Index rank = 0;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    double best = 0.0;
    for (Eigen::Index r = rank; r < rows; ++r) {
      const double mag = std::abs(m(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best <= tol) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r)
      m.row(r) -= (m(r, col) / m(rank, col)) * m.row(rank);
    ++rank;
  }
  return rank;
}

inline Eigen::Index elimination_rank_of_vectors(const std::vector<Vector>& vs,
                                                double tol) {
  if (vs.empty()) return 0;
  LinearOp m(static_cast<Eigen::Index>(vs.size()), vs.front().size());
  for (size_t k = 0; k < vs.size(); ++k) m.row(static_cast<Eigen::Index>(k)) = vs[k];
  return elimination_rank(std::move(m), tol);
}

}  // namespace susyspec::testing

#endif

#pragma once

// Float-mode dense linear algebra backed by Eigen. Exact (rational) paths
// never come through here.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "alglab/linalg.hpp"

namespace alglab {

inline Eigen::MatrixXd to_eigen(const Mat<double>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline Eigen::VectorXd to_eigen(const Vec<double>& v) {
  Eigen::VectorXd out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out(i) = v[i];
  return out;
}

inline Vec<double> from_eigen(const Eigen::VectorXd& v) {
  Vec<double> out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = v(i);
  return out;
}

inline Mat<double> from_eigen(const Eigen::MatrixXd& m) {
  Mat<double> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline std::vector<double> sym_eigenvalues(const Mat<double>& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m), Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  return ev;
}

inline std::vector<std::complex<double>> general_eigenvalues(const Mat<double>& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m), false);
  std::vector<std::complex<double>> ev(m.rows());
  for (int i = 0; i < m.rows(); ++i) ev[i] = es.eigenvalues()(i);
  return ev;
}

inline Signature float_signature(const Mat<double>& m, double cutoff = 1e-10) {
  Signature sig;
  double scale = 1.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) scale = std::max(scale, std::fabs(m(i, j)));
  for (double ev : sym_eigenvalues(m)) {
    if (ev > cutoff * scale)
      ++sig.positive;
    else if (ev < -cutoff * scale)
      ++sig.negative;
    else
      ++sig.zero;
  }
  return sig;
}

// Least-squares solve via column-pivoted QR (rank-deficient Jacobians fall
// back to the minimum-norm-ish QR solution).
inline Vec<double> solve_least_squares(const Mat<double>& a, const Vec<double>& b) {
  Eigen::MatrixXd A = to_eigen(a);
  Eigen::VectorXd B = to_eigen(b);
  Eigen::VectorXd x = A.colPivHouseholderQr().solve(B);
  return from_eigen(x);
}

}  // namespace alglab

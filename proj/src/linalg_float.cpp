#include <Eigen/Dense>

#include "qpslab/linalg.hpp"

namespace qpslab {

namespace {

Eigen::MatrixXcd to_eigen(const Mat<Float>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

Mat<Float> from_eigen(const Eigen::MatrixXcd& e) {
  Mat<Float> m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

std::size_t count_above_cutoff(const Eigen::VectorXd& sv) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = float_tolerance() * sv(0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

}  // namespace

std::size_t svd_rank(const Mat<Float>& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  return count_above_cutoff(svd.singularValues());
}

Mat<Float> svd_kernel_basis(const Mat<Float>& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
  const std::size_t r = count_above_cutoff(svd.singularValues());
  const Eigen::MatrixXcd& v = svd.matrixV();
  return from_eigen(v.rightCols(v.cols() - static_cast<Eigen::Index>(r)));
}

Mat<Float> svd_range_basis(const Mat<Float>& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullU);
  const std::size_t r = count_above_cutoff(svd.singularValues());
  return from_eigen(svd.matrixU().leftCols(static_cast<Eigen::Index>(r)));
}

}  // namespace qpslab

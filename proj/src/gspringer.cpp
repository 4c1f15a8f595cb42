#include "qpslab/gspringer.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qpslab {

namespace {

double scale_of(const Mat<Float>& m) {
  double s = 1;
  for (const auto& x : m.data()) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace

std::vector<GSPoint<Float>> weyl_fiber_enum(const GroupContext& ctx, const Mat<Float>& g) {
  if (!ctx.in_group(g)) throw std::invalid_argument("input is not in " + ctx.name());
  const std::size_t n = g.rows();
  Eigen::MatrixXcd ge(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ge(i, j) = g(i, j);
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ge);
  if (es.info() != Eigen::Success) throw std::domain_error("eigen decomposition failed");
  std::vector<Float> roots(n);
  for (std::size_t k = 0; k < n; ++k) roots[k] = es.eigenvalues()(k);
  const double scale = scale_of(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(roots[i] - roots[j]) <= float_tolerance() * scale * 1e3)
        throw std::domain_error("not regular semisimple");

  Mat<Float> p(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) p(i, k) = es.eigenvectors()(i, k);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<GSPoint<Float>> out;
  do {
    Mat<Float> q(n, n), t(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto src = static_cast<std::size_t>(perm[k]);
      for (std::size_t i = 0; i < n; ++i) q(i, k) = p(i, src);
      t(k, k) = roots[src];
    }
    if (ctx.family() == Family::SL) {
      const Float det = determinant(q);
      for (std::size_t i = 0; i < n; ++i) q(i, 0) /= det;
    }
    out.push_back({q, t});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace qpslab

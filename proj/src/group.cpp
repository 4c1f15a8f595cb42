#include "qpslab/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qpslab {

GroupContext::GroupContext(Family family, int n, Exact form_scale, TestHooks hooks)
    : family_(family), n_(n), form_scale_(std::move(form_scale)), hooks_(hooks) {
  if (n < 2 || n > 4) throw std::invalid_argument("group size must be 2, 3 or 4");
  if (!form_scale_.is_real() || sgn(form_scale_.real()) <= 0)
    throw std::invalid_argument("form scale must be a positive rational");
  const std::size_t un = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t r = family == Family::SL ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(n);
  t_ = {0, r};
  u_ = {r, r + un};
  b_ = {0, r + un};

  for (std::size_t k = 0; k < r; ++k) {
    Mat<Exact> h(n, n);
    h(k, k) = Exact(1);
    if (family == Family::SL) h(k + 1, k + 1) = Exact(-1);
    basis_.push_back(std::move(h));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) offdiag_index_.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) offdiag_index_.emplace_back(i, j);
  for (const auto& [i, j] : offdiag_index_) {
    Mat<Exact> e(n, n);
    e(i, j) = Exact(1);
    basis_.push_back(std::move(e));
  }

  const std::size_t d = basis_.size();
  metric_ = Mat<Exact>(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) metric_(i, j) = form(basis_[i], basis_[j]);
  metric_inv_ = inverse(metric_);
}

GroupContext GroupContext::from_name(std::string_view name, TestHooks hooks) {
  if (name.size() != 3) throw std::invalid_argument("unknown group '" + std::string(name) + "'");
  Family fam;
  if (name.substr(0, 2) == "sl") {
    fam = Family::SL;
  } else if (name.substr(0, 2) == "gl") {
    fam = Family::GL;
  } else {
    throw std::invalid_argument("unknown group '" + std::string(name) + "'");
  }
  const int n = name[2] - '0';
  if (n < 2 || n > 4) throw std::invalid_argument("unknown group '" + std::string(name) + "'");
  return GroupContext(fam, n, Exact(1), hooks);
}

std::string GroupContext::name() const {
  return std::string(family_ == Family::SL ? "sl" : "gl") + std::to_string(n_);
}

std::vector<Exact> chi_components(const GroupContext& ctx) {
  const std::size_t d = ctx.dim_g();
  // Metric-dual basis e^i = Σ_l (M⁻¹)_{il} e_l.
  std::vector<Mat<Exact>> dual;
  for (std::size_t i = 0; i < d; ++i) {
    Mat<Exact> m(ctx.n(), ctx.n());
    for (std::size_t l = 0; l < d; ++l)
      if (!ctx.metric_inverse()(i, l).is_zero()) m += ctx.basis_element(l) * ctx.metric_inverse()(i, l);
    dual.push_back(std::move(m));
  }
  std::vector<Exact> chi(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        chi[(i * d + j) * d + k] = lie::cartan_eta(ctx, dual[i], dual[j], dual[k]);
  return chi;
}

Exact chi_pairing(const GroupContext& ctx, const Vec<Exact>& a, const Vec<Exact>& b, const Vec<Exact>& c) {
  const std::size_t d = ctx.dim_g();
  if (a.size() != d || b.size() != d || c.size() != d) throw std::invalid_argument("chi_pairing: length");
  const auto chi = chi_components(ctx);
  Exact s(0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const auto& x = chi[(i * d + j) * d + k];
        if (!x.is_zero() && !c[k].is_zero()) s += x * a[i] * b[j] * c[k];
      }
    }
  }
  return s;
}

std::size_t WeylGroup::find(const std::vector<int>& w) const {
  const auto it = std::find(permutations.begin(), permutations.end(), w);
  return static_cast<std::size_t>(it - permutations.begin());
}

WeylGroup weyl_group(const GroupContext& ctx) {
  const int n = ctx.n();
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  WeylGroup W;
  do {
    Mat<Exact> p(n, n);
    for (int j = 0; j < n; ++j) p(w[j], j) = Exact(1);
    if (ctx.family() == Family::SL && determinant(p) == Exact(-1))
      for (int i = 0; i < n; ++i) p(i, 0) = -p(i, 0);
    W.permutations.push_back(w);
    W.representatives.push_back(std::move(p));
  } while (std::next_permutation(w.begin(), w.end()));
  return W;
}

std::vector<int> monomial_permutation(const Mat<Exact>& m) {
  const std::size_t n = m.rows();
  std::vector<int> w(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, j).is_zero()) continue;
      if (w[j] != -1 || used[i]) return {};
      w[j] = static_cast<int>(i);
      used[i] = true;
    }
    if (w[j] == -1) return {};
  }
  return w;
}

}  // namespace qpslab

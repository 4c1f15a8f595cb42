#include "qpslab/space.hpp"

namespace qpslab {

ProductSpace::ProductSpace(const GroupContext& ctx, std::vector<FactorKind> factors)
    : ctx_(&ctx), factors_(std::move(factors)) {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    offsets_.push_back(dim_);
    dim_ += factor_dim(k);
  }
}

BasisRange ProductSpace::algebra(std::size_t k) const {
  switch (factors_.at(k)) {
    case FactorKind::Group:
      return ctx_->g_range();
    case FactorKind::Borel:
      return ctx_->b_range();
    case FactorKind::Torus:
      return ctx_->t_range();
    case FactorKind::Unipotent:
      return ctx_->u_range();
  }
  throw std::logic_error("unknown factor kind");
}

std::string ProductSpace::name() const {
  std::string s;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) s += "x";
    switch (factors_[k]) {
      case FactorKind::Group:
        s += "G";
        break;
      case FactorKind::Borel:
        s += "B";
        break;
      case FactorKind::Torus:
        s += "T";
        break;
      case FactorKind::Unipotent:
        s += "tU";
        break;
    }
  }
  return s;
}

}  // namespace qpslab

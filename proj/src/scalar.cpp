#include "qpslab/scalar.hpp"

#include <stdexcept>

namespace qpslab {

namespace {
std::atomic<double> g_float_tolerance{1e-9};
}

double float_tolerance() { return g_float_tolerance.load(std::memory_order_relaxed); }

void set_float_tolerance(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  g_float_tolerance.store(tol, std::memory_order_relaxed);
}

}  // namespace qpslab

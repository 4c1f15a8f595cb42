#include "qpslab/conventions.hpp"

#include <cstdint>
#include <cstdio>

namespace qpslab {

const std::vector<std::string>& convention_ledger() {
  static const std::vector<std::string> entries{
      "tangent vectors: left-trivialized, X = g*x",
      "covectors: dual-basis coordinates alpha(e_j); metric coordinates a convert by (a, e_j)",
      "form: (x,y) = c*tr(xy), c = 1",
      "rho(xi) at g: xi - Ad_{g^-1} xi (xi^L - xi^R)",
      "sigma(xi) at g: metric coordinates (xi + Ad_{g^-1} xi)/2",
      "sigma^v(a) at g: (a + Ad_g a)/2; rho^v(v) at g: v - Ad_g v",
      "eta(x,y,z) = (x,[y,z])/2 as an evaluated 3-form",
      "d: domega(X,Y,Z) = sum_cyc X omega(Y,Z) - sum_cyc omega([X,Y],Z)",
      "dorfman: ([X,Y], L_X beta - i_Y d alpha + eta(Y,X,.))",
      "flat: omega^flat(X) = omega(.,X) = W X; graph = {(x, W x)}",
      "double action: (g1,g2).(a,b) = (g1 a g2^-1, g2 b g2^-1); rho_D(xi1,xi2) = (-Ad_{a^-1} xi1 + xi2, xi2 - Ad_{b^-1} xi2)",
      "double form: K = M Ad_b; W_xx = (K^T - K)/2, W_xy = (K + M)/2, W_yx = -(K^T + M)/2, W_yy = 0",
      "moment condition: W rho_D(xi) = dPhi^T sigma(xi); d omega = -Phi^*(eta + eta)",
      "quotient chart at (g,b): complement (u-,0) + (0,b); q_* projects along the B-orbit",
      "bivector: (X_alpha, C^T alpha) in L, dmu X_alpha = -(sigma^v)^T rho_M^T alpha, C = 1 - rho_M rho^v dmu / 4",
  };
  return entries;
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string convention_ledger_hash() {
  std::string joined;
  for (const auto& e : convention_ledger()) joined += e + "\n";
  return fnv1a64_hex(joined);
}

}  // namespace qpslab

#pragma once

#include "clab/prob.hpp"
#include "clab/young.hpp"

namespace clab {

enum class NormFlavor { luxemburg, amemiya };

NormFlavor dual_flavor(NormFlavor n);
const char* flavor_name(NormFlavor n);

// L_p(mu) norm, evaluated in the log domain; p >= 1e6 falls back to the exact
// max over the support of mu. Requires p >= 1.
double lp_norm(const Vec& f, const ProbVector& mu, double p);

// Luxemburg gauge inf{s > 0 : mu(psi(|f|/s)) <= 1} by bisection on the
// monotone level function (absolute tolerance 1e-11).
double luxemburg_norm(const Vec& f, const ProbVector& mu, const Young& psi);

// Amemiya norm inf_{t > 0} (1 + mu(psi(t |f|))) / t by golden-section in
// log t after a coarse bracket scan (relative tolerance 1e-10).
double amemiya_norm(const Vec& f, const ProbVector& mu, const Young& psi);

double orlicz_norm(const Vec& f, const ProbVector& mu, const Young& psi, NormFlavor n);

// closed forms for constant functions: |c| / psi^{-1}(1) and |c| psi*^{-1}(1)
double constant_norm(double c, const Young& psi, NormFlavor n);

// Both sides of the generalized Hoelder inequality
//   mu(|u v|) <= ||u||_{Lux,psi}(mu) * ||v||_{Am,psi*}(mu).
struct HolderPair {
  double lhs;
  double rhs;
};
HolderPair holder_product(const Vec& u, const Vec& v, const ProbVector& mu, const Young& psi);

// inf_{t>0} (c + log mu(exp(t (f - mu(f))))) / t, the Donsker-Varadhan
// companion functional with budget c > 0. Log-MGF values are computed by a
// max-shifted log-sum-exp. Constant f makes the infimum degenerate (value 0).
struct RhoResult {
  double value = 0.0;
  bool degenerate = false;
};
RhoResult rho_functional(const Vec& f, const ProbVector& mu, double c);

}  // namespace clab

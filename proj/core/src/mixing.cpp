#include "clab/mixing.hpp"

#include <cmath>
#include <limits>

#include "clab/error.hpp"

namespace clab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// d delta_x / d pi - 1: (1 - pi(x))/pi(x) at x, -1 elsewhere
Vec dirac_error(const ProbVector& pi, int x) {
  Vec f = Vec::Constant(pi.size(), -1.0);
  if (!(pi[x] > 0.0)) fail(errc::zero_mass, "Dirac start outside the support");
  f[x] = (1.0 - pi[x]) / pi[x];
  return f;
}

}  // namespace

double max_dirac_norm(const ProbVector& pi, const Young& psi, NormFlavor n) {
  double worst = 0.0;
  for (int x = 0; x < pi.size(); ++x) {
    const double px = pi[x];
    if (!(px > 0.0)) fail(errc::zero_mass, "stationary law must be strictly positive");
    const double rest = 1.0 - px;
    if (rest <= 0.0) continue;  // single atom: the error function vanishes
    double value;
    if (n == NormFlavor::luxemburg) {
      value = px >= 0.5 ? 1.0 / psi.inverse(1.0 / (2.0 * rest))
                        : (rest / px) / psi.inverse(1.0 / (2.0 * px));
    } else {
      value = 2.0 * rest *
              psi.conjugate_inverse(1.0 / (2.0 * (px >= 0.5 ? rest : px)));
    }
    worst = std::max(worst, value);
  }
  return worst;
}

double exact_max_dirac_norm(const ProbVector& pi, const Young& psi, NormFlavor n) {
  double worst = 0.0;
  for (int x = 0; x < pi.size(); ++x) {
    if (pi[x] >= 1.0) continue;
    worst = std::max(worst, orlicz_norm(dirac_error(pi, x), pi, psi, n));
  }
  return worst;
}

MixingReport mixing_time_bound(const MarkovKernel& k, const ProbVector& pi, const Young& psi,
                               NormFlavor n, double eps) {
  if (!(eps > 0.0)) fail(errc::parse_error, "accuracy must be > 0");
  if (!is_stationary(k, pi)) fail(errc::not_stationary, "measure is not stationary");
  MixingReport out;
  out.contraction = orlicz_contraction_bound(k, pi, psi, psi, n, Direction::dual);
  out.start_norm = max_dirac_norm(pi, psi, n);
  if (out.contraction >= 1.0) {
    out.vacuous = true;
    return out;
  }
  if (out.start_norm <= eps) {
    out.steps = 0;
    return out;
  }
  if (out.contraction <= 0.0) {
    out.steps = 1;  // one application lands exactly on pi
    return out;
  }
  const double raw = std::log(out.start_norm / eps) / -std::log(out.contraction);
  out.steps = static_cast<long long>(std::ceil(raw - 1e-12));
  if (out.steps < 0) out.steps = 0;
  return out;
}

long long exact_mixing_time(const MarkovKernel& k, const ProbVector& pi, const Young& psi,
                            NormFlavor n, double eps, long long t_max) {
  if (!(eps > 0.0)) fail(errc::parse_error, "accuracy must be > 0");
  if (!pi.strictly_positive()) fail(errc::zero_mass, "stationary law must be strictly positive");
  const int m = k.size();
  Mat power = Mat::Identity(m, m);
  for (long long t = 0; t <= t_max; ++t) {
    double worst = 0.0;
    for (int x = 0; x < m; ++x) {
      Vec f(m);
      for (int y = 0; y < m; ++y) f[y] = power(x, y) / pi[y] - 1.0;
      worst = std::max(worst, orlicz_norm(f, pi, psi, n));
      if (worst > eps) break;
    }
    if (worst <= eps) return t;
    power = power * k.matrix();
  }
  fail(errc::not_reached, "norm still above the accuracy target at the step limit");
}

double event_bound_orlicz(double pi_e, double norm_value, const Young& psi, NormFlavor n) {
  if (!(pi_e >= 0.0 && pi_e <= 1.0)) fail(errc::parse_error, "event mass must be in [0,1]");
  if (!(norm_value >= 0.0)) fail(errc::parse_error, "norm bound must be >= 0");
  if (pi_e == 0.0) return 0.0;
  if (n == NormFlavor::amemiya)
    return (norm_value + psi.conjugate_inverse(1.0)) / psi.conjugate_inverse(1.0 / pi_e);
  return pi_e * psi.inverse(1.0 / pi_e) * (norm_value + 1.0 / psi.inverse(1.0));
}

double event_bound_lp(double pi_e, double norm_value, double p) {
  if (!(pi_e >= 0.0 && pi_e <= 1.0)) fail(errc::parse_error, "event mass must be in [0,1]");
  if (!(norm_value >= 0.0)) fail(errc::parse_error, "norm bound must be >= 0");
  if (!(p >= 1.0)) fail(errc::parse_error, "p must be >= 1");
  if (pi_e == 0.0) return 0.0;
  const double inv_p = p >= 1e6 ? 0.0 : 1.0 / p;
  return std::pow(pi_e, 1.0 - inv_p) * (std::pow(pi_e, inv_p) + norm_value);
}

double exponential_decay_mixing_time(const MarkovKernel& k, const ProbVector& pi, double p,
                                     double n, double eta, double c) {
  if (!(p > 1.0)) fail(errc::parse_error, "p must be > 1");
  if (!(n > 0.0) || !(eta > 0.0) || !(c > 0.0))
    fail(errc::parse_error, "needs n, eta, c all > 0");
  const double contraction = lp_contraction_bound(k, pi, p, p, Direction::dual);
  if (contraction >= 1.0) return kInf;
  double start = 0.0;
  for (int x = 0; x < pi.size(); ++x) {
    if (pi[x] >= 1.0) continue;
    start = std::max(start, lp_norm(dirac_error(pi, x), pi, std::min(p, 1e18)));
  }
  const double q = p >= 1e6 ? 1.0 : p / (p - 1.0);
  const double numer = std::log(start) + q * c * c / (n * eta * eta);
  if (contraction <= 0.0) return numer > 0.0 ? 1.0 : 0.0;
  return std::max(0.0, numer / -std::log(contraction));
}

}  // namespace clab

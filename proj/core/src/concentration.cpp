#include "clab/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "clab/contraction.hpp"
#include "clab/error.hpp"
#include "clab/orlicz.hpp"
#include "clab/rng.hpp"

namespace clab {

namespace {

double conjugate_of(double p) {
  if (p >= 1e6) return 1.0;
  return p / (p - 1.0);
}

// max_x || d delta_x / d mu - 1 ||_{L_p(mu)} over the support of mu; this is
// the worst-case norm of a Dirac start against the running marginal.
double worst_dirac_lp(const ProbVector& mu, double p) {
  double worst = 0.0;
  for (int x = 0; x < mu.size(); ++x) {
    if (!(mu[x] > 0.0)) continue;
    Vec f = Vec::Constant(mu.size(), -1.0);
    f[x] = (1.0 - mu[x]) / mu[x];
    worst = std::max(worst, lp_norm(f, mu, p));
  }
  return worst;
}

Vec resolve_observable(const ConcentrationScenario& scn) {
  const int m = scn.state_count();
  Vec g(m);
  if (scn.observable.empty()) {
    for (int x = 0; x < m; ++x) g[x] = m > 1 ? static_cast<double>(x) / (m - 1) : 0.0;
    return g;
  }
  if (static_cast<int>(scn.observable.size()) != m)
    fail(errc::non_square, "observable/state count mismatch");
  for (int x = 0; x < m; ++x) {
    const double v = scn.observable[x];
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
      fail(errc::parse_error, "observable entries must lie in [0, 1]");
    g[x] = v;
  }
  return g;
}

void check_binary_rates(double lambda, double kappa) {
  if (!(lambda > 0.0) || !(lambda < 1.0) || !(kappa > 0.0) || !(kappa < 1.0))
    fail(errc::lambda_out_of_range, "binary rates must lie in (0, 1)");
}

int sample_from_row(const Mat& cumulative, int row, double u) {
  const int m = static_cast<int>(cumulative.cols());
  for (int y = 0; y < m; ++y)
    if (u <= cumulative(row, y)) return y;
  return m - 1;
}

}  // namespace

const MarkovKernel& ConcentrationScenario::kernel_at(int step) const {
  if (kernels.empty()) fail(errc::parse_error, "scenario holds no kernels");
  if (step < 0 || step > t - 2) fail(errc::parse_error, "kernel step outside [0, t-2]");
  if (homogeneous()) return kernels.front();
  if (static_cast<int>(kernels.size()) != t - 1)
    fail(errc::parse_error, "need one kernel or t-1 kernels");
  return kernels[static_cast<std::size_t>(step)];
}

std::vector<ProbVector> ConcentrationScenario::marginals() const {
  std::vector<ProbVector> out;
  out.reserve(static_cast<std::size_t>(t));
  out.push_back(start);
  for (int i = 1; i < t; ++i) out.push_back(push_forward(out.back(), kernel_at(i - 1)));
  return out;
}

McmcTailBounds mcmc_tail_bounds(const ConcentrationScenario& scn, double lambda) {
  if (!(lambda > 0.0) || !(lambda < 1.0))
    fail(errc::lambda_out_of_range, "effective rate must lie in (0, 1)");
  if (!(scn.p > 1.0)) fail(errc::parse_error, "needs p > 1");
  if (scn.kernels.empty()) fail(errc::parse_error, "scenario holds no kernels");
  const double q = conjugate_of(scn.p);
  const ProbVector pi = stationary_distribution(scn.kernels.front());
  if (pi.size() != scn.start.size()) fail(errc::non_square, "start/kernel size mismatch");

  Vec centered = Vec::Zero(pi.size());
  double sup_density = 0.0;
  for (int x = 0; x < pi.size(); ++x) {
    if (pi[x] > 0.0) {
      const double d = scn.start[x] / pi[x];
      centered[x] = d - 1.0;
      sup_density = std::max(sup_density, d);
    } else if (scn.start[x] > 0.0) {
      fail(errc::absolute_continuity_violation, "start puts mass outside the stationary support");
    }
  }
  const double norm_p = lp_norm(centered, pi, scn.p);

  const double theta = std::abs(1.0 - 2.0 * lambda);
  const double drift = 2.0 * lambda * scn.t * scn.eta * scn.eta / (1.0 - lambda);
  const double ours = std::exp(-drift) + std::pow(theta, scn.t0) * std::exp(-drift / q) * norm_p;

  double c;
  if (scn.p >= 1e6) {
    c = sup_density;
  } else if (scn.p <= 2.0) {
    const double coefficient = scn.p < 2.0 ? std::pow(2.0, 2.0 / scn.p) : 1.0;
    c = 1.0 + coefficient * std::pow(theta, 2.0 * scn.t0 / q) * norm_p;
  } else {
    c = 1.0 + std::pow(2.0, 2.0 / q) * std::pow(theta, 2.0 * scn.t0 / scn.p) * norm_p;
  }
  const double baseline = c * std::exp(-drift / q);
  return {ours, baseline};
}

long long burn_in_lower_bound(double delta, double t, double eta, double lambda, double m_norm) {
  if (!(lambda > 0.0) || !(lambda < 1.0))
    fail(errc::lambda_out_of_range, "effective rate must lie in (0, 1)");
  if (!(m_norm >= 0.0)) fail(errc::parse_error, "needs a nonnegative sup norm");
  const double a = std::exp(-2.0 * lambda * t * eta * eta / (1.0 - lambda));
  if (delta <= a) fail(errc::delta_too_small, "no burn-in reaches the requested confidence");
  if (delta >= a * (1.0 + m_norm)) return 0;
  const double theta = std::abs(1.0 - 2.0 * lambda);
  if (theta == 0.0) return 1;
  const double raw = std::log((delta - a) / (a * m_norm)) / std::log(theta);
  const double steps = std::ceil(raw - 1e-12);
  return steps > 0.0 ? static_cast<long long>(steps) : 0;
}

double markov_mcdiarmid_bound(const ConcentrationScenario& scn) {
  if (!(scn.p > 1.0)) fail(errc::parse_error, "needs p > 1");
  if (scn.t < 1) fail(errc::parse_error, "needs t >= 1");
  const double q = conjugate_of(scn.p);
  const std::vector<ProbVector> laws = scn.marginals();
  double log_product = 0.0;
  for (int i = 2; i <= scn.t; ++i) {
    const ProbVector& input = laws[static_cast<std::size_t>(i - 2)];
    const double contraction =
        lp_contraction_bound(scn.kernel_at(i - 2), input, scn.p, scn.p, Direction::dual);
    const double omega = worst_dirac_lp(input, scn.p);
    log_product += std::log1p(contraction * omega);
  }
  return std::pow(2.0, 1.0 / q) *
         std::exp(-2.0 * scn.t * scn.eta * scn.eta / q + log_product);
}

double doubly_stochastic_concentration_bound(const MarkovKernel& k, double eta, int t, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) fail(errc::parse_error, "needs finite p > 1");
  if (t < 1) fail(errc::parse_error, "needs t >= 1");
  const double q = p / (p - 1.0);
  const int m = k.size();
  const double clamped = std::min(doubly_stochastic_bound(k, p), 1.0);
  double factor = 1.0;
  if (m > 1) {
    // ((m-1)^p / m + (m-1) / m)^{1/p}, assembled in the log domain
    const double hi = p * std::log(m - 1.0);
    const double lo = std::log(m - 1.0);
    const double log_w = hi + std::log1p(std::exp(lo - hi)) - std::log(static_cast<double>(m));
    factor = clamped * std::exp(log_w / p) + 1.0;
  }
  return std::pow(2.0, 1.0 / q) *
         std::exp(-2.0 * t * eta * eta / q + (t - 1) * std::log(factor));
}

double state_count_baseline(int m, double eta, int t, double q) {
  if (m < 1 || t < 1 || !(q >= 1.0)) fail(errc::parse_error, "needs m, t >= 1 and q >= 1");
  return std::pow(2.0, 1.0 / q) *
         std::exp((-2.0 * t * eta * eta + (t - 1) * std::log(static_cast<double>(m))) / q);
}

double binary_concentration_bound_p(double lambda, double kappa, double eta, int t, double p) {
  check_binary_rates(lambda, kappa);
  if (!(p > 1.0) || !std::isfinite(p)) fail(errc::parse_error, "needs finite p > 1");
  if (t < 1) fail(errc::parse_error, "needs t >= 1");
  const double q = p / (p - 1.0);
  const double theta = std::abs(1.0 - lambda - kappa);
  // || d delta_1 / d pi - 1 ||_p with pi = (kappa, lambda) / (kappa + lambda),
  // in the log domain since (kappa / lambda)^p overflows for p ~ 1e3
  const double s = lambda + kappa;
  const double a = p * std::log(kappa / lambda) + std::log(lambda / s);
  const double b = std::log(kappa / s);
  const double hi = std::max(a, b);
  const double omega = std::exp((hi + std::log1p(std::exp(std::min(a, b) - hi))) / p);
  const double factor = 2.0 * theta * omega + 1.0;
  return std::pow(2.0, 1.0 / q) *
         std::exp(-2.0 * t * eta * eta / q + (t - 1) * std::log(factor));
}

double binary_concentration_bound(double lambda, double kappa, double eta, int t) {
  check_binary_rates(lambda, kappa);
  if (t < 1) fail(errc::parse_error, "needs t >= 1");
  const double theta = std::abs(1.0 - lambda - kappa);
  const double factor = (2.0 * theta * kappa + lambda) / lambda;
  return 2.0 * std::exp(-2.0 * t * eta * eta + (t - 1) * std::log(factor));
}

double binary_hypercontractivity_baseline(double lambda, double kappa, double eta, int t) {
  check_binary_rates(lambda, kappa);
  if (t < 1) fail(errc::parse_error, "needs t >= 1");
  const double factor = (lambda + kappa) / lambda;
  return 2.0 * std::exp(-2.0 * t * eta * eta + (t - 1) * std::log(factor));
}

LiteratureBaselines literature_baselines(double lambda, double kappa, double eta, int t) {
  check_binary_rates(lambda, kappa);
  if (t < 1) fail(errc::parse_error, "needs t >= 1");
  const double s = lambda + kappa;
  const double theta = std::abs(1.0 - s);
  const double reach = 1.0 - std::pow(theta, t);
  LiteratureBaselines out;
  out.martingale = std::exp(-s * s * t * eta * eta / (reach * reach));
  out.stationary_change = std::exp(-t * eta * eta * s / (2.0 - s));
  out.coupling = std::exp(-2.0 * t * eta * eta * s * s +
                          2.0 * t * s * std::sqrt(t * std::log(2.0) / 2.0));
  return out;
}

double literature_crossover_eta2(double lambda, double kappa, int t) {
  check_binary_rates(lambda, kappa);
  if (t < 1) fail(errc::parse_error, "needs t >= 1");
  const double theta = std::abs(1.0 - lambda - kappa);
  if (theta == 0.0) return 0.0;
  const double varpi = std::log(2.0 * theta * kappa / lambda);
  const double reach = 1.0 - std::pow(theta, t);
  const double against_martingale =
      varpi * reach * reach / (2.0 * reach * reach - (1.0 - theta) * (1.0 - theta));
  const double against_stationary = varpi * (1.0 + theta) / (2.0 * theta);
  const double against_coupling =
      std::sqrt(std::max(varpi, 0.0)) / (1.0 - theta * theta);
  const double worst =
      std::max({against_martingale, against_stationary, against_coupling});
  return std::max(worst, 0.0);
}

double eta_threshold_state_count(int m) {
  if (m < 1) fail(errc::parse_error, "needs m >= 1");
  return std::sqrt(std::log(static_cast<double>(m)) / 2.0);
}

double eta_threshold_contraction(const MarkovKernel& k, const ProbVector& start, double p) {
  if (!(p > 1.0)) fail(errc::parse_error, "needs p > 1");
  const double q = conjugate_of(p);
  const double contraction = lp_contraction_bound(k, start, p, p, Direction::dual);
  const double omega = worst_dirac_lp(start, p);
  return std::sqrt(q * std::log1p(contraction * omega) / 2.0);
}

EmpiricalTail empirical_tail(const ConcentrationScenario& scn) {
  if (scn.t < 1) fail(errc::parse_error, "needs t >= 1");
  if (scn.trials < 1) fail(errc::parse_error, "needs at least one trial");
  const Vec g = resolve_observable(scn);

  const std::vector<ProbVector> laws = scn.marginals();
  double product_mean = 0.0;
  for (const ProbVector& law : laws) product_mean += law.mean(g);
  product_mean /= scn.t;

  Mat start_cdf(1, scn.start.size());
  double acc = 0.0;
  for (int x = 0; x < scn.start.size(); ++x) {
    acc += scn.start[x];
    start_cdf(0, x) = acc;
  }
  std::vector<Mat> step_cdf;
  const int distinct = scn.t == 1 ? 0 : (scn.homogeneous() ? 1 : scn.t - 1);
  step_cdf.reserve(static_cast<std::size_t>(distinct));
  for (int s = 0; s < distinct; ++s) {
    Mat cumulative = scn.kernels[static_cast<std::size_t>(s)].matrix();
    for (int x = 0; x < cumulative.rows(); ++x)
      for (int y = 1; y < cumulative.cols(); ++y) cumulative(x, y) += cumulative(x, y - 1);
    step_cdf.push_back(std::move(cumulative));
  }

  SplitMix64 rng(scn.seed);
  long hits = 0;
  for (long trial = 0; trial < scn.trials; ++trial) {
    int x = sample_from_row(start_cdf, 0, rng.uniform());
    double total = g[x];
    for (int i = 1; i < scn.t; ++i) {
      const Mat& cumulative = step_cdf[scn.homogeneous() ? 0 : static_cast<std::size_t>(i - 1)];
      x = sample_from_row(cumulative, x, rng.uniform());
      total += g[x];
    }
    if (std::abs(total / scn.t - product_mean) >= scn.eta) ++hits;
  }

  const double z = 1.959963984540054;  // 97.5% normal quantile
  const double n = static_cast<double>(scn.trials);
  const double phat = static_cast<double>(hits) / n;
  const double denom = 1.0 + z * z / n;
  const double center = (phat + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  EmpiricalTail out;
  out.estimate = phat;
  out.wilson_lo = std::max(0.0, center - half);
  out.wilson_hi = std::min(1.0, center + half);
  out.trials = scn.trials;
  return out;
}

}  // namespace clab

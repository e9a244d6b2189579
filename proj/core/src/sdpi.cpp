#include "clab/sdpi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "clab/error.hpp"
#include "clab/orlicz.hpp"
#include "clab/rng.hpp"
#include "clab/young.hpp"

namespace clab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<int>> adjacency(const Graph& g) {
  g.validate();
  std::vector<std::vector<int>> adj(g.n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

}  // namespace

double hellinger_sdpi_bound(const MarkovKernel& k, const ProbVector& mu, double alpha) {
  if (!(alpha > 1.0)) fail(errc::parse_error, "hellinger order must be > 1");
  return std::pow(lp_contraction_bound(k, mu, alpha, alpha, Direction::dual), alpha);
}

double dobrushin_coefficient(const MarkovKernel& k) {
  const int m = k.size();
  double worst = 0.0;
  for (int x = 0; x < m; ++x)
    for (int z = x + 1; z < m; ++z) {
      double acc = 0.0;
      for (int y = 0; y < m; ++y) acc += std::abs(k(x, y) - k(z, y));
      worst = std::max(worst, 0.5 * acc);
    }
  return worst;
}

double chi2_walk_bound(const Graph& g, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) fail(errc::lambda_out_of_range, "lambda must be in [0,1]");
  auto adj = adjacency(g);
  double sum = 0.0;
  for (int y = 0; y < g.n; ++y) {
    double h = 0.0;
    for (int x : adj[y]) h += 1.0 / adj[x].size();
    sum += h / adj[y].size();
  }
  return g.n * (1.0 - lambda) * (1.0 - lambda) + lambda * lambda * sum - 1.0;
}

double hoeffding_binary_mass(double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(errc::parse_error, "mass must be in [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  if (std::abs(2.0 * p - 1.0) < 1e-8) return 0.25;
  return (2.0 * p - 1.0) / (2.0 * std::log1p((2.0 * p - 1.0) / (1.0 - p)));
}

double hoeffding_mean_position(double kappa) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) fail(errc::parse_error, "mean position must be in [0,1]");
  if (kappa == 0.0) return 0.0;
  if (kappa >= 0.5) return kappa * (1.0 - kappa) / 2.0;
  return (1.0 - 2.0 * kappa) / (4.0 * std::log1p((1.0 - 2.0 * kappa) / kappa));
}

KlSdpiResult kl_sdpi_bound(const MarkovKernel& k, const ProbVector& mu, const ProbVector& nu) {
  const double budget = kl_divergence(nu, mu);
  if (!(budget > 0.0))
    fail(errc::degenerate_divergence, "start laws coincide, the functional budget vanishes");
  const KernelDensities d = densities(k, mu);
  const ProbVector nu_k = push_forward(nu, k);
  const Young phi = Young::entropy();
  const Young phi_tilde = Young::entropy_clipped();
  const int m = k.size();
  KlSdpiResult out{0.0, 0.0, std::vector<double>(m, 0.0)};
  for (int y = 0; y < m; ++y) {
    Vec column = d.g.col(y);
    const double rho = rho_functional(column, mu, budget).value;
    out.rho[static_cast<std::size_t>(y)] = rho;
    const bool shrinking = nu_k[y] < d.mu_k[y];
    out.phi_hat_bound += d.mu_k[y] * (shrinking ? phi_tilde(rho) : phi(rho));
    out.quadratic_bound += d.mu_k[y] * rho * rho;
  }
  return out;
}

double binary_kl_hoeffding_bound(double lambda, double kappa, double p, double q) {
  const MarkovKernel k = general_binary(lambda, kappa);
  const ProbVector mu(std::vector<double>{p, 1.0 - p});
  const ProbVector nu(std::vector<double>{q, 1.0 - q});
  const double budget = kl_divergence(nu, mu);
  if (budget == 0.0) return 0.0;
  const ProbVector mu_k = push_forward(mu, k);
  const ProbVector nu_k = push_forward(nu, k);
  const double theta = std::abs(1.0 - lambda - kappa);
  const Young phi = Young::entropy();
  const Young phi_tilde = Young::entropy_clipped();
  double bound = 0.0;
  for (int y = 0; y < 2; ++y) {
    const double arg =
        std::sqrt(2.0 * hoeffding_binary_mass(p) * budget * theta * theta / (mu_k[y] * mu_k[y]));
    bound += mu_k[y] * (nu_k[y] < mu_k[y] ? phi_tilde(arg) : phi(arg));
  }
  return bound;
}

double binary_kl_max_bound(double lambda, double kappa, double p, double q) {
  const MarkovKernel k = general_binary(lambda, kappa);
  const ProbVector mu(std::vector<double>{p, 1.0 - p});
  const ProbVector nu(std::vector<double>{q, 1.0 - q});
  const double budget = kl_divergence(nu, mu);
  if (budget == 0.0) return 0.0;
  const ProbVector mu_k = push_forward(mu, k);
  const double theta = std::abs(1.0 - lambda - kappa);
  const Young phi = Young::entropy();
  const Young phi_tilde = Young::entropy_clipped();
  double arg[2];
  for (int y = 0; y < 2; ++y)
    arg[y] =
        std::sqrt(2.0 * hoeffding_binary_mass(p) * budget * theta * theta / (mu_k[y] * mu_k[y]));
  double best = 0.0;
  for (int y = 0; y < 2; ++y)
    best = std::max(best, mu_k[y] * phi_tilde(arg[y]) + mu_k[1 - y] * phi(arg[1 - y]));
  return best;
}

double support_hoeffding_sdpi_bound(const MarkovKernel& k, const ProbVector& mu) {
  const KernelDensities d = densities(k, mu);
  const int m = k.size();
  double acc = 0.0;
  for (int y = 0; y < m; ++y) {
    double lo = kInf, hi = -kInf;
    for (int x = 0; x < m; ++x) {
      if (d.g(x, y) <= 0.0) continue;
      lo = std::min(lo, d.g(x, y));
      hi = std::max(hi, d.g(x, y));
    }
    if (!(hi > lo)) continue;
    acc += d.mu_k[y] * (hi - lo) * (hi - lo);
  }
  return 0.5 * acc;
}

double subgaussian_sdpi_bound(const MarkovKernel& k, const ProbVector& mu) {
  const KernelDensities d = densities(k, mu);
  const int m = k.size();
  double acc = 0.0;
  for (int y = 0; y < m; ++y) {
    double lo = kInf, hi = -kInf;
    for (int x = 0; x < m; ++x) {
      lo = std::min(lo, d.g(x, y));
      hi = std::max(hi, d.g(x, y));
    }
    const double range = hi - lo;
    if (range <= 0.0) continue;
    const double kappa = (1.0 - lo) / range;  // mu-mean of every column is 1
    const double two_sided =
        std::max(hoeffding_mean_position(kappa), hoeffding_mean_position(1.0 - kappa));
    acc += d.mu_k[y] * 2.0 * two_sided * range * range;
  }
  return 2.0 * acc;
}

GraphKlBounds graph_kl_bounds(const Graph& g, double lambda, const ProbVector& nu) {
  g.validate();
  const int n = g.n;
  if (static_cast<int>(g.edges.size()) != n * (n - 1) / 2)
    fail(errc::parse_error, "closed forms require the complete graph");
  if (nu.size() != n) fail(errc::parse_error, "start law has the wrong dimension");
  if (!(lambda >= 0.0) || !(lambda < (n - 1.0) / n))
    fail(errc::lambda_out_of_range, "needs 0 <= lambda < (n-1)/n");
  const double budget = kl_divergence(nu, ProbVector::uniform(n));
  const double gap = 1.0 - n * lambda / (n - 1.0);
  const double d = n * n * gap * gap;
  const double c = hoeffding_mean_position(1.0 / n);
  const double ours = Young::entropy_clipped()(std::sqrt(4.0 * d * c * budget));
  const double baseline = budget * n * n / 2.0 * gap * gap;
  return {ours, baseline};
}

double brute_force_sdpi(const MarkovKernel& k, const ProbVector& mu, const DivergenceKind& kind,
                        const SdpiSearchOptions& opt) {
  const int m = k.size();
  if (mu.size() != m) fail(errc::non_square, "measure/kernel size mismatch");
  const ProbVector mu_k = push_forward(mu, k);
  auto ratio_of = [&](const Vec& w) {
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      if (w[i] < 0.0) return -kInf;
      total += w[i];
    }
    if (!(total > 0.0)) return -kInf;
    ProbVector nu(Vec(w / total));
    const double denom = divergence(kind, nu, mu);
    if (!(denom > 1e-12) || !std::isfinite(denom)) return -kInf;
    const double numer = divergence(kind, push_forward(nu, k), mu_k);
    return numer / denom;
  };

  std::vector<Vec> candidates;
  for (int x = 0; x < m; ++x) {
    Vec dirac = Vec::Zero(m);
    dirac[x] = 1.0;
    candidates.push_back(dirac);
    for (double w : {0.5, 0.1, 0.01, 1e-4}) {
      candidates.push_back(w * mu.weights() + (1.0 - w) * dirac);
      candidates.push_back(w * dirac + (1.0 - w) * mu.weights());
    }
  }
  const int grid = opt.grid > 0 ? opt.grid : (m == 2 ? 200 : (m == 3 ? 60 : 0));
  if (m == 2 && grid > 0) {
    for (int i = 1; i < grid; ++i) {
      Vec w(2);
      w[0] = static_cast<double>(i) / grid;
      w[1] = 1.0 - w[0];
      candidates.push_back(w);
    }
  } else if (m == 3 && grid > 0) {
    for (int i = 0; i <= grid; ++i)
      for (int j = 0; j <= grid - i; ++j) {
        Vec w(3);
        w[0] = static_cast<double>(i) / grid;
        w[1] = static_cast<double>(j) / grid;
        w[2] = static_cast<double>(grid - i - j) / grid;
        candidates.push_back(w);
      }
  }
  SplitMix64 rng(derive_seed(opt.seed, 0));
  for (int r = 0; r < opt.random_points; ++r) {
    Vec w(m);
    for (int i = 0; i < m; ++i) w[i] = rng.exponential();
    candidates.push_back(w);
  }

  double best = 0.0;
  Vec best_w = mu.weights();
  for (const Vec& w : candidates) {
    const double value = ratio_of(w);
    if (value > best) {
      best = value;
      best_w = w / w.sum();
    }
  }

  // multiplicative hill climb around the incumbent; stays inside the simplex
  double step = 0.25;
  for (int it = 0; it < opt.refine_iterations; ++it) {
    Vec probe = best_w;
    for (int i = 0; i < m; ++i) probe[i] *= std::exp(step * rng.normal());
    const double value = ratio_of(probe);
    if (value > best) {
      best = value;
      best_w = probe / probe.sum();
      step = std::min(0.5, step * 1.3);
    } else {
      step *= 0.9;
      if (step < 1e-8) step = 0.25;
    }
  }
  return best;
}

}  // namespace clab

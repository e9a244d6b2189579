#include "clab/contraction.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "clab/error.hpp"
#include "clab/rng.hpp"

namespace clab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double conjugate_exponent(double q) {
  if (q >= 1e6) return 1.0;
  if (q <= 1.0) return kInf;
  return q / (q - 1.0);
}

// outer norm over the start index of the inner norm of the centered densities;
// rows of g are the forward densities, columns the dual ones
template <class InnerNorm, class OuterNorm>
double nested_density_bound(const KernelDensities& d, Direction dir, InnerNorm inner,
                            OuterNorm outer) {
  const int m = d.g.rows();
  Vec per_state(m);
  if (dir == Direction::forward) {
    for (int x = 0; x < m; ++x) {
      Vec centered = d.g.row(x).transpose().array() - 1.0;
      per_state[x] = inner(centered, d.mu_k);
    }
    return outer(per_state, d.mu);
  }
  for (int y = 0; y < m; ++y) {
    Vec centered = d.g.col(y).array() - 1.0;
    per_state[y] = inner(centered, d.mu);
  }
  return outer(per_state, d.mu_k);
}

}  // namespace

double orlicz_contraction_bound(const MarkovKernel& k, const ProbVector& mu, const Young& psi,
                                const Young& phi, NormFlavor n, Direction dir, int t) {
  const MarkovKernel kt = t == 1 ? k : t_step(k, t);
  const KernelDensities d = densities(kt, mu);
  const Young phi_star = phi.conjugate_young();
  const NormFlavor inner_flavor = dual_flavor(n);
  auto inner = [&](const Vec& f, const ProbVector& m_in) {
    return orlicz_norm(f, m_in, phi_star, inner_flavor);
  };
  auto outer = [&](const Vec& f, const ProbVector& m_out) { return orlicz_norm(f, m_out, psi, n); };
  return nested_density_bound(d, dir, inner, outer);
}

double lp_contraction_bound(const MarkovKernel& k, const ProbVector& mu, double p, double q,
                            Direction dir, int t) {
  if (!(p >= 1.0) || !(q >= 1.0)) fail(errc::parse_error, "exponents must be >= 1");
  const MarkovKernel kt = t == 1 ? k : t_step(k, t);
  const KernelDensities d = densities(kt, mu);
  const double q_star = std::min(conjugate_exponent(q), 1e18);
  auto inner = [&](const Vec& f, const ProbVector& m_in) { return lp_norm(f, m_in, q_star); };
  auto outer = [&](const Vec& f, const ProbVector& m_out) { return lp_norm(f, m_out, p); };
  return nested_density_bound(d, dir, inner, outer);
}

double exact_l2_contraction(const MarkovKernel& k, const ProbVector& pi) {
  if (!is_stationary(k, pi)) fail(errc::not_stationary, "measure is not stationary");
  const int m = k.size();
  Vec root = pi.weights().array().max(0.0).sqrt();
  Mat weighted(m, m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      double scale = root[y] > 0.0 ? root[x] / root[y] : 0.0;
      weighted(x, y) = k(x, y) * scale;
    }
  weighted -= root * root.transpose();
  Eigen::JacobiSVD<Mat> svd(weighted);
  return svd.singularValues()(0);
}

double doubly_stochastic_bound(const MarkovKernel& k, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) fail(errc::parse_error, "needs finite p > 1");
  if (!k.is_doubly_stochastic()) fail(errc::not_doubly_stochastic, "kernel is not doubly stochastic");
  const int m = k.size();
  const double q = p / (p - 1.0);
  const double center = 1.0 / m;
  double total = 0.0;
  for (int y = 0; y < m; ++y) {
    double inner = 0.0;
    for (int x = 0; x < m; ++x) inner += std::pow(std::abs(k.matrix()(x, y) - center), q);
    total += std::pow(inner, p / q);
  }
  return std::pow(total, 1.0 / p);
}

double tv_ergodicity_bound(const MarkovKernel& k, const ProbVector& pi, int t) {
  const MarkovKernel kt = t == 1 ? k : t_step(k, t);
  if (pi.size() != k.size()) fail(errc::non_square, "measure/kernel size mismatch");
  double worst = 0.0;
  for (int x = 0; x < kt.size(); ++x) {
    double acc = 0.0;
    for (int y = 0; y < kt.size(); ++y) acc += std::abs(kt(x, y) - pi[y]);
    worst = std::max(worst, acc);
  }
  return worst;
}

double l1_operator_norm(const MarkovKernel& k, const ProbVector& pi, int t) {
  const MarkovKernel kt = t == 1 ? k : t_step(k, t);
  if (pi.size() != k.size()) fail(errc::non_square, "measure/kernel size mismatch");
  double worst = 0.0;
  for (int y = 0; y < kt.size(); ++y) {
    if (pi[y] == 0.0) continue;
    double acc = 0.0;
    for (int x = 0; x < kt.size(); ++x) acc += pi[x] * std::abs(kt(x, y) - pi[y]);
    worst = std::max(worst, acc / pi[y]);
  }
  return worst;
}

double linf_operator_norm_oracle(const MarkovKernel& k, const ProbVector& pi, int t) {
  const MarkovKernel kt = t == 1 ? k : t_step(k, t);
  const int m = kt.size();
  if (pi.size() != m) fail(errc::non_square, "measure/kernel size mismatch");
  if (m > 20) return tv_ergodicity_bound(k, pi, t);
  double worst = 0.0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    for (int x = 0; x < m; ++x) {
      double acc = 0.0;
      for (int y = 0; y < m; ++y) {
        double sign = (bits >> y) & 1 ? 1.0 : -1.0;
        acc += (kt(x, y) - pi[y]) * sign;
      }
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

double riesz_thorin_baseline(double gamma, double p, int t) {
  if (!(gamma >= 0.0)) fail(errc::parse_error, "gamma must be >= 0");
  if (!(p >= 1.0)) fail(errc::parse_error, "p must be >= 1");
  if (p == 1.0 || p >= 1e6) return 2.0;
  if (p == 2.0) return std::pow(gamma, t);
  // real-scalar interpolation against the trivial endpoint norm 2 keeps an
  // extra factor 2 in front
  if (p < 2.0) return std::pow(2.0, 2.0 / p) * std::pow(gamma, 2.0 * t * (p - 1.0) / p);
  return std::pow(2.0, 2.0 * (p - 1.0) / p) * std::pow(gamma, 2.0 * t / p);
}

double riesz_thorin_interpolated(const MarkovKernel& k, const ProbVector& pi, double p, int t) {
  if (!(p >= 1.0)) fail(errc::parse_error, "p must be >= 1");
  if (p == 1.0) return l1_operator_norm(k, pi, t);
  if (p >= 1e6) return tv_ergodicity_bound(k, pi, t);
  const double l2 = std::pow(exact_l2_contraction(k, pi), t);
  if (p == 2.0) return l2;
  if (p < 2.0) {
    const double theta = 2.0 * (p - 1.0) / p;
    return std::pow(l1_operator_norm(k, pi, t), 1.0 - theta) * std::pow(l2, theta);
  }
  const double theta = (p - 2.0) / p;
  return std::pow(l2, 1.0 - theta) * std::pow(tv_ergodicity_bound(k, pi, t), theta);
}

double ultra_mixing_coefficient(const MarkovKernel& k) {
  const int m = k.size();
  double eps = 1.0;
  for (int y = 0; y < m; ++y)
    for (int z = 0; z < m; ++z) {
      if (!(k(y, z) > 0.0)) continue;
      for (int x = 0; x < m; ++x) eps = std::min(eps, k(x, z) / k(y, z));
    }
  return eps;
}

double semigroup_nested_bound(const MarkovKernel& k, const ProbVector& pi, double t, double p,
                              double q) {
  if (!(t >= 0.0)) fail(errc::parse_error, "time must be >= 0");
  const MarkovKernel ht = semigroup_kernel(k, t);
  const KernelDensities d = densities(ht, pi);
  const double q_star = std::min(conjugate_exponent(q), 1e18);
  auto inner = [&](const Vec& f, const ProbVector& m_in) { return lp_norm(f, m_in, q_star); };
  auto outer = [&](const Vec& f, const ProbVector& m_out) {
    return lp_norm(f, m_out, std::min(p, 1e18));
  };
  return nested_density_bound(d, Direction::forward, inner, outer);
}

double semigroup_l2_linf_norm(const MarkovKernel& k, const ProbVector& pi, double t) {
  const MarkovKernel ht = semigroup_kernel(k, t);
  const KernelDensities d = densities(ht, pi);
  double worst = 0.0;
  for (int x = 0; x < ht.size(); ++x) {
    Vec centered = d.g.row(x).transpose().array() - 1.0;
    worst = std::max(worst, lp_norm(centered, d.mu_k, 2.0));
  }
  return worst;
}

SemigroupBounds semigroup_bounds(const MarkovKernel& k, const ProbVector& pi, double t,
                                 double t_inf) {
  if (!(t_inf > 0.0) || !(t >= 0.0) || !(t < t_inf))
    fail(errc::parse_error, "needs 0 <= t < t_inf");
  const double p_of_t = 2.0 * t_inf / (t_inf - t);
  const double ours = semigroup_nested_bound(k, pi, t, p_of_t, 2.0);
  const double m_inf = semigroup_l2_linf_norm(k, pi, t_inf);
  return {ours, std::pow(m_inf, t / t_inf), p_of_t};
}

double brute_force_operator_ratio(const Mat& a, const ProbVector& mu_out, const ProbVector& mu_in,
                                  const Young& psi, NormFlavor n, bool mean_zero,
                                  const ProbVector& mean_measure, const AscentOptions& opt) {
  const int m = static_cast<int>(a.cols());
  if (mu_in.size() != m || mu_out.size() != a.rows() || mean_measure.size() != m)
    fail(errc::non_square, "operator/measure size mismatch");
  const bool lp = psi.is_power();
  const double p = lp ? psi.power_exponent() : 0.0;
  auto norm_of = [&](const Vec& f, const ProbVector& mu) {
    if (lp) return lp_norm(f, mu, p);
    return orlicz_norm(f, mu, psi, n);
  };
  auto ratio_of = [&](Vec f) {
    if (mean_zero) f.array() -= mean_measure.mean(f);
    const double denom = norm_of(f, mu_in);
    if (!(denom > 1e-300)) return -kInf;
    return norm_of(a * f, mu_out) / denom;
  };
  double best = 0.0;
  const int total_starts = opt.restarts + static_cast<int>(opt.warm_starts.size());
  for (int r = 0; r < total_starts; ++r) {
    SplitMix64 rng(derive_seed(opt.seed, static_cast<std::uint64_t>(r)));
    Vec f(m);
    if (r < static_cast<int>(opt.warm_starts.size())) {
      if (opt.warm_starts[r].size() != m)
        fail(errc::non_square, "warm start has the wrong dimension");
      f = opt.warm_starts[r];
    } else {
      for (int i = 0; i < m; ++i) f[i] = rng.normal();
    }
    if (f.norm() < 1e-12) f.setOnes();
    f.normalize();
    double current = ratio_of(f);
    double step = 0.5;
    for (int it = 0; it < opt.iterations; ++it) {
      Vec probe = f;
      for (int i = 0; i < m; ++i) probe[i] += step * rng.normal();
      if (probe.norm() < 1e-12) continue;
      probe.normalize();
      const double value = ratio_of(probe);
      if (value > current) {
        current = value;
        f = probe;
        step = std::min(1.0, step * 1.3);
      } else {
        step *= 0.93;
        if (step < 1e-9) step = 0.5;  // restart the scale, keep the incumbent
      }
    }
    best = std::max(best, current);
  }
  return best;
}

double brute_force_contraction(const MarkovKernel& k, const ProbVector& mu, const Young& psi,
                               NormFlavor n, Direction dir, const AscentOptions& opt) {
  if (dir == Direction::forward) {
    const ProbVector mu_k = push_forward(mu, k);
    return brute_force_operator_ratio(k.matrix(), mu, mu_k, psi, n, true, mu_k, opt);
  }
  const ProbVector mu_k = push_forward(mu, k);
  const MarkovKernel dual = dual_kernel(k, mu);
  return brute_force_operator_ratio(dual.matrix(), mu_k, mu, psi, n, true, mu, opt);
}

}  // namespace clab

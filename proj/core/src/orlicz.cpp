#include "clab/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "clab/error.hpp"

namespace clab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// minimize a quasi-convex objective of log t over [lo, hi]: coarse scan + golden
double log_scale_min(const std::function<double(double)>& value_at, double lo, double hi,
                     int scan_points = 256, int golden_iters = 200) {
  const double log_lo = std::log(lo), log_hi = std::log(hi);
  double best = kInf;
  int best_i = 0;
  for (int i = 0; i < scan_points; ++i) {
    double l = log_lo + (log_hi - log_lo) * i / (scan_points - 1.0);
    double v = value_at(std::exp(l));
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  if (!std::isfinite(best)) fail(errc::bracket_failure, "objective has no finite value on bracket");
  double a = log_lo + (log_hi - log_lo) * std::max(0, best_i - 1) / (scan_points - 1.0);
  double b = log_lo + (log_hi - log_lo) * std::min(scan_points - 1, best_i + 1) / (scan_points - 1.0);
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = value_at(std::exp(x1)), f2 = value_at(std::exp(x2));
  for (int i = 0; i < golden_iters; ++i) {
    if (f1 > f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = value_at(std::exp(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = value_at(std::exp(x1));
    }
  }
  return std::min({best, f1, f2});
}

}  // namespace

NormFlavor dual_flavor(NormFlavor n) {
  return n == NormFlavor::luxemburg ? NormFlavor::amemiya : NormFlavor::luxemburg;
}

const char* flavor_name(NormFlavor n) {
  return n == NormFlavor::luxemburg ? "luxemburg" : "amemiya";
}

double lp_norm(const Vec& f, const ProbVector& mu, double p) {
  if (!(p >= 1.0)) fail(errc::parse_error, "lp_norm needs p >= 1");
  if (f.size() != mu.size()) fail(errc::parse_error, "lp_norm dimension mismatch");
  double fmax = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i)
    if (mu[i] > 0.0) fmax = std::max(fmax, std::abs(f[i]));
  if (fmax == 0.0) return 0.0;
  if (p >= 1e6) return fmax;
  // sum mu_i |f_i|^p = fmax^p * sum mu_i (|f_i|/fmax)^p, accumulated at scale 1
  double acc = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    if (mu[i] == 0.0 || f[i] == 0.0) continue;
    acc += mu[i] * std::exp(p * (std::log(std::abs(f[i])) - std::log(fmax)));
  }
  return fmax * std::exp(std::log(acc) / p);
}

double luxemburg_norm(const Vec& f, const ProbVector& mu, const Young& psi) {
  if (f.size() != mu.size()) fail(errc::parse_error, "luxemburg_norm dimension mismatch");
  double fmax = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i)
    if (mu[i] > 0.0) fmax = std::max(fmax, std::abs(f[i]));
  if (fmax == 0.0) return 0.0;
  auto level = [&](double s) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      if (mu[i] == 0.0) continue;
      acc += mu[i] * psi(std::abs(f[i]) / s);
      if (!(acc <= 1.0)) return kInf;  // early out; also absorbs overflow
    }
    return acc;
  };
  // mu(psi(|f|/s)) <= 1 certainly holds at hi and fails below lo
  double hi = fmax / psi.inverse(1.0);
  double lo = fmax / psi.inverse(1.0 / mu.min_positive_mass());
  if (lo <= 0.0 || !std::isfinite(lo)) lo = std::min(1e-300, hi);
  if (level(hi) > 1.0) {  // guard: inflate if the generalized inverse was loose
    int guard = 0;
    while (level(hi) > 1.0) {
      hi *= 2.0;
      if (++guard > 200) fail(errc::bracket_failure, "luxemburg bracket failed");
    }
  }
  while (hi - lo > 1e-11) {
    double mid = 0.5 * (lo + hi);
    if (level(mid) <= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double amemiya_norm(const Vec& f, const ProbVector& mu, const Young& psi) {
  if (f.size() != mu.size()) fail(errc::parse_error, "amemiya_norm dimension mismatch");
  double fmax = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i)
    if (mu[i] > 0.0) fmax = std::max(fmax, std::abs(f[i]));
  if (fmax == 0.0) return 0.0;
  auto objective = [&](double t) {
    double acc = 1.0;
    for (Eigen::Index i = 0; i < f.size(); ++i) {
      if (mu[i] == 0.0) continue;
      acc += mu[i] * psi(t * std::abs(f[i]));
      if (!std::isfinite(acc)) return kInf;
    }
    return acc / t;
  };
  // scale-invariant bracket around t ~ 1/fmax
  return log_scale_min(objective, 1e-12 / fmax, 1e12 / fmax);
}

double orlicz_norm(const Vec& f, const ProbVector& mu, const Young& psi, NormFlavor n) {
  return n == NormFlavor::luxemburg ? luxemburg_norm(f, mu, psi) : amemiya_norm(f, mu, psi);
}

double constant_norm(double c, const Young& psi, NormFlavor n) {
  c = std::abs(c);
  if (c == 0.0) return 0.0;
  if (n == NormFlavor::luxemburg) return c / psi.inverse(1.0);
  return c * psi.conjugate_inverse(1.0);
}

HolderPair holder_product(const Vec& u, const Vec& v, const ProbVector& mu, const Young& psi) {
  if (u.size() != v.size() || u.size() != mu.size())
    fail(errc::parse_error, "holder_product dimension mismatch");
  double lhs = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) lhs += mu[i] * std::abs(u[i] * v[i]);
  double rhs = luxemburg_norm(u, mu, psi) * amemiya_norm(v, mu, psi.conjugate_young());
  return {lhs, rhs};
}

RhoResult rho_functional(const Vec& f, const ProbVector& mu, double c) {
  if (!(c > 0.0)) fail(errc::parse_error, "rho functional needs budget c > 0");
  if (f.size() != mu.size()) fail(errc::parse_error, "rho_functional dimension mismatch");
  double mean = mu.mean(f);
  Vec g = f.array() - mean;
  double gmax = 0.0;
  for (Eigen::Index i = 0; i < g.size(); ++i)
    if (mu[i] > 0.0) gmax = std::max(gmax, std::abs(g[i]));
  if (gmax == 0.0) return {0.0, true};  // constant f: (c + 0)/t -> 0 as t -> inf
  auto log_mgf = [&](double t) {
    double shift = 0.0;
    for (Eigen::Index i = 0; i < g.size(); ++i)
      if (mu[i] > 0.0) shift = std::max(shift, t * g[i]);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < g.size(); ++i)
      if (mu[i] > 0.0) acc += mu[i] * std::exp(t * g[i] - shift);
    return shift + std::log(acc);
  };
  auto objective = [&](double t) { return (c + log_mgf(t)) / t; };
  double value = log_scale_min(objective, 1e-18 / gmax, 1e18 / gmax);
  return {value, false};
}

}  // namespace clab

#pragma once

#include <string>

#include "clab/prob.hpp"

namespace clab {

// All divergences require nu absolutely continuous w.r.t. mu and use the
// conventions 0 log 0 = 0, 0 * inf = 0.

double kl_divergence(const ProbVector& nu, const ProbVector& mu);
double chi2_divergence(const ProbVector& nu, const ProbVector& mu);
double tv_distance(const ProbVector& nu, const ProbVector& mu);

// (sum_x nu^alpha mu^{1-alpha} - 1) / (alpha - 1), alpha > 1
double hellinger_divergence(double alpha, const ProbVector& nu, const ProbVector& mu);

// ||dnu/dmu - 1||^alpha_{L_alpha(mu)}; alpha = 1 gives 2 TV, alpha = 2 chi^2
double centered_alpha_power(double alpha, const ProbVector& nu, const ProbVector& mu);

struct DivergenceKind {
  enum class tag { kl, chi2, tv, hellinger, centered_alpha } which;
  double alpha = 2.0;

  // "kl" | "chi2" | "tv" | "h:ALPHA" | "ha:ALPHA"
  static DivergenceKind parse(const std::string& text);
  std::string name() const;
};

double divergence(const DivergenceKind& kind, const ProbVector& nu, const ProbVector& mu);

}  // namespace clab

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "clab/markov.hpp"

namespace clab {

// A Markov chain X_1, ..., X_t together with the concentration parameters.
// f is the empirical mean of a per-state observable in [0, 1] (bounded
// differences 1/t), so McDiarmid-style bounds apply.
struct ConcentrationScenario {
  ConcentrationScenario(std::vector<MarkovKernel> ks, ProbVector s)
      : kernels(std::move(ks)), start(std::move(s)) {}

  std::vector<MarkovKernel> kernels;  // one entry (homogeneous) or t-1 entries
  ProbVector start;                   // law of X_1
  int t = 1;
  int t0 = 0;                         // burn-in steps before X_1 (bound inputs)
  double eta = 0.5;
  double p = 100.0;                   // exponent feeding q = p/(p-1)
  long trials = 100000;               // Monte Carlo sample size
  std::uint64_t seed = 1;
  std::vector<double> observable;     // per-state values in [0,1]; default x/(m-1)

  const MarkovKernel& kernel_at(int step) const;  // step in [0, t-2]
  bool homogeneous() const { return kernels.size() == 1; }
  int state_count() const { return start.size(); }
  std::vector<ProbVector> marginals() const;  // laws of X_1 ... X_t
};

// ---- MCMC error bounds (spectral-gap form, gap = 1 - 2 lambda) -----------

// ours: exp(-2 l t e^2/(1-l)) + |1-2l|^{t0} exp(-2 l t e^2/(q(1-l))) ||dnu/dpi - 1||_p
// baseline: C(nu, t0, p) exp(-(2/q)(l/(1-l)) t e^2) with the three-case C.
struct McmcTailBounds {
  double ours;
  double baseline;
};
McmcTailBounds mcmc_tail_bounds(const ConcentrationScenario& scn, double lambda);

// Smallest burn-in that makes `ours` above at most delta:
// t0 >= log((delta - A)/(A M)) / log|1-2l|, A = exp(-2 l t e^2/(1-l)),
// M = ||dnu/dpi - 1||_inf. Returns 0 when delta >= A(1+M); throws
// delta_too_small when delta <= A.
long long burn_in_lower_bound(double delta, double t, double eta, double lambda, double m_norm);

// ---- McDiarmid-type bounds for dependent coordinates ----------------------

// 2^{1/q} exp(-2 t eta^2 / q) prod_{i=2}^t (c_i w_i + 1), where c_i is the
// dual mean-zero L_p contraction bound of step i w.r.t. the running marginal
// and w_i is the worst Dirac-start L_p norm under that marginal.
double markov_mcdiarmid_bound(const ConcentrationScenario& scn);

// Same statement with the contraction factor replaced by the doubly-stochastic
// closed form, clamped at 1 before taking the 1/p root (uniform marginals).
double doubly_stochastic_concentration_bound(const MarkovKernel& k, double eta, int t, double p);

// baseline with the trivial per-step factor m^{1/q}
double state_count_baseline(int m, double eta, int t, double q);

// Binary channel closed forms; theta = |1 - lambda - kappa|.  These keep the
// roles of lambda and kappa exactly as passed: the per-step factor is
// (2 theta kappa + lambda) / lambda (and (lambda + kappa) / lambda for the
// hypercontractivity route), the Dirac term being the one at the state whose
// stationary mass is lambda / (lambda + kappa).  For the worst-start variant
// use markov_mcdiarmid_bound, which maximizes over Dirac starts.
double binary_concentration_bound_p(double lambda, double kappa, double eta, int t, double p);
double binary_concentration_bound(double lambda, double kappa, double eta, int t);  // p -> inf
double binary_hypercontractivity_baseline(double lambda, double kappa, double eta, int t);

struct LiteratureBaselines {
  double martingale;        // exp(-(k+l)^2 t e^2 / (1 - theta^t)^2)
  double stationary_change; // exp(-t e^2 (k+l) / (2-k-l))
  double coupling;          // exp(-2 t e^2 (l+k)^2 + 2 t (k+l) sqrt(t log2 / 2))
};
LiteratureBaselines literature_baselines(double lambda, double kappa, double eta, int t);

// eta^2 above which the binary closed form beats all three baselines
double literature_crossover_eta2(double lambda, double kappa, int t);

// exponential-decay thresholds for the m x m comparison figures
double eta_threshold_state_count(int m);
double eta_threshold_contraction(const MarkovKernel& k, const ProbVector& start, double p);

// ---- Monte Carlo ----------------------------------------------------------

struct EmpiricalTail {
  double estimate;
  double wilson_lo;
  double wilson_hi;
  long trials;
};
// frequency of |f(X) - E_prod(f)| >= eta over seeded simulations, with a 95%
// Wilson score interval
EmpiricalTail empirical_tail(const ConcentrationScenario& scn);

}  // namespace clab

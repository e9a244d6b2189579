#pragma once

#include <cstdint>

#include "clab/contraction.hpp"
#include "clab/markov.hpp"
#include "clab/orlicz.hpp"

namespace clab {

// Closed-form upper bound on max_x || d delta_x K^0 / d pi - 1 ||, the worst
// starting-point norm (Dirac starts dominate). Case split on pi(x) >= 1/2.
double max_dirac_norm(const ProbVector& pi, const Young& psi, NormFlavor n);

// The same maximum evaluated exactly through the norm routines (test oracle).
double exact_max_dirac_norm(const ProbVector& pi, const Young& psi, NormFlavor n);

struct MixingReport {
  long long steps = 0;      // valid when !vacuous
  bool vacuous = false;     // contraction factor >= 1: no finite guarantee
  double contraction = 0.0; // dual nested-norm bound used
  double start_norm = 0.0;  // closed-form worst-start norm
};

// ceil( log(start_norm / eps) / -log(contraction) ), with the independence
// kernel (contraction 0) needing exactly one step.
MixingReport mixing_time_bound(const MarkovKernel& k, const ProbVector& pi, const Young& psi,
                               NormFlavor n, double eps);

// Smallest t <= t_max with max_x || d delta_x K^t / d pi - 1 || <= eps.
long long exact_mixing_time(const MarkovKernel& k, const ProbVector& pi, const Young& psi,
                            NormFlavor n, double eps, long long t_max = 100000);

// Tail bounds mu K^t(E) <= ... from a norm bound eps_t on ||d mu K^t/d pi - 1||:
//   amemiya branch:   (norm + psi*^{-1}(1)) / psi*^{-1}(1/pi(E))
//   luxemburg branch: pi(E) psi^{-1}(1/pi(E)) (norm + 1/psi^{-1}(1))
double event_bound_orlicz(double pi_e, double norm_value, const Young& psi, NormFlavor n);

// L_p version pi(E)^{1/q} (pi(E)^{1/p} + norm), q = p/(p-1)
double event_bound_lp(double pi_e, double norm_value, double p);

// Mixing-time requirement for exponentially decaying event bounds when
// pi(E) <= 2 exp(-2 n eta^2 / C^2):
//   tau <= (log(start_norm) + q C^2/(n eta^2)) / -log(contraction).
double exponential_decay_mixing_time(const MarkovKernel& k, const ProbVector& pi, double p,
                                     double n, double eta, double c);

}  // namespace clab

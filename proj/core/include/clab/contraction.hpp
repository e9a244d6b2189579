#pragma once

#include <cstdint>
#include <vector>

#include "clab/markov.hpp"
#include "clab/orlicz.hpp"

namespace clab {

// Direction of the operator whose mean-zero contraction factor is bounded:
//   forward: f -> K f      from L^0_phi(mu K) to L^0_psi(mu)
//   dual:    h -> K* h     from L^0_phi(mu)   to L^0_psi(mu K)
enum class Direction { forward, dual };

// Nested-norm upper bound on the mean-zero contraction factor of the t-step
// kernel: the outer norm (flavor n) of the inner conjugate norm (dual flavor)
// of the centered transition densities.
double orlicz_contraction_bound(const MarkovKernel& k, const ProbVector& mu, const Young& psi,
                                const Young& phi, NormFlavor n, Direction dir, int t = 1);

// L_p specialization: inner exponent is the conjugate q* = q/(q-1) of the
// source exponent, outer exponent p; evaluated with log-domain p-norms so
// p, q up to 1e6 (and beyond, via the max path) are fine.
double lp_contraction_bound(const MarkovKernel& k, const ProbVector& mu, double p, double q,
                            Direction dir, int t = 1);

// Exact mean-zero L_2(pi) contraction factor: top singular value of the
// pi-weighted transition operator after deflating the constant-function pair.
// Requires pi stationary for k.
double exact_l2_contraction(const MarkovKernel& k, const ProbVector& pi);

// (sum_cols (sum_rows |entry - 1/m|^q)^{p/q})^{1/p} with q = p/(p-1); bounds
// the mean-zero L_p contraction of the transpose of a doubly stochastic matrix.
double doubly_stochastic_bound(const MarkovKernel& k, double p);

// max_x 2 TV(K^t(.|x), pi) = || K^t - 1_pi ||_{L_inf -> L_inf}, exact.
double tv_ergodicity_bound(const MarkovKernel& k, const ProbVector& pi, int t);

// exact || K^t - 1_pi ||_{L_1(pi) -> L_1(pi)} (attained at scaled indicators)
double l1_operator_norm(const MarkovKernel& k, const ProbVector& pi, int t);

// || K^t - 1_pi ||_{L_inf -> L_inf} via the sign-vector extreme points; agrees
// with tv_ergodicity_bound and exists as an independent oracle for it.
double linf_operator_norm_oracle(const MarkovKernel& k, const ProbVector& pi, int t);

// Interpolation baseline on || K^t - 1_pi ||_{L_p -> L_p} from the spectral
// gap alone: 2^{2/p} g^{2t(p-1)/p} for p in (1,2), g^t at p = 2,
// 2^{2(p-1)/p} g^{2t/p} for p in (2,inf), and the trivial 2 at p in {1, inf}.
double riesz_thorin_baseline(double gamma, double p, int t);

// Same interpolation with the trivial endpoint replaced by the exactly
// computed L_1 (p < 2) or L_inf (p > 2) operator norm of K^t - 1_pi.
double riesz_thorin_interpolated(const MarkovKernel& k, const ProbVector& pi, double p, int t);

// min over x, y, z with K(z|y) > 0 of K(z|x) / K(z|y); every Orlicz
// contraction factor of such a kernel is at most 1 - epsilon.
double ultra_mixing_coefficient(const MarkovKernel& k);

// ---- semigroup ----------------------------------------------------------

// ours: outer L_p(pi) norm over starting points of the inner L_{q*}(pi) norm
// of the centered heat-kernel densities of H_t.
double semigroup_nested_bound(const MarkovKernel& k, const ProbVector& pi, double t, double p,
                              double q);

// exact || H_t - 1_pi ||_{L_2(pi) -> L_inf} = max_x || h_t^x - 1 ||_{L_2(pi)}
double semigroup_l2_linf_norm(const MarkovKernel& k, const ProbVector& pi, double t);

// Bound pair along the interpolation schedule p(t) = 2 t_inf / (t_inf - t):
// ours at (p(t), q = 2) against the hypercontractive baseline M^{t/t_inf}
// where M = || H_{t_inf} - 1_pi ||_{L_2 -> L_inf}.
struct SemigroupBounds {
  double ours;
  double baseline;
  double p_of_t;
};
SemigroupBounds semigroup_bounds(const MarkovKernel& k, const ProbVector& pi, double t,
                                 double t_inf);

// ---- brute-force oracle --------------------------------------------------

struct AscentOptions {
  int restarts = 64;
  int iterations = 500;
  std::uint64_t seed = 0x5eed;
  std::vector<Vec> warm_starts;  // extra starting points (projected + normalized)
};

// sup_f ||A f||_{psi, flavor}(mu_out) / ||f||_{psi, flavor}(mu_in) by seeded
// multi-start projected ascent; optionally restricted to mean_measure(f) = 0.
double brute_force_operator_ratio(const Mat& a, const ProbVector& mu_out, const ProbVector& mu_in,
                                  const Young& psi, NormFlavor n, bool mean_zero,
                                  const ProbVector& mean_measure, const AscentOptions& opt = {});

// mean-zero contraction of K (or its dual) in one Orlicz norm; lower estimate
double brute_force_contraction(const MarkovKernel& k, const ProbVector& mu, const Young& psi,
                               NormFlavor n, Direction dir, const AscentOptions& opt = {});

}  // namespace clab

#pragma once

#include <cstdint>
#include <vector>

#include "clab/contraction.hpp"
#include "clab/divergence.hpp"
#include "clab/markov.hpp"

namespace clab {

// Hellinger-alpha SDPI constant bound: the dual nested L_alpha/L_beta norm of
// the centered reversed densities raised to the alpha (beta = alpha/(alpha-1)).
double hellinger_sdpi_bound(const MarkovKernel& k, const ProbVector& mu, double alpha);

// Dobrushin coefficient sup_{x,x'} TV(K(.|x), K(.|x')); equals the TV SDPI
// constant and upper-bounds every eta_phi.
double dobrushin_coefficient(const MarkovKernel& k);

// chi^2 SDPI bound for the lazy graph walk at stationarity:
// |V| (1-lambda)^2 + lambda^2 sum_y h(y)/deg(y) - 1, h(y) = sum_{x ~ y} 1/deg(x).
double chi2_walk_bound(const Graph& g, double lambda);

// ---- KL route ------------------------------------------------------------

// Distribution-sensitive Hoeffding constants, entering as
//   log-MGF <= binary_mass(p) t^2 range^2 / 2   (two-point law, masses p, 1-p)
//   log-MGF <= mean_position(kappa) t^2 range^2 (kappa = (mean - min)/range)
// binary_mass is symmetric with value 1/4 at p = 1/2 (classical 1/8 constant);
// mean_position is 0 at 0, (1-2k)/(4 log((1-k)/k)) on (0,1/2), k(1-k)/2 on
// [1/2,1], continuous with value 1/8 at 1/2, and binary_mass(p) equals
// 2 mean_position(min(p, 1-p)).
double hoeffding_binary_mass(double p);
double hoeffding_mean_position(double kappa);

// KL SDPI evaluation: D(nu K || mu K) <= sum_y (mu K)(y) hat(rho_y) where
// rho_y is the Donsker-Varadhan functional of the reversed density column with
// budget D(nu || mu), and hat applies the clipped entropy function on
// {y : (nu K)(y) < (mu K)(y)} and the entropy function elsewhere (ties take
// the entropy branch). quadratic replaces both by x^2. Requires D(nu||mu) > 0.
struct KlSdpiResult {
  double phi_hat_bound;
  double quadratic_bound;
  std::vector<double> rho;  // one value per output state
};
KlSdpiResult kl_sdpi_bound(const MarkovKernel& k, const ProbVector& mu, const ProbVector& nu);

// Closed-form two-term relaxation for the binary channel (lambda, kappa) with
// input law (p, 1-p) and start (q, 1-q): the Donsker-Varadhan values are
// replaced by the refined-Hoeffding expressions sqrt(2 c(p) D theta^2)/(mu K).
double binary_kl_hoeffding_bound(double lambda, double kappa, double p, double q);

// Start-free variant: the clipped/unclipped branch assignment is not read off
// nu K but maximized over, so the value bounds D(nu K || mu K) for every
// start (q, 1-q) with the same KL budget. Always >= the branch-aware value.
double binary_kl_max_bound(double lambda, double kappa, double p, double q);

// Quadratic-relaxation SDPI baseline eta_KL <= (1/2) sum_y muK(y) r_y^2 with
// r_y the range of the reversed density column over its positivity support
// (structural zeros excluded). The literature comparison curve in the graph
// figures; always >= subgaussian_sdpi_bound on kernels without zeros.
double support_hoeffding_sdpi_bound(const MarkovKernel& k, const ProbVector& mu);

// Sub-Gaussian SDPI constant bound 2 muK(sigma^2(g_Y)) with sigma^2 taken from
// the mean-position Hoeffding constant of each reversed density column.
double subgaussian_sdpi_bound(const MarkovKernel& k, const ProbVector& mu);

// Lazy graph walk KL bounds at stationarity for a start distribution nu.
struct GraphKlBounds {
  double ours;      // clipped-entropy of sqrt(4 d c(1/|V|) D(nu||pi))
  double baseline;  // D(nu||pi) |V|^2/2 (1 - |V| lambda/(|V|-1))^2
};
GraphKlBounds graph_kl_bounds(const Graph& g, double lambda, const ProbVector& nu);

// ---- oracle ---------------------------------------------------------------

struct SdpiSearchOptions {
  int grid = 0;  // 0: automatic (200 for m = 2, 60 for m = 3, random for larger)
  int random_points = 4096;
  int refine_iterations = 400;
  std::uint64_t seed = 0x5eed;
};

// sup_nu D(nu K || mu K) / D(nu || mu): dense simplex grid (m <= 3) or random
// sampling, then projected coordinate ascent around the best point.
double brute_force_sdpi(const MarkovKernel& k, const ProbVector& mu, const DivergenceKind& kind,
                        const SdpiSearchOptions& opt = {});

}  // namespace clab

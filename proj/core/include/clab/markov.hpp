#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "clab/prob.hpp"

namespace clab {

// Row-stochastic transition matrix. Row x holds K(. | x): measures are pushed
// forward from the right (nu K), functions are pulled back from the left (K f).
class MarkovKernel {
 public:
  explicit MarkovKernel(Mat k);

  int size() const { return static_cast<int>(k_.rows()); }
  const Mat& matrix() const { return k_; }
  // K(y | x)
  double operator()(int x, int y) const { return k_(x, y); }

  bool is_doubly_stochastic(double tol = 1e-10) const;

 private:
  Mat k_;
};

ProbVector push_forward(const ProbVector& mu, const MarkovKernel& k);
Vec apply_to_function(const MarkovKernel& k, const Vec& f);

MarkovKernel t_step(const MarkovKernel& k, int t);

// Unique solution of pi K = pi; rejects kernels whose fixed space has
// dimension != 1 (rank tolerance 1e-8 on the singular values of K^T - I).
ProbVector stationary_distribution(const MarkovKernel& k);
bool is_stationary(const MarkovKernel& k, const ProbVector& pi, double tol = 1e-8);

// Time reversal w.r.t. mu: K*(x | y) = K(y | x) mu(x) / (mu K)(y).
// Requires (mu K) > 0 everywhere.
MarkovKernel dual_kernel(const MarkovKernel& k, const ProbVector& mu);

// Relative densities of the transition rows against the pushforward marginal.
// The single matrix serves both directions:
//   row x     : y -> K(y|x) / (mu K)(y), the density of K(.|x) against mu K
//   column y  : x -> K*(x|y) / mu(x),    the density of the reversed rows
// Requires mu > 0 and (mu K) > 0 everywhere.
struct KernelDensities {
  ProbVector mu;
  ProbVector mu_k;
  Mat g;  // g(x, y) = K(y|x) / (mu K)(y)

  Vec forward_row(int x) const { return g.row(x).transpose(); }
  Vec dual_column(int y) const { return g.col(y); }
};

KernelDensities densities(const MarkovKernel& k, const ProbVector& mu);

// Continuous-time semigroup H_t = exp(-t (I - K)), computed by
// scaling-and-squaring with a degree-12 Taylor evaluation.
MarkovKernel semigroup_kernel(const MarkovKernel& k, double t);
Mat matrix_exponential(const Mat& a);

// ---- builders ----------------------------------------------------------

// [[1-lambda, lambda], [kappa, 1-kappa]]; lambda, kappa in [0, 1]
MarkovKernel general_binary(double lambda, double kappa);
MarkovKernel bsc(double lambda);
ProbVector general_binary_stationary(double lambda, double kappa);

// every row equal to mu
MarkovKernel independence_kernel(const ProbVector& mu);

// Simple undirected connected graph on {0, ..., n-1}.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static Graph path(int n);
  static Graph complete(int n);
  static Graph cycle(int n);

  std::vector<int> degrees() const;
  bool connected() const;
  void validate() const;  // simple + connected, throws otherwise
};

// Lazy walk: stay with probability 1-lambda, otherwise move to a uniformly
// random neighbour. Stationary law is deg(x) / (2 |E|).
MarkovKernel graph_walk(const Graph& g, double lambda);
ProbVector graph_walk_stationary(const Graph& g);

// Rows are i.i.d. Exp(1) vectors normalized to mass one (deterministic in seed).
MarkovKernel random_stochastic(int m, std::uint64_t seed);

// Doubly stochastic sample: symmetrized product of random permutation mixtures
// is overkill here; we use Sinkhorn balancing of a random positive matrix,
// which keeps entries strictly positive. Deterministic in seed.
MarkovKernel random_doubly_stochastic(int m, std::uint64_t seed);

}  // namespace clab

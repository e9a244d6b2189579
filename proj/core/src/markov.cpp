#include "clab/markov.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "clab/error.hpp"
#include "clab/rng.hpp"

namespace clab {

namespace {

constexpr double kRowTol = 1e-10;
constexpr double kNegTol = -1e-12;

Mat validated_kernel(Mat k) {
  if (k.rows() == 0 || k.rows() != k.cols()) fail(errc::non_square, "kernel must be square");
  for (Eigen::Index x = 0; x < k.rows(); ++x) {
    double row_sum = 0.0;
    for (Eigen::Index y = 0; y < k.cols(); ++y) {
      double v = k(x, y);
      if (!std::isfinite(v)) fail(errc::non_finite, "kernel entry is not finite");
      if (v < kNegTol) fail(errc::negative_entry, "negative kernel entry");
      if (v < 0.0) v = 0.0;
      if (v > 1.0 + kRowTol) fail(errc::row_sum_violation, "kernel entry exceeds 1");
      k(x, y) = v;
      row_sum += v;
    }
    if (std::abs(row_sum - 1.0) > kRowTol) fail(errc::row_sum_violation, "row sum is not 1");
  }
  return k;
}

}  // namespace

MarkovKernel::MarkovKernel(Mat k) : k_(validated_kernel(std::move(k))) {}

bool MarkovKernel::is_doubly_stochastic(double tol) const {
  for (Eigen::Index y = 0; y < k_.cols(); ++y)
    if (std::abs(k_.col(y).sum() - 1.0) > tol) return false;
  return true;
}

ProbVector push_forward(const ProbVector& mu, const MarkovKernel& k) {
  if (mu.size() != k.size()) fail(errc::non_square, "measure/kernel size mismatch");
  Vec out = k.matrix().transpose() * mu.weights();
  return ProbVector(std::move(out));
}

Vec apply_to_function(const MarkovKernel& k, const Vec& f) {
  if (f.size() != k.size()) fail(errc::non_square, "function/kernel size mismatch");
  return k.matrix() * f;
}

MarkovKernel t_step(const MarkovKernel& k, int t) {
  if (t < 0) fail(errc::parse_error, "negative step count");
  const int m = k.size();
  Mat acc = Mat::Identity(m, m);
  Mat base = k.matrix();
  int e = t;
  while (e > 0) {  // binary powering keeps t ~ 1e6 cheap
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return MarkovKernel(std::move(acc));
}

ProbVector stationary_distribution(const MarkovKernel& k) {
  const int m = k.size();
  Mat a = k.matrix().transpose() - Mat::Identity(m, m);
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  double tol = 1e-8 * std::max(1.0, sv.size() > 0 ? sv[0] : 1.0);
  int null_dim = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] <= tol) ++null_dim;
  if (null_dim != 1)
    fail(errc::non_unique_stationary, "fixed space dimension is " + std::to_string(null_dim));
  Vec pi = svd.matrixV().col(m - 1);
  if (pi.sum() < 0.0) pi = -pi;
  for (Eigen::Index i = 0; i < pi.size(); ++i)
    if (pi[i] < 0.0 && pi[i] > -1e-9) pi[i] = 0.0;
  double total = pi.sum();
  if (total <= 0.0) fail(errc::non_unique_stationary, "degenerate fixed vector");
  pi /= total;
  ProbVector out(std::move(pi));
  if (!is_stationary(k, out, 1e-8))
    fail(errc::non_unique_stationary, "fixed vector fails pi K = pi");
  return out;
}

bool is_stationary(const MarkovKernel& k, const ProbVector& pi, double tol) {
  Vec diff = k.matrix().transpose() * pi.weights() - pi.weights();
  return diff.cwiseAbs().maxCoeff() <= tol;
}

MarkovKernel dual_kernel(const MarkovKernel& k, const ProbVector& mu) {
  const int m = k.size();
  if (mu.size() != m) fail(errc::non_square, "measure/kernel size mismatch");
  ProbVector mu_k = push_forward(mu, k);
  Mat dual(m, m);
  for (int y = 0; y < m; ++y) {
    if (mu_k[y] <= 0.0) fail(errc::zero_pushed_mass, "pushforward vanishes at a state");
    for (int x = 0; x < m; ++x) dual(y, x) = k(x, y) * mu[x] / mu_k[y];
  }
  return MarkovKernel(std::move(dual));
}

KernelDensities densities(const MarkovKernel& k, const ProbVector& mu) {
  const int m = k.size();
  if (mu.size() != m) fail(errc::non_square, "measure/kernel size mismatch");
  if (!mu.strictly_positive()) fail(errc::zero_mass, "base measure must be strictly positive");
  ProbVector mu_k = push_forward(mu, k);
  if (!mu_k.strictly_positive()) fail(errc::zero_pushed_mass, "pushforward vanishes at a state");
  Mat g(m, m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) g(x, y) = k(x, y) / mu_k[y];
  return KernelDensities{mu, mu_k, std::move(g)};
}

Mat matrix_exponential(const Mat& a) {
  // scaling and squaring, degree-12 Taylor on the scaled matrix
  double norm1 = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) norm1 = std::max(norm1, a.col(j).cwiseAbs().sum());
  int squarings = 0;
  double scale = 1.0;
  while (norm1 * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  Mat b = a * scale;
  Mat term = Mat::Identity(a.rows(), a.cols());
  Mat sum = term;
  for (int j = 1; j <= 12; ++j) {
    term = (term * b) / static_cast<double>(j);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

MarkovKernel semigroup_kernel(const MarkovKernel& k, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) fail(errc::parse_error, "semigroup time must be >= 0");
  const int m = k.size();
  Mat gen = t * (k.matrix() - Mat::Identity(m, m));
  return MarkovKernel(matrix_exponential(gen));
}

MarkovKernel general_binary(double lambda, double kappa) {
  if (!(lambda >= 0.0 && lambda <= 1.0 && kappa >= 0.0 && kappa <= 1.0))
    fail(errc::lambda_out_of_range, "binary channel parameters must lie in [0,1]");
  Mat k(2, 2);
  k << 1.0 - lambda, lambda, kappa, 1.0 - kappa;
  return MarkovKernel(std::move(k));
}

MarkovKernel bsc(double lambda) { return general_binary(lambda, lambda); }

ProbVector general_binary_stationary(double lambda, double kappa) {
  if (lambda + kappa <= 0.0)
    fail(errc::non_unique_stationary, "identity channel has no unique stationary law");
  Vec pi(2);
  pi << kappa / (kappa + lambda), lambda / (kappa + lambda);
  return ProbVector(std::move(pi));
}

MarkovKernel independence_kernel(const ProbVector& mu) {
  const int m = mu.size();
  Mat k(m, m);
  for (int x = 0; x < m; ++x) k.row(x) = mu.weights().transpose();
  return MarkovKernel(std::move(k));
}

Graph Graph::path(int n) {
  Graph g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Graph Graph::complete(int n) {
  Graph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n > 2) g.edges.emplace_back(0, n - 1);
  return g;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n, 0);
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool Graph::connected() const {
  if (n <= 1) return n == 1;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == n;
}

void Graph::validate() const {
  if (n <= 0) fail(errc::parse_error, "graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) fail(errc::parse_error, "edge endpoint out of range");
    if (a == b) fail(errc::parse_error, "self loops are not allowed");
    auto e = std::minmax(a, b);
    if (!seen.insert({e.first, e.second}).second) fail(errc::parse_error, "duplicate edge");
  }
  if (!connected()) fail(errc::disconnected_graph, "graph is not connected");
}

MarkovKernel graph_walk(const Graph& g, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) fail(errc::lambda_out_of_range, "lambda must be in [0,1]");
  g.validate();
  auto deg = g.degrees();
  Mat k = Mat::Zero(g.n, g.n);
  for (int x = 0; x < g.n; ++x) k(x, x) = 1.0 - lambda;
  for (auto [a, b] : g.edges) {
    k(a, b) += lambda / static_cast<double>(deg[a]);
    k(b, a) += lambda / static_cast<double>(deg[b]);
  }
  return MarkovKernel(std::move(k));
}

ProbVector graph_walk_stationary(const Graph& g) {
  g.validate();
  auto deg = g.degrees();
  double total = 2.0 * static_cast<double>(g.edges.size());
  Vec pi(g.n);
  for (int x = 0; x < g.n; ++x) pi[x] = static_cast<double>(deg[x]) / total;
  return ProbVector(std::move(pi));
}

MarkovKernel random_stochastic(int m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Mat k(m, m);
  for (int x = 0; x < m; ++x) {
    double row_sum = 0.0;
    for (int y = 0; y < m; ++y) {
      k(x, y) = rng.exponential();
      row_sum += k(x, y);
    }
    k.row(x) /= row_sum;
  }
  return MarkovKernel(std::move(k));
}

MarkovKernel random_doubly_stochastic(int m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Mat k(m, m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) k(x, y) = rng.exponential() + 1e-3;
  for (int sweep = 0; sweep < 500; ++sweep) {
    for (int x = 0; x < m; ++x) k.row(x) /= k.row(x).sum();
    for (int y = 0; y < m; ++y) k.col(y) /= k.col(y).sum();
  }
  for (int x = 0; x < m; ++x) k.row(x) /= k.row(x).sum();
  return MarkovKernel(std::move(k));
}

}  // namespace clab

#include <cmath>

#include "clab/error.hpp"
#include "clab/markov.hpp"
#include "clab/prob.hpp"
#include "clab/rng.hpp"
#include "doctest.h"

using namespace clab;

namespace {

Mat mat3(std::initializer_list<double> rows) {
  Mat m(3, 3);
  int i = 0;
  for (double v : rows) {
    m(i / 3, i % 3) = v;
    ++i;
  }
  return m;
}

const Mat kExemplar = mat3({0.2, 0.1, 0.7, 0.3, 0.4, 0.3, 0.5, 0.5, 0.0});

}  // namespace

TEST_SUITE_BEGIN("unit");

TEST_CASE("probability vectors validate mass and clamp the tolerance band") {
  ProbVector u = ProbVector::uniform(4);
  for (int x = 0; x < 4; ++x) CHECK(u[x] == 0.25);

  ProbVector d = ProbVector::dirac(3, 1);
  CHECK(d[0] == 0.0);
  CHECK(d[1] == 1.0);
  CHECK_FALSE(d.strictly_positive());

  Vec w(2);
  w << 1.0 + 5e-13, -5e-13;
  CHECK(ProbVector(w)[1] == 0.0);

  Vec negative(2);
  negative << 1.1, -0.1;
  CHECK_THROWS_AS(ProbVector{negative}, error);
  Vec off_mass(2);
  off_mass << 0.7, 0.2;
  CHECK_THROWS_AS(ProbVector{off_mass}, error);

  Vec f(4);
  f << 1.0, 2.0, 3.0, 4.0;
  CHECK(u.mean(f) == doctest::Approx(2.5));
}

TEST_CASE("seeded random laws are reproducible and strictly positive") {
  ProbVector a = ProbVector::random(6, 99);
  ProbVector b = ProbVector::random(6, 99);
  ProbVector c = ProbVector::random(6, 100);
  bool same_seed_same_law = true;
  bool different_seed_same_law = true;
  for (int x = 0; x < 6; ++x) {
    same_seed_same_law = same_seed_same_law && a[x] == b[x];
    different_seed_same_law = different_seed_same_law && a[x] == c[x];
  }
  CHECK(same_seed_same_law);
  CHECK_FALSE(different_seed_same_law);
  CHECK(a.strictly_positive());
  CHECK(a.min_positive_mass() > 0.0);
}

TEST_CASE("splitmix streams are deterministic and decorrelated") {
  SplitMix64 a(7);
  SplitMix64 b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CHECK(derive_seed(7, 0) != derive_seed(7, 1));
  CHECK(derive_seed(7, 1) == derive_seed(7, 1));

  SplitMix64 u(123);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("kernel construction rejects malformed matrices") {
  Mat bad_row(2, 2);
  bad_row << 0.5, 0.4, 0.3, 0.7;
  CHECK_THROWS_AS(MarkovKernel{bad_row}, error);

  Mat negative(2, 2);
  negative << 1.2, -0.2, 0.5, 0.5;
  CHECK_THROWS_AS(MarkovKernel{negative}, error);

  Mat rect(2, 3);
  rect.setConstant(1.0 / 3.0);
  CHECK_THROWS_AS(MarkovKernel{rect}, error);
}

TEST_CASE("pushforward and function application are the two matrix actions") {
  MarkovKernel k(kExemplar);
  ProbVector nu(std::vector<double>{0.5, 0.25, 0.25});

  ProbVector pushed = push_forward(nu, k);
  for (int y = 0; y < 3; ++y) {
    double want = 0.0;
    for (int x = 0; x < 3; ++x) want += nu[x] * k(x, y);
    CHECK(pushed[y] == doctest::Approx(want).epsilon(1e-15));
  }

  Vec f(3);
  f << 2.0, -1.0, 0.5;
  Vec kf = apply_to_function(k, f);
  for (int x = 0; x < 3; ++x) {
    double want = 0.0;
    for (int y = 0; y < 3; ++y) want += k(x, y) * f[y];
    CHECK(kf[x] == doctest::Approx(want).epsilon(1e-15));
  }

  // constants are fixed points of row-stochastic action
  Vec ones = Vec::Ones(3);
  CHECK((apply_to_function(k, ones) - ones).lpNorm<Eigen::Infinity>() < 1e-15);
}

TEST_CASE("t_step is the matrix power") {
  MarkovKernel k(kExemplar);
  MarkovKernel k3 = t_step(k, 3);
  Mat want = kExemplar * kExemplar * kExemplar;
  CHECK((k3.matrix() - want).lpNorm<Eigen::Infinity>() < 1e-14);
  CHECK((t_step(k, 1).matrix() - kExemplar).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("stationary law solves pi K = pi and closed forms agree") {
  MarkovKernel k(kExemplar);
  ProbVector pi = stationary_distribution(k);
  CHECK(is_stationary(k, pi));
  ProbVector pushed = push_forward(pi, k);
  for (int y = 0; y < 3; ++y) CHECK(pushed[y] == doctest::Approx(pi[y]).epsilon(1e-12));

  const double lambda = 0.3, kappa = 0.1;
  ProbVector pb = stationary_distribution(general_binary(lambda, kappa));
  CHECK(pb[0] == doctest::Approx(kappa / (lambda + kappa)).epsilon(1e-12));
  ProbVector closed = general_binary_stationary(lambda, kappa);
  CHECK(pb[0] == doctest::Approx(closed[0]).epsilon(1e-12));

  // identity fixes every law: the stationary solver must refuse to pick one
  Mat eye = Mat::Identity(3, 3);
  CHECK_THROWS_AS(stationary_distribution(MarkovKernel(eye)), error);
}

TEST_CASE("time reversal has stochastic rows and matches its definition") {
  MarkovKernel k(kExemplar);
  ProbVector mu(std::vector<double>{0.2, 0.5, 0.3});
  ProbVector mu_k = push_forward(mu, k);
  MarkovKernel rev = dual_kernel(k, mu);

  for (int y = 0; y < 3; ++y) {
    double row_sum = 0.0;
    for (int x = 0; x < 3; ++x) {
      CHECK(rev(y, x) == doctest::Approx(k(x, y) * mu[x] / mu_k[y]).epsilon(1e-13));
      row_sum += rev(y, x);
    }
    CHECK(row_sum == doctest::Approx(1.0).epsilon(1e-12));
  }

  // reversing twice at a stationary law returns the original kernel
  ProbVector pi = stationary_distribution(k);
  MarkovKernel twice = dual_kernel(dual_kernel(k, pi), pi);
  CHECK((twice.matrix() - k.matrix()).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("density matrix serves forward rows and reversed columns") {
  MarkovKernel k(kExemplar);
  ProbVector mu(std::vector<double>{0.2, 0.5, 0.3});
  KernelDensities den = densities(k, mu);
  MarkovKernel rev = dual_kernel(k, mu);

  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(den.g(x, y) == doctest::Approx(k(x, y) / den.mu_k[y]).epsilon(1e-13));
      CHECK(den.g(x, y) == doctest::Approx(rev(y, x) / mu[x]).epsilon(1e-13));
    }

  // each direction averages to one against its own base measure
  for (int x = 0; x < 3; ++x) CHECK(den.mu_k.mean(den.forward_row(x)) == doctest::Approx(1.0));
  for (int y = 0; y < 3; ++y) CHECK(den.mu.mean(den.dual_column(y)) == doctest::Approx(1.0));
}

TEST_CASE("matrix exponential matches the 2x2 closed form") {
  // exp(t A) for A = [[-a, a], [b, -b]] has spectral decomposition with
  // eigenvalues 0 and -(a+b)
  const double a = 0.7, b = 0.2, t = 1.3;
  Mat gen(2, 2);
  gen << -a, a, b, -b;
  Mat e = matrix_exponential(t * gen);
  const double decay = std::exp(-(a + b) * t);
  const double pi0 = b / (a + b), pi1 = a / (a + b);
  CHECK(e(0, 0) == doctest::Approx(pi0 + pi1 * decay).epsilon(1e-12));
  CHECK(e(0, 1) == doctest::Approx(pi1 - pi1 * decay).epsilon(1e-12));
  CHECK(e(1, 0) == doctest::Approx(pi0 - pi0 * decay).epsilon(1e-12));
  CHECK(e(1, 1) == doctest::Approx(pi1 + pi0 * decay).epsilon(1e-12));
}

TEST_CASE("semigroup kernel is stochastic and satisfies the flow property") {
  MarkovKernel k(kExemplar);
  MarkovKernel h0 = semigroup_kernel(k, 0.0);
  CHECK((h0.matrix() - Mat::Identity(3, 3)).lpNorm<Eigen::Infinity>() < 1e-14);

  MarkovKernel h1 = semigroup_kernel(k, 0.8);
  MarkovKernel h2 = semigroup_kernel(k, 1.7);
  MarkovKernel h3 = semigroup_kernel(k, 2.5);
  CHECK((h1.matrix() * h2.matrix() - h3.matrix()).lpNorm<Eigen::Infinity>() < 1e-12);

  // same stationary law as the discrete chain
  ProbVector pi = stationary_distribution(k);
  ProbVector pushed = push_forward(pi, h2);
  for (int y = 0; y < 3; ++y) CHECK(pushed[y] == doctest::Approx(pi[y]).epsilon(1e-12));
}

TEST_CASE("binary and independence builders") {
  MarkovKernel k = general_binary(0.3, 0.1);
  CHECK(k(0, 0) == 0.7);
  CHECK(k(0, 1) == 0.3);
  CHECK(k(1, 0) == 0.1);
  CHECK(k(1, 1) == 0.9);
  CHECK_THROWS_AS(general_binary(1.2, 0.1), error);

  MarkovKernel flip = bsc(0.25);
  CHECK(flip(0, 1) == 0.25);
  CHECK(flip(1, 0) == 0.25);
  CHECK(flip.is_doubly_stochastic());

  ProbVector mu(std::vector<double>{0.6, 0.1, 0.3});
  MarkovKernel ind = independence_kernel(mu);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(ind(x, y) == mu[y]);
  // one application already forgets the start
  ProbVector pushed = push_forward(ProbVector::dirac(3, 2), ind);
  for (int y = 0; y < 3; ++y) CHECK(pushed[y] == doctest::Approx(mu[y]));
}

TEST_CASE("graphs validate shape and walks have the degree-biased stationary law") {
  Graph p4 = Graph::path(4);
  CHECK(p4.edges.size() == 3);
  CHECK(p4.connected());
  Graph c5 = Graph::cycle(5);
  CHECK(c5.edges.size() == 5);
  Graph k4 = Graph::complete(4);
  CHECK(k4.edges.size() == 6);

  Graph disconnected;
  disconnected.n = 4;
  disconnected.edges = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(disconnected.validate(), error);

  const double lambda = 0.6;
  MarkovKernel walk = graph_walk(p4, lambda);
  // endpoint 0 has the single neighbour 1
  CHECK(walk(0, 0) == doctest::Approx(1.0 - lambda));
  CHECK(walk(0, 1) == doctest::Approx(lambda));
  // interior 1 splits lambda across {0, 2}
  CHECK(walk(1, 0) == doctest::Approx(lambda / 2));
  CHECK(walk(1, 2) == doctest::Approx(lambda / 2));

  ProbVector pi = graph_walk_stationary(p4);
  CHECK(pi[0] == doctest::Approx(1.0 / 6.0));
  CHECK(pi[1] == doctest::Approx(2.0 / 6.0));
  CHECK(is_stationary(walk, pi));
  // laziness does not move the stationary law
  CHECK(is_stationary(graph_walk(p4, 0.2), pi));
}

TEST_CASE("random kernels are reproducible; sinkhorn output is doubly stochastic") {
  MarkovKernel a = random_stochastic(5, 7);
  MarkovKernel b = random_stochastic(5, 7);
  CHECK((a.matrix() - b.matrix()).lpNorm<Eigen::Infinity>() == 0.0);
  MarkovKernel c = random_stochastic(5, 8);
  CHECK((a.matrix() - c.matrix()).lpNorm<Eigen::Infinity>() > 0.0);
  for (int x = 0; x < 5; ++x) CHECK(a.matrix().row(x).sum() == doctest::Approx(1.0).epsilon(1e-12));

  MarkovKernel d = random_doubly_stochastic(4, 3);
  CHECK(d.is_doubly_stochastic(1e-8));
  ProbVector pi = stationary_distribution(d);
  for (int x = 0; x < 4; ++x) CHECK(pi[x] == doctest::Approx(0.25).epsilon(1e-6));
}

TEST_SUITE_END();

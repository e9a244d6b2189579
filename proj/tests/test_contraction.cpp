#include <cmath>

#include "clab/contraction.hpp"
#include "clab/error.hpp"
#include "clab/markov.hpp"
#include "clab/rng.hpp"
#include "doctest.h"

using namespace clab;

namespace {

MarkovKernel exemplar3() {
  Mat m(3, 3);
  m << 0.2, 0.1, 0.7, 0.3, 0.4, 0.3, 0.5, 0.5, 0.0;
  return MarkovKernel(m);
}

AscentOptions quick_ascent() {
  AscentOptions opt;
  opt.restarts = 16;
  opt.iterations = 200;
  return opt;
}

}  // namespace

TEST_SUITE_BEGIN("unit");

TEST_CASE("3x3 reference kernel: nested bound and exact factor") {
  MarkovKernel k = exemplar3();
  ProbVector pi = stationary_distribution(k);
  CHECK(exact_l2_contraction(k, pi) == doctest::Approx(0.6109852926202346).epsilon(1e-12));
  CHECK(lp_contraction_bound(k, pi, 2.0, 2.0, Direction::dual) ==
        doctest::Approx(0.61644140029689765).epsilon(1e-12));
  // the bound sits above the exact factor, but not by much here
  CHECK(lp_contraction_bound(k, pi, 2.0, 2.0, Direction::dual) >
        exact_l2_contraction(k, pi));

  // the reference kernel happens to be doubly stochastic, so the uniform law
  // is its stationary one; a tilted measure is not
  ProbVector wrong(std::vector<double>{0.5, 0.3, 0.2});
  CHECK_THROWS_AS(exact_l2_contraction(k, wrong), error);
}

TEST_CASE("binary kernels at stationarity: sharp at p = 2") {
  for (auto [lambda, kappa] : {std::pair{0.3, 0.1}, {0.05, 0.45}, {0.7, 0.9}, {0.5, 0.5}}) {
    MarkovKernel k = general_binary(lambda, kappa);
    ProbVector pi = general_binary_stationary(lambda, kappa);
    const double theta = std::abs(1.0 - lambda - kappa);
    CHECK(exact_l2_contraction(k, pi) == doctest::Approx(theta).epsilon(1e-10));
    CHECK(lp_contraction_bound(k, pi, 2.0, 2.0, Direction::dual) ==
          doctest::Approx(theta).epsilon(1e-10));
    CHECK(lp_contraction_bound(k, pi, 2.0, 2.0, Direction::forward) ==
          doctest::Approx(theta).epsilon(1e-10));
  }
}

TEST_CASE("multi-step bound is the one-step bound of the power kernel") {
  MarkovKernel k = exemplar3();
  ProbVector pi = stationary_distribution(k);
  for (int t : {2, 3, 5}) {
    CHECK(lp_contraction_bound(k, pi, 3.0, 3.0, Direction::dual, t) ==
          doctest::Approx(lp_contraction_bound(t_step(k, t), pi, 3.0, 3.0, Direction::dual))
              .epsilon(1e-12));
  }
  // independence kernel contracts everything to zero in one step
  MarkovKernel ind = independence_kernel(ProbVector::random(4, 2));
  ProbVector mu = ProbVector::random(4, 3);
  CHECK(lp_contraction_bound(ind, stationary_distribution(ind), 2.0, 2.0, Direction::dual) ==
        doctest::Approx(0.0));
  CHECK(orlicz_contraction_bound(ind, mu, Young::sub_gaussian(), Young::sub_gaussian(),
                                 NormFlavor::luxemburg, Direction::forward) ==
        doctest::Approx(0.0));
}

TEST_CASE("nested bound dominates the searched contraction") {
  for (std::uint64_t seed : {11u, 12u}) {
    MarkovKernel k = random_stochastic(3, seed);
    ProbVector pi = stationary_distribution(k);
    for (NormFlavor flavor : {NormFlavor::luxemburg, NormFlavor::amemiya}) {
      for (Direction dir : {Direction::forward, Direction::dual}) {
        const double bound = orlicz_contraction_bound(k, pi, Young::power(3.0), Young::power(3.0),
                                                      flavor, dir);
        const double found =
            brute_force_contraction(k, pi, Young::power(3.0), flavor, dir, quick_ascent());
        CHECK(bound >= found - 1e-7);
      }
    }
  }
}

TEST_CASE("p-norm specialization agrees with the generic nested bound") {
  MarkovKernel k = random_stochastic(4, 17);
  ProbVector pi = stationary_distribution(k);
  for (double p : {1.5, 2.0, 4.0}) {
    const double via_young = orlicz_contraction_bound(k, pi, Young::power(p), Young::power(p),
                                                      NormFlavor::luxemburg, Direction::dual);
    CHECK(lp_contraction_bound(k, pi, p, p, Direction::dual) ==
          doctest::Approx(via_young).epsilon(1e-9));
  }
  CHECK_THROWS_AS(lp_contraction_bound(k, pi, 0.5, 2.0, Direction::dual), error);
}

TEST_CASE("doubly stochastic closed form: permutations and sinkhorn samples") {
  // cycle permutation on 4 states
  Mat perm = Mat::Zero(4, 4);
  perm(0, 1) = perm(1, 2) = perm(2, 3) = perm(3, 0) = 1.0;
  MarkovKernel cyc(perm);
  const double p = 3.0, q = p / (p - 1.0);
  const int m = 4;
  const double col = (std::pow(m - 1.0, q) + (m - 1.0)) / std::pow(double(m), q);
  const double want = std::pow(m * std::pow(col, p / q), 1.0 / p);
  CHECK(doubly_stochastic_bound(cyc, p) == doctest::Approx(want).epsilon(1e-12));

  // at p = 2 with uniform weights the closed form is a Frobenius norm, which
  // dominates the top deflated singular value
  MarkovKernel ds = random_doubly_stochastic(5, 9);
  ProbVector uni = ProbVector::uniform(5);
  CHECK(doubly_stochastic_bound(ds, 2.0) >= exact_l2_contraction(ds, uni) - 1e-10);

  MarkovKernel skew = random_stochastic(4, 1);
  CHECK_THROWS_AS(doubly_stochastic_bound(skew, 3.0), error);
}

TEST_CASE("ergodicity operator norms: definitions, agreement, submultiplicativity") {
  MarkovKernel k = exemplar3();
  ProbVector pi = stationary_distribution(k);

  for (int t : {1, 2, 4}) {
    // worst-row total variation, straight from the definition
    Mat kt = t_step(k, t).matrix();
    double worst_tv = 0.0;
    for (int x = 0; x < 3; ++x) {
      double tv = 0.0;
      for (int y = 0; y < 3; ++y) tv += std::abs(kt(x, y) - pi[y]);
      worst_tv = std::max(worst_tv, tv);
    }
    CHECK(tv_ergodicity_bound(k, pi, t) == doctest::Approx(worst_tv).epsilon(1e-12));
    CHECK(linf_operator_norm_oracle(k, pi, t) == doctest::Approx(worst_tv).epsilon(1e-10));

    // column form of the L1(pi) -> L1(pi) norm
    double worst_col = 0.0;
    for (int z = 0; z < 3; ++z) {
      double col = 0.0;
      for (int x = 0; x < 3; ++x) col += pi[x] * std::abs(kt(x, z) - pi[z]);
      worst_col = std::max(worst_col, col / pi[z]);
    }
    CHECK(l1_operator_norm(k, pi, t) == doctest::Approx(worst_col).epsilon(1e-12));
  }

  CHECK(tv_ergodicity_bound(k, pi, 2) <= std::pow(tv_ergodicity_bound(k, pi, 1), 2) + 1e-12);
  CHECK(l1_operator_norm(k, pi, 4) <=
        l1_operator_norm(k, pi, 2) * l1_operator_norm(k, pi, 2) + 1e-12);
}

TEST_CASE("spectral interpolation baseline and its sharpened endpoints") {
  const double g = 0.6;
  CHECK(riesz_thorin_baseline(g, 2.0, 3) == doctest::Approx(std::pow(g, 3)));
  CHECK(riesz_thorin_baseline(g, 1.5, 2) ==
        doctest::Approx(std::pow(2.0, 2.0 / 1.5) * std::pow(g, 2.0 * 2 * 0.5 / 1.5)));
  CHECK(riesz_thorin_baseline(g, 4.0, 2) ==
        doctest::Approx(std::pow(2.0, 2.0 * 3.0 / 4.0) * std::pow(g, 2.0 * 2 / 4.0)));
  CHECK(riesz_thorin_baseline(g, 1.0, 5) == 2.0);

  MarkovKernel k = exemplar3();
  ProbVector pi = stationary_distribution(k);
  const int t = 2;
  const double gamma_t = std::pow(exact_l2_contraction(k, pi), t);
  CHECK(riesz_thorin_interpolated(k, pi, 2.0, t) == doctest::Approx(gamma_t).epsilon(1e-10));
  // p -> 1 recovers the exact L1 endpoint, p -> infinity the L_inf one
  CHECK(riesz_thorin_interpolated(k, pi, 1.0001, t) ==
        doctest::Approx(l1_operator_norm(k, pi, t)).epsilon(1e-3));
  CHECK(riesz_thorin_interpolated(k, pi, 1e6, t) ==
        doctest::Approx(tv_ergodicity_bound(k, pi, t)).epsilon(1e-3));
  // sharpened endpoints can only improve on the trivial constant 2
  CHECK(riesz_thorin_interpolated(k, pi, 1.3, t) <= riesz_thorin_baseline(gamma_t, 1.3, 1));
}

TEST_CASE("uniform density-ratio floor forces contraction in every norm") {
  MarkovKernel k = general_binary(0.3, 0.2);
  // smallest cross-row transition ratio: 0.2 / 0.7
  CHECK(ultra_mixing_coefficient(k) == doctest::Approx(0.2 / 0.7).epsilon(1e-12));

  const double eps = ultra_mixing_coefficient(k);
  ProbVector pi = general_binary_stationary(0.3, 0.2);
  for (const Young& psi : {Young::power(2.0), Young::sub_gaussian()}) {
    const double found =
        brute_force_contraction(k, pi, psi, NormFlavor::luxemburg, Direction::forward,
                                quick_ascent());
    CHECK(found <= 1.0 - eps + 1e-7);
  }

  // the identity kernel has disjoint rows, hence no uniform floor
  CHECK(ultra_mixing_coefficient(MarkovKernel{Mat(Mat::Identity(2, 2))}) == 0.0);
}

TEST_CASE("heat-kernel bounds: endpoint tightness and schedule dominance") {
  for (std::uint64_t seed : {1u, 5u}) {
    MarkovKernel k = random_stochastic(2, seed);
    ProbVector pi = stationary_distribution(k);
    for (double t : {0.3, 0.9, 1.7}) {
      const double ours = semigroup_nested_bound(k, pi, t, 1e9, 2.0);
      const double exact = semigroup_l2_linf_norm(k, pi, t);
      CHECK(ours == doctest::Approx(exact).epsilon(1e-9));
    }
    for (double t : {0.5, 1.0, 1.5}) {
      SemigroupBounds b = semigroup_bounds(k, pi, t, 2.0);
      CHECK(b.ours <= b.baseline * (1.0 + 1e-9));
      CHECK(b.p_of_t == doctest::Approx(2.0 * 2.0 / (2.0 - t)));
    }
  }
  MarkovKernel k = random_stochastic(2, 1);
  CHECK_THROWS_AS(semigroup_bounds(k, stationary_distribution(k), 2.5, 2.0), error);
}

TEST_SUITE_END();

#include <cmath>

#include "clab/contraction.hpp"
#include "clab/error.hpp"
#include "clab/markov.hpp"
#include "clab/mixing.hpp"
#include "clab/orlicz.hpp"
#include "clab/rng.hpp"
#include "doctest.h"

using namespace clab;

TEST_SUITE_BEGIN("unit");

TEST_CASE("worst dirac-start norm: closed form dominates the exact maximum") {
  ProbVector pi(std::vector<double>{0.9, 0.1});
  Young p2 = Young::power(2.0);

  // exact value: the dirac at the light state has centered density (-1, 9),
  // so the L2(pi) norm is sqrt(0.9 + 8.1) = 3
  CHECK(exact_max_dirac_norm(pi, p2, NormFlavor::luxemburg) == doctest::Approx(3.0).epsilon(1e-10));
  // closed form: (pi(0)/pi(1)) / psi^{-1}(1/(2 pi(1))) = 9 / sqrt(5)
  CHECK(max_dirac_norm(pi, p2, NormFlavor::luxemburg) ==
        doctest::Approx(9.0 / std::sqrt(5.0)).epsilon(1e-12));
  CHECK(max_dirac_norm(pi, p2, NormFlavor::amemiya) ==
        doctest::Approx(8.049844718999239).epsilon(1e-12));

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    ProbVector rand_pi = ProbVector::random(4, seed);
    for (const Young& psi : {Young::power(2.0), Young::power(4.0), Young::sub_gaussian()}) {
      for (NormFlavor fl : {NormFlavor::luxemburg, NormFlavor::amemiya}) {
        CHECK(max_dirac_norm(rand_pi, psi, fl) >= exact_max_dirac_norm(rand_pi, psi, fl) - 1e-9);
      }
    }
  }
}

TEST_CASE("symmetric binary channel: every piece of the mixing report is exact") {
  MarkovKernel k = bsc(0.1);
  ProbVector pi = stationary_distribution(k);
  MixingReport rep = mixing_time_bound(k, pi, Young::power(2.0), NormFlavor::luxemburg, 0.01);
  CHECK_FALSE(rep.vacuous);
  CHECK(rep.contraction == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(rep.start_norm == doctest::Approx(1.0).epsilon(1e-12));
  // ceil(log(1/0.01) / -log(0.8)) = ceil(20.6...) = 21
  CHECK(rep.steps == 21);
  CHECK(exact_mixing_time(k, pi, Young::power(2.0), NormFlavor::luxemburg, 0.01) == 21);
}

TEST_CASE("asymmetric binary channel: one slack step from the start-norm bound") {
  MarkovKernel k = general_binary(0.05, 0.45);
  ProbVector pi = stationary_distribution(k);
  CHECK(pi[0] == doctest::Approx(0.9).epsilon(1e-12));

  MixingReport rep = mixing_time_bound(k, pi, Young::power(2.0), NormFlavor::luxemburg, 0.05);
  // the contraction factor comes out of the gauge bisection, so it carries
  // the bisection tolerance rather than being bit-exact
  CHECK(rep.contraction == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rep.start_norm == doctest::Approx(9.0 / std::sqrt(5.0)).epsilon(1e-12));
  CHECK(rep.steps == 7);
  // the closed-form start norm 4.02 overshoots the exact worst start 3.0, so
  // the exact walk needs one step less
  CHECK(exact_mixing_time(k, pi, Young::power(2.0), NormFlavor::luxemburg, 0.05) == 6);
}

TEST_CASE("mixing edge cases: independence, periodicity, dead states") {
  MarkovKernel ind = independence_kernel(ProbVector::random(3, 6));
  ProbVector pi = stationary_distribution(ind);
  MixingReport rep = mixing_time_bound(ind, pi, Young::power(2.0), NormFlavor::luxemburg, 1e-6);
  CHECK_FALSE(rep.vacuous);
  CHECK(rep.contraction <= 1e-12);
  CHECK(rep.steps == 1);

  Mat perm = Mat::Zero(3, 3);
  perm(0, 1) = perm(1, 2) = perm(2, 0) = 1.0;
  MarkovKernel cyc(perm);
  MixingReport cyclic =
      mixing_time_bound(cyc, ProbVector::uniform(3), Young::power(2.0), NormFlavor::luxemburg, 0.1);
  CHECK(cyclic.vacuous);
  CHECK(cyclic.contraction >= 1.0);
  CHECK_THROWS_AS(
      exact_mixing_time(cyc, ProbVector::uniform(3), Young::power(2.0), NormFlavor::luxemburg, 0.1, 50),
      error);

  Mat absorbing(2, 2);
  absorbing << 1.0, 0.0, 0.5, 0.5;
  MarkovKernel ab(absorbing);
  CHECK_THROWS_AS(
      mixing_time_bound(ab, stationary_distribution(ab), Young::power(2.0), NormFlavor::luxemburg, 0.1),
      error);
}

TEST_CASE("mixing bound dominates the exact mixing time on random kernels") {
  for (std::uint64_t seed = 40; seed < 45; ++seed) {
    MarkovKernel k = random_stochastic(2 + int(seed % 3), seed);
    ProbVector pi = stationary_distribution(k);
    MixingReport rep = mixing_time_bound(k, pi, Young::power(2.0), NormFlavor::luxemburg, 0.05);
    if (rep.vacuous) continue;
    CHECK(rep.steps >= exact_mixing_time(k, pi, Young::power(2.0), NormFlavor::luxemburg, 0.05));
  }
}

TEST_CASE("event bounds follow their closed forms and hold on a real chain") {
  const double pi_e = 0.3, norm = 0.7, p = 3.0, q = 1.5;
  CHECK(event_bound_lp(pi_e, norm, p) ==
        doctest::Approx(std::pow(pi_e, 1.0 / q) * (std::pow(pi_e, 1.0 / p) + norm)).epsilon(1e-12));

  Young psi = Young::power(2.0);
  CHECK(event_bound_orlicz(pi_e, norm, psi, NormFlavor::amemiya) ==
        doctest::Approx((norm + psi.conjugate_inverse(1.0)) /
                        psi.conjugate_inverse(1.0 / pi_e)).epsilon(1e-10));
  CHECK(event_bound_orlicz(pi_e, norm, psi, NormFlavor::luxemburg) ==
        doctest::Approx(pi_e * psi.inverse(1.0 / pi_e) * (norm + 1.0 / psi.inverse(1.0))).epsilon(1e-10));

  // soundness against the actual chain: mu K^t(E) <= bound built from the
  // exact density norm
  Mat m(3, 3);
  m << 0.2, 0.1, 0.7, 0.3, 0.4, 0.3, 0.5, 0.5, 0.0;
  MarkovKernel k(m);
  ProbVector pi = stationary_distribution(k);
  ProbVector mu(std::vector<double>{0.7, 0.2, 0.1});
  for (int t : {1, 2, 3}) {
    ProbVector pushed = push_forward(mu, t_step(k, t));
    Vec centered(3);
    for (int x = 0; x < 3; ++x) centered[x] = pushed[x] / pi[x] - 1.0;
    const double eps_t = lp_norm(centered, pi, p);
    for (unsigned mask = 1; mask < 7; ++mask) {
      double event_pi = 0.0, event_mu = 0.0;
      for (int x = 0; x < 3; ++x)
        if (mask & (1u << x)) {
          event_pi += pi[x];
          event_mu += pushed[x];
        }
      CHECK(event_mu <= event_bound_lp(event_pi, eps_t, p) + 1e-12);
      CHECK(event_mu <= event_bound_orlicz(event_pi, eps_t, psi, NormFlavor::luxemburg) + 1e-12);
    }
  }
}

TEST_CASE("burn-in requirement for exponentially small events") {
  MarkovKernel k = bsc(0.1);
  ProbVector pi = stationary_distribution(k);
  const double tau = exponential_decay_mixing_time(k, pi, 2.0, 100.0, 0.2, 1.0);
  CHECK(tau > 0.0);
  CHECK(std::isfinite(tau));
  // more samples or wider deviation shrink the requirement
  CHECK(exponential_decay_mixing_time(k, pi, 2.0, 400.0, 0.2, 1.0) <= tau);
  CHECK(exponential_decay_mixing_time(k, pi, 2.0, 100.0, 0.4, 1.0) <= tau);
  // a looser constant C raises it
  CHECK(exponential_decay_mixing_time(k, pi, 2.0, 100.0, 0.2, 2.0) >= tau);
}

TEST_SUITE_END();

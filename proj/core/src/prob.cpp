#include "clab/prob.hpp"

#include <cmath>
#include <limits>

#include "clab/error.hpp"
#include "clab/rng.hpp"

namespace clab {

namespace {

constexpr double kMassTol = 1e-10;
constexpr double kNegTol = -1e-12;

Vec validated(Vec w) {
  if (w.size() == 0) fail(errc::zero_mass, "empty probability vector");
  double total = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    double v = w[i];
    if (!std::isfinite(v)) fail(errc::non_finite, "probability weight is not finite");
    if (v < kNegTol) fail(errc::negative_entry, "negative probability weight");
    if (v < 0.0) v = 0.0;
    w[i] = v;
    total += v;
  }
  if (std::abs(total - 1.0) > kMassTol) fail(errc::row_sum_violation, "total mass is not 1");
  return w;
}

}  // namespace

ProbVector::ProbVector(Vec weights) : w_(validated(std::move(weights))) {}

ProbVector::ProbVector(const std::vector<double>& weights)
    : ProbVector(Eigen::Map<const Vec>(weights.data(), static_cast<Eigen::Index>(weights.size()))) {
}

ProbVector ProbVector::uniform(int m) {
  return ProbVector(Vec::Constant(m, 1.0 / static_cast<double>(m)));
}

ProbVector ProbVector::dirac(int m, int x) {
  Vec w = Vec::Zero(m);
  w[x] = 1.0;
  return ProbVector(std::move(w));
}

ProbVector ProbVector::random(int m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Vec w(m);
  for (int i = 0; i < m; ++i) w[i] = rng.exponential();
  w /= w.sum();
  return ProbVector(std::move(w));
}

double ProbVector::min_positive_mass() const {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < w_.size(); ++i)
    if (w_[i] > 0.0 && w_[i] < best) best = w_[i];
  if (!std::isfinite(best)) fail(errc::zero_mass, "no positive mass");
  return best;
}

bool ProbVector::strictly_positive() const { return w_.minCoeff() > 0.0; }

}  // namespace clab

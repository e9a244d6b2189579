#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace clab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Probability vector on a finite state space {0, ..., m-1}.
// Invariants enforced at construction: finite, entries >= -1e-12 (clamped to
// 0), total mass within 1e-10 of 1.
class ProbVector {
 public:
  explicit ProbVector(Vec weights);
  explicit ProbVector(const std::vector<double>& weights);

  static ProbVector uniform(int m);
  static ProbVector dirac(int m, int x);
  // i.i.d. Exp(1) weights normalized to mass one; deterministic in the seed
  static ProbVector random(int m, std::uint64_t seed);

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int x) const { return w_[x]; }
  const Vec& weights() const { return w_; }

  // expectation of f under this distribution
  double mean(const Vec& f) const { return w_.dot(f); }
  double min_positive_mass() const;
  bool strictly_positive() const;

 private:
  Vec w_;
};

}  // namespace clab

#pragma once

#include <memory>
#include <string>

namespace clab {

// Young function: convex nondecreasing psi on [0, inf) with psi(0) = 0,
// psi(x) -> inf. Evaluation is taken at |x|. Two of the built-in families
// (the KL-clipped function and the heavy-tail splice) are not globally convex
// at their junction points; they are carried by the same type because every
// algorithm here only needs evaluation, monotonicity and the two inverses.
class Young {
 public:
  // x^p, p >= 1
  static Young power(double p);
  // x^p / p
  static Young scaled_power(double p);
  // exp(x^2) - 1
  static Young sub_gaussian();
  // (1+x) log(1+x) - x
  static Young entropy();
  // entropy below -|x|, clipped: (1-x)log(1-x)+x on [0,1), the constant 1 on
  // [1, e-1], entropy above e-1. Continuous, nondecreasing, plateau at 1.
  static Young entropy_clipped();
  // x^m on [0,k], then (1+x)log(1+x) + k^m - (1+k)log(1+k); continuous at k
  static Young heavy_tail(double k, double m);

  // CLI spellings: "power:P", "scaled-power:P", "subgaussian", "entropy-phi",
  // "tilde-phi", "heavy:K:M"
  static Young parse(const std::string& text);

  double operator()(double x) const;
  // generalized inverse inf{x >= 0 : psi(x) >= y}
  double inverse(double y) const;
  // Legendre conjugate psi*(y) = sup_l { l|y| - psi(l) }; closed form for the
  // power/entropy families, golden-section search otherwise
  double conjugate(double y) const;
  double conjugate_inverse(double z) const;
  // psi* packaged as a Young object (for inner norms in the nested bounds)
  Young conjugate_young() const;

  const std::string& name() const;

  // fast-path dispatch for the L_p machinery
  bool is_power() const;
  double power_exponent() const;  // valid when is_power()

  struct Impl;
  explicit Young(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

}  // namespace clab

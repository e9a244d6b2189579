#include "clab/young.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

#include "clab/error.hpp"

namespace clab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// maximize a quasi-concave objective of log-lambda: coarse scan, then golden
double log_scale_max(const std::function<double(double)>& value_at_lambda, double lo, double hi,
                     int scan_points = 256, int golden_iters = 200) {
  const double log_lo = std::log(lo), log_hi = std::log(hi);
  double best = -kInf;
  int best_i = 0;
  for (int i = 0; i < scan_points; ++i) {
    double l = log_lo + (log_hi - log_lo) * i / (scan_points - 1.0);
    double v = value_at_lambda(std::exp(l));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double a = log_lo + (log_hi - log_lo) * std::max(0, best_i - 1) / (scan_points - 1.0);
  double b = log_lo + (log_hi - log_lo) * std::min(scan_points - 1, best_i + 1) / (scan_points - 1.0);
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = value_at_lambda(std::exp(x1)), f2 = value_at_lambda(std::exp(x2));
  for (int i = 0; i < golden_iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = value_at_lambda(std::exp(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = value_at_lambda(std::exp(x1));
    }
  }
  return std::max({best, f1, f2});
}

// generalized inverse inf{x >= 0 : g(x) >= y} of a nondecreasing g
double increasing_inverse(const std::function<double(double)>& g, double y) {
  if (y <= 0.0) return 0.0;
  double hi = 1.0;
  int guard = 0;
  while (g(hi) < y) {
    hi *= 2.0;
    if (++guard > 2000) fail(errc::bracket_failure, "no finite preimage");
  }
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) >= y)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

double entropy_eval(double x) { return (1.0 + x) * std::log1p(x) - x; }
double exp_conj_eval(double y) { return std::expm1(y) - y; }

const double kClipUpper = std::exp(1.0) - 1.0;  // entropy_eval(e - 1) = 1

}  // namespace

struct Young::Impl {
  enum class Fam {
    power,
    indicator_one,  // 0 on [0,1], +inf beyond: the conjugate of x
    coeff_power,    // a * x^b
    sub_gaussian,
    entropy,
    exp_conjugate,  // e^y - y - 1
    entropy_clipped,
    heavy_tail,
    numeric_conjugate,
  };
  Fam fam;
  double a = 0.0;
  double b = 0.0;
  std::string name;
  std::shared_ptr<const Impl> base;  // set on conjugate objects

  double heavy_offset() const { return std::pow(a, b) - (1.0 + a) * std::log1p(a); }

  double eval(double x) const {
    x = std::abs(x);
    switch (fam) {
      case Fam::power:
        return x == 0.0 ? 0.0 : std::pow(x, a);
      case Fam::indicator_one:
        return x <= 1.0 ? 0.0 : kInf;
      case Fam::coeff_power:
        return x == 0.0 ? 0.0 : a * std::pow(x, b);
      case Fam::sub_gaussian:
        return std::expm1(x * x);
      case Fam::entropy:
        return entropy_eval(x);
      case Fam::exp_conjugate:
        return exp_conj_eval(x);
      case Fam::entropy_clipped:
        if (x < 1.0) return (1.0 - x) * std::log1p(-x) + x;
        if (x <= kClipUpper) return 1.0;
        return entropy_eval(x);
      case Fam::heavy_tail:
        if (x <= a) return x == 0.0 ? 0.0 : std::pow(x, b);
        return (1.0 + x) * std::log1p(x) + heavy_offset();
      case Fam::numeric_conjugate: {
        double y = x;
        if (y == 0.0) return 0.0;
        auto obj = [&](double l) { return l * y - base->eval(l); };
        return std::max(0.0, log_scale_max(obj, 1e-10, 1e10));
      }
    }
    return 0.0;
  }

  double inv(double y) const {
    if (y <= 0.0) return 0.0;
    switch (fam) {
      case Fam::power:
        return std::exp(std::log(y) / a);
      case Fam::indicator_one:
        return 1.0;
      case Fam::coeff_power:
        return std::exp(std::log(y / a) / b);
      case Fam::sub_gaussian:
        return std::sqrt(std::log1p(y));
      case Fam::heavy_tail:
        if (y <= std::pow(a, b)) return std::exp(std::log(y) / b);
        return increasing_inverse([&](double x) { return eval(x); }, y);
      default:
        return increasing_inverse([&](double x) { return eval(x); }, y);
    }
  }
};

namespace {

using Fam = Young::Impl::Fam;

std::shared_ptr<const Young::Impl> make_impl(Fam fam, double a, double b, std::string name,
                                             std::shared_ptr<const Young::Impl> base = nullptr) {
  auto impl = std::make_shared<Young::Impl>();
  impl->fam = fam;
  impl->a = a;
  impl->b = b;
  impl->name = std::move(name);
  impl->base = std::move(base);
  return impl;
}

std::string trim_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

Young Young::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) fail(errc::parse_error, "power exponent must be >= 1");
  return Young(make_impl(Fam::power, p, 0.0, "power:" + trim_number(p)));
}

Young Young::scaled_power(double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    fail(errc::parse_error, "scaled power exponent must be > 1");
  return Young(make_impl(Fam::coeff_power, 1.0 / p, p, "scaled-power:" + trim_number(p)));
}

Young Young::sub_gaussian() { return Young(make_impl(Fam::sub_gaussian, 0, 0, "subgaussian")); }

Young Young::entropy() { return Young(make_impl(Fam::entropy, 0, 0, "entropy-phi")); }

Young Young::entropy_clipped() {
  return Young(make_impl(Fam::entropy_clipped, 0, 0, "tilde-phi"));
}

Young Young::heavy_tail(double k, double m) {
  if (!(k > 0.0) || !(m >= 1.0)) fail(errc::parse_error, "heavy tail needs k > 0, m >= 1");
  return Young(
      make_impl(Fam::heavy_tail, k, m, "heavy:" + trim_number(k) + ":" + trim_number(m)));
}

Young Young::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ':')) parts.push_back(token);
  auto num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) fail(errc::parse_error, "bad number in Young spec: " + s);
      return v;
    } catch (const error&) {
      throw;
    } catch (...) {
      fail(errc::parse_error, "bad number in Young spec: " + s);
    }
  };
  if (parts.empty()) fail(errc::parse_error, "empty Young function spec");
  const std::string& head = parts[0];
  if (head == "power" && parts.size() == 2) return power(num(parts[1]));
  if (head == "scaled-power" && parts.size() == 2) return scaled_power(num(parts[1]));
  if (head == "subgaussian" && parts.size() == 1) return sub_gaussian();
  if (head == "entropy-phi" && parts.size() == 1) return entropy();
  if (head == "tilde-phi" && parts.size() == 1) return entropy_clipped();
  if (head == "heavy" && parts.size() == 3) return heavy_tail(num(parts[1]), num(parts[2]));
  fail(errc::parse_error, "unknown Young function spec: " + text);
}

double Young::operator()(double x) const { return impl_->eval(x); }

double Young::inverse(double y) const { return impl_->inv(y); }

double Young::conjugate(double y) const {
  y = std::abs(y);
  switch (impl_->fam) {
    case Fam::power: {
      double p = impl_->a;
      if (p == 1.0) return y <= 1.0 ? 0.0 : kInf;
      double q = p / (p - 1.0);
      return (p - 1.0) * std::pow(p, -q) * (y == 0.0 ? 0.0 : std::pow(y, q));
    }
    case Fam::indicator_one:
      return y;
    case Fam::coeff_power: {
      double a = impl_->a, b = impl_->b;
      double bstar = b / (b - 1.0);
      double coeff = std::pow(a * b, -1.0 / (b - 1.0)) * (b - 1.0) / b;
      return coeff * (y == 0.0 ? 0.0 : std::pow(y, bstar));
    }
    case Fam::entropy:
      return exp_conj_eval(y);
    case Fam::exp_conjugate:
      return entropy_eval(y);
    case Fam::numeric_conjugate:
      return impl_->base->eval(y);  // psi** = psi for the convex bases
    default: {
      if (y == 0.0) return 0.0;
      auto obj = [&](double l) { return l * y - impl_->eval(l); };
      return std::max(0.0, log_scale_max(obj, 1e-10, 1e10));
    }
  }
}

double Young::conjugate_inverse(double z) const {
  if (z <= 0.0) return 0.0;
  switch (impl_->fam) {
    case Fam::power: {
      double p = impl_->a;
      if (p == 1.0) return 1.0;
      double q = p / (p - 1.0);
      return std::exp(std::log(z * std::pow(p, q) / (p - 1.0)) / q);
    }
    case Fam::indicator_one:
      return z;
    case Fam::coeff_power: {
      double a = impl_->a, b = impl_->b;
      double bstar = b / (b - 1.0);
      double coeff = std::pow(a * b, -1.0 / (b - 1.0)) * (b - 1.0) / b;
      return std::exp(std::log(z / coeff) / bstar);
    }
    case Fam::numeric_conjugate:
      return impl_->base->inv(z);
    default:
      return increasing_inverse([&](double y) { return conjugate(y); }, z);
  }
}

Young Young::conjugate_young() const {
  switch (impl_->fam) {
    case Fam::power: {
      double p = impl_->a;
      if (p == 1.0) return Young(make_impl(Fam::indicator_one, 0, 0, "conj(" + name() + ")", impl_));
      double q = p / (p - 1.0);
      return Young(make_impl(Fam::coeff_power, (p - 1.0) * std::pow(p, -q), q,
                             "conj(" + name() + ")", impl_));
    }
    case Fam::indicator_one:
      return impl_->base ? Young(impl_->base) : power(1.0);
    case Fam::coeff_power: {
      if (impl_->base) return Young(impl_->base);
      double a = impl_->a, b = impl_->b;
      double bstar = b / (b - 1.0);
      double coeff = std::pow(a * b, -1.0 / (b - 1.0)) * (b - 1.0) / b;
      return Young(make_impl(Fam::coeff_power, coeff, bstar, "conj(" + name() + ")", impl_));
    }
    case Fam::entropy:
      return Young(make_impl(Fam::exp_conjugate, 0, 0, "conj(" + name() + ")", impl_));
    case Fam::exp_conjugate:
      return impl_->base ? Young(impl_->base) : entropy();
    case Fam::numeric_conjugate:
      return Young(impl_->base);
    default:
      return Young(make_impl(Fam::numeric_conjugate, 0, 0, "conj(" + name() + ")", impl_));
  }
}

const std::string& Young::name() const { return impl_->name; }

bool Young::is_power() const { return impl_->fam == Fam::power; }

double Young::power_exponent() const { return impl_->a; }

}  // namespace clab

#include "clab/divergence.hpp"

#include <cmath>
#include <sstream>

#include "clab/error.hpp"

namespace clab {

namespace {

void check_pair(const ProbVector& nu, const ProbVector& mu) {
  if (nu.size() != mu.size()) fail(errc::parse_error, "divergence dimension mismatch");
  for (int x = 0; x < nu.size(); ++x)
    if (mu[x] == 0.0 && nu[x] > 0.0)
      fail(errc::absolute_continuity_violation,
           "nu puts mass " + std::to_string(nu[x]) + " where mu vanishes (state " +
               std::to_string(x) + ")");
}

}  // namespace

double kl_divergence(const ProbVector& nu, const ProbVector& mu) {
  check_pair(nu, mu);
  double acc = 0.0;
  for (int x = 0; x < nu.size(); ++x)
    if (nu[x] > 0.0) acc += nu[x] * std::log(nu[x] / mu[x]);
  return std::max(0.0, acc);
}

double chi2_divergence(const ProbVector& nu, const ProbVector& mu) {
  check_pair(nu, mu);
  double acc = 0.0;
  for (int x = 0; x < nu.size(); ++x) {
    if (mu[x] == 0.0) continue;
    double d = nu[x] / mu[x] - 1.0;
    acc += mu[x] * d * d;
  }
  return acc;
}

double tv_distance(const ProbVector& nu, const ProbVector& mu) {
  if (nu.size() != mu.size()) fail(errc::parse_error, "divergence dimension mismatch");
  double acc = 0.0;
  for (int x = 0; x < nu.size(); ++x) acc += std::abs(nu[x] - mu[x]);
  return 0.5 * acc;
}

double hellinger_divergence(double alpha, const ProbVector& nu, const ProbVector& mu) {
  if (!(alpha > 1.0)) fail(errc::parse_error, "hellinger order must be > 1");
  check_pair(nu, mu);
  double acc = 0.0;
  for (int x = 0; x < nu.size(); ++x) {
    if (nu[x] == 0.0) continue;
    acc += std::exp(alpha * std::log(nu[x]) + (1.0 - alpha) * std::log(mu[x]));
  }
  return (acc - 1.0) / (alpha - 1.0);
}

double centered_alpha_power(double alpha, const ProbVector& nu, const ProbVector& mu) {
  if (!(alpha >= 1.0)) fail(errc::parse_error, "alpha must be >= 1");
  check_pair(nu, mu);
  double acc = 0.0;
  for (int x = 0; x < nu.size(); ++x) {
    if (mu[x] == 0.0) continue;
    acc += mu[x] * std::pow(std::abs(nu[x] / mu[x] - 1.0), alpha);
  }
  return acc;
}

DivergenceKind DivergenceKind::parse(const std::string& text) {
  if (text == "kl") return {tag::kl, 0.0};
  if (text == "chi2") return {tag::chi2, 0.0};
  if (text == "tv") return {tag::tv, 0.0};
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    double a = 0.0;
    try {
      std::size_t used = 0;
      a = std::stod(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) fail(errc::parse_error, "bad divergence order");
    } catch (const error&) {
      throw;
    } catch (...) {
      fail(errc::parse_error, "bad divergence order in: " + text);
    }
    if (head == "h") return {tag::hellinger, a};
    if (head == "ha") return {tag::centered_alpha, a};
  }
  fail(errc::parse_error, "unknown divergence: " + text);
}

std::string DivergenceKind::name() const {
  std::ostringstream os;
  switch (which) {
    case tag::kl:
      return "kl";
    case tag::chi2:
      return "chi2";
    case tag::tv:
      return "tv";
    case tag::hellinger:
      os << "h:" << alpha;
      return os.str();
    case tag::centered_alpha:
      os << "ha:" << alpha;
      return os.str();
  }
  return "";
}

double divergence(const DivergenceKind& kind, const ProbVector& nu, const ProbVector& mu) {
  switch (kind.which) {
    case DivergenceKind::tag::kl:
      return kl_divergence(nu, mu);
    case DivergenceKind::tag::chi2:
      return chi2_divergence(nu, mu);
    case DivergenceKind::tag::tv:
      return tv_distance(nu, mu);
    case DivergenceKind::tag::hellinger:
      return hellinger_divergence(kind.alpha, nu, mu);
    case DivergenceKind::tag::centered_alpha:
      return centered_alpha_power(kind.alpha, nu, mu);
  }
  return 0.0;
}

}  // namespace clab

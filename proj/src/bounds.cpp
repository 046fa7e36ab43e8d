#include "rlu/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rlu/errors.hpp"

namespace rlu {
namespace {

constexpr double kLn10 = std::numbers::ln10;

// ln(e^x + e^y) without overflow.
double log_add(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  if (y == -std::numeric_limits<double>::infinity()) return x;
  const double hi = std::max(x, y), lo = std::min(x, y);
  return hi + std::log1p(std::exp(lo - hi));
}

// ln(2 sqrt(e^{2 t} + 1)).
double log_two_sqrt_exp2_plus_one(double t) { return std::log(2.0) + t + 0.5 * std::log1p(std::exp(-2.0 * t)); }

void fill_from_logs(BoundReport& r, double ln_coefficient, double ln_failure) {
  r.log10_coefficient = ln_coefficient / kLn10;
  r.coefficient = std::exp(ln_coefficient);
  r.log10_failure = ln_failure / kLn10;
  r.failure_probability = std::clamp(std::exp(ln_failure), 0.0, 1.0);
}

void check_gaussian(const GaussianBoundParams& p) {
  if (p.l < p.k) throw ParameterError("bound parameters need l >= k");
  if (!(p.beta > 0.0)) throw ParameterError("bound parameters need beta > 0");
  if (!(p.gamma > 1.0)) throw ParameterError("bound parameters need gamma > 1");
  if (p.n == 0) throw ParameterError("bound parameters need n >= 1");
}

// ln of (1/(4(g^2-1) sqrt(pi n g^2))) (2 g^2 / e^(g^2-1))^n.
double ln_norm_term(double n, double gamma) {
  const double g2 = gamma * gamma;
  return -std::log(4.0 * (g2 - 1.0)) - 0.5 * std::log(std::numbers::pi * n * g2) +
         n * (std::log(2.0 * g2) - (g2 - 1.0));
}

struct SubgaussianLogs {
  double ln_ratio;  // ln(a1 sqrt(n) / (c1 sqrt(l)))
  double ln_failure;
};

SubgaussianLogs subgaussian_logs(double n, std::size_t l, const SubgaussianConstants& c) {
  const double ld = static_cast<double>(l);
  const double ln_c1 = c.log10_c1 * kLn10;
  const double ln_ratio = std::log(c.a1) + 0.5 * std::log(n) - ln_c1 - 0.5 * std::log(ld);
  double ln_failure = log_add(-c.a2 * n, -c.c2 * ld);
  return {ln_ratio, ln_failure};
}

}  // namespace

XiTerms xi_terms(const GaussianBoundParams& p) {
  check_gaussian(p);
  const double q = static_cast<double>(p.l - p.k) + 1.0;
  const double ln_over = -0.5 * std::log(2.0 * std::numbers::pi * q) + q * (1.0 - std::log(q * p.beta));
  const double ln_norm = ln_norm_term(static_cast<double>(p.n), p.gamma);
  return {ln_over / kLn10, ln_norm / kLn10, log_add(ln_over, ln_norm) / kLn10};
}

double xi_success_probability(const GaussianBoundParams& p) {
  return 1.0 - std::pow(10.0, xi_terms(p).log10_failure);
}

BoundReport thm41_error_coefficient(const GaussianBoundParams& p) {
  check_gaussian(p);
  if (p.k > p.n) throw ParameterError("bound parameters need k <= n");
  const double n = static_cast<double>(p.n), l = static_cast<double>(p.l);
  const double bg = p.beta * p.gamma;
  const double first = 2.0 * std::sqrt(2.0 * n * l * bg * bg + 1.0);
  const double second = 2.0 * std::sqrt(2.0 * n * l) * bg * rrlu_factor(p.n, p.k);
  BoundReport r;
  fill_from_logs(r, std::log(first + second), xi_terms(p).log10_failure * kLn10);
  return r;
}

double rrlu_factor(std::size_t n, std::size_t k) {
  const double kd = static_cast<double>(k);
  return kd * (static_cast<double>(n) - kd) + 1.0;
}

double default_subgaussian_mu() { return std::cbrt(4.0 / std::sqrt(2.0 * std::numbers::pi)); }

SubgaussianConstants subgaussian_constants(double mu, double a2, std::size_t k, std::size_t l, double c2_dimension) {
  if (k <= 1) throw ParameterError("subgaussian constants need k >= 2 (ln k appears in the regime)");
  if (l <= k) throw ParameterError("subgaussian constants need l > k so that delta = l/k - 1 > 0");
  if (!(mu >= 1.0)) throw ParameterError("subgaussian constants need mu >= 1");
  if (!(a2 > 0.0)) throw ParameterError("subgaussian constants need a2 > 0");

  SubgaussianConstants c;
  const double kd = static_cast<double>(k), ld = static_cast<double>(l);
  const double e2 = std::exp(2.0);
  c.mu = mu;
  c.a2 = a2;
  c.a1 = 6.0 * mu * std::sqrt(a2 + 4.0);
  c.delta = ld / kd - 1.0;
  c.c_prime = std::sqrt(27.0 / 8192.0);
  c.c_dprime = 27.0 / 2048.0;
  const double mu3 = mu * mu * mu, mu6 = mu3 * mu3, mu9 = mu6 * mu3;
  c.b = std::min(0.25, c.c_prime / (5.0 * c.a1 * mu3));
  c.c3 = 4.0 * std::sqrt(2.0 / std::numbers::pi) * (2.0 * mu9 / (c.a1 * c.a1 * c.a1) + std::sqrt(std::numbers::pi));
  const double ln_c1 = std::log(c.b / (e2 * c.c3)) + std::log(c.b / (3.0 * e2 * c.c3 * c.a1)) / c.delta;
  c.log10_c1 = ln_c1 / kLn10;
  c.c1 = std::exp(ln_c1);
  c.c2_dimension = c2_dimension > 0.0 ? c2_dimension : ld;
  c.c2 = std::min({1.0, c.c_prime / (2.0 * mu6), a2}) - std::log(3.0) / c.c2_dimension;

  const double l_min = (1.0 + 1.0 / std::log(kd)) * kd;
  c.regime_ok = ld > l_min;
  std::ostringstream notes;
  if (!c.regime_ok) notes << "l = " << l << " violates l > (1 + 1/ln k) k = " << l_min << ". ";
  if (c.c2 <= 0.0) notes << "c2 <= 0, so the exp(-c2 l) failure term is vacuous. ";
  c.notes = notes.str();
  return c;
}

BoundReport thm45_error_coefficient(double n, std::size_t k, std::size_t l, const SubgaussianConstants& c) {
  const auto logs = subgaussian_logs(n, l, c);
  const double ln_growth = std::log(rrlu_factor(static_cast<std::size_t>(n), k));
  const double ln_first = log_two_sqrt_exp2_plus_one(logs.ln_ratio);
  const double ln_second = std::log(2.0) + logs.ln_ratio + ln_growth;
  BoundReport r;
  fill_from_logs(r, log_add(ln_first, ln_second), logs.ln_failure);
  r.regime_ok = c.regime_ok && c.c2 > 0.0;
  r.notes = c.notes;
  return r;
}

BoundReport rangefinder_bound(double n, std::size_t /*k*/, std::size_t l, const SubgaussianConstants& c) {
  const auto logs = subgaussian_logs(n, l, c);
  const double ln_first = log_two_sqrt_exp2_plus_one(logs.ln_ratio);
  const double ln_second = std::log(2.0) + logs.ln_ratio;
  BoundReport r;
  fill_from_logs(r, log_add(ln_first, ln_second), logs.ln_failure);
  r.regime_ok = c.regime_ok && c.c2 > 0.0;
  r.notes = c.notes;
  return r;
}

BoundReport halko_bound(std::size_t k, std::size_t p, std::span<const double> tail) {
  if (p == 0) throw ParameterError("randomized-SVD bound needs oversampling p >= 1");
  if (tail.empty() || !(tail[0] > 0.0)) throw ParameterError("randomized-SVD bound needs a positive sigma_{k+1}");
  double tail_sq = 0.0;
  for (double s : tail) tail_sq += (s / tail[0]) * (s / tail[0]);
  const double kd = static_cast<double>(k), pd = static_cast<double>(p);
  const double coefficient =
      1.0 + 17.0 * std::sqrt(1.0 + kd / pd) + 8.0 * std::sqrt(kd + pd) / (pd + 1.0) * std::sqrt(tail_sq);
  BoundReport r;
  fill_from_logs(r, std::log(coefficient), std::log(6.0) - pd);
  r.regime_ok = p >= 4;
  if (!r.regime_ok) r.notes = "p = " + std::to_string(p) + " violates p >= 4";
  return r;
}

BoundReport halko_bound_flat(double n, std::size_t k, std::size_t p) {
  if (!(n > static_cast<double>(k))) throw ParameterError("flat-tail bound needs n > k");
  if (p == 0) throw ParameterError("randomized-SVD bound needs oversampling p >= 1");
  const double kd = static_cast<double>(k), pd = static_cast<double>(p);
  const double coefficient =
      1.0 + 17.0 * std::sqrt(1.0 + kd / pd) + 8.0 * std::sqrt(kd + pd) / (pd + 1.0) * std::sqrt(n - kd);
  BoundReport r;
  fill_from_logs(r, std::log(coefficient), std::log(6.0) - pd);
  r.regime_ok = p >= 4;
  if (!r.regime_ok) r.notes = "p = " + std::to_string(p) + " violates p >= 4";
  return r;
}

double rangefinder_asymptotic_factor(double n, std::size_t l) { return std::sqrt(n / static_cast<double>(l)); }

double halko_asymptotic_factor(double n, std::size_t k, std::size_t p) {
  const double kd = static_cast<double>(k), pd = static_cast<double>(p);
  return std::sqrt((kd + pd) * (n - kd)) / (pd + 1.0);
}

GaussianNormBound gaussian_norm_bound(double m, double gamma) {
  if (!(gamma > 1.0)) throw ParameterError("Gaussian norm bound needs gamma > 1");
  if (!(m >= 1.0)) throw ParameterError("Gaussian norm bound needs m >= 1");
  GaussianNormBound g;
  g.bound = std::sqrt(2.0 * m) * gamma;
  const double ln_fail = ln_norm_term(m, gamma);
  g.log10_failure = ln_fail / kLn10;
  g.regime_ok = ln_fail < 0.0;
  g.probability = std::clamp(1.0 - std::exp(ln_fail), 0.0, 1.0);
  return g;
}

BoundReport fastlu_error_bound(double n, std::size_t k, std::size_t l, double alpha, double beta) {
  if (!(alpha > 1.0) || !(beta > 1.0)) throw ParameterError("fast LU bound needs alpha > 1 and beta > 1");
  if (l == 0) throw ParameterError("fast LU bound needs l >= 1");
  const double kd = static_cast<double>(k), ld = static_cast<double>(l);
  const double growth = kd * (n - kd) + 1.0;
  const double coefficient = (1.0 + std::sqrt(1.0 + 4.0 * kd * (n - kd))) * std::sqrt(1.0 + 7.0 * n / ld) +
                             2.0 * (std::sqrt(alpha * n + 1.0) + std::sqrt(alpha / ld) * growth);
  BoundReport r;
  const double ln_stated = k == 0 ? 0.0 : std::log(3.0 / (beta * kd));
  fill_from_logs(r, std::log(coefficient), ln_stated);
  r.union_failure_probability = k == 0 ? 1.0 : std::min(1.0, 3.0 / kd + 1.0 / beta);
  const double l_min = alpha * alpha * beta / ((alpha - 1.0) * (alpha - 1.0)) * kd * kd;
  r.regime_ok = ld >= l_min;
  std::ostringstream notes;
  notes << "stated failure 3/(beta k); union of ingredients 3/k + 1/beta";
  if (!r.regime_ok) notes << "; inapplicable: l = " << l << " < alpha^2 beta / (alpha-1)^2 k^2 = " << l_min;
  r.notes = notes.str();
  return r;
}

}  // namespace rlu

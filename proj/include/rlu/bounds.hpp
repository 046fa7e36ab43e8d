#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

namespace rlu {

/// An error bound ||approximation error|| <= coefficient * sigma_{k+1} that holds except
/// with probability failure_probability. Both quantities are also reported as log10 so
/// astronomically small or large values stay representable.
struct BoundReport {
  double coefficient = 0.0;
  double log10_coefficient = 0.0;
  double failure_probability = 0.0;  ///< clamped to [0, 1]
  double log10_failure = 0.0;        ///< unclamped
  bool regime_ok = true;
  std::string notes;
  /// Alternative failure estimate when a theorem's stated probability and the union of its
  /// ingredients differ.
  std::optional<double> union_failure_probability;
};

struct GaussianBoundParams {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  double beta = 5.0;
  double gamma = 5.0;
};

/// The two terms subtracted from one in the Gaussian-sketch success probability.
struct XiTerms {
  double log10_oversampling_term = 0.0;  ///< (1/sqrt(2 pi (p+1))) (e / ((p+1) beta))^(p+1), p = l - k
  double log10_norm_term = 0.0;          ///< (1/(4(g^2-1) sqrt(pi n g^2))) (2 g^2 / e^(g^2-1))^n
  double log10_failure = 0.0;            ///< log10 of their sum
};

XiTerms xi_terms(const GaussianBoundParams& p);

/// 1 minus the sum of the two terms above.
double xi_success_probability(const GaussianBoundParams& p);

/// Coefficient 2 sqrt(2 n l b^2 g^2 + 1) + 2 sqrt(2 n l) b g (k(n-k) + 1); failure 1 - xi.
BoundReport thm41_error_coefficient(const GaussianBoundParams& p);

/// k(n - k) + 1, the growth factor of a rank-revealing LU.
double rrlu_factor(std::size_t n, std::size_t k);

/// (4 / sqrt(2 pi))^(1/3).
double default_subgaussian_mu();

struct SubgaussianConstants {
  double mu = 0.0;
  double a2 = 0.0;
  double a1 = 0.0;
  double delta = 0.0;
  double c3 = 0.0;
  double b = 0.0;
  double c_prime = 0.0;
  double c_dprime = 0.0;
  double c1 = 0.0;
  double log10_c1 = 0.0;
  double c2 = 0.0;
  double c2_dimension = 0.0;  ///< the m in ln(3)/m
  bool regime_ok = true;      ///< l > (1 + 1/ln k) k
  std::string notes;
};

/// Constants of the subgaussian bounds with delta = l/k - 1. `c2_dimension` is the m in
/// the ln(3)/m term of c2 and defaults to l when zero. Throws ParameterError for k <= 1,
/// l <= k, mu < 1 or a2 <= 0.
SubgaussianConstants subgaussian_constants(double mu, double a2, std::size_t k, std::size_t l,
                                           double c2_dimension = 0.0);

/// Coefficient 2 sqrt(a1^2 n / (c1^2 l) + 1) + (2 a1 sqrt(n) / (c1 sqrt(l))) (k(n-k)+1);
/// failure exp(-a2 n) + exp(-c2 l).
BoundReport thm45_error_coefficient(double n, std::size_t k, std::size_t l, const SubgaussianConstants& c);

/// Orthogonal-projection variant: 2 sqrt(a1^2 n / (c1^2 l) + 1) + 2 a1 sqrt(n) / (c1 sqrt(l)).
BoundReport rangefinder_bound(double n, std::size_t k, std::size_t l, const SubgaussianConstants& c);

/// (1 + 17 sqrt(1 + k/p)) + (8 sqrt(k+p) / (p+1)) ||tail||_2 / tail[0] where tail holds
/// sigma_{k+1}, sigma_{k+2}, ...; failure 6 exp(-p). Regime p >= 4.
BoundReport halko_bound(std::size_t k, std::size_t p, std::span<const double> tail);

/// halko_bound for a flat tail of n - k equal singular values.
BoundReport halko_bound_flat(double n, std::size_t k, std::size_t p);

/// sqrt(n / l), the leading factor of the range-finder bound for large n.
double rangefinder_asymptotic_factor(double n, std::size_t l);

/// sqrt((k + p)(n - k)) / (p + 1), the leading factor of the flat-tail randomized-SVD bound.
double halko_asymptotic_factor(double n, std::size_t k, std::size_t p);

struct GaussianNormBound {
  double bound = 0.0;          ///< sqrt(2 m) gamma
  double probability = 0.0;    ///< clamped to [0, 1]
  double log10_failure = 0.0;  ///< log10 of 1 - probability before clamping
  bool regime_ok = true;       ///< false when the probability expression is not positive
};

/// ||G|| <= sqrt(2m) gamma for an m x n Gaussian G (m >= n), with its probability.
GaussianNormBound gaussian_norm_bound(double m, double gamma);

/// SRFT-sketched LU: coefficient [1 + sqrt(1 + 4k(n-k))] sqrt(1 + 7n/l)
/// + 2 (sqrt(alpha n + 1) + sqrt(alpha / l) (k(n-k) + 1)). The stated failure 3/(beta k) is
/// in failure_probability, the union 3/k + 1/beta in union_failure_probability. Regime
/// l >= alpha^2 beta / (alpha-1)^2 k^2. Throws ParameterError unless alpha, beta > 1.
BoundReport fastlu_error_bound(double n, std::size_t k, std::size_t l, double alpha, double beta);

}  // namespace rlu

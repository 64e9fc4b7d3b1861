#include "entspec/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entspec/errors.hpp"

namespace entspec {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesTol = 1e-16;
constexpr long kMaxThetaTerms = 1'000'000;

double agm(double a, double b) {
  for (int it = 0; it < 64; ++it) {
    if (std::abs(a - b) <= 1e-16 * a) break;
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  return 0.5 * (a + b);
}

void check_nome(double q) {
  if (!(q >= 0.0 && q < 1.0))
    throw DomainError("theta: nome q must lie in [0,1), got " + std::to_string(q));
}

void check_tau(double tau, const char* who) {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw DomainError(std::string(who) + ": tau must be a finite positive real");
}

// Sum_{m>=1} sign^m exp(-pi tau m^2), or with exponents m(m+1) when `shifted`.
double null_series_tail(double tau, bool alternating, bool shifted) {
  double sum = 0.0;
  double scale = 1.0;
  for (long m = 1; m <= kMaxThetaTerms; ++m) {
    const double power = shifted ? double(m) * double(m + 1) : double(m) * double(m);
    const double term = std::exp(-kPi * tau * power);
    if (term < kSeriesTol * scale) return sum;
    sum += (alternating && (m & 1)) ? -term : term;
    scale += term;
  }
  throw ConvergenceError("theta null series did not converge in 10^6 terms");
}

}  // namespace

double complete_elliptic_K_from_complement(double k_prime) {
  if (!(k_prime > 0.0 && k_prime <= 1.0))
    throw DomainError("complete_elliptic_K: complementary modulus must lie in (0,1]");
  return kPi / (2.0 * agm(1.0, k_prime));
}

double complete_elliptic_K(double k) {
  if (!(k >= 0.0 && k < 1.0))
    throw DomainError("complete_elliptic_K: modulus must lie in [0,1), got " + std::to_string(k));
  return complete_elliptic_K_from_complement(std::sqrt((1.0 - k) * (1.0 + k)));
}

double theta(int j, double z, double q) {
  if (j < 1 || j > 4) throw DomainError("theta: index must be 1, 2, 3 or 4");
  check_nome(q);
  if (j == 1 && z == 0.0) return 0.0;
  if (q == 0.0) return (j == 3 || j == 4) ? 1.0 : 0.0;

  const double log_q = std::log(q);
  double sum = (j >= 3) ? 1.0 : 0.0;
  double scale = (j >= 3) ? 1.0 : 0.0;
  for (long n = (j >= 3) ? 1 : 0; n <= kMaxThetaTerms; ++n) {
    double weight = 0.0;
    double phase = 0.0;
    if (j <= 2) {
      const double half = double(n) + 0.5;
      weight = 2.0 * std::exp(half * half * log_q);
      phase = (j == 1) ? std::sin((2.0 * n + 1.0) * z) : std::cos((2.0 * n + 1.0) * z);
      if (j == 1 && (n & 1)) phase = -phase;
    } else {
      weight = 2.0 * std::exp(double(n) * double(n) * log_q);
      phase = std::cos(2.0 * n * z);
      if (j == 4 && (n & 1)) phase = -phase;
    }
    if (weight < kSeriesTol * scale) return sum;
    sum += weight * phase;
    scale += weight;
  }
  throw ConvergenceError("theta: series did not converge in 10^6 terms (q too close to 1)");
}

double log_theta_null_series(int j, double tau) {
  check_tau(tau, "log_theta_null_series");
  switch (j) {
    case 2:
      return std::log(2.0) - 0.25 * kPi * tau + std::log1p(null_series_tail(tau, false, true));
    case 3:
      return std::log1p(2.0 * null_series_tail(tau, false, false));
    case 4:
      return std::log1p(2.0 * null_series_tail(tau, true, false));
    default:
      throw DomainError("log_theta_null_series: index must be 2, 3 or 4");
  }
}

double log_theta_null(int j, double tau) {
  check_tau(tau, "log_theta_null");
  if (j < 2 || j > 4) throw DomainError("log_theta_null: index must be 2, 3 or 4");
  if (tau >= 1.0) return log_theta_null_series(j, tau);
  // theta_3(0|i/t) = sqrt(t) theta_3(0|it); theta_2 and theta_4 swap.
  const int dual = (j == 3) ? 3 : 6 - j;
  return -0.5 * std::log(tau) + log_theta_null_series(dual, 1.0 / tau);
}

double log_modular_lambda(double tau) {
  check_tau(tau, "modular_lambda");
  return 4.0 * (log_theta_null_series(2, tau) - log_theta_null_series(3, tau));
}

double modular_lambda(double tau) { return std::exp(log_modular_lambda(tau)); }

EllipticData nome(double k, double k_prime) {
  if (!(k > 0.0 && k < 1.0) || !(k_prime > 0.0 && k_prime < 1.0))
    throw DomainError("nome: moduli must lie strictly inside (0,1); the point is on a critical "
                      "or degenerate line");
  EllipticData d;
  d.k = k;
  d.k_prime = k_prime;
  d.big_I_k = complete_elliptic_K_from_complement(k_prime);
  d.big_I_k_prime = complete_elliptic_K_from_complement(k);
  d.tau0 = d.big_I_k_prime / d.big_I_k;
  d.q = std::exp(-kPi * d.tau0);
  return d;
}

EllipticData nome(double k) {
  if (!(k > 0.0 && k < 1.0))
    throw DomainError("nome: modulus must lie strictly inside (0,1), got " + std::to_string(k));
  return nome(k, std::sqrt((1.0 - k) * (1.0 + k)));
}

}  // namespace entspec

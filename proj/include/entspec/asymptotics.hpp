#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "entspec/model.hpp"
#include "entspec/spectrum.hpp"

namespace entspec {

/// A possibly huge positive number: log_value always, value when finite.
struct AsymptoticValue {
  double log_value = 0.0;
  double value = 0.0;  // +inf once exp(log_value) overflows
};

/// Leading large-n behaviour of the level multiplicity g_n:
///   HighField  2^{-3/2} 3^{-1/4} n^{-3/4} exp(pi sqrt(n/3))
///   LowField   2^{-5/4} 3^{-1/4} n^{-3/4} exp(pi sqrt(2n/3))
/// Finite for every n >= 1 (meaningful only for large n).
AsymptoticValue asymptotic_degeneracy(std::size_t n, Regime regime);

struct SaddleData {
  std::size_t n = 0;
  Regime regime = Regime::HighField;
  double epsilon_n = 0.0;  // -ln rho_n
  double rho_n = 0.0;
  double g_asymptotic = 0.0;
  double log_g_asymptotic = 0.0;
  double stationarity_residual = 0.0;  // |G'(rho)| / (|G''(rho)| rho)
  bool stationary = false;             // residual < 1e-6
};

/// G(z) = c pi^2 / ln z + (n -+ 1/12) ln z, with c = 1/12 (HighField) or
/// 1/6 (LowField); e^{-G(z)}/z approximates f(z)/z^{n+1} near z = 1.
double saddle_exponent(double z, std::size_t n, Regime regime);

/// Stationary point of G on (0, 1), checked by central differences.
SaddleData saddle_radius(std::size_t n, Regime regime);

/// ln f(z) for complex |z| < 1, where f(z) = sum_n g_n z^n, assembled from
/// the q-series entropy at complex alpha = -ln z / (pi tau0) (HighField) or
/// -ln z / (2 pi tau0) (LowField).
std::complex<double> log_generating_function(const ModelPoint& point, std::complex<double> z);

/// g_n from the trapezoid rule on |z| = radius (default rho_n) with
/// `quadrature_points` and twice as many nodes. Returns the finer value.
/// Requires quadrature_points >= 8(n+1). Throws ConvergenceError when the
/// two resolutions differ by more than 0.4.
double cauchy_degeneracy(const ModelPoint& point, std::size_t n, std::size_t quadrature_points,
                         std::optional<double> radius = std::nullopt);

/// Node count used when the caller has no preference: 16(n+1), at least 256.
std::size_t default_quadrature_points(std::size_t n);

struct SingularityRow {
  double z = 0.0;
  double log_f_exact = 0.0;
  double log_f_asymptotic = 0.0;
  double residual = 0.0;       // |exact - asymptotic|
  double predicted = 0.0;      // 2 e^{pi^2/ln z} (HighField) or 2 e^{2 pi^2/ln z}
  double resolution = 0.0;     // rounding floor of the exact value, 4 eps sqrt(terms) |ln f|
};

/// Exact ln f(z) on real z in (0,1), in 113-bit arithmetic, against the
/// two-term exponent -c pi^2/ln z +- (1/12) ln z.
std::vector<SingularityRow> generating_function_singularity_check(const ModelPoint& point,
                                                                  std::span<const double> z_values);

struct AngularSample {
  double theta = 0.0;
  double exact = 0.0;       // Re[ln f(z) - n ln z] at z = rho_n e^{i theta}
  double asymptotic = 0.0;  // Re[-G(z)]
};

/// Real part of the log-integrand around |z| = rho_n, theta in [-pi, pi).
std::vector<AngularSample> angular_scan(const ModelPoint& point, std::size_t n,
                                        std::size_t samples);

void write_singularity_csv(std::ostream& out, std::span<const SingularityRow> rows, int precision);
void write_angular_csv(std::ostream& out, std::span<const AngularSample> rows, int precision);

}  // namespace entspec

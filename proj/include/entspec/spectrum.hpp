#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "entspec/elliptic.hpp"
#include "entspec/model.hpp"
#include "entspec/partitions.hpp"

namespace entspec {

enum class Regime { HighField, LowField };

std::string_view to_string(Regime r);

/// Field regime of a gapped point (h > 2 or h < 2).
Regime regime_of(const ModelPoint& point);

/// Reduced-density-matrix spectrum of a large block in the double-scaling
/// limit: eigenvalue levels lambda_n with exact multiplicities g_n.
///
/// `log_eigenvalues` is authoritative; `eigenvalues` is its exponential and
/// underflows to zero for deep levels. When the point is exactly on the
/// factorizing line (k = 0) the block is in a product state and only the
/// first level is non-zero.
struct EntanglementSpectrum {
  ModelPoint point;
  EllipticData elliptic;
  Regime regime = Regime::HighField;
  std::vector<double> log_eigenvalues;
  std::vector<double> eigenvalues;
  std::vector<BigInt> degeneracies;
};

enum class Representation { Theta, Lambda, QSeries, SpectrumSum };

std::string_view to_string(Representation r);

struct EntropyValue {
  double alpha = 0.0;
  double value = 0.0;
  Representation representation = Representation::QSeries;
};

inline constexpr double kMaxNome = 0.999;

/// True when the block is in a product state to double precision: k = 0, or
/// k so small that k' rounds to 1 (the factorizing line and gamma = 0, h > 2).
bool is_product_state(const ModelPoint& point);

/// Elliptic data for a gapped point, rejecting points whose nome exceeds
/// kMaxNome. Throws CriticalInputError on or too near a critical line.
EllipticData elliptic_data(const ModelPoint& point);

/// Levels n = 0 .. n_levels-1.
/// h > 2: lambda_n = exp(ln(k k'/4)/6 - pi tau0 (n - 1/12)),  g_n = a_n
/// h < 2: lambda_n = exp(ln(k'/(4k^2))/6 - 2 pi tau0 (n + 1/12)), g_n = 2 b_n
EntanglementSpectrum exact_spectrum(const ModelPoint& point, std::size_t n_levels);

/// ln tr rho^alpha from the infinite-product form.
double log_zeta_product(const ModelPoint& point, double alpha);

/// tr rho^alpha from the infinite-product form.
double zeta_product(const ModelPoint& point, double alpha);

/// ln sum_n g_n lambda_n^alpha summed level by level, truncated once the
/// remaining tail (bounded with ten times the asymptotic degeneracy) is
/// below 1e-16 of the partial sum.
double log_zeta_spectrum_sum(const ModelPoint& point, double alpha);

/// Renyi entropy in one of the four closed forms. Throws DomainError for
/// alpha <= 0 or alpha == 1.
EntropyValue renyi_entropy(const ModelPoint& point, double alpha, Representation representation);

/// -sum g_n lambda_n ln lambda_n over the exact spectrum.
double von_neumann_entropy(const ModelPoint& point);

enum class CriticalLine { Ising, XX };

std::string_view to_string(CriticalLine line);

struct ScalingSample {
  double delta = 0.0;
  double log_zeta = 0.0;
};

/// ln zeta(alpha) along h = 2 + delta at gamma = 1 (Ising) or gamma = delta
/// at h = 1 (XX). `deltas` must be positive, strictly decreasing and >= 1e-6.
std::vector<ScalingSample> critical_scaling_probe(CriticalLine line, double alpha,
                                                  std::span<const double> deltas);

/// Model point used by the probe at gap scale delta.
ModelPoint critical_approach_point(CriticalLine line, double delta);

/// Least-squares slope of ln zeta against ln xi = -ln delta.
double fit_xi_exponent(std::span<const ScalingSample> samples);

/// Exponent -(c/6)(alpha - 1/alpha) of xi in zeta ~ Gamma xi^{...}.
double expected_xi_exponent(CriticalLine line, double alpha);

/// Leading two terms of S_R as alpha -> 0 (the small-alpha expansion that
/// follows from the modular transformation).
double small_alpha_entropy(const ModelPoint& point, double alpha);

}  // namespace entspec

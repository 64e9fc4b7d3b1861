#include "entspec/asymptotics.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <string>

#include "entspec/errors.hpp"

namespace entspec {
namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;

// c in G(z) = c pi^2 / ln z + (n + s/12) ln z, s = -1 (HighField) or +1.
double singular_coefficient(Regime r) { return r == Regime::HighField ? 1.0 / 12.0 : 1.0 / 6.0; }
double linear_shift(Regime r) { return r == Regime::HighField ? -1.0 / 12.0 : 1.0 / 12.0; }

template <class C>
C pairwise_sum(const C* v, std::size_t n) {
  if (n <= 8) {
    C s = 0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

// Shared by the public double version and the long double contour sums.
template <class R>
std::complex<R> log_f(const ModelPoint& point, std::complex<R> z) {
  using C = std::complex<R>;
  if (!(std::abs(z) < R(1)) || z == C(0))
    throw DomainError("log_generating_function: need 0 < |z| < 1");
  if (!is_gapped(point)) throw CriticalInputError("log_generating_function: critical point");
  const Regime regime = regime_of(point);
  if (is_product_state(point)) return regime == Regime::HighField ? C(0) : C(std::log(R(2)));

  const EllipticData ed = elliptic_data(point);
  const R pt = std::numbers::pi_v<R> * R(ed.tau0);
  const R lk = std::log(R(ed.k));
  const R lkp = std::log(R(ed.k_prime));
  const R ln2 = std::log(R(2));
  const bool high = regime == Regime::HighField;
  const C alpha = -std::log(z) / (high ? pt : R(2) * pt);
  const C q_alpha = std::exp(-pt * alpha);  // q^alpha

  // (1 - alpha) S_R(alpha) in the q-series form
  C entropy_part;
  C log_lambda0_part;
  const C q2 = q_alpha * q_alpha;
  C sum = 0;
  C power = high ? q_alpha : q2;
  const R cutoff = std::numeric_limits<R>::epsilon() * R(1e-3);
  for (long m = 0;; ++m) {
    if (std::abs(power) < cutoff) break;
    if (m > 100'000'000) throw ConvergenceError("log_generating_function: series did not converge");
    sum += std::log(R(1) + power);
    power *= q2;
  }
  if (high) {
    entropy_part = alpha / R(12) * (R(2) * (lk + lkp) - R(4) * ln2 + pt) + R(2) * sum;
    log_lambda0_part = alpha * ((lk + lkp - R(2) * ln2) / R(6) + pt / R(12));
  } else {
    entropy_part = alpha / R(6) * (R(4) * ln2 - pt + lkp - R(2) * lk) + R(2) * sum +
                   (R(1) - alpha) * ln2;
    log_lambda0_part = alpha * ((lkp - R(2) * ln2 - R(2) * lk) / R(6) - pt / R(6));
  }
  return entropy_part - log_lambda0_part;
}

double trapezoid_coefficient(const ModelPoint& point, std::size_t n, std::size_t nodes,
                             double radius) {
  // long double: r^-n amplifies pointwise rounding (2^50 at r = 0.5, n = 50)
  using L = long double;
  std::vector<std::complex<L>> terms(nodes);
  const L log_r = std::log(L(radius));
  for (std::size_t j = 0; j < nodes; ++j) {
    const L theta = 2 * std::numbers::pi_v<L> * L(j) / L(nodes);
    const std::complex<L> log_z(log_r, theta);
    const std::complex<L> lf = log_f<L>(point, std::exp(log_z));
    terms[j] = std::exp(lf - L(n) * log_z);
  }
  return double(pairwise_sum(terms.data(), nodes).real() / L(nodes));
}

}  // namespace

AsymptoticValue asymptotic_degeneracy(std::size_t n, Regime regime) {
  if (n == 0) throw DomainError("asymptotic_degeneracy: n must be >= 1");
  const double x = double(n);
  double log_value = -0.25 * std::log(3.0) - 0.75 * std::log(x);
  if (regime == Regime::HighField)
    log_value += -1.5 * std::log(2.0) + kPi * std::sqrt(x / 3.0);
  else
    log_value += -1.25 * std::log(2.0) + kPi * std::sqrt(2.0 * x / 3.0);
  return {log_value, std::exp(log_value)};
}

double saddle_exponent(double z, std::size_t n, Regime regime) {
  const double lz = std::log(z);
  return singular_coefficient(regime) * kPi * kPi / lz + (double(n) + linear_shift(regime)) * lz;
}

SaddleData saddle_radius(std::size_t n, Regime regime) {
  if (n == 0) throw DomainError("saddle_radius: n must be >= 1");
  SaddleData s;
  s.n = n;
  s.regime = regime;
  s.epsilon_n = regime == Regime::HighField ? kPi / std::sqrt(12.0 * double(n) - 1.0)
                                            : kPi * std::sqrt(2.0) / std::sqrt(12.0 * double(n) + 1.0);
  s.rho_n = std::exp(-s.epsilon_n);
  const AsymptoticValue g = asymptotic_degeneracy(n, regime);
  s.g_asymptotic = g.value;
  s.log_g_asymptotic = g.log_value;

  const double step = 1e-6 * s.rho_n;
  const double gp = saddle_exponent(s.rho_n + step, n, regime);
  const double g0 = saddle_exponent(s.rho_n, n, regime);
  const double gm = saddle_exponent(s.rho_n - step, n, regime);
  const double first = (gp - gm) / (2.0 * step);
  const double second = (gp - 2.0 * g0 + gm) / (step * step);
  s.stationarity_residual = std::abs(first) / (std::abs(second) * s.rho_n);
  s.stationary = s.stationarity_residual < 1e-6;
  return s;
}

std::complex<double> log_generating_function(const ModelPoint& point, std::complex<double> z) {
  return log_f<double>(point, z);
}

std::size_t default_quadrature_points(std::size_t n) { return std::max<std::size_t>(256, 16 * (n + 1)); }

double cauchy_degeneracy(const ModelPoint& point, std::size_t n, std::size_t quadrature_points,
                         std::optional<double> radius) {
  if (!is_gapped(point)) throw CriticalInputError("cauchy_degeneracy: critical point");
  if (quadrature_points < 8 * (n + 1))
    throw DomainError("cauchy_degeneracy: quadrature_points must be >= 8(n+1)");
  const Regime regime = regime_of(point);
  const double r = radius ? *radius : (n == 0 ? 0.5 : saddle_radius(n, regime).rho_n);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("cauchy_degeneracy: radius must lie in (0,1)");

  const double coarse = trapezoid_coefficient(point, n, quadrature_points, r);
  const double fine = trapezoid_coefficient(point, n, 2 * quadrature_points, r);
  if (std::abs(coarse - fine) > 0.4)
    throw ConvergenceError("cauchy_degeneracy: resolutions disagree (" + std::to_string(coarse) +
                           " vs " + std::to_string(fine) + ")");
  return fine;
}

std::vector<SingularityRow> generating_function_singularity_check(const ModelPoint& point,
                                                                  std::span<const double> z_values) {
  if (!is_gapped(point)) throw CriticalInputError("singularity check: critical point");
  const Regime regime = regime_of(point);
  const bool high = regime == Regime::HighField;
  std::vector<SingularityRow> rows;
  rows.reserve(z_values.size());
  for (double z : z_values) {
    if (!(z > 0.0 && z < 1.0)) throw DomainError("singularity check: z must lie in (0,1)");
    // In f = exp((1 - alpha) S_R - alpha ln lambda_0) the alpha-linear terms
    // cancel identically, leaving the bare product, summed here in quad.
    const __float128 zq = z;
    __float128 log_f = high ? 0 : logq(__float128(2));
    // exponents 2m+1 (HighField) or m >= 1 (LowField)
    const __float128 step = high ? zq * zq : zq;
    __float128 power = zq;
    double terms = 0.0;
    while (power > 1e-38Q) {
      log_f += 2 * log1pq(power);
      power *= step;
      terms += 1.0;
    }
    const __float128 lz = logq(zq);
    const __float128 pi = M_PIq;
    const __float128 asym = high ? -pi * pi / (12 * lz) + lz / 12 : -pi * pi / (6 * lz) - lz / 12;

    SingularityRow row;
    row.z = z;
    row.log_f_exact = double(log_f);
    row.log_f_asymptotic = double(asym);
    row.residual = double(fabsq(log_f - asym));
    row.predicted = 2.0 * std::exp((high ? 1.0 : 2.0) * kPi * kPi / std::log(z));
    // random-walk rounding of the running sum, with a safety factor 4
    row.resolution = 4.0 * double(FLT128_EPSILON) * std::sqrt(terms + 1.0) *
                     std::max(1.0, std::abs(row.log_f_exact));
    rows.push_back(row);
  }
  return rows;
}

std::vector<AngularSample> angular_scan(const ModelPoint& point, std::size_t n,
                                        std::size_t samples) {
  if (samples == 0) throw DomainError("angular_scan: samples must be >= 1");
  const Regime regime = regime_of(point);
  const double eps = saddle_radius(n, regime).epsilon_n;
  const double c = singular_coefficient(regime);
  const double shift = linear_shift(regime);
  std::vector<AngularSample> out;
  out.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const double theta = -kPi + 2.0 * kPi * double(j) / double(samples);
    const cplx log_z(-eps, theta);
    const cplx exact = log_generating_function(point, std::exp(log_z)) - double(n) * log_z;
    const cplx g = c * kPi * kPi / log_z + (double(n) + shift) * log_z;
    out.push_back({theta, exact.real(), (-g).real()});
  }
  return out;
}

void write_singularity_csv(std::ostream& out, std::span<const SingularityRow> rows, int precision) {
  out << "z,log_f_exact,log_f_asymptotic,residual,predicted,resolution\n";
  out << std::setprecision(precision);
  for (const auto& r : rows)
    out << r.z << ',' << r.log_f_exact << ',' << r.log_f_asymptotic << ',' << r.residual << ','
        << r.predicted << ',' << r.resolution << '\n';
}

void write_angular_csv(std::ostream& out, std::span<const AngularSample> rows, int precision) {
  out << "theta,re_log_integrand_exact,re_log_integrand_asymptotic\n";
  out << std::setprecision(precision);
  for (const auto& r : rows) out << r.theta << ',' << r.exact << ',' << r.asymptotic << '\n';
}

}  // namespace entspec

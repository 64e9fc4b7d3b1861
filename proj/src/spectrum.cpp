#include "entspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "entspec/asymptotics.hpp"
#include "entspec/errors.hpp"

namespace entspec {
namespace {

constexpr double kPi = std::numbers::pi;
const double kLn2 = std::log(2.0);
constexpr std::size_t kMaxSpectralLevels = 200'000;

// Everything the closed forms need about one gapped point.
struct PointData {
  Regime regime = Regime::HighField;
  EllipticData ed;
  bool product_limit = false;  // k == 0: block in a product state
  double log_k = 0.0;
  double log_k_prime = 0.0;
  double log_lambda0 = 0.0;
  double spacing = 0.0;  // ln lambda_n - ln lambda_{n+1}
};

PointData point_data(const ModelPoint& point) {
  if (!is_gapped(point))
    throw CriticalInputError("point (gamma=" + std::to_string(point.gamma) +
                             ", h=" + std::to_string(point.h) + ") lies on a critical line");
  PointData d;
  d.regime = regime_of(point);
  const Moduli m = elliptic_moduli(point);
  if (m.k == 0.0 || m.k_prime == 1.0) {
    d.product_limit = true;
    d.log_lambda0 = d.regime == Regime::HighField ? 0.0 : -kLn2;
    d.spacing = std::numeric_limits<double>::infinity();
    d.ed.k = 0.0;
    d.ed.k_prime = 1.0;
    d.ed.big_I_k = kPi / 2;
    d.ed.big_I_k_prime = std::numeric_limits<double>::infinity();
    d.ed.tau0 = std::numeric_limits<double>::infinity();
    d.ed.q = 0.0;
    return d;
  }
  if (m.k >= 1.0 || m.k_prime <= 0.0)
    throw CriticalInputError("elliptic modulus reached 1; point is critical to double precision");
  d.ed = nome(m.k, m.k_prime);
  if (d.ed.q > kMaxNome)
    throw CriticalInputError("nome q = " + std::to_string(d.ed.q) + " exceeds q_max = 0.999");
  d.log_k = std::log(m.k);
  d.log_k_prime = std::log(m.k_prime);
  const double pt = kPi * d.ed.tau0;
  if (d.regime == Regime::HighField) {
    d.log_lambda0 = (d.log_k + d.log_k_prime - std::log(4.0)) / 6.0 + pt / 12.0;
    d.spacing = pt;
  } else {
    d.log_lambda0 = (d.log_k_prime - std::log(4.0) - 2.0 * d.log_k) / 6.0 - pt / 6.0;
    d.spacing = 2.0 * pt;
  }
  return d;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("alpha must be a finite positive real");
}

// sum_{m >= first} log(1 + exp(-x (first_exp + step m))) with geometric tail.
double log_product(double x, double start, double step) {
  double sum = 0.0;
  for (long m = 0; m < 100'000'000; ++m) {
    const double term = std::exp(-x * (start + step * double(m)));
    if (term < 1e-18) return sum;
    sum += std::log1p(term);
  }
  throw ConvergenceError("infinite product did not converge");
}

// ln prod (1 + q_alpha^{...})^2 including the regime multiplicity.
double log_generating_product(const PointData& d, double alpha) {
  const double x = alpha * kPi * d.ed.tau0;
  if (d.regime == Regime::HighField) return 2.0 * log_product(x, 1.0, 2.0);
  return kLn2 + 2.0 * log_product(x, 2.0, 2.0);
}

double log_degeneracy(const PartitionTable& t, Regime regime, std::size_t n) {
  return regime == Regime::HighField ? log_bigint(t.a[n]) : kLn2 + log_bigint(t.b[n]);
}

// log sum_n g_n lambda_n^alpha * w_n, w_n = 1 or -ln lambda_n.
double log_spectral_sum(const PointData& d, double alpha, bool entropy_weight) {
  const auto log_weight = [&](double log_lambda) {
    return entropy_weight ? std::log(-log_lambda) : 0.0;
  };
  auto table = shared_tables(256);
  double ref = -std::numeric_limits<double>::infinity();
  double scaled = 0.0;  // sum = exp(ref) * scaled
  const auto add = [&](double log_term) {
    if (log_term > ref) {
      scaled = scaled * std::exp(ref - log_term) + 1.0;
      ref = log_term;
    } else {
      scaled += std::exp(log_term - ref);
    }
  };
  for (std::size_t n = 0; n < kMaxSpectralLevels; ++n) {
    if (n > table->n_max) table = shared_tables(2 * n);
    const double log_lambda = d.log_lambda0 - d.spacing * double(n);
    const double log_term = log_degeneracy(*table, d.regime, n) + alpha * log_lambda +
                            log_weight(log_lambda);
    add(log_term);
    const double log_sum = ref + std::log(scaled);
    if (log_term - log_sum > std::log(1e-16) || n < 2) continue;

    // Tail bound with ten times the leading asymptotic degeneracy.
    double tail_ref = -std::numeric_limits<double>::infinity();
    double tail_scaled = 0.0;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t m = n + 1; m < n + 1 + kMaxSpectralLevels; ++m) {
      const double ll = d.log_lambda0 - d.spacing * double(m);
      const double bound = std::log(10.0) + asymptotic_degeneracy(m, d.regime).log_value +
                           alpha * ll + log_weight(ll);
      if (bound > tail_ref) {
        tail_scaled = tail_scaled * std::exp(tail_ref - bound) + 1.0;
        tail_ref = bound;
      } else {
        tail_scaled += std::exp(bound - tail_ref);
      }
      if (bound < previous && bound - log_sum < std::log(1e-22)) break;
      previous = bound;
    }
    if (tail_ref + std::log(tail_scaled) - log_sum < std::log(1e-16)) return log_sum;
  }
  throw ConvergenceError("spectral sum did not converge within the level cap");
}

double regime_log_constant(const PointData& d) {
  // ln(k k'/4) for h > 2, ln(k'/(4 k^2)) for h < 2
  return d.regime == Regime::HighField ? d.log_k + d.log_k_prime - std::log(4.0)
                                       : d.log_k_prime - std::log(4.0) - 2.0 * d.log_k;
}

}  // namespace

std::string_view to_string(Regime r) {
  return r == Regime::HighField ? "HighField" : "LowField";
}

std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::Theta: return "theta";
    case Representation::Lambda: return "lambda";
    case Representation::QSeries: return "qseries";
    case Representation::SpectrumSum: return "spectrum";
  }
  return "unknown";
}

std::string_view to_string(CriticalLine line) { return line == CriticalLine::Ising ? "Ising" : "XX"; }

Regime regime_of(const ModelPoint& point) {
  return point.h > 2.0 ? Regime::HighField : Regime::LowField;
}

bool is_product_state(const ModelPoint& point) {
  if (!is_gapped(point)) return false;
  const Moduli m = elliptic_moduli(point);
  return m.k == 0.0 || m.k_prime == 1.0;
}

EllipticData elliptic_data(const ModelPoint& point) {
  const PointData d = point_data(point);
  if (d.product_limit) throw DomainError("elliptic_data: modulus k = 0 (product state)");
  return d.ed;
}

EntanglementSpectrum exact_spectrum(const ModelPoint& point, std::size_t n_levels) {
  if (n_levels == 0) throw DomainError("exact_spectrum: n_levels must be >= 1");
  const PointData d = point_data(point);
  const auto table = shared_tables(n_levels - 1);

  EntanglementSpectrum s;
  s.point = point;
  s.elliptic = d.ed;
  s.regime = d.regime;
  s.log_eigenvalues.reserve(n_levels);
  s.eigenvalues.reserve(n_levels);
  s.degeneracies.reserve(n_levels);
  for (std::size_t n = 0; n < n_levels; ++n) {
    const double log_lambda =
        n == 0 ? d.log_lambda0
        : d.product_limit ? -std::numeric_limits<double>::infinity()
                          : d.log_lambda0 - d.spacing * double(n);
    s.log_eigenvalues.push_back(log_lambda);
    s.eigenvalues.push_back(std::exp(log_lambda));
    if (d.regime == Regime::HighField)
      s.degeneracies.push_back(table->a[n]);
    else
      s.degeneracies.push_back(2 * table->b[n]);
  }
  return s;
}

double log_zeta_product(const ModelPoint& point, double alpha) {
  check_alpha(alpha);
  const PointData d = point_data(point);
  if (d.product_limit) return d.regime == Regime::HighField ? 0.0 : (1.0 - alpha) * kLn2;
  return alpha * d.log_lambda0 + log_generating_product(d, alpha);
}

double zeta_product(const ModelPoint& point, double alpha) {
  return std::exp(log_zeta_product(point, alpha));
}

double log_zeta_spectrum_sum(const ModelPoint& point, double alpha) {
  check_alpha(alpha);
  const PointData d = point_data(point);
  if (d.product_limit) return d.regime == Regime::HighField ? 0.0 : (1.0 - alpha) * kLn2;
  return log_spectral_sum(d, alpha, false);
}

EntropyValue renyi_entropy(const ModelPoint& point, double alpha, Representation representation) {
  check_alpha(alpha);
  if (alpha == 1.0)
    throw DomainError("renyi_entropy: alpha = 1 is the von Neumann limit; use von_neumann_entropy");
  const PointData d = point_data(point);
  EntropyValue out{alpha, 0.0, representation};
  if (d.product_limit) {
    out.value = d.regime == Regime::HighField ? 0.0 : kLn2;
    return out;
  }

  const double one_minus = 1.0 - alpha;
  const double tau = alpha * d.ed.tau0;
  const bool high = d.regime == Regime::HighField;
  // (1/6) alpha/(1-alpha) ln(k k') or ln(k'/k^2)
  const double moduli_term =
      alpha / one_minus / 6.0 * (high ? d.log_k + d.log_k_prime : d.log_k_prime - 2.0 * d.log_k);

  switch (representation) {
    case Representation::Theta: {
      const double l2 = log_theta_null(2, tau);
      const double l3 = log_theta_null(3, tau);
      const double l4 = log_theta_null(4, tau);
      const double ratio = high ? 2.0 * l3 - l2 - l4 : 2.0 * l2 - l3 - l4;
      out.value = moduli_term + ratio / (3.0 * one_minus) + kLn2 / 3.0;
      break;
    }
    case Representation::Lambda: {
      const double log_lam = log_modular_lambda(tau);
      // 1 - lambda(i tau) = lambda(i / tau)
      const double log_comp = log_modular_lambda(1.0 / tau);
      const double bracket = high ? log_lam + log_comp : log_comp - 2.0 * log_lam;
      out.value = moduli_term - bracket / (12.0 * one_minus) + kLn2 / 3.0;
      break;
    }
    case Representation::QSeries: {
      const double pt = kPi * d.ed.tau0;
      const double x = alpha * pt;
      if (high) {
        out.value = alpha / one_minus / 12.0 *
                        (2.0 * (d.log_k + d.log_k_prime) - std::log(16.0) + pt) +
                    2.0 / one_minus * log_product(x, 1.0, 2.0);
      } else {
        out.value = alpha / one_minus / 6.0 *
                        (std::log(16.0) - pt + d.log_k_prime - 2.0 * d.log_k) +
                    2.0 / one_minus * log_product(x, 2.0, 2.0) + kLn2;
      }
      break;
    }
    case Representation::SpectrumSum:
      out.value = log_spectral_sum(d, alpha, false) / one_minus;
      break;
  }
  return out;
}

double von_neumann_entropy(const ModelPoint& point) {
  const PointData d = point_data(point);
  if (d.product_limit) return d.regime == Regime::HighField ? 0.0 : kLn2;
  return std::exp(log_spectral_sum(d, 1.0, true));
}

ModelPoint critical_approach_point(CriticalLine line, double delta) {
  return line == CriticalLine::Ising ? classify(1.0, 2.0 + delta) : classify(delta, 1.0);
}

std::vector<ScalingSample> critical_scaling_probe(CriticalLine line, double alpha,
                                                  std::span<const double> deltas) {
  check_alpha(alpha);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] >= 1e-6) || !std::isfinite(deltas[i]))
      throw DomainError("critical_scaling_probe: deltas must be finite and >= 1e-6");
    if (i > 0 && !(deltas[i] < deltas[i - 1]))
      throw DomainError("critical_scaling_probe: deltas must be strictly decreasing");
  }
  std::vector<ScalingSample> out;
  out.reserve(deltas.size());
  for (double delta : deltas) {
    const ModelPoint p = critical_approach_point(line, delta);
    out.push_back({delta, log_zeta_product(p, alpha)});
  }
  return out;
}

double fit_xi_exponent(std::span<const ScalingSample> samples) {
  if (samples.size() < 2) throw DomainError("fit_xi_exponent: need at least two samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& s : samples) {
    const double x = -std::log(s.delta);
    sx += x;
    sy += s.log_zeta;
    sxx += x * x;
    sxy += x * s.log_zeta;
  }
  const double n = double(samples.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double expected_xi_exponent(CriticalLine line, double alpha) {
  const double c = line == CriticalLine::Ising ? 0.5 : 1.0;
  return -(c / 6.0) * (alpha - 1.0 / alpha);
}

double small_alpha_entropy(const ModelPoint& point, double alpha) {
  check_alpha(alpha);
  if (alpha == 1.0) throw DomainError("small_alpha_entropy: alpha must differ from 1");
  const PointData d = point_data(point);
  if (d.product_limit) throw DomainError("small_alpha_entropy: undefined for k = 0");
  return kPi / (12.0 * alpha * (1.0 - alpha) * d.ed.tau0) +
         alpha / (1.0 - alpha) * regime_log_constant(d) / 6.0;
}

}  // namespace entspec

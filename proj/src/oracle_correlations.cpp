#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <boost/math/constants/constants.hpp>

#include "entspec/errors.hpp"
#include "entspec/oracle.hpp"

namespace entspec {
namespace {

constexpr std::size_t kMaxKernelNodes = std::size_t{1} << 22;
const Quad kKernelTolerance = Quad(1e-30);

// Trapezoid estimate of G(l), l = -(count-1) .. count-1, on M shifted nodes.
std::vector<Quad> kernel_on_grid(double gamma, double h, std::size_t count, std::size_t nodes) {
  const Quad pi = boost::math::constants::pi<Quad>();
  const Quad half_h = Quad(h) / 2;
  const Quad g = gamma;
  std::vector<Quad> sum(2 * count - 1, Quad(0));
  for (std::size_t j = 0; j < nodes; ++j) {
    const Quad theta = 2 * pi * (Quad(j) + Quad(0.5)) / Quad(nodes);
    const Quad c1 = cos(theta);
    const Quad s1 = sin(theta);
    const Quad re = half_h - c1;
    const Quad im = g * s1;
    const Quad inv_eps = 1 / sqrt(re * re + im * im);
    // e^{-il theta}(re - i im) has real part cos(l theta) re - sin(l theta) im
    Quad cl = 1;
    Quad sl = 0;
    for (std::size_t l = 0; l < count; ++l) {
      const Quad a = cl * re * inv_eps;
      const Quad b = sl * im * inv_eps;
      sum[count - 1 + l] += a - b;
      if (l > 0) sum[count - 1 - l] += a + b;
      const Quad next_c = cl * c1 - sl * s1;
      sl = sl * c1 + cl * s1;
      cl = next_c;
    }
  }
  for (auto& v : sum) v /= Quad(nodes);
  return sum;
}

void check_point(const ModelPoint& point) {
  if (!is_gapped(point))
    throw CriticalInputError("oracle: point (gamma=" + std::to_string(point.gamma) +
                             ", h=" + std::to_string(point.h) + ") lies on a critical line");
  if (!is_product_state(point)) elliptic_data(point);  // enforces the nome limit
}

}  // namespace

std::vector<Quad> toeplitz_kernel(const ModelPoint& point, std::size_t count) {
  check_point(point);
  if (count == 0) throw DomainError("toeplitz_kernel: count must be >= 1");
  std::size_t nodes = 64;
  while (nodes < 4 * count) nodes *= 2;
  std::vector<Quad> previous = kernel_on_grid(point.gamma, point.h, count, nodes);
  while (true) {
    nodes *= 2;
    if (nodes > kMaxKernelNodes)
      throw ConvergenceError("toeplitz_kernel: trapezoid rule did not reach 1e-30");
    std::vector<Quad> current = kernel_on_grid(point.gamma, point.h, count, nodes);
    Quad change = 0;
    for (std::size_t i = 0; i < current.size(); ++i)
      change = std::max(change, Quad(abs(current[i] - previous[i])));
    if (change < kKernelTolerance) return current;
    previous = std::move(current);
  }
}

CorrelationData build_correlations(const ModelPoint& point, std::size_t block_size) {
  if (block_size < 1 || block_size > kMaxOracleBlock)
    throw DomainError("build_correlations: block size must lie in 1..256");
  const std::size_t L = block_size;
  const std::vector<Quad> g = toeplitz_kernel(point, L);
  QuadMatrix m = QuadMatrix::Zero(2 * L, 2 * L);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      const Quad v = g[L - 1 + i - j];
      m(2 * i, 2 * j + 1) = -v;
      m(2 * j + 1, 2 * i) = v;
    }
  return correlations_from_matrix(m);
}

CorrelationData correlations_from_matrix(const QuadMatrix& majorana) {
  if (majorana.rows() != majorana.cols() || majorana.rows() % 2 != 0 || majorana.rows() == 0)
    throw DomainError("correlations_from_matrix: need a non-empty 2L x 2L matrix");
  const Quad asym = (majorana + majorana.transpose()).cwiseAbs().maxCoeff();
  if (asym > Quad(1e-13)) throw NumericError("correlation matrix is not antisymmetric");
  CorrelationData c;
  c.block_size = std::size_t(majorana.rows() / 2);
  c.majorana_matrix = majorana;
  ModeData modes = mode_data(majorana);
  c.mode_occupations = std::move(modes.nu);
  c.mode_energies = std::move(modes.energies);
  return c;
}

ModeData mode_data(const QuadMatrix& majorana) {
  const QuadMatrix sq = -(majorana * majorana);
  Eigen::SelfAdjointEigenSolver<QuadMatrix> solver(sq, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("mode_data: eigensolver failed");
  const QuadVector& ev = solver.eigenvalues();  // ascending, each twice
  const std::size_t L = std::size_t(ev.size() / 2);
  ModeData out;
  out.nu.reserve(L);
  out.energies.reserve(L);
  for (std::size_t j = 0; j < L; ++j) {
    const Quad lo = ev(Eigen::Index(2 * j));
    const Quad hi = ev(Eigen::Index(2 * j + 1));
    if (abs(hi - lo) > Quad(1e-10)) throw NumericError("mode_data: eigenvalues are not paired");
    Quad nu2 = (lo + hi) / 2;
    if (nu2 < Quad(-1e-12) || nu2 > Quad(1) + Quad(2e-10))
      throw NumericError("mode_data: occupation outside [0,1]");
    nu2 = std::clamp(nu2, Quad(0), Quad(1));
    const Quad nu = sqrt(nu2);
    const Quad deficit = 1 - nu2;  // (1 - nu)(1 + nu)
    out.nu.push_back(double(nu));
    out.energies.push_back(deficit > 0 ? double(log((1 + nu) * (1 + nu) / deficit))
                                       : std::numeric_limits<double>::infinity());
  }
  return out;
}

std::vector<double> mode_occupations(const CorrelationData& corr) {
  return mode_data(corr.majorana_matrix).nu;
}

double von_neumann_from_modes(const ModeData& modes) {
  double s = 0.0;
  for (double e : modes.energies) {
    if (!std::isfinite(e)) continue;
    // p = 1/(1+e^e) and 1-p; -p ln p - (1-p) ln(1-p)
    const double t = std::log1p(std::exp(-e));
    const double p = std::exp(-e) / (1.0 + std::exp(-e));
    s += p * (e + t) + (1.0 - p) * t;
  }
  return s;
}

OracleSpectrum free_fermion_spectrum(const ModelPoint& point, std::size_t block_size,
                                     std::size_t max_levels) {
  const CorrelationData corr = build_correlations(point, block_size);
  OracleSpectrum s = spectrum_from_energies(corr.mode_energies, max_levels);
  s.block_size = block_size;
  return s;
}

}  // namespace entspec

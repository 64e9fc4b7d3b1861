#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "entspec/errors.hpp"
#include "entspec/oracle.hpp"

namespace entspec {
namespace {

// Sigma-z basis, bit j set = spin j down.
class RingHamiltonian {
 public:
  RingHamiltonian(double gamma, double h, std::size_t n) : gamma_(gamma), h_(h), n_(n) {}

  std::size_t dimension() const { return std::size_t{1} << n_; }

  void apply(const Eigen::VectorXd& in, Eigen::VectorXd& out) const {
    const std::size_t dim = dimension();
    out.setZero(Eigen::Index(dim));
    for (std::size_t s = 0; s < dim; ++s) {
      const double amp = in(Eigen::Index(s));
      if (amp == 0.0) continue;
      const int down = std::popcount(s);
      out(Eigen::Index(s)) += -h_ * double(int(n_) - 2 * down) * amp;
      for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t k = (j + 1) % n_;
        const bool bj = (s >> j) & 1U;
        const bool bk = (s >> k) & 1U;
        // sx sx + sy sy weights: 1 - 1 on equal bits, 1 + 1 on opposite bits
        const double t = bj == bk ? -2.0 * gamma_ : -2.0;
        out(Eigen::Index(s ^ ((std::size_t{1} << j) | (std::size_t{1} << k)))) += t * amp;
      }
    }
  }

 private:
  double gamma_;
  double h_;
  std::size_t n_;
};

struct SectorState {
  double energy = 0.0;
  Eigen::VectorXd vector;
};

// Lanczos with full reorthogonalization inside one parity sector.
SectorState lanczos_ground_state(const RingHamiltonian& ham, int parity_bit) {
  const std::size_t dim = ham.dimension();
  const auto project = [&](Eigen::VectorXd& v) {
    for (std::size_t s = 0; s < dim; ++s)
      if ((std::popcount(s) & 1) != parity_bit) v(Eigen::Index(s)) = 0.0;
  };
  const std::size_t sector_dim = dim / 2;
  const std::size_t max_steps = std::min<std::size_t>(sector_dim, 400);

  std::mt19937_64 rng(0x5eed + std::uint64_t(parity_bit));
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
  for (auto& x : v) x = normal(rng);
  project(v);
  v.normalize();

  std::vector<Eigen::VectorXd> basis;
  std::vector<double> alpha;
  std::vector<double> beta;
  Eigen::VectorXd w;
  Eigen::VectorXd ritz;
  double energy = 0.0;
  for (std::size_t step = 0; step < max_steps; ++step) {
    basis.push_back(v);
    ham.apply(v, w);
    alpha.push_back(v.dot(w));
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) w -= b.dot(w) * b;
    project(w);
    const double norm = w.norm();

    const Eigen::Index m = Eigen::Index(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      t(i, i) = alpha[std::size_t(i)];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[std::size_t(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(t);
    ritz = small.eigenvectors().col(0);
    energy = small.eigenvalues()(0);
    const double residual = norm * std::abs(ritz(m - 1));
    if (residual < 1e-13 || norm < 1e-14) break;
    if (step + 1 == max_steps)
      throw ConvergenceError("exact_diagonalization: Lanczos did not converge");
    beta.push_back(norm);
    v = w / norm;
  }
  SectorState out;
  out.energy = energy;
  out.vector = Eigen::VectorXd::Zero(Eigen::Index(dim));
  for (std::size_t i = 0; i < basis.size(); ++i) out.vector += ritz(Eigen::Index(i)) * basis[i];
  out.vector.normalize();
  return out;
}

void check_size(std::size_t n) {
  if (n > kMaxEdSites)
    throw ResourceError("exact_diagonalization: N = " + std::to_string(n) + " exceeds 14");
  if (n < 2) throw DomainError("exact_diagonalization: N must be >= 2");
}

}  // namespace

OracleSpectrum exact_diagonalization(double gamma, double h, std::size_t chain_size,
                                     std::size_t block_size) {
  check_size(chain_size);
  if (block_size < 1 || 2 * block_size > chain_size)
    throw DomainError("exact_diagonalization: need 1 <= L <= N/2");
  const RingHamiltonian ham(gamma, h, chain_size);
  const SectorState even = lanczos_ground_state(ham, 0);
  const SectorState odd = lanczos_ground_state(ham, 1);
  const SectorState& ground = even.energy <= odd.energy ? even : odd;

  OracleSpectrum out;
  out.source = OracleSource::ExactDiagonalization;
  out.block_size = block_size;
  out.chain_size = chain_size;
  if (std::abs(even.energy - odd.energy) < 1e-10)
    out.warnings.push_back("ground state is degenerate across parity sectors (gap < 1e-10)");

  const Eigen::Index rows = Eigen::Index(1) << block_size;
  const Eigen::Index cols = Eigen::Index(ham.dimension()) / rows;
  const Eigen::Map<const Eigen::MatrixXd> psi(ground.vector.data(), rows, cols);
  const Eigen::MatrixXd rho = psi * psi.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  long double total = 0.0L;
  for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
    const double p = std::max(0.0, ev(i));
    out.eigenvalues.push_back(p);
    out.log_eigenvalues.push_back(p > 0.0 ? std::log(p) : -std::numeric_limits<double>::infinity());
    total += p;
  }
  out.tail_deficit = double(1.0L - total);
  return out;
}

double exact_ground_energy(double gamma, double h, std::size_t chain_size) {
  check_size(chain_size);
  const RingHamiltonian ham(gamma, h, chain_size);
  return std::min(lanczos_ground_state(ham, 0).energy, lanczos_ground_state(ham, 1).energy);
}

}  // namespace entspec

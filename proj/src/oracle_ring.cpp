#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "entspec/errors.hpp"
#include "entspec/oracle.hpp"

namespace entspec {
namespace {

// Pfaffian of a real antisymmetric matrix by Parlett-Reid elimination.
double pfaffian(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  if (n % 2 != 0) return 0.0;
  double result = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index pivot;
    a.row(k).tail(n - k - 1).cwiseAbs().maxCoeff(&pivot);
    pivot += k + 1;
    if (pivot != k + 1) {
      a.row(k + 1).swap(a.row(pivot));
      a.col(k + 1).swap(a.col(pivot));
      result = -result;
    }
    const double head = a(k, k + 1);
    if (head == 0.0) return 0.0;
    result *= head;
    if (k + 2 < n) {
      const Eigen::Index rest = n - k - 2;
      const Eigen::VectorXd tau = a.row(k).tail(rest).transpose() / head;
      const Eigen::VectorXd col = a.col(k + 1).tail(rest);
      a.bottomRightCorner(rest, rest) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return result;
}

struct Sector {
  Eigen::MatrixXd majorana;
  double energy;
};

// Ground state of the quadratic Majorana Hamiltonian with fermion-parity
// constraint `parity` (boundary sign -parity on the wrap-around bond).
Sector sector_ground_state(double gamma, double h, std::size_t n, int parity) {
  const Eigen::Index dim = Eigen::Index(2 * n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  const auto add = [&a](Eigen::Index x, Eigen::Index y, double t) {
    a(x, y) += t;
    a(y, x) -= t;
  };
  const auto ia = [n](std::size_t j) { return Eigen::Index(2 * (j % n)); };
  const auto ib = [n](std::size_t j) { return Eigen::Index(2 * (j % n) + 1); };
  for (std::size_t j = 0; j < n; ++j) {
    const double s = j + 1 < n ? 1.0 : -double(parity);
    add(ib(j), ia(j + 1), (1.0 + gamma) * s);
    add(ia(j), ib(j + 1), -(1.0 - gamma) * s);
    add(ia(j), ib(j), h);
  }
  const Eigen::MatrixXcd herm = std::complex<double>(0.0, 1.0) * a.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  if (solver.info() != Eigen::Success) throw NumericError("ring: eigensolver failed");
  const Eigen::VectorXd& w = solver.eigenvalues();  // ascending, +-w pairs
  const Eigen::MatrixXcd& u = solver.eigenvectors();

  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(dim, dim);
  double energy = 0.0;
  for (Eigen::Index i = n; i < dim; ++i) {
    proj += u.col(i) * u.col(i).adjoint();
    energy -= w(i);
  }
  const auto gamma_of = [dim](const Eigen::MatrixXcd& p) {
    const Eigen::MatrixXcd c = 2.0 * p - Eigen::MatrixXcd::Identity(dim, dim);
    return Eigen::MatrixXd((std::complex<double>(0.0, 1.0) * c).real());
  };
  Eigen::MatrixXd gam = gamma_of(proj);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  if (std::lround(sign * pfaffian(gam)) != parity) {
    // Move the softest quasiparticle from the occupied to the empty side.
    const Eigen::Index soft = Eigen::Index(n);
    const Eigen::Index partner = Eigen::Index(n) - 1;
    proj += u.col(partner) * u.col(partner).adjoint() - u.col(soft) * u.col(soft).adjoint();
    energy += 2.0 * w(soft);
    gam = gamma_of(proj);
  }
  return {gam, energy};
}

}  // namespace

RingGroundState ring_ground_state(double gamma, double h, std::size_t chain_size) {
  if (chain_size < 2) throw DomainError("ring: chain size must be >= 2");
  const Sector even = sector_ground_state(gamma, h, chain_size, 1);
  const Sector odd = sector_ground_state(gamma, h, chain_size, -1);
  const bool take_even = even.energy <= odd.energy;
  RingGroundState g;
  g.majorana_matrix = take_even ? even.majorana : odd.majorana;
  g.energy = take_even ? even.energy : odd.energy;
  g.boundary_parity = take_even ? 1 : -1;
  return g;
}

OracleSpectrum ring_free_fermion(double gamma, double h, std::size_t chain_size,
                                 std::size_t block_size, std::size_t max_levels) {
  if (block_size < 1 || 2 * block_size > chain_size)
    throw DomainError("ring_free_fermion: need 1 <= L <= N/2");
  const RingGroundState g = ring_ground_state(gamma, h, chain_size);
  const Eigen::Index dim = Eigen::Index(2 * block_size);
  const QuadMatrix block = g.majorana_matrix.topLeftCorner(dim, dim).cast<Quad>();
  const ModeData modes = mode_data(block);
  OracleSpectrum s = spectrum_from_energies(modes.energies, max_levels);
  s.block_size = block_size;
  s.chain_size = chain_size;
  return s;
}

}  // namespace entspec

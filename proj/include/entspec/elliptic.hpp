#pragma once

// Complete elliptic integral, Jacobi theta functions at real argument and
// the elliptic modular lambda function on the imaginary axis.

namespace entspec {

/// Moduli, complete integrals and nome of one elliptic parameter.
struct EllipticData {
  double k = 0.0;
  double k_prime = 0.0;
  double big_I_k = 0.0;        // I(k)
  double big_I_k_prime = 0.0;  // I(k')
  double tau0 = 0.0;           // I(k') / I(k)
  double q = 0.0;              // exp(-pi tau0)
};

/// I(k) = int_0^1 dx / sqrt((1-x^2)(1-k^2 x^2)), by the AGM.
/// Throws DomainError unless 0 <= k < 1.
double complete_elliptic_K(double k);

/// Same integral with the complementary modulus supplied directly; use this
/// when k' is known in closed form and k is close to 1.
double complete_elliptic_K_from_complement(double k_prime);

/// theta_j(z, q), j = 1..4, summed from the Fourier series. The series is
/// stopped once the next term falls below 1e-16 of the running sum.
/// Throws DomainError for j outside 1..4 or q outside [0,1), and
/// ConvergenceError if more than 10^6 terms would be needed.
double theta(int j, double z, double q);

/// ln theta_j(0 | i tau) for j = 2, 3, 4 by direct series in q = e^{-pi tau}.
/// The q^{1/4} factor of theta_2 is taken out analytically, so the result
/// stays finite when theta_2 itself underflows.
double log_theta_null_series(int j, double tau);

/// ln theta_j(0 | i tau) for j = 2, 3, 4. For tau < 1 the Jacobi imaginary
/// transformation maps the evaluation to nome e^{-pi/tau}, which keeps full
/// relative accuracy for theta_4 as tau -> 0.
double log_theta_null(int j, double tau);

/// lambda(i tau) = theta_2^4 / theta_3^4 at z = 0. Throws DomainError for tau <= 0.
double modular_lambda(double tau);

/// ln lambda(i tau), finite even when lambda underflows.
double log_modular_lambda(double tau);

/// Full elliptic data for 0 < k < 1 (k' = sqrt(1-k^2)).
/// Throws DomainError at or outside the endpoints.
EllipticData nome(double k);

/// Full elliptic data from an explicit pair (k, k'), k^2 + k'^2 = 1.
EllipticData nome(double k, double k_prime);

}  // namespace entspec

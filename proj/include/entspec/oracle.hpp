#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "entspec/model.hpp"
#include "entspec/quad.hpp"
#include "entspec/spectrum.hpp"

namespace entspec {

/// Ground-state Majorana correlations of a block of L sites.
/// Ordering is (a_1, b_1, a_2, b_2, ...) and Gamma_mn = <i c_m c_n> for m != n.
struct CorrelationData {
  std::size_t block_size = 0;
  QuadMatrix majorana_matrix;           // 2L x 2L, antisymmetric
  std::vector<double> mode_occupations;  // nu_j in [0,1], ascending
  std::vector<double> mode_energies;     // ln((1+nu_j)/(1-nu_j)), +inf at nu_j = 1
};

inline constexpr std::size_t kMaxOracleBlock = 256;

/// Toeplitz kernel G(l) = (1/2pi) int e^{-il theta} (h/2 - cos theta - i gamma
/// sin theta) / eps(theta) d theta of the infinite chain, for l = 0 .. count-1
/// and their negatives. Index l + count - 1 holds G(l).
std::vector<Quad> toeplitz_kernel(const ModelPoint& point, std::size_t count);

/// Correlations of an L-site block of the infinite chain. Throws
/// CriticalInputError on critical lines and beyond the nome limit,
/// DomainError for L outside 1..256.
CorrelationData build_correlations(const ModelPoint& point, std::size_t block_size);

/// Wraps an arbitrary 2L x 2L Majorana matrix and extracts its modes.
CorrelationData correlations_from_matrix(const QuadMatrix& majorana);

struct ModeData {
  std::vector<double> nu;        // ascending
  std::vector<double> energies;  // ln((1+nu)/(1-nu)), descending with nu
};

/// nu_j from the paired spectrum of -M^2 (M the Majorana matrix), computed in
/// 113-bit arithmetic so 1 - nu keeps its relative accuracy. Throws
/// NumericError when the pairing or the bound nu <= 1 fails beyond 1e-10.
ModeData mode_data(const QuadMatrix& majorana);

std::vector<double> mode_occupations(const CorrelationData& corr);

enum class OracleSource { FreeFermion, ExactDiagonalization };

std::string_view to_string(OracleSource s);

struct OracleSpectrum {
  std::vector<double> eigenvalues;  // descending
  std::vector<double> log_eigenvalues;
  OracleSource source = OracleSource::FreeFermion;
  std::size_t block_size = 0;
  std::optional<std::size_t> chain_size;  // empty for the infinite chain
  double tail_deficit = 0.0;               // 1 - sum of listed eigenvalues
  std::vector<std::string> warnings;
};

inline constexpr std::size_t kMaxOracleLevels = 1'000'000;

/// Largest `max_levels` products prod_j (1 +- nu_j)/2, by best-first search
/// over sets of flipped modes. Throws ResourceError above 10^6 levels.
OracleSpectrum spectrum_from_modes(const std::vector<double>& nu, std::size_t max_levels);

/// Same, from single-particle entanglement energies (full precision route).
OracleSpectrum spectrum_from_energies(const std::vector<double>& energies, std::size_t max_levels);

/// Free-fermion spectrum of the L-site block of the infinite chain.
OracleSpectrum free_fermion_spectrum(const ModelPoint& point, std::size_t block_size,
                                     std::size_t max_levels);

/// sum_j binary entropy of (1 + nu_j)/2, evaluated from the mode energies.
double von_neumann_from_modes(const ModeData& modes);

/// -sum p ln p over the listed eigenvalues.
double oracle_entropy(const OracleSpectrum& spectrum);

struct RingGroundState {
  Eigen::MatrixXd majorana_matrix;  // 2N x 2N
  double energy = 0.0;
  int boundary_parity = 1;  // +1: antiperiodic fermions, -1: periodic
};

/// Ground state of the periodic N-site ring as free fermions, taking the
/// lower of the two Jordan-Wigner boundary sectors.
RingGroundState ring_ground_state(double gamma, double h, std::size_t chain_size);

/// Reduced spectrum of L contiguous sites of the periodic ring, fermionic route.
OracleSpectrum ring_free_fermion(double gamma, double h, std::size_t chain_size,
                                 std::size_t block_size, std::size_t max_levels = 1024);

inline constexpr std::size_t kMaxEdSites = 14;

/// Full reduced spectrum of L contiguous sites in the ground state of
///   H = -sum_j [(1+gamma) sx_j sx_{j+1} + (1-gamma) sy_j sy_{j+1} + h sz_j]
/// on a periodic ring of N sites, found by Lanczos in each parity sector.
/// Throws ResourceError for N > 14 and DomainError unless 1 <= L <= N/2.
OracleSpectrum exact_diagonalization(double gamma, double h, std::size_t chain_size,
                                     std::size_t block_size);

/// Pauli-basis ground-state energy found by the same solver (for diagnostics).
double exact_ground_energy(double gamma, double h, std::size_t chain_size);

struct LevelComparison {
  std::size_t n = 0;
  double exact_log_lambda = 0.0;
  double oracle_log_lambda = 0.0;  // mean of ln lambda over the group
  double relative_error = 0.0;     // |exp(oracle - exact) - 1|
  double max_member_deviation = 0.0;
  std::size_t oracle_count = 0;
  BigInt exact_degeneracy;
  bool count_match = false;
};

struct SpectrumComparison {
  std::vector<LevelComparison> levels;
  bool all_counts_match = true;
  double max_relative_error = 0.0;
  double max_member_deviation = 0.0;
  std::size_t levels_compared = 0;
  bool complete = true;  // false when the oracle ran out before the last level
};

inline constexpr double kGroupTolerance = 1e-6;

/// Groups consecutive oracle eigenvalues within `group_tolerance` and matches the
/// groups touched by the first `top_k` oracle eigenvalues to levels of `exact`.
SpectrumComparison compare_spectra(const OracleSpectrum& oracle, const EntanglementSpectrum& exact,
                                   std::size_t top_k, double group_tolerance = kGroupTolerance);

/// Groups of a descending list: (first index, size).
std::vector<std::pair<std::size_t, std::size_t>> group_levels(const std::vector<double>& log_values,
                                                              double tolerance = kGroupTolerance);

}  // namespace entspec

#pragma once

#include <string_view>

namespace entspec {

/// Regions of the (gamma, h) quadrant. Case 2 is h > 2; Case 1a lies
/// between the circle h^2 = 4(1 - gamma^2) and h = 2; Case 1b inside it.
enum class Region { Case1a, Case1b, Case2, CriticalXX, CriticalIsing, FactorizingLine };

std::string_view to_string(Region r);

struct ModelPoint {
  double gamma = 0.0;
  double h = 0.0;
  Region region = Region::Case2;
};

/// Elliptic modulus and its complement, both from closed forms in (gamma, h).
struct Moduli {
  double k = 0.0;
  double k_prime = 0.0;
};

struct GapInfo {
  double delta = 0.0;           // energy-gap scale
  double central_charge = 0.0;  // 1/2 (Ising line) or 1 (XX line)
  double xi = 0.0;              // 1 / delta
};

inline constexpr double kDefaultEpsCrit = 1e-9;

/// Maps (gamma, h) into gamma >= 0, h >= 0 and assigns the region.
ModelPoint classify(double gamma, double h, double eps_crit = kDefaultEpsCrit);

/// True for the three gapped regions and the factorizing line.
bool is_gapped(const ModelPoint& point);

/// k(gamma, h) from the three-branch formula. The factorizing line uses the
/// Case 1a branch (k -> 0 there). Throws CriticalInputError on critical lines.
double elliptic_parameter(const ModelPoint& point);

/// k together with k' = sqrt(1 - k^2) evaluated without cancellation.
Moduli elliptic_moduli(const ModelPoint& point);

/// Gap scale and central charge of the nearest critical line.
GapInfo gap_info(const ModelPoint& point);

}  // namespace entspec

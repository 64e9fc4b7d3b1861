#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "entspec/errors.hpp"
#include "entspec/oracle.hpp"

namespace entspec {

std::string_view to_string(OracleSource s) {
  return s == OracleSource::FreeFermion ? "FreeFermion" : "ExactDiagonalization";
}

OracleSpectrum spectrum_from_energies(const std::vector<double>& energies, std::size_t max_levels) {
  if (max_levels > kMaxOracleLevels)
    throw ResourceError("spectrum_from_modes: max_levels " + std::to_string(max_levels) +
                        " exceeds 10^6");
  std::vector<double> finite;
  std::size_t infinite = 0;
  double log_top = 0.0;  // ln prod (1 + nu_j)/2
  for (double e : energies) {
    if (!(e >= 0.0)) throw DomainError("spectrum_from_modes: energies must be >= 0");
    if (std::isinf(e)) {
      ++infinite;
    } else {
      finite.push_back(e);
      log_top -= std::log1p(std::exp(-e));
    }
  }
  std::sort(finite.begin(), finite.end());

  OracleSpectrum out;
  out.block_size = energies.size();
  const auto emit = [&](double log_value) {
    out.log_eigenvalues.push_back(log_value);
    out.eigenvalues.push_back(std::exp(log_value));
  };

  // Subsets of flipped modes in order of increasing cost. A node (cost, i)
  // is a subset whose largest index is i; its two children replace or extend i.
  using Node = std::pair<double, std::size_t>;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;
  if (max_levels > 0) emit(log_top);
  if (!finite.empty()) heap.push({finite[0], 0});
  while (out.eigenvalues.size() < max_levels && !heap.empty()) {
    const auto [cost, i] = heap.top();
    heap.pop();
    emit(log_top - cost);
    if (i + 1 < finite.size()) {
      heap.push({cost + finite[i + 1], i + 1});
      heap.push({cost - finite[i] + finite[i + 1], i + 1});
    }
  }
  // Flipping a fully occupied mode gives exact zeros.
  if (infinite > 0) {
    const double neg_inf = -std::numeric_limits<double>::infinity();
    const double finite_count = std::ldexp(1.0, int(std::min<std::size_t>(finite.size(), 1000)));
    const double zeros = finite_count * (std::ldexp(1.0, int(std::min<std::size_t>(infinite, 1000))) - 1.0);
    while (out.eigenvalues.size() < max_levels && double(out.eigenvalues.size()) < finite_count + zeros)
      emit(neg_inf);
  }
  long double total = 0.0L;
  for (double v : out.eigenvalues) total += v;
  out.tail_deficit = double(1.0L - total);
  return out;
}

OracleSpectrum spectrum_from_modes(const std::vector<double>& nu, std::size_t max_levels) {
  std::vector<double> energies;
  energies.reserve(nu.size());
  for (double v : nu) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("spectrum_from_modes: nu must lie in [0,1]");
    energies.push_back(v == 1.0 ? std::numeric_limits<double>::infinity()
                                : std::log1p(v) - std::log1p(-v));
  }
  return spectrum_from_energies(energies, max_levels);
}

double oracle_entropy(const OracleSpectrum& spectrum) {
  double s = 0.0;
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    const double p = spectrum.eigenvalues[i];
    if (p > 0.0) s -= p * spectrum.log_eigenvalues[i];
  }
  return s;
}

}  // namespace entspec

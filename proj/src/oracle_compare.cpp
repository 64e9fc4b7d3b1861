#include <algorithm>
#include <cmath>

#include "entspec/oracle.hpp"

namespace entspec {

std::vector<std::pair<std::size_t, std::size_t>> group_levels(const std::vector<double>& log_values,
                                                              double tolerance) {
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  std::size_t i = 0;
  while (i < log_values.size()) {
    std::size_t j = i + 1;
    const double head = log_values[i];
    while (j < log_values.size()) {
      const double v = log_values[j];
      const bool same = std::isinf(head) ? std::isinf(v) : std::abs(std::expm1(v - head)) <= tolerance;
      if (!same) break;
      ++j;
    }
    groups.emplace_back(i, j - i);
    i = j;
  }
  return groups;
}

SpectrumComparison compare_spectra(const OracleSpectrum& oracle, const EntanglementSpectrum& exact,
                                   std::size_t top_k, double group_tolerance) {
  SpectrumComparison report;
  const auto groups = group_levels(oracle.log_eigenvalues, group_tolerance);
  const std::size_t limit = std::min(top_k, oracle.log_eigenvalues.size());
  for (std::size_t n = 0; n < groups.size(); ++n) {
    const auto [first, size] = groups[n];
    if (first >= limit) break;
    if (n >= exact.log_eigenvalues.size()) {
      report.complete = false;
      break;
    }
    LevelComparison level;
    level.n = n;
    level.exact_log_lambda = exact.log_eigenvalues[n];
    level.exact_degeneracy = exact.degeneracies[n];
    level.oracle_count = size;
    double mean = 0.0;
    for (std::size_t i = first; i < first + size; ++i) mean += oracle.log_eigenvalues[i];
    mean /= double(size);
    level.oracle_log_lambda = mean;
    level.relative_error = std::abs(std::expm1(mean - level.exact_log_lambda));
    for (std::size_t i = first; i < first + size; ++i)
      level.max_member_deviation =
          std::max(level.max_member_deviation,
                   std::abs(std::expm1(oracle.log_eigenvalues[i] - level.exact_log_lambda)));
    // A group that runs into the end of the oracle list may be cut short.
    const bool truncated = first + size == oracle.log_eigenvalues.size();
    level.count_match = level.exact_degeneracy == BigInt(std::to_string(size));
    if (truncated && !level.count_match) report.complete = false;

    report.all_counts_match = report.all_counts_match && level.count_match;
    report.max_relative_error = std::max(report.max_relative_error, level.relative_error);
    report.max_member_deviation = std::max(report.max_member_deviation, level.max_member_deviation);
    report.levels.push_back(std::move(level));
  }
  report.levels_compared = report.levels.size();
  return report;
}

}  // namespace entspec

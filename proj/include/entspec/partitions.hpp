#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <vector>

namespace entspec {

using BigInt = mpz_class;

/// Exact partition counts and the degeneracy convolutions built from them.
///   p_distinct_odd[n]  partitions of n into distinct odd parts
///   p_distinct[n]      partitions of n into distinct parts
///   p_odd[n]           partitions of n into odd parts (repetition allowed)
///   a[n] = sum_l p_distinct_odd[l] p_distinct_odd[n-l]
///   b[n] = sum_l p_distinct[l] p_distinct[n-l]
struct PartitionTable {
  std::size_t n_max = 0;
  std::vector<BigInt> p_distinct_odd;
  std::vector<BigInt> p_distinct;
  std::vector<BigInt> p_odd;
  std::vector<BigInt> a;
  std::vector<BigInt> b;
};

inline constexpr std::size_t kDefaultTableCap = 1'000'000;

/// Fills every sequence for 0..n_max by dynamic programming over parts.
/// Throws ResourceError when n_max exceeds `cap`.
PartitionTable build_tables(std::size_t n_max, std::size_t cap = kDefaultTableCap);

/// Expands prod_m (1 + q^{2m+1}) and prod_m (1 + q^{2m}) (and their squares)
/// as truncated integer polynomials and compares them coefficient by
/// coefficient with the table. Requires table.n_max <= 4000.
bool series_coefficients_check(const PartitionTable& table);

/// Builds tables for 0..n_max and runs the check above.
bool series_coefficients_check(std::size_t n_max);

/// Process-wide table holding at least 0..n_max, grown on demand.
/// Thread-safe; the returned table is immutable.
std::shared_ptr<const PartitionTable> shared_tables(std::size_t n_max);

/// Natural log of a positive big integer, accurate to double precision.
double log_bigint(const BigInt& value);

}  // namespace entspec

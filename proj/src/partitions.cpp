#include "entspec/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "entspec/errors.hpp"

namespace entspec {
namespace {

using Poly = std::vector<BigInt>;

std::vector<BigInt> distinct_parts(std::size_t n_max, std::size_t first, std::size_t step) {
  std::vector<BigInt> p(n_max + 1, 0);
  p[0] = 1;
  for (std::size_t part = first; part <= n_max; part += step)
    for (std::size_t s = n_max; s >= part; --s) p[s] += p[s - part];
  return p;
}

std::vector<BigInt> odd_parts(std::size_t n_max) {
  std::vector<BigInt> p(n_max + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= n_max; part += 2)
    for (std::size_t s = part; s <= n_max; ++s) p[s] += p[s - part];
  return p;
}

std::vector<BigInt> self_convolution(const std::vector<BigInt>& p) {
  const std::size_t n_max = p.size() - 1;
  std::vector<BigInt> out(n_max + 1);
  BigInt acc;
  for (std::size_t n = 0; n <= n_max; ++n) {
    acc = 0;
    for (std::size_t l = 0; 2 * l < n; ++l) mpz_addmul(acc.get_mpz_t(), p[l].get_mpz_t(), p[n - l].get_mpz_t());
    acc *= 2;
    if (n % 2 == 0) acc += p[n / 2] * p[n / 2];
    out[n] = acc;
  }
  return out;
}

// Truncated product of two dense polynomials, skipping zero coefficients.
Poly multiply(const Poly& lhs, const Poly& rhs, std::size_t degree) {
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < rhs.size() && j <= degree; ++j)
    if (rhs[j] != 0) support.push_back(j);
  Poly out(degree + 1, 0);
  for (std::size_t i = 0; i < lhs.size() && i <= degree; ++i) {
    if (lhs[i] == 0) continue;
    for (std::size_t j : support) {
      if (i + j > degree) break;
      mpz_addmul(out[i + j].get_mpz_t(), lhs[i].get_mpz_t(), rhs[j].get_mpz_t());
    }
  }
  return out;
}

// prod over exponents e in {first, first+step, ...} <= degree of (1 + q^e).
Poly binomial_product(std::size_t first, std::size_t step, std::size_t degree) {
  Poly acc(1, 1);
  for (std::size_t e = first; e <= degree; e += step) {
    Poly factor(e + 1, 0);
    factor[0] = 1;
    factor[e] = 1;
    acc = multiply(acc, factor, degree);
  }
  acc.resize(degree + 1, 0);
  return acc;
}

}  // namespace

PartitionTable build_tables(std::size_t n_max, std::size_t cap) {
  if (n_max > cap)
    throw ResourceError("build_tables: n_max " + std::to_string(n_max) + " exceeds cap " +
                        std::to_string(cap));
  PartitionTable t;
  t.n_max = n_max;
  t.p_distinct_odd = distinct_parts(n_max, 1, 2);
  t.p_distinct = distinct_parts(n_max, 1, 1);
  t.p_odd = odd_parts(n_max);
  t.a = self_convolution(t.p_distinct_odd);
  t.b = self_convolution(t.p_distinct);
  return t;
}

bool series_coefficients_check(const PartitionTable& table) {
  const std::size_t n = table.n_max;
  if (n > 4000) throw DomainError("series_coefficients_check: n_max must be <= 4000");
  const auto sized = [n](const std::vector<BigInt>& v) { return v.size() == n + 1; };
  if (!sized(table.p_distinct_odd) || !sized(table.p_distinct) || !sized(table.a) ||
      !sized(table.b))
    return false;

  const Poly odd = binomial_product(1, 2, n);
  if (odd != table.p_distinct_odd) return false;
  if (multiply(odd, odd, n) != table.a) return false;

  const Poly even = binomial_product(2, 2, 2 * n);
  const Poly even_sq = multiply(even, even, 2 * n);
  for (std::size_t d = 0; d <= 2 * n; ++d) {
    if (d % 2 == 1) {
      if (even[d] != 0 || even_sq[d] != 0) return false;
    } else if (even[d] != table.p_distinct[d / 2] || even_sq[d] != table.b[d / 2]) {
      return false;
    }
  }
  return true;
}

bool series_coefficients_check(std::size_t n_max) {
  return series_coefficients_check(build_tables(n_max));
}

std::shared_ptr<const PartitionTable> shared_tables(std::size_t n_max) {
  static std::mutex mutex;
  static std::shared_ptr<const PartitionTable> cached;
  std::lock_guard lock(mutex);
  if (!cached || cached->n_max < n_max) {
    std::size_t size = std::max<std::size_t>(n_max, 64);
    if (cached) size = std::max(size, 2 * cached->n_max);
    cached = std::make_shared<const PartitionTable>(build_tables(size));
  }
  return cached;
}

double log_bigint(const BigInt& value) {
  if (sgn(value) <= 0) throw DomainError("log_bigint: argument must be positive");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + double(exponent) * std::log(2.0);
}

}  // namespace entspec

#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "entspec/errors.hpp"
#include "entspec/partitions.hpp"

using namespace entspec;

namespace {

// Counts partitions of every n <= n_max by explicit enumeration: parts are
// drawn from `allowed` in non-increasing order, repeated only when `repeat`.
std::vector<long> enumerate(int n_max, const std::function<bool(int)>& allowed, bool repeat) {
  std::vector<long> counts(std::size_t(n_max) + 1, 0);
  std::function<void(int, int)> walk = [&](int sum, int largest) {
    ++counts[std::size_t(sum)];
    for (int part = repeat ? largest : largest - 1; part >= 1; --part) {
      if (!allowed(part) || sum + part > n_max) continue;
      walk(sum + part, part);
    }
  };
  walk(0, n_max + 1);
  return counts;
}

std::vector<long> convolve(const std::vector<long>& p) {
  std::vector<long> out(p.size(), 0);
  for (std::size_t n = 0; n < p.size(); ++n)
    for (std::size_t l = 0; l <= n; ++l) out[n] += p[l] * p[n - l];
  return out;
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("small values") {
    const PartitionTable t = build_tables(10);
    const long distinct_odd[] = {1, 1, 0, 1, 1, 1, 1, 1, 2};
    for (std::size_t n = 0; n < 9; ++n) CHECK(t.p_distinct_odd[n] == distinct_odd[n]);
    const long distinct[] = {1, 1, 1, 2, 2, 3, 4};
    for (std::size_t n = 0; n < 7; ++n) CHECK(t.p_distinct[n] == distinct[n]);
    const long a[] = {1, 2, 1, 2, 4};
    for (std::size_t n = 0; n < 5; ++n) CHECK(t.a[n] == a[n]);
    const long b[] = {1, 2, 3, 6};
    for (std::size_t n = 0; n < 4; ++n) CHECK(t.b[n] == b[n]);
    CHECK(t.p_odd[0] == 1);
    CHECK(t.n_max == 10);
  }

  TEST_CASE("brute-force enumeration up to 30") {
    const int n_max = 30;
    const PartitionTable t = build_tables(n_max);
    const auto odd = [](int p) { return p % 2 == 1; };
    const auto any = [](int) { return true; };
    const auto distinct_odd = enumerate(n_max, odd, false);
    const auto distinct = enumerate(n_max, any, false);
    const auto odd_repeat = enumerate(n_max, odd, true);
    const auto a = convolve(distinct_odd);
    const auto b = convolve(distinct);
    for (std::size_t n = 0; n <= std::size_t(n_max); ++n) {
      CHECK(t.p_distinct_odd[n] == distinct_odd[n]);
      CHECK(t.p_distinct[n] == distinct[n]);
      CHECK(t.p_odd[n] == odd_repeat[n]);
      CHECK(t.a[n] == a[n]);
      CHECK(t.b[n] == b[n]);
    }
  }

  TEST_CASE("product expansion check") {
    CHECK(series_coefficients_check(std::size_t{50}));
    CHECK(series_coefficients_check(std::size_t{0}));
    PartitionTable t = build_tables(50);
    CHECK(series_coefficients_check(t));
    t.p_distinct_odd[17] += 1;
    CHECK_FALSE(series_coefficients_check(t));
    PartitionTable u = build_tables(50);
    u.p_distinct[31] -= 1;
    CHECK_FALSE(series_coefficients_check(u));
  }

  TEST_CASE("Euler identity and monotonicity to 10^4") {
    const PartitionTable t = build_tables(10000);
    bool euler = true;
    bool monotone = true;
    for (std::size_t n = 0; n <= t.n_max; ++n) {
      euler = euler && t.p_distinct[n] == t.p_odd[n];
      if (n >= 3) monotone = monotone && t.a[n] >= t.a[n - 1] && t.b[n] >= t.b[n - 1];
    }
    CHECK(euler);
    CHECK(monotone);
  }

  TEST_CASE("large values stay exact") {
    const PartitionTable t = build_tables(2000);
    // p(n) into distinct parts at n = 100 is 444793
    CHECK(t.p_distinct[100] == 444793);
    CHECK(t.a[2000] > BigInt("18446744073709551616"));
    CHECK(log_bigint(t.a[2000]) == doctest::Approx(std::log(t.a[2000].get_d())).epsilon(1e-14));
    CHECK(log_bigint(BigInt(1)) == 0.0);
    const BigInt huge = BigInt("1" + std::string(400, '0'));
    CHECK(log_bigint(huge) == doctest::Approx(400.0 * std::log(10.0)).epsilon(1e-15));
  }

  TEST_CASE("resource limits and the shared table") {
    CHECK_THROWS_AS(build_tables(11, 10), ResourceError);
    CHECK_THROWS_AS(build_tables(kDefaultTableCap + 1), ResourceError);
    const auto small = shared_tables(10);
    const auto large = shared_tables(300);
    CHECK(small->n_max >= 10);
    CHECK(large->n_max >= 300);
    CHECK(large->a[7] == build_tables(7).a[7]);
  }
}

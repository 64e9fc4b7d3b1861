#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "entspec/asymptotics.hpp"
#include "entspec/errors.hpp"
#include "entspec/partitions.hpp"

using namespace entspec;

namespace {

constexpr double kPi = std::numbers::pi;

double log_exact_degeneracy(const PartitionTable& t, std::size_t n, Regime r) {
  return r == Regime::HighField ? log_bigint(t.a[n]) : std::log(2.0) + log_bigint(t.b[n]);
}

}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("leading asymptotics at n = 2000") {
    const auto t = shared_tables(2000);
    for (auto r : {Regime::HighField, Regime::LowField}) {
      const double exact = log_exact_degeneracy(*t, 2000, r);
      const double asym = asymptotic_degeneracy(2000, r).log_value;
      CHECK(std::abs(asym / exact - 1.0) < 0.01);
    }
    const AsymptoticValue one = asymptotic_degeneracy(1, Regime::HighField);
    CHECK(std::isfinite(one.value));
    CHECK(one.value > 0.0);
    CHECK(asymptotic_degeneracy(1'000'000, Regime::LowField).value == INFINITY);
    CHECK_THROWS_AS(asymptotic_degeneracy(0, Regime::HighField), DomainError);
  }

  TEST_CASE("saddle radii") {
    const SaddleData high = saddle_radius(40, Regime::HighField);
    CHECK(high.epsilon_n == doctest::Approx(kPi / std::sqrt(479.0)).epsilon(1e-15));
    CHECK(high.rho_n == doctest::Approx(std::exp(-high.epsilon_n)).epsilon(1e-15));
    const SaddleData low = saddle_radius(40, Regime::LowField);
    CHECK(low.epsilon_n == doctest::Approx(kPi * std::sqrt(2.0) / std::sqrt(481.0)).epsilon(1e-15));
    for (std::size_t n : {10, 100, 1000}) {
      for (auto r : {Regime::HighField, Regime::LowField}) {
        const SaddleData s = saddle_radius(n, r);
        CHECK(s.stationary);
        CHECK(s.stationarity_residual < 1e-6);
      }
    }
    // a point off the saddle is not stationary
    const double rho = saddle_radius(40, Regime::HighField).rho_n;
    const double step = 1e-6;
    const double slope = (saddle_exponent(rho * 0.99 + step, 40, Regime::HighField) -
                          saddle_exponent(rho * 0.99 - step, 40, Regime::HighField)) /
                         (2 * step);
    CHECK(std::abs(slope) > 1.0);
  }

  TEST_CASE("generating function on the real axis") {
    // f(z) = sum_n g_n z^n at z = 0.3 from the first 60 exact terms
    const auto t = shared_tables(60);
    for (auto [g, h] : {std::pair{1.0, 3.0}, std::pair{0.5, 1.0}}) {
      const ModelPoint p = classify(g, h);
      const bool high = regime_of(p) == Regime::HighField;
      const double z = 0.3;
      double series = 0.0;
      for (std::size_t n = 0; n <= 60; ++n)
        series += (high ? t->a[n].get_d() : 2.0 * t->b[n].get_d()) * std::pow(z, double(n));
      const auto lf = log_generating_function(p, z);
      CHECK(lf.real() == doctest::Approx(std::log(series)).epsilon(1e-13));
      CHECK(std::abs(lf.imag()) < 1e-14);
    }
    CHECK_THROWS_AS(log_generating_function(classify(1.0, 3.0), 1.0), DomainError);
  }

  TEST_CASE("Cauchy recovery of exact degeneracies") {
    const auto t = shared_tables(20);
    for (auto [g, h] : {std::pair{1.0, 3.0}, std::pair{0.5, 1.0}}) {
      const ModelPoint p = classify(g, h);
      const bool high = regime_of(p) == Regime::HighField;
      for (std::size_t n = 0; n <= 20; ++n) {
        const double exact = high ? t->a[n].get_d() : 2.0 * t->b[n].get_d();
        const double value = cauchy_degeneracy(p, n, default_quadrature_points(n));
        CHECK(std::abs(value - exact) < 1e-6);
        CHECK(std::llround(value) == std::llround(exact));
        const double at_half = cauchy_degeneracy(p, n, default_quadrature_points(n), 0.5);
        CHECK(std::llround(at_half) == std::llround(exact));
      }
    }
  }

  TEST_CASE("Cauchy preconditions") {
    const ModelPoint p = classify(1.0, 3.0);
    CHECK_THROWS_AS(cauchy_degeneracy(p, 10, 87), DomainError);
    CHECK_NOTHROW(cauchy_degeneracy(p, 10, 88));
    CHECK_THROWS_AS(cauchy_degeneracy(classify(1.0, 2.0), 3, 256), CriticalInputError);
    CHECK_THROWS_AS(cauchy_degeneracy(p, 3, 256, 1.5), DomainError);
    CHECK(default_quadrature_points(0) == 256);
    CHECK(default_quadrature_points(100) == 1616);
  }

  TEST_CASE("singularity of f at z = 1") {
    const ModelPoint p = classify(1.0, 3.0);
    const std::vector<double> zs{0.3, 0.5, 0.7, 0.8, 0.9, 0.99, 0.999};
    const auto rows = generating_function_singularity_check(p, zs);
    REQUIRE(rows.size() == zs.size());
    for (const auto& r : rows) CHECK(r.residual <= 1.01 * r.predicted + r.resolution);
    // residuals above the rounding floor shrink as z -> 1, at the predicted rate
    for (std::size_t i = 1; i < 4; ++i) CHECK(rows[i].residual < rows[i - 1].residual);
    for (std::size_t i = 1; i < 4; ++i) CHECK(rows[i].residual / rows[i].predicted == doctest::Approx(1.0).epsilon(1e-3));
    // the expansion is unusable far from z = 1
    CHECK(rows[0].residual > 1e-6);
    CHECK(rows[6].log_f_exact > 100.0);

    const auto low = generating_function_singularity_check(classify(0.5, 1.0), zs);
    for (const auto& r : low) CHECK(r.residual <= 1.01 * r.predicted + r.resolution);
    for (std::size_t i = 1; i < 3; ++i) CHECK(low[i].residual < low[i - 1].residual);
    for (std::size_t i = 0; i < 3; ++i) CHECK(low[i].residual / low[i].predicted == doctest::Approx(1.0).epsilon(1e-3));
  }

  TEST_CASE("angular scan peaks at theta = 0") {
    const ModelPoint p = classify(1.0, 3.0);
    const auto scan = angular_scan(p, 40, 256);
    REQUIRE(scan.size() == 256);
    CHECK(scan.front().theta == doctest::Approx(-kPi));
    std::size_t best = 0;
    for (std::size_t i = 0; i < scan.size(); ++i)
      if (scan[i].exact > scan[best].exact) best = i;
    CHECK(std::abs(scan[best].theta) < 2.0 * kPi / 256.0 + 1e-12);
    // near the saddle the asymptotic exponent tracks the exact one
    CHECK(std::abs(scan[128].exact - scan[128].asymptotic) < 0.1);
  }

  TEST_CASE("csv writers") {
    const auto rows = generating_function_singularity_check(classify(1.0, 3.0), std::vector<double>{0.5});
    std::ostringstream out;
    write_singularity_csv(out, rows, 10);
    CHECK(out.str().rfind("z,log_f_exact,log_f_asymptotic,residual,predicted,resolution\n", 0) == 0);
    std::ostringstream ang;
    write_angular_csv(ang, angular_scan(classify(1.0, 3.0), 10, 4), 8);
    const std::string text = ang.str();
    CHECK(text.rfind("theta,re_log_integrand_exact,re_log_integrand_asymptotic\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  }
}

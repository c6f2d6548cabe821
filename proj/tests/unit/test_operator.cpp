#include <cmath>
#include <complex>

#include "doctest.h"
#include "mlharm/mlharm.hpp"
#include "oracles.hpp"

using mlharm::Complex;
using mlharm::MLParams;

namespace {

// A small spread of real-weight parameter sets: real parameters always give
// real, positive kernel coefficients.
std::vector<MLParams> real_regimes() {
  return {
      MLParams::ruscheweyh(),
      MLParams::exponential(),
      MLParams(0.5, 2.0, 1.5, 1.0, 1.0, 1.0),
      MLParams(2.0, 0.5, 3.0, 2.0, 1.5, 0.5),
      MLParams(1.0, 1.0, 2.0, 2.0, 0.5, 0.5),
      MLParams(0.25, 3.0, 0.7, 1.3, 0.2, 0.9),
  };
}

}  // namespace

TEST_CASE("FamilyParams: validation") {
  const auto ml = MLParams::ruscheweyh();
  CHECK_NOTHROW(mlharm::FamilyParams(1, 0, 0.0, ml));
  CHECK_THROWS_AS(mlharm::FamilyParams(0, 0, 0.0, ml), mlharm::ParameterError);
  CHECK_THROWS_AS(mlharm::FamilyParams(2, 2, 0.0, ml), mlharm::ParameterError);
  CHECK_THROWS_AS(mlharm::FamilyParams(2, 3, 0.0, ml), mlharm::ParameterError);
  CHECK_THROWS_AS(mlharm::FamilyParams(2, 1, 1.0, ml), mlharm::ParameterError);
  CHECK_THROWS_AS(mlharm::FamilyParams(2, 1, -0.1, ml), mlharm::ParameterError);
  CHECK_THROWS_AS(mlharm::FamilyParams(2, 1, NAN, ml), mlharm::ParameterError);
  CHECK(mlharm::FamilyParams(3, 0, 0.0, ml).parity() == -1);
  CHECK(mlharm::FamilyParams(3, 1, 0.0, ml).parity() == 1);
}

TEST_CASE("kernel_coeffs: examples") {
  const auto trivial = MLParams::exponential();
  CHECK(mlharm::kernel_coeffs(trivial, 2).at(0) == Complex(1.0, 0.0));
  CHECK(mlharm::kernel_coeff(trivial, 1) == Complex(1.0, 0.0));
  CHECK(mlharm::kernel_coeff(MLParams(0.3, 2.0, 1.0, 5.0, 1.0, 1.0), 1) == Complex(1.0, 0.0));
  const auto rus = mlharm::kernel_coeffs(MLParams::ruscheweyh(), 30);
  CHECK(rus.size() == 29);
  for (const auto& c : rus) CHECK(c == Complex(1.0, 0.0));
  CHECK_THROWS_AS(mlharm::kernel_coeffs(trivial, 1), mlharm::ParameterError);
}

TEST_CASE("kernel_coeffs: direct formula through the Gamma oracle") {
  mlharm::Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    const Complex alpha(rng.uniform(0.0, 2.0), rng.uniform(-1, 1));
    const Complex beta(rng.uniform(0.2, 3.0), rng.uniform(-1, 1));
    const Complex gamma(rng.uniform(0.2, 3.0), rng.uniform(-1, 1));
    const Complex delta(rng.uniform(0.2, 3.0), rng.uniform(-1, 1));
    const double p = rng.uniform(0.2, 2.0);
    const double q = rng.uniform(0.1, alpha.real() + p);
    const MLParams ml(alpha, beta, gamma, delta, q, p);
    const auto coeffs = mlharm::kernel_coeffs(ml, 12);
    for (std::size_t k = 2; k <= 12; ++k) {
      const double j = static_cast<double>(k - 1);
      const Complex want = (oracle::gamma(gamma + q * j) / oracle::gamma(gamma)) /
                           (oracle::gamma(beta + alpha * j) *
                            (oracle::gamma(delta + p * j) / oracle::gamma(delta)));
      CAPTURE(k);
      CHECK(oracle::rel_err(coeffs[k - 2], want) <= 1e-12);
    }
  }
}

TEST_CASE("weight: examples") {
  const auto rus = MLParams::ruscheweyh();
  CHECK(mlharm::weight(rus, 1, 3) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(mlharm::weight(MLParams::exponential(), 0, 3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mlharm::weight(rus, 4, 1) == 1.0);
}

TEST_CASE("weight: Ruscheweyh reduction is exact for k, m <= 20") {
  const auto rus = MLParams::ruscheweyh();
  for (unsigned m = 0; m <= 20; ++m) {
    for (std::size_t k = 1; k <= 20; ++k) {
      const double w = mlharm::weight(rus, m, k);
      const auto want = static_cast<double>(oracle::binomial(m + static_cast<unsigned>(k) - 1,
                                                             static_cast<unsigned>(k) - 1));
      CAPTURE(m);
      CAPTURE(k);
      CHECK(std::abs(w - want) <= 1e-9);
      CHECK(std::round(w) == want);
    }
  }
}

TEST_CASE("weight: Lambda_1 = 1 for every parameter set and m <= 10") {
  mlharm::Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const Complex alpha(rng.uniform(0.0, 3.0), rng.uniform(-2, 2));
    const MLParams ml(alpha, Complex(rng.uniform(0.1, 3), rng.uniform(-2, 2)),
                      Complex(rng.uniform(0.1, 3), rng.uniform(-2, 2)),
                      Complex(rng.uniform(0.1, 3), rng.uniform(-2, 2)), rng.uniform(0.1, 0.5),
                      rng.uniform(0.5, 1.0));
    for (unsigned m = 0; m <= 10; ++m) CHECK(mlharm::weight(ml, m, 1) == 1.0);
  }
}

TEST_CASE("weight: recursion consistency Lambda^(m+1) = (k+m)/(m+1) Lambda^(m)") {
  for (const auto& ml : real_regimes()) {
    for (unsigned m = 0; m <= 5; ++m) {
      for (std::size_t k = 1; k <= 20; ++k) {
        const double lhs = mlharm::weight(ml, m + 1, k);
        const double rhs = (static_cast<double>(k) + m) / (m + 1.0) * mlharm::weight(ml, m, k);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
      }
    }
  }
}

TEST_CASE("weight: non-real weights are rejected") {
  const MLParams complex_alpha(Complex(1.0, 1.0), 1.0, 1.0, 1.0, 1.0, 1.0);
  CHECK_THROWS_AS(mlharm::weight(complex_alpha, 1, 2), mlharm::NonPositiveWeight);
  CHECK_THROWS_AS(mlharm::weight_table(complex_alpha, 1, 4), mlharm::NonPositiveWeight);
  // Conjugate-symmetric cancellation: gamma = delta, q = p leaves a real kernel
  // whenever alpha and beta are real.
  const MLParams symmetric(1.0, 2.0, Complex(1.0, 3.0), Complex(1.0, 3.0), 0.7, 0.7);
  CHECK_NOTHROW(mlharm::weight_table(symmetric, 3, 10));
}

TEST_CASE("weight_table: examples") {
  const auto rus = MLParams::ruscheweyh();
  const auto t1 = mlharm::weight_table(rus, 1, 4);
  CHECK(std::vector<double>(t1.weights().begin(), t1.weights().end()) ==
        std::vector<double>{1, 2, 3, 4});
  const auto t2 = mlharm::weight_table(rus, 2, 3);
  CHECK(std::vector<double>(t2.weights().begin(), t2.weights().end()) ==
        std::vector<double>{1, 3, 6});
  const auto t3 = mlharm::weight_table(MLParams(0.5, 2.0, 1.5, 1.0, 1.0, 1.0), 3, 1);
  CHECK(t3.truncation() == 1);
  CHECK(t3.at(1) == 1.0);
  CHECK(t1.order() == 1);
  CHECK_THROWS_AS(mlharm::weight_table(rus, 1, 0), mlharm::ParameterError);
}

TEST_CASE("weight_table: entries match weight()") {
  for (const auto& ml : real_regimes()) {
    const auto t = mlharm::weight_table(ml, 4, 25);
    for (std::size_t k = 1; k <= 25; ++k) {
      CHECK(t.at(k) == mlharm::weight(ml, 4, k));
      CHECK(t.at(k) > 0.0);
    }
  }
}

TEST_CASE("apply_operator: examples") {
  const auto rus = MLParams::ruscheweyh();
  const auto id = mlharm::apply_operator(mlharm::HarmonicMap::identity(), MLParams::exponential(), 3);
  CHECK(id.a(1) == Complex(1.0));
  for (std::size_t k = 2; k <= id.order(); ++k) CHECK(id.a(k) == Complex(0.0));

  const mlharm::HarmonicMap f({0.1}, {});
  const auto g = mlharm::apply_operator(f, rus, 1);
  CHECK(std::abs(g.a(2) - 0.2) < 1e-15);

  const mlharm::HarmonicMap b_only({}, {0.3});
  const auto gb = mlharm::apply_operator(b_only, rus, 1);
  CHECK(gb.co_sign() == -1);
  CHECK(std::abs(static_cast<double>(gb.co_sign()) * gb.b(1) - (-0.3)) < 1e-15);
  // Even order leaves the sign alone.
  CHECK(mlharm::apply_operator(b_only, rus, 2).co_sign() == 1);
}

TEST_CASE("apply_operator: linear in the coefficients") {
  mlharm::Rng rng(31);
  const MLParams ml(0.5, 2.0, 1.5, 1.0, 1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    std::vector<Complex> a1, a2, b1, b2, as, bs;
    for (int k = 2; k <= 16; ++k) {
      a1.emplace_back(rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05));
      a2.emplace_back(rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05));
      as.push_back(a1.back() + a2.back());
    }
    for (int k = 1; k <= 16; ++k) {
      b1.emplace_back(rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05));
      b2.emplace_back(rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05));
      bs.push_back(b1.back() + b2.back());
    }
    const unsigned m = static_cast<unsigned>(rng.index(0, 6));
    const auto f1 = mlharm::apply_operator(mlharm::HarmonicMap(a1, b1, 16), ml, m);
    const auto f2 = mlharm::apply_operator(mlharm::HarmonicMap(a2, b2, 16), ml, m);
    const auto fs = mlharm::apply_operator(mlharm::HarmonicMap(as, bs, 16), ml, m);
    for (std::size_t k = 2; k <= 16; ++k) {
      CHECK(std::abs(fs.a(k) - (f1.a(k) + f2.a(k))) <= 1e-14 * std::max(1.0, std::abs(fs.a(k))));
    }
    for (std::size_t k = 1; k <= 16; ++k) {
      CHECK(std::abs(fs.b(k) - (f1.b(k) + f2.b(k))) <= 1e-14 * std::max(1.0, std::abs(fs.b(k))));
    }
  }
}

TEST_CASE("rising_binomial: exact integers") {
  for (unsigned m = 0; m <= 25; ++m) {
    for (std::size_t k = 1; k <= 25; ++k) {
      CHECK(mlharm::rising_binomial(m, k) ==
            static_cast<double>(oracle::binomial(m + static_cast<unsigned>(k) - 1,
                                                 static_cast<unsigned>(k) - 1)));
    }
  }
}

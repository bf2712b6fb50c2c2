#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "tbc/fourier.hpp"

using namespace tbc;
using doctest::Approx;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

FourierScalar random_series(int order, unsigned seed, bool real = false) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::VectorXcd c(2 * order + 1);
  for (int k = -order; k <= order; ++k)
    c[k + order] = cd(dist(rng), dist(rng));
  if (real) {
    for (int k = 1; k <= order; ++k)
      c[-k + order] = std::conj(c[k + order]);
    c[order] = c[order].real();
  }
  return FourierScalar(order, std::move(c));
}

// Independent route: sample two series on a dense grid, multiply pointwise,
// and recover coefficients with a direct discrete transform.
FourierScalar sampled_product(const FourierScalar& f, const FourierScalar& g,
                              int out_order) {
  int M = 4 * (f.order() + g.order()) + 8;
  FourierScalar h(out_order);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * out_order + 1);
  for (int k = -out_order; k <= out_order; ++k) {
    cd acc(0, 0);
    for (int i = 0; i < M; ++i) {
      double t = double(i) / M;
      acc += evaluate(f, t) * evaluate(g, t) * std::exp(cd(0, -kTwoPi * k * t));
    }
    c[k + out_order] = acc / double(M);
  }
  return FourierScalar(out_order, std::move(c));
}

double max_coeff_diff(const FourierScalar& a, const FourierScalar& b) {
  double worst = 0;
  int order = std::max(a.order(), b.order());
  for (int k = -order; k <= order; ++k)
    worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
  return worst;
}

}  // namespace

TEST_CASE("constant product") {
  auto f = FourierScalar::constant(2.0);
  auto g = FourierScalar::constant(3.0);
  CHECK(multiply(f, g, 0).coeff(0) == cd(6.0, 0.0));
}

TEST_CASE("opposite modes cancel to the constant") {
  auto f = FourierScalar::mode(1, 1.0);
  auto g = FourierScalar::mode(-1, 1.0);
  auto h = multiply(f, g, 2);
  CHECK(h.coeff(0) == cd(1.0, 0.0));
  for (int k = 1; k <= 2; ++k) {
    CHECK(std::abs(h.coeff(k)) == 0.0);
    CHECK(std::abs(h.coeff(-k)) == 0.0);
  }
}

TEST_CASE("truncated product matches the dense-sampling transform") {
  auto f = random_series(8, 11);
  auto g = random_series(8, 22);
  auto direct = multiply(f, g, 16);
  auto sampled = sampled_product(f, g, 16);
  CHECK(max_coeff_diff(direct, sampled) <= 1e-12);
  // real inputs give real output
  auto fr = random_series(8, 33, true);
  auto gr = random_series(8, 44, true);
  CHECK(multiply(fr, gr, 16).is_real());
  // commutative (up to summation-order rounding)
  CHECK(max_coeff_diff(multiply(f, g, 16), multiply(g, f, 16)) <= 1e-13);
}

TEST_CASE("derivative of a constant vanishes") {
  CHECK(differentiate(FourierScalar::constant(1.0)).is_zero());
}

TEST_CASE("derivative of a single mode") {
  // sin(2 pi t) -> 2 pi cos(2 pi t)
  auto f = FourierScalar::sine(1, 1.0);
  auto df = differentiate(f);
  auto expect = FourierScalar::cosine(1, kTwoPi);
  CHECK(max_coeff_diff(df, expect) <= 1e-14);
  CHECK(df.is_real());
}

TEST_CASE("derivative matches central finite differences") {
  auto f = random_series(6, 55) * cd(0.25, 0);
  auto df = differentiate(f);
  const int M = 4096;
  const double h = 1.0 / M;
  double worst = 0;
  for (int i = 0; i < 64; ++i) {
    double t = double(i) / 64 + 0.001;
    // fourth-order central stencil on the sample grid
    cd fd = (-evaluate(f, t + 2 * h) + 8.0 * evaluate(f, t + h) -
             8.0 * evaluate(f, t - h) + evaluate(f, t - 2 * h)) /
            (12 * h);
    worst = std::max(worst, std::abs(fd - evaluate(df, t)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("inner product basics") {
  auto one = FourierScalar::constant(1.0);
  CHECK(l2_inner(one, one) == cd(1.0, 0.0));
  CHECK(l2_inner(FourierScalar::mode(1, 1.0), FourierScalar::mode(2, 1.0)) ==
        cd(0.0, 0.0));
}

TEST_CASE("inner product matches trapezoidal quadrature") {
  auto f = random_series(7, 66);
  cd parseval = l2_inner(f, f);
  const int M = 1 << 12;
  double quad = 0;
  for (int i = 0; i < M; ++i)
    quad += std::norm(evaluate(f, double(i) / M)) / M;
  CHECK(std::abs(parseval.real() - quad) <= 1e-10);
  CHECK(std::abs(parseval.imag()) <= 1e-14);
}

TEST_CASE("inner product is conjugate symmetric and positive") {
  auto f = random_series(5, 77);
  auto g = random_series(5, 88);
  CHECK(std::abs(l2_inner(f, g) - std::conj(l2_inner(g, f))) <= 1e-14);
  CHECK(l2_inner(f, f).real() > 0.0);
}

TEST_CASE("evaluation basics and periodicity") {
  CHECK(evaluate(FourierScalar::constant(1.0), 0.37) == cd(1.0, 0.0));
  auto e1 = FourierScalar::mode(1, 1.0);
  CHECK(std::abs(evaluate(e1, 0.25) - cd(0, 1)) <= 1e-15);
  auto f = random_series(9, 99);
  for (double t : {0.12, 0.57, 0.93})
    CHECK(std::abs(evaluate(f, t) - evaluate(f, t + 1.0)) <= 1e-12);
}

TEST_CASE("multiplication is associative up to truncation") {
  auto f = random_series(4, 1);
  auto g = random_series(4, 2);
  auto h = random_series(4, 3);
  int big = 12;
  auto left = multiply(multiply(f, g, big), h, big);
  auto right = multiply(f, multiply(g, h, big), big);
  CHECK(max_coeff_diff(left, right) <= 1e-12);
}

TEST_CASE("differentiation is skew-adjoint in coefficients") {
  auto f = random_series(6, 4);
  auto g = random_series(6, 5);
  cd lhs = l2_inner(differentiate(f), g);
  cd rhs = -l2_inner(f, differentiate(g));
  // identical sums up to the rounding of reordered products
  CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(lhs));
}

TEST_CASE("band-limited products evaluate pointwise") {
  auto f = random_series(5, 6);
  auto g = random_series(5, 7);
  auto fg = multiply(f, g, 10);
  for (double t : {0.0, 0.31, 0.72})
    CHECK(std::abs(evaluate(fg, t) - evaluate(f, t) * evaluate(g, t)) <=
          1e-12);
}

TEST_CASE("reality invariant of stored coefficients") {
  auto f = random_series(6, 8, true);
  CHECK(f.is_real(1e-12));
  CHECK(f.coeffs().size() == 2 * f.order() + 1);
  auto g = random_series(6, 9);
  CHECK(!g.is_real(1e-12));
}

TEST_CASE("shift acts as a phase in coefficients") {
  auto f = random_series(5, 10, true);
  auto shifted = f.shifted(0.3);
  CHECK(shifted.is_real(1e-12));
  for (double t : {0.1, 0.45})
    CHECK(std::abs(evaluate(shifted, t) - evaluate(f, t + 0.3)) <= 1e-12);
}

#include "tbc/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tbc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

FourierScalar::FourierScalar(int order, Eigen::VectorXcd coeffs)
    : order_(order), c_(std::move(coeffs)) {
  if (order_ < 0 || c_.size() != 2 * order_ + 1)
    throw std::invalid_argument("FourierScalar: coefficient length mismatch");
}

FourierScalar FourierScalar::constant(cd value) {
  FourierScalar f(0);
  f.c_[0] = value;
  return f;
}

FourierScalar FourierScalar::mode(int k, cd coeff) {
  FourierScalar f(std::abs(k));
  f.c_[k + f.order_] = coeff;
  return f;
}

FourierScalar FourierScalar::cosine(int k, double amp) {
  FourierScalar f(std::abs(k));
  f.c_[k + f.order_] += amp / 2.0;
  f.c_[-k + f.order_] += amp / 2.0;
  return f;
}

FourierScalar FourierScalar::sine(int k, double amp) {
  FourierScalar f(std::abs(k));
  f.c_[k + f.order_] += cd(0, -amp / 2.0);
  f.c_[-k + f.order_] += cd(0, amp / 2.0);
  return f;
}

FourierScalar FourierScalar::from_triples(
    const std::vector<std::tuple<int, double, double>>& triples) {
  int order = 0;
  for (const auto& [k, re, im] : triples) order = std::max(order, std::abs(k));
  FourierScalar f(order);
  for (const auto& [k, re, im] : triples) {
    f.c_[k + order] += cd(re, im);
    if (k != 0) f.c_[-k + order] += cd(re, -im);
  }
  return f;
}

bool FourierScalar::is_zero(double tol) const {
  return c_.cwiseAbs().maxCoeff() <= tol;
}

bool FourierScalar::is_real(double tol) const {
  for (int k = 0; k <= order_; ++k)
    if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
  return true;
}

bool FourierScalar::is_constant(double tol) const {
  for (int k = 1; k <= order_; ++k)
    if (std::abs(coeff(k)) > tol || std::abs(coeff(-k)) > tol) return false;
  return true;
}

int FourierScalar::bandwidth() const {
  for (int k = order_; k >= 1; --k)
    if (std::abs(coeff(k)) != 0.0 || std::abs(coeff(-k)) != 0.0) return k;
  return 0;
}

FourierScalar FourierScalar::truncated(int new_order) const {
  FourierScalar g(new_order);
  for (int k = -std::min(order_, new_order); k <= std::min(order_, new_order);
       ++k)
    g.c_[k + new_order] = coeff(k);
  return g;
}

FourierScalar FourierScalar::shifted(double theta) const {
  FourierScalar g(order_);
  for (int k = -order_; k <= order_; ++k)
    g.c_[k + order_] = coeff(k) * std::exp(cd(0, kTwoPi * k * theta));
  return g;
}

FourierScalar FourierScalar::conjugated() const {
  FourierScalar g(order_);
  for (int k = -order_; k <= order_; ++k)
    g.c_[k + order_] = std::conj(coeff(-k));
  return g;
}

FourierScalar FourierScalar::operator+(const FourierScalar& g) const {
  int order = std::max(order_, g.order_);
  FourierScalar h(order);
  for (int k = -order; k <= order; ++k)
    h.c_[k + order] = coeff(k) + g.coeff(k);
  return h;
}

FourierScalar FourierScalar::operator-(const FourierScalar& g) const {
  return (*this) + (g * cd(-1, 0));
}

FourierScalar FourierScalar::operator*(cd z) const {
  FourierScalar h(order_);
  h.c_ = c_ * z;
  return h;
}

FourierScalar multiply(const FourierScalar& f, const FourierScalar& g,
                       int out_order) {
  if (out_order < 0) throw std::invalid_argument("multiply: negative order");
  FourierScalar h(out_order);
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(2 * out_order + 1);
  for (int k = -f.order(); k <= f.order(); ++k) {
    cd fk = f.coeff(k);
    if (fk == cd(0, 0)) continue;
    for (int l = -g.order(); l <= g.order(); ++l) {
      int m = k + l;
      if (m < -out_order || m > out_order) continue;
      acc[m + out_order] += fk * g.coeff(l);
    }
  }
  return FourierScalar(out_order, std::move(acc));
}

FourierScalar differentiate(const FourierScalar& f) {
  FourierScalar g(f.order());
  Eigen::VectorXcd acc(2 * f.order() + 1);
  for (int k = -f.order(); k <= f.order(); ++k)
    acc[k + f.order()] = cd(0, kTwoPi * k) * f.coeff(k);
  return FourierScalar(f.order(), std::move(acc));
}

cd l2_inner(const FourierScalar& f, const FourierScalar& g) {
  cd acc(0, 0);
  int order = std::min(f.order(), g.order());
  for (int k = -order; k <= order; ++k)
    acc += f.coeff(k) * std::conj(g.coeff(k));
  return acc;
}

cd evaluate(const FourierScalar& f, double t) {
  cd acc(0, 0);
  for (int k = -f.order(); k <= f.order(); ++k)
    acc += f.coeff(k) * std::exp(cd(0, kTwoPi * k * t));
  return acc;
}

}  // namespace tbc

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <tuple>
#include <vector>

namespace tbc {

using cd = std::complex<double>;

/// Truncated Fourier series on the unit-period circle,
///     f(t) = sum_{|k| <= order} c_k e^{2 pi i k t},
/// with coefficients stored for k = -order .. order.  Values are immutable
/// after construction except through the named operations below, all of which
/// return fresh objects.
class FourierScalar {
 public:
  FourierScalar() : order_(0), c_(Eigen::VectorXcd::Zero(1)) {}
  explicit FourierScalar(int order)
      : order_(order), c_(Eigen::VectorXcd::Zero(2 * order + 1)) {}
  FourierScalar(int order, Eigen::VectorXcd coeffs);

  static FourierScalar constant(cd value);
  static FourierScalar mode(int k, cd coeff);
  /// amp * cos(2 pi k t)
  static FourierScalar cosine(int k, double amp);
  /// amp * sin(2 pi k t)
  static FourierScalar sine(int k, double amp);
  /// Triples (k, re, im) set c_k = re + i*im and c_{-k} = conj for k != 0.
  static FourierScalar from_triples(
      const std::vector<std::tuple<int, double, double>>& triples);

  int order() const { return order_; }
  cd coeff(int k) const {
    return (k < -order_ || k > order_) ? cd(0, 0) : c_[k + order_];
  }
  const Eigen::VectorXcd& coeffs() const { return c_; }

  bool is_zero(double tol = 0.0) const;
  bool is_real(double tol = 1e-12) const;
  bool is_constant(double tol = 0.0) const;
  cd mean() const { return c_[order_]; }
  /// Largest |k| with c_k != 0 (0 for constants and the zero series).
  int bandwidth() const;
  /// sum_k |c_k|, an upper bound for sup_t |f(t)|.
  double l1_norm() const { return c_.cwiseAbs().sum(); }
  double l2_norm() const { return c_.norm(); }

  FourierScalar truncated(int new_order) const;
  /// f(t + theta)
  FourierScalar shifted(double theta) const;
  FourierScalar conjugated() const;

  FourierScalar operator+(const FourierScalar& g) const;
  FourierScalar operator-(const FourierScalar& g) const;
  FourierScalar operator*(cd z) const;
  FourierScalar operator-() const { return (*this) * cd(-1, 0); }

 private:
  int order_;
  Eigen::VectorXcd c_;
};

/// Truncated convolution product; modes with |k| > out_order are discarded.
FourierScalar multiply(const FourierScalar& f, const FourierScalar& g,
                       int out_order);
/// d/dt: c_k -> 2 pi i k c_k.
FourierScalar differentiate(const FourierScalar& f);
/// Parseval inner product sum_k c_k conj(d_k) = int_0^1 f(t) conj(g(t)) dt.
cd l2_inner(const FourierScalar& f, const FourierScalar& g);
cd evaluate(const FourierScalar& f, double t);

}  // namespace tbc

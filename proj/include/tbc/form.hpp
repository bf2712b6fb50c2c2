#pragma once

#include <random>

#include "tbc/complex.hpp"

namespace tbc {

/// A graded/bigraded element of the truncated basic complex: one coefficient
/// function per wedge monomial, stored as a coupled coefficient vector
/// (monomial-major, mode index fastest).
class BasicForm {
 public:
  explicit BasicForm(const BasicComplex& ctx)
      : ctx_(&ctx), v_(Eigen::VectorXcd::Zero(ctx.basis().dim() *
                                              ctx.grid().count())) {}
  BasicForm(const BasicComplex& ctx, Eigen::VectorXcd v)
      : ctx_(&ctx), v_(std::move(v)) {}

  static BasicForm zero(const BasicComplex& ctx) { return BasicForm(ctx); }
  /// Basic function f(t_factor) placed in the scalar slot.
  static BasicForm scalar(const BasicComplex& ctx, int factor,
                          const FourierScalar& f);
  /// f * (monomial with the given masks).
  static BasicForm monomial(const BasicComplex& ctx, uint32_t amask,
                            uint32_t bmask, int factor,
                            const FourierScalar& f);
  static BasicForm random(const BasicComplex& ctx, unsigned seed);

  const Eigen::VectorXcd& vec() const { return v_; }
  Eigen::VectorXcd& vec() { return v_; }
  const BasicComplex& ctx() const { return *ctx_; }

  /// Coefficient of one monomial as a single-variable series along `factor`
  /// (all other factor modes at zero).
  FourierScalar coefficient(int mono_idx, int factor = 0) const;
  /// Full mode-lattice coefficient of one monomial.
  Eigen::VectorXcd coefficient_modes(int mono_idx) const;

  BasicForm apply(Op op) const {
    return BasicForm(*ctx_, ctx_->op(op).apply(v_));
  }
  BasicForm apply(const OperatorMatrix& op) const {
    return BasicForm(*ctx_, op.apply(v_));
  }

  double norm() const { return v_.norm(); }
  BasicForm operator+(const BasicForm& o) const {
    return BasicForm(*ctx_, v_ + o.v_);
  }
  BasicForm operator-(const BasicForm& o) const {
    return BasicForm(*ctx_, v_ - o.v_);
  }
  BasicForm operator*(cd z) const { return BasicForm(*ctx_, v_ * z); }

 private:
  const BasicComplex* ctx_;
  Eigen::VectorXcd v_;
};

// Generator operations in form language.
BasicForm d_B(const BasicForm& phi);
BasicForm d_T(const BasicForm& phi);
BasicForm d_kappa(const BasicForm& phi);
enum class KappaPart { full, p10, p01 };
BasicForm wedge_kappa(const BasicForm& phi, KappaPart part);
BasicForm contract_H(const BasicForm& phi, KappaPart part);
BasicForm bar_star(const BasicForm& phi);
BasicForm bidegree_project(const BasicForm& phi, int r, int s);
BasicForm lefschetz(const BasicForm& phi);
BasicForm contract_omega(const BasicForm& phi);
BasicForm covariant_derivative(const BasicForm& phi, Dir dir, int factor);
/// Componentwise conjugation (conjugate linear, swaps bidegrees).
BasicForm conjugate(const BasicForm& phi);

/// Global L2 inner product (Parseval over all monomials and modes).
cd inner(const BasicForm& a, const BasicForm& b);
/// Pointwise Hermitian inner product <a,b>(t) as a function on the torus,
/// returned as mode-lattice coefficients.
Eigen::VectorXcd pointwise_inner(const BasicForm& a, const BasicForm& b);

}  // namespace tbc

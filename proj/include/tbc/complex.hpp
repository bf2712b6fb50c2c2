#pragma once

#include <map>
#include <memory>
#include <string>

#include "tbc/model.hpp"
#include "tbc/operator.hpp"

namespace tbc {

/// Named operators of the calculus.  `*_adj` operators are conjugate
/// transposes of their partners; the formula routes are cross-checked by the
/// identity suite.
enum class Op {
  d_b,
  d_t,
  d_k,
  delta_b,
  delta_t,
  delta_k,
  partial_b,
  partialbar_b,
  partial_t,
  partialbar_t,
  partial_k,
  partialbar_k,
  partial_b_adj,
  partialbar_b_adj,
  partial_t_adj,
  partialbar_t_adj,
  partial_k_adj,
  partialbar_k_adj,
  laplace_b,
  laplace_t,
  laplace_k,
  box_b,
  boxbar_b,
  box_t,
  boxbar_t,
  box_k,
  boxbar_k,
  lefschetz,
  lefschetz_adj,
  star,
  phase_c,
  phase_c_inv,
  d_k_c,
  delta_k_c,
  laplace_k_c,
  wedge_kappa,
  wedge_kappa_10,
  wedge_kappa_01,
  contract_kappa,
  contract_h10,
  contract_h01,
  nabla_kappa,
  nabla_h10,
  nabla_h01,
  lie_kappa,
  lie_correction,
  mult_kappa_sq,
  rough_tr,
  rough_t,
  rough_tbar,
  curvature_f,
};

const char* op_name(Op op);
bool op_from_string(const std::string& name, Op& out);
/// Operators that are Hermitian by construction (spectrum / kernel targets).
bool op_hermitian(Op op);

/// Frame directions for covariant derivatives on one factor.
enum class Dir { S, T, V, Vbar };

/// The truncated basic complex of a model at Fourier order N: frame algebra,
/// mode lattice, realized operator catalog (memoized), and slot bookkeeping.
/// All matrices share one representation: per-mode blocks when the model has
/// constant h' in every factor, one coupled matrix otherwise.
class BasicComplex {
 public:
  BasicComplex(const ModelSpec& model, int N);

  const ModelSpec& model() const { return model_; }
  const FrameGeometry& geom() const { return geom_; }
  const FrameBasis& basis() const { return *basis_; }
  const ModeGrid& grid() const { return grid_; }
  int n() const { return model_.n(); }
  int codim() const { return model_.codim(); }
  int N() const { return grid_.N; }
  bool per_mode() const { return per_mode_; }
  /// Mode margin excluded from residual comparisons on coupled models, where
  /// convolution truncation makes composite and direct coefficient products
  /// differ near the lattice boundary.
  int interior_margin() const;
  /// 1e-10 for per-mode models, 1e-8 for coupled ones, unless overridden.
  double identity_tol() const {
    if (identity_tol_override_ > 0) return identity_tol_override_;
    return per_mode_ ? 1e-10 : 1e-8;
  }
  void set_identity_tol(double tol) { identity_tol_override_ = tol; }

  const OperatorMatrix& op(Op which) const;
  /// Covariant derivative along a frame direction of one factor.
  const OperatorMatrix& cov(Dir dir, int factor) const;
  /// Multiplication by a coefficient function of one factor variable.
  OperatorMatrix mult(int factor, const FourierScalar& f) const;
  /// Curvature action R(V_j, Vbar_j) on forms (derivation extension).
  const OperatorMatrix& curvature_vvbar(int factor) const;

  OperatorMatrix realize(const std::vector<OpTerm>& terms) const;
  OperatorMatrix identity_op() const;

  /// Coupled-layout coefficient indices of a bidegree / degree slot.
  std::vector<long> slot_indices(int r, int s) const;
  std::vector<long> slot_indices_degree(int d) const;

  /// Componentwise conjugation of a coupled coefficient vector
  /// (conjugate-linear; sends mode k to -k).
  Eigen::VectorXcd conjugate_vector(const Eigen::VectorXcd& v) const;

 private:
  ModelSpec model_;
  FrameGeometry geom_;
  std::shared_ptr<FrameBasis> basis_;
  ModeGrid grid_;
  bool per_mode_;
  double identity_tol_override_ = 0;
  mutable std::map<int, OperatorMatrix> cache_;
  mutable std::map<std::pair<int, int>, OperatorMatrix> cov_cache_;
  mutable std::map<int, OperatorMatrix> curv_cache_;

  OperatorMatrix build(Op which) const;
  OperatorMatrix build_cov(Dir dir, int factor) const;
};

}  // namespace tbc

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tbc/fourier.hpp"
#include "tbc/frame.hpp"

namespace tbc {

/// Truncated Fourier mode lattice: one circle variable per factor, modes
/// k_j in [-N, N].  Flat index runs factor 0 fastest.
struct ModeGrid {
  int n = 1;
  int N = 1;

  long per_factor() const { return 2L * N + 1; }
  long count() const {
    long m = 1;
    for (int j = 0; j < n; ++j) m *= per_factor();
    return m;
  }
  std::vector<int> unflatten(long idx) const {
    std::vector<int> k(n);
    for (int j = 0; j < n; ++j) {
      k[j] = int(idx % per_factor()) - N;
      idx /= per_factor();
    }
    return k;
  }
  long flatten(const std::vector<int>& k) const {
    long idx = 0;
    for (int j = n - 1; j >= 0; --j) idx = idx * per_factor() + (k[j] + N);
    return idx;
  }
  bool interior(long idx, int margin) const {
    auto k = unflatten(idx);
    for (int j = 0; j < n; ++j)
      if (std::abs(k[j]) > N - margin) return false;
    return true;
  }
};

/// One summand of an operator before realization: a constant frame matrix
/// tensored with a coefficient action on one factor variable.  The
/// coefficient action applies the t_j-derivative first (if `deriv`) and then
/// multiplies by `func` (if present).
struct OpTerm {
  Eigen::MatrixXcd frame;
  int factor = -1;
  bool has_func = false;
  FourierScalar func;
  bool deriv = false;
};

/// A graded linear operator on the truncated basic complex, stored either as
/// one complex block per mode (valid when every coefficient function is
/// constant) or as a single coupled matrix over all modes.  Coupled storage
/// is monomial-major: flat index = monomial * mode_count + mode.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  static OperatorMatrix zero(const FrameBasis& basis, const ModeGrid& grid,
                             bool per_mode);
  static OperatorMatrix realize(const FrameBasis& basis, const ModeGrid& grid,
                                bool per_mode,
                                const std::vector<OpTerm>& terms);

  bool per_mode() const { return per_mode_; }
  const ModeGrid& grid() const { return grid_; }
  int frame_dim() const { return frame_dim_; }
  long full_dim() const { return frame_dim_ * grid_.count(); }

  const Eigen::MatrixXcd& block(long mode) const { return blocks_[mode]; }
  const Eigen::MatrixXcd& coupled() const { return full_; }

  OperatorMatrix adjoint() const;
  /// this o other
  OperatorMatrix compose(const OperatorMatrix& other) const;
  OperatorMatrix scaled(cd z) const;
  OperatorMatrix add(const OperatorMatrix& other, cd w_this = 1.0,
                     cd w_other = 1.0) const;
  OperatorMatrix commutator(const OperatorMatrix& other) const;
  OperatorMatrix anticommutator(const OperatorMatrix& other) const;

  /// Conjugate the operator by a constant frame matrix: F * this * G.
  OperatorMatrix frame_sandwich(const Eigen::MatrixXcd& F,
                                const Eigen::MatrixXcd& G) const;
  /// Keep only matrix entries whose bidegree shift equals (dr, ds):
  /// sum_{r,s} P_{r+dr, s+ds} A P_{r,s}.
  OperatorMatrix bidegree_component(const FrameBasis& basis, int dr,
                                    int ds) const;

  /// Embed per-mode blocks into a single coupled matrix.
  OperatorMatrix to_coupled() const;

  /// Apply to a coupled coefficient vector (monomial-major).
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;

  /// max_k ||A_k||_F over blocks (or the Frobenius norm of the coupled
  /// matrix restricted to interior modes).
  double norm(int interior_margin = 0) const;
  /// Relative deviation from `other`: interior-restricted Frobenius distance
  /// normalized by max(1, this->norm()).
  double residual_vs(const OperatorMatrix& other, int interior_margin = 0)
      const;
  double hermiticity_defect() const;

 private:
  bool per_mode_ = true;
  int frame_dim_ = 0;
  ModeGrid grid_;
  std::vector<Eigen::MatrixXcd> blocks_;
  Eigen::MatrixXcd full_;

  Eigen::MatrixXcd interior_mask(int margin) const;
};

}  // namespace tbc

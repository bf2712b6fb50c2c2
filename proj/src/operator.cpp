#include "tbc/operator.hpp"

#include <numbers>
#include <stdexcept>

namespace tbc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

OperatorMatrix OperatorMatrix::zero(const FrameBasis& basis,
                                    const ModeGrid& grid, bool per_mode) {
  OperatorMatrix op;
  op.per_mode_ = per_mode;
  op.frame_dim_ = basis.dim();
  op.grid_ = grid;
  if (per_mode) {
    op.blocks_.assign(grid.count(),
                      Eigen::MatrixXcd::Zero(basis.dim(), basis.dim()));
  } else {
    long d = basis.dim() * grid.count();
    op.full_ = Eigen::MatrixXcd::Zero(d, d);
  }
  return op;
}

OperatorMatrix OperatorMatrix::realize(const FrameBasis& basis,
                                       const ModeGrid& grid, bool per_mode,
                                       const std::vector<OpTerm>& terms) {
  OperatorMatrix op = zero(basis, grid, per_mode);
  const long M = grid.count();
  const int D = basis.dim();

  if (per_mode) {
    for (long m = 0; m < M; ++m) {
      auto k = grid.unflatten(m);
      for (const auto& t : terms) {
        cd w(1, 0);
        if (t.deriv) {
          if (t.factor < 0) throw std::logic_error("deriv needs a factor");
          w *= cd(0, kTwoPi * k[t.factor]);
        }
        if (t.has_func) {
          if (!t.func.is_constant())
            throw std::logic_error(
                "per-mode realization requires constant coefficients");
          w *= t.func.mean();
        }
        op.blocks_[m] += w * t.frame;
      }
    }
    return op;
  }

  for (const auto& t : terms) {
    // Mode-coupling matrix of the coefficient action on the mode lattice.
    Eigen::MatrixXcd conv = Eigen::MatrixXcd::Zero(M, M);
    for (long col = 0; col < M; ++col) {
      auto k = grid.unflatten(col);
      cd d(1, 0);
      if (t.deriv) d = cd(0, kTwoPi * k[t.factor]);
      if (!t.has_func) {
        conv(col, col) += d;
        continue;
      }
      int bw = t.func.order();
      for (int delta = -bw; delta <= bw; ++delta) {
        cd f = t.func.coeff(delta);
        if (f == cd(0, 0)) continue;
        int kj = k[t.factor] + delta;
        if (kj < -grid.N || kj > grid.N) continue;
        auto krow = k;
        krow[t.factor] = kj;
        conv(grid.flatten(krow), col) += f * d;
      }
    }
    for (int mp = 0; mp < D; ++mp)
      for (int mc = 0; mc < D; ++mc) {
        cd f = t.frame(mp, mc);
        if (f == cd(0, 0)) continue;
        op.full_.block(mp * M, mc * M, M, M) += f * conv;
      }
  }
  return op;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix out = *this;
  if (per_mode_) {
    for (auto& b : out.blocks_) b = b.adjoint().eval();
  } else {
    out.full_ = full_.adjoint();
  }
  return out;
}

OperatorMatrix OperatorMatrix::compose(const OperatorMatrix& other) const {
  if (per_mode_ != other.per_mode_)
    throw std::logic_error("compose: mixed representations");
  OperatorMatrix out = *this;
  if (per_mode_) {
    for (long m = 0; m < long(blocks_.size()); ++m)
      out.blocks_[m] = blocks_[m] * other.blocks_[m];
  } else {
    out.full_ = full_ * other.full_;
  }
  return out;
}

OperatorMatrix OperatorMatrix::scaled(cd z) const {
  OperatorMatrix out = *this;
  if (per_mode_) {
    for (auto& b : out.blocks_) b *= z;
  } else {
    out.full_ *= z;
  }
  return out;
}

OperatorMatrix OperatorMatrix::add(const OperatorMatrix& other, cd w_this,
                                   cd w_other) const {
  if (per_mode_ != other.per_mode_)
    throw std::logic_error("add: mixed representations");
  OperatorMatrix out = *this;
  if (per_mode_) {
    for (long m = 0; m < long(blocks_.size()); ++m)
      out.blocks_[m] = w_this * blocks_[m] + w_other * other.blocks_[m];
  } else {
    out.full_ = w_this * full_ + w_other * other.full_;
  }
  return out;
}

OperatorMatrix OperatorMatrix::commutator(const OperatorMatrix& other) const {
  return compose(other).add(other.compose(*this), 1.0, -1.0);
}

OperatorMatrix OperatorMatrix::anticommutator(
    const OperatorMatrix& other) const {
  return compose(other).add(other.compose(*this), 1.0, 1.0);
}

OperatorMatrix OperatorMatrix::frame_sandwich(const Eigen::MatrixXcd& F,
                                              const Eigen::MatrixXcd& G)
    const {
  OperatorMatrix out = *this;
  if (per_mode_) {
    for (auto& b : out.blocks_) b = F * b * G;
    return out;
  }
  const long M = grid_.count();
  const int D = frame_dim_;
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(full_.rows(), full_.cols());
  // F and G act on the monomial slot only.
  Eigen::MatrixXcd tmp = Eigen::MatrixXcd::Zero(full_.rows(), full_.cols());
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      if (G(j, i) != cd(0, 0))
        tmp.middleCols(i * M, M) += G(j, i) * full_.middleCols(j * M, M);
    }
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      if (F(i, j) != cd(0, 0))
        big.middleRows(i * M, M) += F(i, j) * tmp.middleRows(j * M, M);
    }
  out.full_ = std::move(big);
  return out;
}

OperatorMatrix OperatorMatrix::bidegree_component(const FrameBasis& basis,
                                                  int dr, int ds) const {
  OperatorMatrix out = *this;
  auto keep = [&](int row_mono, int col_mono) {
    auto [r, s] = basis.bidegree(col_mono);
    auto [rp, sp] = basis.bidegree(row_mono);
    return rp == r + dr && sp == s + ds;
  };
  if (per_mode_) {
    for (auto& b : out.blocks_)
      for (int i = 0; i < frame_dim_; ++i)
        for (int j = 0; j < frame_dim_; ++j)
          if (!keep(i, j)) b(i, j) = 0.0;
    return out;
  }
  const long M = grid_.count();
  for (int i = 0; i < frame_dim_; ++i)
    for (int j = 0; j < frame_dim_; ++j)
      if (!keep(i, j))
        out.full_.block(i * M, j * M, M, M).setZero();
  return out;
}

OperatorMatrix OperatorMatrix::to_coupled() const {
  if (!per_mode_) return *this;
  OperatorMatrix out;
  out.per_mode_ = false;
  out.frame_dim_ = frame_dim_;
  out.grid_ = grid_;
  const long M = grid_.count();
  long d = frame_dim_ * M;
  out.full_ = Eigen::MatrixXcd::Zero(d, d);
  for (long m = 0; m < M; ++m)
    for (int i = 0; i < frame_dim_; ++i)
      for (int j = 0; j < frame_dim_; ++j)
        out.full_(i * M + m, j * M + m) = blocks_[m](i, j);
  return out;
}

Eigen::VectorXcd OperatorMatrix::apply(const Eigen::VectorXcd& v) const {
  const long M = grid_.count();
  if (v.size() != full_dim())
    throw std::invalid_argument("apply: vector length mismatch");
  if (!per_mode_) return full_ * v;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (long m = 0; m < M; ++m) {
    Eigen::VectorXcd slice(frame_dim_);
    for (int i = 0; i < frame_dim_; ++i) slice[i] = v[i * M + m];
    Eigen::VectorXcd r = blocks_[m] * slice;
    for (int i = 0; i < frame_dim_; ++i) out[i * M + m] = r[i];
  }
  return out;
}

Eigen::MatrixXcd OperatorMatrix::interior_mask(int margin) const {
  const long M = grid_.count();
  Eigen::MatrixXcd mask = Eigen::MatrixXcd::Zero(full_dim(), full_dim());
  for (long m = 0; m < M; ++m) {
    if (!grid_.interior(m, margin)) continue;
    for (int i = 0; i < frame_dim_; ++i) mask(i * M + m, i * M + m) = 1.0;
  }
  return mask;
}

double OperatorMatrix::norm(int interior_margin) const {
  if (per_mode_) {
    double nrm = 0;
    for (const auto& b : blocks_) nrm = std::max(nrm, b.norm());
    return nrm;
  }
  if (interior_margin <= 0) return full_.norm();
  Eigen::MatrixXcd P = interior_mask(interior_margin);
  return (P * full_ * P).norm();
}

double OperatorMatrix::residual_vs(const OperatorMatrix& other,
                                   int interior_margin) const {
  if (per_mode_ != other.per_mode_)
    return to_coupled().residual_vs(other.to_coupled(), interior_margin);
  double scale = std::max(1.0, norm(interior_margin));
  if (per_mode_) {
    double d = 0;
    for (long m = 0; m < long(blocks_.size()); ++m)
      d = std::max(d, (blocks_[m] - other.blocks_[m]).norm());
    return d / scale;
  }
  if (interior_margin <= 0) return (full_ - other.full_).norm() / scale;
  Eigen::MatrixXcd P = interior_mask(interior_margin);
  return (P * (full_ - other.full_) * P).norm() / scale;
}

double OperatorMatrix::hermiticity_defect() const {
  return residual_vs(adjoint());
}

}  // namespace tbc

#include "tbc/harmonic.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <numbers>

namespace tbc {

namespace {
constexpr double kHermTol = 1e-9;
}  // namespace

std::string Slot::str() const {
  if (degree >= 0) return "degree " + std::to_string(degree);
  if (r >= 0)
    return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
  return "all";
}

std::vector<int> slot_monomials(const BasicComplex& ctx, const Slot& slot) {
  if (slot.degree >= 0) return ctx.basis().degree_indices(slot.degree);
  if (slot.r >= 0) return ctx.basis().bidegree_indices(slot.r, slot.s);
  std::vector<int> all(ctx.basis().dim());
  for (int i = 0; i < ctx.basis().dim(); ++i) all[i] = i;
  return all;
}

KernelResult kernel_basis(const BasicComplex& ctx, const OperatorMatrix& A,
                          const Slot& slot, double rel_tol) {
  if (A.hermiticity_defect() > kHermTol)
    throw std::invalid_argument("kernel_basis: operator is not Hermitian");
  auto monos = slot_monomials(ctx, slot);
  const long M = ctx.grid().count();
  const long full = ctx.basis().dim() * M;
  KernelResult out;

  if (monos.empty()) {
    out.basis = Eigen::MatrixXcd::Zero(full, 0);
    return out;
  }

  if (A.per_mode()) {
    // Two passes: eigenvalues first for the global scale, then thresholding.
    std::vector<Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>> solvers(
        M);
    double lambda_max = 0;
    for (long m = 0; m < M; ++m) {
      Eigen::MatrixXcd sub(monos.size(), monos.size());
      for (size_t i = 0; i < monos.size(); ++i)
        for (size_t j = 0; j < monos.size(); ++j)
          sub(i, j) = A.block(m)(monos[i], monos[j]);
      solvers[m].compute(sub);
      lambda_max =
          std::max(lambda_max, solvers[m].eigenvalues().cwiseAbs().maxCoeff());
    }
    out.lambda_max = lambda_max;
    out.threshold = rel_tol * std::max(1.0, lambda_max);
    std::vector<Eigen::VectorXcd> vecs;
    for (long m = 0; m < M; ++m) {
      const auto& ev = solvers[m].eigenvalues();
      int local = 0;
      for (int i = 0; i < ev.size(); ++i) {
        if (ev[i] < out.threshold) {
          Eigen::VectorXcd v = Eigen::VectorXcd::Zero(full);
          for (size_t j = 0; j < monos.size(); ++j)
            v[monos[j] * M + m] = solvers[m].eigenvectors()(j, i);
          vecs.push_back(std::move(v));
          ++local;
        } else {
          out.gap = std::min(out.gap, ev[i]);
        }
      }
      if (local > 0) {
        TableRow row;
        row.mode = ctx.grid().unflatten(m);
        row.r = slot.degree >= 0 ? slot.degree : slot.r;
        row.s = slot.degree >= 0 ? -1 : slot.s;
        row.dim = local;
        out.contributions.push_back(std::move(row));
      }
    }
    out.dim = int(vecs.size());
    out.basis = Eigen::MatrixXcd(full, out.dim);
    for (int i = 0; i < out.dim; ++i) out.basis.col(i) = vecs[i];
    return out;
  }

  std::vector<long> idx;
  for (int mono : monos)
    for (long m = 0; m < M; ++m) idx.push_back(mono * M + m);
  Eigen::MatrixXcd sub(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j)
      sub(i, j) = A.coupled()(idx[i], idx[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sub);
  out.lambda_max = es.eigenvalues().cwiseAbs().maxCoeff();
  out.threshold = rel_tol * std::max(1.0, out.lambda_max);
  std::vector<int> keep;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()[i] < out.threshold)
      keep.push_back(i);
    else
      out.gap = std::min(out.gap, es.eigenvalues()[i]);
  }
  out.dim = int(keep.size());
  out.basis = Eigen::MatrixXcd::Zero(full, out.dim);
  for (int c = 0; c < out.dim; ++c)
    for (size_t i = 0; i < idx.size(); ++i)
      out.basis(idx[i], c) = es.eigenvectors()(i, keep[c]);
  if (out.dim > 0) {
    TableRow row;
    row.r = slot.degree >= 0 ? slot.degree : slot.r;
    row.s = slot.degree >= 0 ? -1 : slot.s;
    row.dim = out.dim;
    out.contributions.push_back(std::move(row));
  }
  return out;
}

std::vector<double> spectrum(const BasicComplex& ctx, Op op, const Slot& slot,
                             int count) {
  if (!op_hermitian(op))
    throw std::invalid_argument("spectrum: operator is not Hermitian");
  const OperatorMatrix& A = ctx.op(op);
  auto monos = slot_monomials(ctx, slot);
  std::vector<double> all;
  if (A.per_mode()) {
    for (long m = 0; m < ctx.grid().count(); ++m) {
      Eigen::MatrixXcd sub(monos.size(), monos.size());
      for (size_t i = 0; i < monos.size(); ++i)
        for (size_t j = 0; j < monos.size(); ++j)
          sub(i, j) = A.block(m)(monos[i], monos[j]);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sub);
      for (int i = 0; i < es.eigenvalues().size(); ++i)
        all.push_back(es.eigenvalues()[i]);
    }
  } else {
    const long M = ctx.grid().count();
    std::vector<long> idx;
    for (int mono : monos)
      for (long m = 0; m < M; ++m) idx.push_back(mono * M + m);
    Eigen::MatrixXcd sub(idx.size(), idx.size());
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j)
        sub(i, j) = A.coupled()(idx[i], idx[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sub);
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      all.push_back(es.eigenvalues()[i]);
  }
  std::sort(all.begin(), all.end());
  if (int(all.size()) > count) all.resize(count);
  return all;
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::B:
      return "B";
    case Flavor::T:
      return "T";
    case Flavor::kappa:
      return "kappa";
  }
  return "?";
}

bool flavor_from_string(const std::string& s, Flavor& out) {
  if (s == "B" || s == "b") {
    out = Flavor::B;
    return true;
  }
  if (s == "T" || s == "t") {
    out = Flavor::T;
    return true;
  }
  if (s == "kappa" || s == "k") {
    out = Flavor::kappa;
    return true;
  }
  return false;
}

Op flavor_laplacian(Flavor f) {
  switch (f) {
    case Flavor::B:
      return Op::laplace_b;
    case Flavor::T:
      return Op::laplace_t;
    case Flavor::kappa:
      return Op::laplace_k;
  }
  throw std::logic_error("flavor");
}

Op flavor_box(Flavor f) {
  switch (f) {
    case Flavor::B:
      return Op::boxbar_b;
    case Flavor::T:
      return Op::boxbar_t;
    case Flavor::kappa:
      return Op::boxbar_k;
  }
  throw std::logic_error("flavor");
}

Op flavor_differential(Flavor f) {
  switch (f) {
    case Flavor::B:
      return Op::d_b;
    case Flavor::T:
      return Op::d_t;
    case Flavor::kappa:
      return Op::d_k;
  }
  throw std::logic_error("flavor");
}

Op flavor_dolbeault(Flavor f) {
  switch (f) {
    case Flavor::B:
      return Op::partialbar_b;
    case Flavor::T:
      return Op::partialbar_t;
    case Flavor::kappa:
      return Op::partialbar_k;
  }
  throw std::logic_error("flavor");
}

int mode_cutoff_bound(const BasicComplex& ctx, Op op) {
  if (!ctx.per_mode()) return -1;
  const OperatorMatrix& A = ctx.op(op);
  const ModeGrid& g = ctx.grid();
  const int n = ctx.n();
  if (g.N < 2) return -1;
  // Blocks of the per-mode Laplacians are quadratic in each mode index with
  // no cross terms: B(k) = sum_j (Q_j k_j^2 + L_j k_j) + A0.  Recover the
  // pieces by finite differencing and refuse the bound if a probe mode
  // disagrees with the reconstruction.
  std::vector<int> zero(n, 0);
  Eigen::MatrixXcd A0 = A.block(g.flatten(zero));
  std::vector<Eigen::MatrixXcd> Q(n), Lin(n);
  for (int j = 0; j < n; ++j) {
    auto kp = zero, km = zero;
    kp[j] = 1;
    km[j] = -1;
    Eigen::MatrixXcd Bp = A.block(g.flatten(kp));
    Eigen::MatrixXcd Bm = A.block(g.flatten(km));
    Q[j] = 0.5 * (Bp + Bm) - A0;
    Lin[j] = 0.5 * (Bp - Bm);
  }
  // Probe reconstruction at k_j = 2 (and a mixed mode for n > 1).
  auto reconstruct = [&](const std::vector<int>& k) {
    Eigen::MatrixXcd B = A0;
    for (int j = 0; j < n; ++j)
      B += double(k[j]) * double(k[j]) * Q[j] + double(k[j]) * Lin[j];
    return B;
  };
  {
    auto k2 = zero;
    k2[0] = 2;
    if ((A.block(g.flatten(k2)) - reconstruct(k2)).norm() > 1e-8) return -1;
    if (n > 1) {
      auto km = zero;
      km[0] = 1;
      km[1] = -2;
      if ((A.block(g.flatten(km)) - reconstruct(km)).norm() > 1e-8) return -1;
    }
  }
  int cutoff = 1;
  for (int j = 0; j < n; ++j) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Q[j]);
    double w = es.eigenvalues().minCoeff();
    if (w <= 0) return -1;
    double b = Lin[j].norm();
    double z = A0.norm() + 1.0;
    // Smallest K with w K^2 - b K - z > 0.
    double K = (b + std::sqrt(b * b + 4 * w * z)) / (2 * w);
    cutoff = std::max(cutoff, int(std::floor(K)) + 1);
  }
  return cutoff;
}

CohomologyTable cohomology(const BasicComplex& ctx, Flavor flavor,
                           double rel_tol) {
  CohomologyTable t;
  t.model_id = ctx.model().id();
  t.flavor = flavor_name(flavor);
  t.N = ctx.N();
  t.q = ctx.codim();
  t.n = ctx.n();
  t.kernel_tol = rel_tol;

  const OperatorMatrix& lap = ctx.op(flavor_laplacian(flavor));
  const OperatorMatrix& box = ctx.op(flavor_box(flavor));
  t.mode_cutoff = mode_cutoff_bound(ctx, flavor_laplacian(flavor));

  t.graded.assign(t.q + 1, 0);
  for (int d = 0; d <= t.q; ++d) {
    auto k = kernel_basis(ctx, lap, Slot::of_degree(d), rel_tol);
    t.graded[d] = k.dim;
    t.spectral_gap = std::min(t.spectral_gap, k.gap);
    for (auto& row : k.contributions) t.contributions.push_back(row);
  }
  t.bigraded.assign(t.n + 1, std::vector<int>(t.n + 1, 0));
  for (int r = 0; r <= t.n; ++r)
    for (int s = 0; s <= t.n; ++s) {
      auto k = kernel_basis(ctx, box, Slot::bidegree(r, s), rel_tol);
      t.bigraded[r][s] = k.dim;
      t.spectral_gap = std::min(t.spectral_gap, k.gap);
      for (auto& row : k.contributions) t.contributions.push_back(row);
    }

  for (int l = 0; l <= t.q; ++l) {
    int sum = 0;
    for (int r = 0; r <= t.n; ++r) {
      int s = l - r;
      if (s >= 0 && s <= t.n) sum += t.bigraded[r][s];
    }
    if (sum != t.graded[l]) t.hodge_sum_ok = false;
  }
  return t;
}

namespace {

// Restriction of one block to monomial index sets (rows, cols).
Eigen::MatrixXcd restrict_block(const Eigen::MatrixXcd& B,
                                const std::vector<int>& rows,
                                const std::vector<int>& cols) {
  Eigen::MatrixXcd sub(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub(i, j) = B(rows[i], cols[j]);
  return sub;
}

// Coupled-matrix restriction to slot index lists.
Eigen::MatrixXcd restrict_coupled(const OperatorMatrix& A, long M,
                                  const std::vector<int>& rows,
                                  const std::vector<int>& cols) {
  Eigen::MatrixXcd sub(rows.size() * M, cols.size() * M);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      sub.block(i * M, j * M, M, M) =
          A.coupled().block(rows[i] * M, cols[j] * M, M, M);
  return sub;
}

struct SplitCounts {
  long slot = 0;
  long harm = 0, rank_in = 0, rank_out = 0;
  double ortho = 0;  // largest pairing between the three pieces
};

// dim(slot) = harmonics + image of D from below + image of D^dagger from
// above, verified blockwise.
SplitCounts split_counts(const BasicComplex& ctx, const OperatorMatrix& lap,
                         const OperatorMatrix& dop,
                         const std::vector<int>& below,
                         const std::vector<int>& here, double rel_tol,
                         double threshold) {
  SplitCounts out;
  const long M = ctx.grid().count();
  out.slot = long(here.size()) * M;
  const int D = ctx.basis().dim();
  std::vector<int> all(D);
  for (int i = 0; i < D; ++i) all[i] = i;

  auto handle = [&](const Eigen::MatrixXcd& lap_b,
                    const Eigen::MatrixXcd& d_in,
                    const Eigen::MatrixXcd& d_out) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(lap_b);
    std::vector<int> keep;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()[i] < threshold) keep.push_back(i);
    Eigen::MatrixXcd H(lap_b.rows(), keep.size());
    for (size_t i = 0; i < keep.size(); ++i)
      H.col(i) = es.eigenvectors().col(keep[i]);
    Eigen::MatrixXcd U = range_basis(d_in, rel_tol);
    Eigen::MatrixXcd W = range_basis(d_out.adjoint(), rel_tol);
    out.harm += H.cols();
    out.rank_in += U.cols();
    out.rank_out += W.cols();
    if (H.cols() && U.cols())
      out.ortho = std::max(out.ortho, (H.adjoint() * U).norm());
    if (H.cols() && W.cols())
      out.ortho = std::max(out.ortho, (H.adjoint() * W).norm());
    if (U.cols() && W.cols())
      out.ortho = std::max(out.ortho, (U.adjoint() * W).norm());
  };

  if (lap.per_mode()) {
    for (long m = 0; m < M; ++m)
      handle(restrict_block(lap.block(m), here, here),
             restrict_block(dop.block(m), here, below),
             restrict_block(dop.block(m), all, here));
  } else {
    handle(restrict_coupled(lap, M, here, here),
           restrict_coupled(dop, M, here, below),
           restrict_coupled(dop, M, all, here));
  }
  return out;
}

}  // namespace

CheckReport hodge_decomposition_check(const BasicComplex& ctx, Flavor flavor,
                                      double rel_tol) {
  CheckReport rep;
  rep.suite = "hodge-decomposition";
  rep.model_id = ctx.model().id();
  rep.N = ctx.N();
  rep.representation = ctx.per_mode() ? "per-mode" : "coupled";

  const OperatorMatrix& lap = ctx.op(flavor_laplacian(flavor));
  const OperatorMatrix& dop = ctx.op(flavor_differential(flavor));
  const OperatorMatrix& box = ctx.op(flavor_box(flavor));
  const OperatorMatrix& dbar = ctx.op(flavor_dolbeault(flavor));
  const int q = ctx.codim(), n = ctx.n();
  const std::string fl = flavor_name(flavor);

  double lap_scale = kernel_basis(ctx, lap, Slot::full(), rel_tol).threshold;
  double box_scale = kernel_basis(ctx, box, Slot::full(), rel_tol).threshold;

  for (int d = 0; d <= q; ++d) {
    auto counts = split_counts(
        ctx, lap, dop,
        d > 0 ? ctx.basis().degree_indices(d - 1) : std::vector<int>{},
        ctx.basis().degree_indices(d), rel_tol, lap_scale);
    auto& e = rep.add("flavor " + fl + " degree " + std::to_string(d),
                      "orthogonal-splitting-degree");
    e.expected = std::to_string(counts.slot);
    e.observed = std::to_string(counts.harm) + "+" +
                 std::to_string(counts.rank_in) + "+" +
                 std::to_string(counts.rank_out);
    e.residual = counts.ortho;
    e.tolerance = 1e-8;
    e.pass = (counts.harm + counts.rank_in + counts.rank_out == counts.slot) &&
             counts.ortho <= 1e-8;
  }
  for (int r = 0; r <= n; ++r)
    for (int s = 0; s <= n; ++s) {
      auto counts = split_counts(
          ctx, box, dbar,
          s > 0 ? ctx.basis().bidegree_indices(r, s - 1) : std::vector<int>{},
          ctx.basis().bidegree_indices(r, s), rel_tol, box_scale);
      auto& e = rep.add("flavor " + fl + " bidegree (" + std::to_string(r) +
                            "," + std::to_string(s) + ")",
                        "orthogonal-splitting-bidegree");
      e.expected = std::to_string(counts.slot);
      e.observed = std::to_string(counts.harm) + "+" +
                   std::to_string(counts.rank_in) + "+" +
                   std::to_string(counts.rank_out);
      e.residual = counts.ortho;
      e.tolerance = 1e-8;
      e.pass =
          (counts.harm + counts.rank_in + counts.rank_out == counts.slot) &&
          counts.ortho <= 1e-8;
    }
  return rep;
}

int column_rank(const Eigen::MatrixXcd& A, double rel_tol) {
  if (A.cols() == 0 || A.rows() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  if (smax == 0.0) return 0;
  double tol = std::max(smax * rel_tol, 1e-12);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol) ++r;
  return r;
}

Eigen::MatrixXcd range_basis(const Eigen::MatrixXcd& A, double rel_tol) {
  if (A.cols() == 0) return Eigen::MatrixXcd::Zero(A.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  double tol = std::max(smax * rel_tol, 1e-12);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol) ++r;
  return svd.matrixU().leftCols(r);
}

Eigen::MatrixXcd null_basis(const Eigen::MatrixXcd& A, double rel_tol) {
  if (A.cols() == 0) return Eigen::MatrixXcd::Zero(0, 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  double tol = std::max(smax * rel_tol, 1e-12);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol) ++r;
  return svd.matrixV().rightCols(A.cols() - r);
}

double projector_distance(const Eigen::MatrixXcd& U,
                          const Eigen::MatrixXcd& W) {
  // ||P - Q|| = max(||(I-Q)P||, ||(I-P)Q||) for orthogonal projectors; each
  // side needs only the thin residual U - W (W* U), never the ambient-size
  // projectors.
  auto one_sided = [](const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
    if (A.cols() == 0) return 0.0;
    Eigen::MatrixXcd R = A;
    if (B.cols() > 0) R -= B * (B.adjoint() * A);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(R);
    return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  };
  return std::max(one_sided(U, W), one_sided(W, U));
}

}  // namespace tbc

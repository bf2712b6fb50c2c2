#pragma once

#include "tbc/complex.hpp"
#include "tbc/report.hpp"

namespace tbc {

/// Selects a piece of the complex: a bidegree slot, a total-degree slot, or
/// everything.
struct Slot {
  int r = -1, s = -1, degree = -1;

  static Slot bidegree(int r, int s) { return Slot{r, s, -1}; }
  static Slot of_degree(int d) { return Slot{-1, -1, d}; }
  static Slot full() { return Slot{}; }
  bool is_full() const { return r < 0 && degree < 0; }
  std::string str() const;
};

/// Monomial indices of a slot.
std::vector<int> slot_monomials(const BasicComplex& ctx, const Slot& slot);

/// Orthonormal kernel of a Hermitian positive semidefinite operator restricted
/// to a slot.  Basis columns are embedded in full coupled coordinates.
struct KernelResult {
  int dim = 0;
  Eigen::MatrixXcd basis;
  double gap = std::numeric_limits<double>::infinity();
  double lambda_max = 0;
  double threshold = 0;
  std::vector<TableRow> contributions;
};

KernelResult kernel_basis(const BasicComplex& ctx, const OperatorMatrix& A,
                          const Slot& slot, double rel_tol = 1e-9);

/// Lowest `count` eigenvalues of a Hermitian named operator on a slot.
std::vector<double> spectrum(const BasicComplex& ctx, Op op, const Slot& slot,
                             int count);

enum class Flavor { B, T, kappa };
const char* flavor_name(Flavor f);
bool flavor_from_string(const std::string& s, Flavor& out);
/// Graded Laplacian of the flavor (Delta_B / Delta_T / Delta_kappa).
Op flavor_laplacian(Flavor f);
/// Bigraded Dolbeault Laplacian of the flavor (boxbar_*).
Op flavor_box(Flavor f);
/// Graded differential of the flavor (d_B / d_T / d_kappa).
Op flavor_differential(Flavor f);
/// (0,1)-part differential of the flavor (partialbar_*).
Op flavor_dolbeault(Flavor f);

/// Full graded + bigraded dimension table computed as Laplacian kernels.
CohomologyTable cohomology(const BasicComplex& ctx, Flavor flavor,
                           double rel_tol = 1e-9);

/// Per-degree verification that dim(slot) splits as harmonic + image of the
/// differential + image of its adjoint, with mutual orthogonality.
CheckReport hodge_decomposition_check(const BasicComplex& ctx, Flavor flavor,
                                      double rel_tol = 1e-9);

/// Smallest K such that every Laplacian block with a mode index beyond K is
/// provably positive (per-mode models only; -1 when unavailable).  Derived
/// from the per-factor quadratic structure of the blocks.
int mode_cutoff_bound(const BasicComplex& ctx, Op op);

/// Numerical rank of a column family against a relative threshold.
int column_rank(const Eigen::MatrixXcd& A, double rel_tol = 1e-9);
/// Orthonormal column basis (SVD-based) of the range of A.
Eigen::MatrixXcd range_basis(const Eigen::MatrixXcd& A, double rel_tol = 1e-9);
/// Orthonormal null-space basis of A.
Eigen::MatrixXcd null_basis(const Eigen::MatrixXcd& A, double rel_tol = 1e-9);
/// Spectral-norm distance of the orthogonal projectors onto two column spans.
double projector_distance(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& W);

}  // namespace tbc

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "tbc/fourier.hpp"

namespace tbc {

/// Exterior algebra of the complexified transverse coframe in the unit
/// Hermitian basis.  Generators are indexed 0..2n-1: generator j is the
/// (1,0)-form w^{j+1} = (S*_j + i T*_j)/sqrt(2) and generator n+j its
/// conjugate.  A monomial w^A /\ wbar^B is stored canonically with both index
/// sets ascending; the monomial order is (total degree, r, A, B), so every
/// bidegree slot and every degree slot is a contiguous index range.
///
/// The basis is orthonormal for the induced Hermitian metric, so adjoints of
/// frame operators are plain conjugate transposes.
class FrameBasis {
 public:
  struct Monomial {
    uint32_t amask = 0, bmask = 0;
  };

  explicit FrameBasis(int n);

  int n() const { return n_; }
  int dim() const { return dim_; }
  const Monomial& monomial(int idx) const { return monos_[idx]; }
  int index(uint32_t amask, uint32_t bmask) const;
  int degree(int idx) const;
  std::pair<int, int> bidegree(int idx) const;

  /// Contiguous [begin, end) index range of the (r,s) slot; empty if out of
  /// range.
  std::pair<int, int> bidegree_range(int r, int s) const;
  std::pair<int, int> degree_range(int d) const;
  std::vector<int> bidegree_indices(int r, int s) const;
  std::vector<int> degree_indices(int d) const;

  // Generator primitives (gen in 0..2n-1).
  const Eigen::MatrixXcd& wedge_gen(int gen) const { return wedge_[gen]; }
  const Eigen::MatrixXcd& contract_gen(int gen) const {
    return contract_[gen];
  }

  // Real-coframe combinations for factor j (0-based).
  Eigen::MatrixXcd wedge_S(int j) const;
  Eigen::MatrixXcd wedge_T(int j) const;
  Eigen::MatrixXcd contract_S(int j) const;
  Eigen::MatrixXcd contract_T(int j) const;

  /// Bidegree projection P_{r,s} (zero matrix when out of range).
  Eigen::MatrixXcd proj(int r, int s) const;
  Eigen::MatrixXcd proj_degree(int d) const;

  /// Transversal star operator on the unit frame, mapping the (r,s) slot to
  /// (n-s, n-r); defined by  phi /\ star(conj(psi)) = <phi, psi> nu  with
  /// nu the transverse volume form.
  const Eigen::MatrixXcd& star() const { return star_; }

  /// Degree/bidegree phase operators: sum_{r,s} i^{sign (r-s)} P_{r,s}.
  Eigen::MatrixXcd phase_C(bool inverse) const;
  /// sum_d z(d) P_d for a caller-supplied per-degree phase.
  Eigen::MatrixXcd degree_phase(
      const std::vector<std::complex<double>>& z) const;

  /// Wedge by the Kaehler form, L = -i sum_j e(w^j) e(wbar^j), and its
  /// adjoint.
  Eigen::MatrixXcd lefschetz_L() const;
  Eigen::MatrixXcd lefschetz_Lambda() const;

  /// Even derivation extending a generator map G (entry (g', g) = coefficient
  /// of g' in the image of g):  sum_{g,g'} G(g',g) e_{g'} i_g.
  Eigen::MatrixXcd even_derivation(const Eigen::MatrixXcd& genmap) const;

  /// Connection rotation of factor j: w^j -> i w^j, wbar^j -> -i wbar^j,
  /// extended as an even derivation (the h' coefficient lives elsewhere).
  Eigen::MatrixXcd rotation(int j) const;
  /// Curvature rotation of factor j: w^j -> -w^j, wbar^j -> +wbar^j.
  Eigen::MatrixXcd curvature_rotation(int j) const;
  /// Structure part of the exterior derivative for factor j:
  /// both generators of factor j are replaced by -(i/sqrt2) w^j /\ wbar^j
  /// (odd antiderivation; the h' coefficient lives elsewhere).
  Eigen::MatrixXcd d_structure(int j) const;

  /// Componentwise conjugation as a basis map: monomial idx is sent to
  /// perm[idx] with real sign phase[idx].
  void conjugation_map(std::vector<int>& perm,
                       std::vector<double>& phase) const;

  /// Wedge product of two forms given as coefficient vectors over the basis.
  Eigen::VectorXcd wedge_forms(const Eigen::VectorXcd& a,
                               const Eigen::VectorXcd& b) const;

  /// Coefficient of the transverse volume form nu = omega^n / n! on the full
  /// monomial.
  cd volume_coefficient() const { return volume_coeff_; }

 private:
  int n_, dim_;
  std::vector<Monomial> monos_;
  std::vector<int> index_by_mask_;  // (amask << n) | bmask -> idx
  std::vector<Eigen::MatrixXcd> wedge_, contract_;
  Eigen::MatrixXcd star_;
  cd volume_coeff_;

  void build_star();
};

}  // namespace tbc

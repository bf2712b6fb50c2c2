#include "tbc/frame.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tbc {

namespace {

const cd kI(0, 1);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int popcount(uint32_t m) { return std::popcount(m); }

// Ordered generator list of a canonical monomial: A ascending then B
// ascending, encoded as gens 0..n-1 and n..2n-1.
std::vector<int> gen_list(const FrameBasis::Monomial& m, int n) {
  std::vector<int> gens;
  for (int j = 0; j < n; ++j)
    if (m.amask & (1u << j)) gens.push_back(j);
  for (int j = 0; j < n; ++j)
    if (m.bmask & (1u << j)) gens.push_back(n + j);
  return gens;
}

// Sign of sorting the concatenation of two ascending disjoint lists.
int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  int inversions = 0;
  for (int x : a)
    for (int y : b)
      if (y < x) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

FrameBasis::FrameBasis(int n) : n_(n), dim_(1 << (2 * n)) {
  if (n < 1 || n > 8) throw std::invalid_argument("FrameBasis: bad n");

  monos_.reserve(dim_);
  for (uint32_t a = 0; a < (1u << n_); ++a)
    for (uint32_t b = 0; b < (1u << n_); ++b) monos_.push_back({a, b});
  std::sort(monos_.begin(), monos_.end(), [](const Monomial& x,
                                             const Monomial& y) {
    int dx = popcount(x.amask) + popcount(x.bmask);
    int dy = popcount(y.amask) + popcount(y.bmask);
    if (dx != dy) return dx < dy;
    if (popcount(x.amask) != popcount(y.amask))
      return popcount(x.amask) < popcount(y.amask);
    if (x.amask != y.amask) return x.amask < y.amask;
    return x.bmask < y.bmask;
  });
  index_by_mask_.assign(dim_, -1);
  for (int i = 0; i < dim_; ++i)
    index_by_mask_[(monos_[i].amask << n_) | monos_[i].bmask] = i;

  // Generator wedge and contraction matrices.
  wedge_.assign(2 * n_, Eigen::MatrixXcd::Zero(dim_, dim_));
  contract_.assign(2 * n_, Eigen::MatrixXcd::Zero(dim_, dim_));
  for (int g = 0; g < 2 * n_; ++g) {
    bool is_a = g < n_;
    uint32_t bit = 1u << (is_a ? g : g - n_);
    for (int i = 0; i < dim_; ++i) {
      const Monomial& m = monos_[i];
      uint32_t mask = is_a ? m.amask : m.bmask;
      auto gens = gen_list(m, n_);
      if (!(mask & bit)) {
        // wedge: insert generator, sign = (-1)^{#gens before g}
        int before = 0;
        for (int x : gens)
          if (x < g) ++before;
        Monomial t = m;
        (is_a ? t.amask : t.bmask) |= bit;
        int j = index_by_mask_[(t.amask << n_) | t.bmask];
        wedge_[g](j, i) = (before % 2 == 0) ? 1.0 : -1.0;
      } else {
        // contraction: remove generator with the same positional sign
        int before = 0;
        for (int x : gens)
          if (x < g) ++before;
        Monomial t = m;
        (is_a ? t.amask : t.bmask) &= ~bit;
        int j = index_by_mask_[(t.amask << n_) | t.bmask];
        contract_[g](j, i) = (before % 2 == 0) ? 1.0 : -1.0;
      }
    }
  }

  build_star();
}

int FrameBasis::index(uint32_t amask, uint32_t bmask) const {
  return index_by_mask_[(amask << n_) | bmask];
}

int FrameBasis::degree(int idx) const {
  return popcount(monos_[idx].amask) + popcount(monos_[idx].bmask);
}

std::pair<int, int> FrameBasis::bidegree(int idx) const {
  return {popcount(monos_[idx].amask), popcount(monos_[idx].bmask)};
}

std::pair<int, int> FrameBasis::bidegree_range(int r, int s) const {
  if (r < 0 || r > n_ || s < 0 || s > n_) return {0, 0};
  int begin = -1, end = -1;
  for (int i = 0; i < dim_; ++i) {
    auto [ri, si] = bidegree(i);
    if (ri == r && si == s) {
      if (begin < 0) begin = i;
      end = i + 1;
    }
  }
  return begin < 0 ? std::pair<int, int>{0, 0} : std::pair<int, int>{begin,
                                                                     end};
}

std::pair<int, int> FrameBasis::degree_range(int d) const {
  if (d < 0 || d > 2 * n_) return {0, 0};
  int begin = -1, end = -1;
  for (int i = 0; i < dim_; ++i) {
    if (degree(i) == d) {
      if (begin < 0) begin = i;
      end = i + 1;
    }
  }
  return begin < 0 ? std::pair<int, int>{0, 0} : std::pair<int, int>{begin,
                                                                     end};
}

std::vector<int> FrameBasis::bidegree_indices(int r, int s) const {
  auto [b, e] = bidegree_range(r, s);
  std::vector<int> out;
  for (int i = b; i < e; ++i) out.push_back(i);
  return out;
}

std::vector<int> FrameBasis::degree_indices(int d) const {
  auto [b, e] = degree_range(d);
  std::vector<int> out;
  for (int i = b; i < e; ++i) out.push_back(i);
  return out;
}

// S*_j = (w^j + wbar^j)/sqrt2,  T*_j = -(i/sqrt2)(w^j - wbar^j),
// S_j = (V_j + Vbar_j)/sqrt2,   T_j = (i/sqrt2)(V_j - Vbar_j).
Eigen::MatrixXcd FrameBasis::wedge_S(int j) const {
  return kInvSqrt2 * (wedge_[j] + wedge_[n_ + j]);
}
Eigen::MatrixXcd FrameBasis::wedge_T(int j) const {
  return -kI * kInvSqrt2 * (wedge_[j] - wedge_[n_ + j]);
}
Eigen::MatrixXcd FrameBasis::contract_S(int j) const {
  return kInvSqrt2 * (contract_[j] + contract_[n_ + j]);
}
Eigen::MatrixXcd FrameBasis::contract_T(int j) const {
  return kI * kInvSqrt2 * (contract_[j] - contract_[n_ + j]);
}

Eigen::MatrixXcd FrameBasis::proj(int r, int s) const {
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(dim_, dim_);
  auto [b, e] = bidegree_range(r, s);
  for (int i = b; i < e; ++i) P(i, i) = 1.0;
  return P;
}

Eigen::MatrixXcd FrameBasis::proj_degree(int d) const {
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(dim_, dim_);
  auto [b, e] = degree_range(d);
  for (int i = b; i < e; ++i) P(i, i) = 1.0;
  return P;
}

Eigen::MatrixXcd FrameBasis::phase_C(bool inverse) const {
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    auto [r, s] = bidegree(i);
    int e = inverse ? (s - r) : (r - s);
    int em = ((e % 4) + 4) % 4;
    static const cd table[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    P(i, i) = table[em];
  }
  return P;
}

Eigen::MatrixXcd FrameBasis::degree_phase(
    const std::vector<std::complex<double>>& z) const {
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) P(i, i) = z.at(degree(i));
  return P;
}

Eigen::MatrixXcd FrameBasis::lefschetz_L() const {
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int j = 0; j < n_; ++j) L += -kI * wedge_[j] * wedge_[n_ + j];
  return L;
}

Eigen::MatrixXcd FrameBasis::lefschetz_Lambda() const {
  return lefschetz_L().adjoint();
}

Eigen::MatrixXcd FrameBasis::even_derivation(
    const Eigen::MatrixXcd& genmap) const {
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int g = 0; g < 2 * n_; ++g)
    for (int gp = 0; gp < 2 * n_; ++gp)
      if (genmap(gp, g) != cd(0, 0))
        D += genmap(gp, g) * wedge_[gp] * contract_[g];
  return D;
}

Eigen::MatrixXcd FrameBasis::rotation(int j) const {
  return kI * (wedge_[j] * contract_[j] - wedge_[n_ + j] * contract_[n_ + j]);
}

Eigen::MatrixXcd FrameBasis::curvature_rotation(int j) const {
  return -wedge_[j] * contract_[j] + wedge_[n_ + j] * contract_[n_ + j];
}

Eigen::MatrixXcd FrameBasis::d_structure(int j) const {
  // d w^j = d wbar^j = -(i/sqrt2) w^j /\ wbar^j; antiderivation extension is
  // wedge-by-the-replacement composed with the generator contraction.
  Eigen::MatrixXcd repl = -kI * kInvSqrt2 * wedge_[j] * wedge_[n_ + j];
  return repl * (contract_[j] + contract_[n_ + j]);
}

void FrameBasis::conjugation_map(std::vector<int>& perm,
                                 std::vector<double>& phase) const {
  perm.assign(dim_, 0);
  phase.assign(dim_, 1.0);
  for (int i = 0; i < dim_; ++i) {
    const Monomial& m = monos_[i];
    int a = popcount(m.amask), b = popcount(m.bmask);
    perm[i] = index_by_mask_[(m.bmask << n_) | m.amask];
    phase[i] = ((a * b) % 2 == 0) ? 1.0 : -1.0;
  }
}

Eigen::VectorXcd FrameBasis::wedge_forms(const Eigen::VectorXcd& a,
                                         const Eigen::VectorXcd& b) const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == cd(0, 0)) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j] == cd(0, 0)) continue;
      const Monomial& mi = monos_[i];
      const Monomial& mj = monos_[j];
      if ((mi.amask & mj.amask) || (mi.bmask & mj.bmask)) continue;
      auto gi = gen_list(mi, n_);
      auto gj = gen_list(mj, n_);
      int sign = merge_sign(gi, gj);
      int idx =
          index_by_mask_[((mi.amask | mj.amask) << n_) | (mi.bmask | mj.bmask)];
      out[idx] += a[i] * b[j] * double(sign);
    }
  }
  return out;
}

void FrameBasis::build_star() {
  // nu = omega^n / n! computed symbolically.
  Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(dim_);
  for (int j = 0; j < n_; ++j)
    omega[index_by_mask_[((1u << j) << n_) | (1u << j)]] = -kI;
  Eigen::VectorXcd nu = Eigen::VectorXcd::Zero(dim_);
  nu[0] = 1.0;
  double fact = 1.0;
  for (int i = 1; i <= n_; ++i) {
    nu = wedge_forms(nu, omega);
    fact *= i;
  }
  nu /= fact;
  int full = index_by_mask_[(((1u << n_) - 1) << n_) | ((1u << n_) - 1)];
  volume_coeff_ = nu[full];

  // For a canonical monomial chi with masks (A,B) let psi be the canonical
  // monomial (B,A); then chi = (-1)^{|A||B|} conj(psi) and the defining
  // relation  psi /\ star(conj(psi)) = nu  pins star on conj(psi).
  star_ = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    const Monomial& chi = monos_[i];
    int a = popcount(chi.amask), b = popcount(chi.bmask);
    double sgn = ((a * b) % 2 == 0) ? 1.0 : -1.0;
    Monomial psi{chi.bmask, chi.amask};
    Monomial comp{~psi.amask & ((1u << n_) - 1), ~psi.bmask & ((1u << n_) - 1)};
    auto gpsi = gen_list(psi, n_);
    auto gcomp = gen_list(comp, n_);
    int wsign = merge_sign(gpsi, gcomp);
    cd z = volume_coeff_ / double(wsign);
    int j = index_by_mask_[(comp.amask << n_) | comp.bmask];
    star_(j, i) = sgn * z;
  }
}

}  // namespace tbc

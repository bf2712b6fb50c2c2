#include "tbc/complex.hpp"

#include <cmath>
#include <stdexcept>

namespace tbc {

namespace {
const cd kI(0, 1);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

struct OpNameEntry {
  Op op;
  const char* name;
};

const OpNameEntry kOpNames[] = {
    {Op::d_b, "d_B"},
    {Op::d_t, "d_T"},
    {Op::d_k, "d_kappa"},
    {Op::delta_b, "delta_B"},
    {Op::delta_t, "delta_T"},
    {Op::delta_k, "delta_kappa"},
    {Op::partial_b, "partial_B"},
    {Op::partialbar_b, "partialbar_B"},
    {Op::partial_t, "partial_T"},
    {Op::partialbar_t, "partialbar_T"},
    {Op::partial_k, "partial_kappa"},
    {Op::partialbar_k, "partialbar_kappa"},
    {Op::partial_b_adj, "partial_B_star"},
    {Op::partialbar_b_adj, "partialbar_B_star"},
    {Op::partial_t_adj, "partial_T_star"},
    {Op::partialbar_t_adj, "partialbar_T_star"},
    {Op::partial_k_adj, "partial_kappa_star"},
    {Op::partialbar_k_adj, "partialbar_kappa_star"},
    {Op::laplace_b, "Delta_B"},
    {Op::laplace_t, "Delta_T"},
    {Op::laplace_k, "Delta_kappa"},
    {Op::box_b, "box_B"},
    {Op::boxbar_b, "boxbar_B"},
    {Op::box_t, "box_T"},
    {Op::boxbar_t, "boxbar_T"},
    {Op::box_k, "box_kappa"},
    {Op::boxbar_k, "boxbar_kappa"},
    {Op::lefschetz, "L"},
    {Op::lefschetz_adj, "Lambda"},
    {Op::star, "bar_star"},
    {Op::phase_c, "C"},
    {Op::phase_c_inv, "C_inv"},
    {Op::d_k_c, "d_kappa_c"},
    {Op::delta_k_c, "delta_kappa_c"},
    {Op::laplace_k_c, "Delta_kappa_c"},
    {Op::wedge_kappa, "wedge_kappa"},
    {Op::wedge_kappa_10, "wedge_kappa_10"},
    {Op::wedge_kappa_01, "wedge_kappa_01"},
    {Op::contract_kappa, "contract_kappa"},
    {Op::contract_h10, "contract_H10"},
    {Op::contract_h01, "contract_H01"},
    {Op::nabla_kappa, "nabla_kappa"},
    {Op::nabla_h10, "nabla_H10"},
    {Op::nabla_h01, "nabla_H01"},
    {Op::lie_kappa, "lie_kappa"},
    {Op::lie_correction, "lie_correction_A"},
    {Op::mult_kappa_sq, "mult_kappa_sq"},
    {Op::rough_tr, "rough_tr"},
    {Op::rough_t, "rough_T"},
    {Op::rough_tbar, "rough_Tbar"},
    {Op::curvature_f, "curvature_F"},
};

}  // namespace

const char* op_name(Op op) {
  for (const auto& e : kOpNames)
    if (e.op == op) return e.name;
  return "?";
}

bool op_from_string(const std::string& name, Op& out) {
  for (const auto& e : kOpNames)
    if (name == e.name) {
      out = e.op;
      return true;
    }
  return false;
}

bool op_hermitian(Op op) {
  switch (op) {
    case Op::laplace_b:
    case Op::laplace_t:
    case Op::laplace_k:
    case Op::box_b:
    case Op::boxbar_b:
    case Op::box_t:
    case Op::boxbar_t:
    case Op::box_k:
    case Op::boxbar_k:
    case Op::laplace_k_c:
    case Op::rough_tr:
    case Op::rough_t:
    case Op::rough_tbar:
    case Op::curvature_f:
    case Op::mult_kappa_sq:
      return true;
    default:
      return false;
  }
}

BasicComplex::BasicComplex(const ModelSpec& model, int N)
    : model_(model), geom_(geometry(model)) {
  if (N < 1) throw std::invalid_argument("BasicComplex: N must be >= 1");
  basis_ = std::make_shared<FrameBasis>(model_.n());
  grid_ = ModeGrid{model_.n(), N};
  per_mode_ = model_.mode_diagonal();
}

int BasicComplex::interior_margin() const {
  if (per_mode_) return 0;
  return std::min(2 * model_.bandwidth() + 1, grid_.N / 2);
}

OperatorMatrix BasicComplex::realize(const std::vector<OpTerm>& terms) const {
  return OperatorMatrix::realize(*basis_, grid_, per_mode_, terms);
}

OperatorMatrix BasicComplex::identity_op() const {
  return realize({OpTerm{Eigen::MatrixXcd::Identity(basis_->dim(),
                                                    basis_->dim()),
                         -1, false, FourierScalar(), false}});
}

OperatorMatrix BasicComplex::mult(int factor, const FourierScalar& f) const {
  return realize({OpTerm{
      Eigen::MatrixXcd::Identity(basis_->dim(), basis_->dim()), factor, true,
      f, false}});
}

const OperatorMatrix& BasicComplex::op(Op which) const {
  auto it = cache_.find(int(which));
  if (it == cache_.end())
    it = cache_.emplace(int(which), build(which)).first;
  return it->second;
}

const OperatorMatrix& BasicComplex::cov(Dir dir, int factor) const {
  auto key = std::make_pair(int(dir), factor);
  auto it = cov_cache_.find(key);
  if (it == cov_cache_.end())
    it = cov_cache_.emplace(key, build_cov(dir, factor)).first;
  return it->second;
}

OperatorMatrix BasicComplex::build_cov(Dir dir, int factor) const {
  const FrameBasis& fb = *basis_;
  switch (dir) {
    case Dir::T:
      // Coefficient t-derivative; the frame is parallel along T.
      return realize({OpTerm{
          Eigen::MatrixXcd::Identity(fb.dim(), fb.dim()), factor, false,
          FourierScalar(), true}});
    case Dir::S:
      // No s-dependence of coefficients; pure frame rotation by h'.
      return realize({OpTerm{fb.rotation(factor), factor, true,
                             geom_.h_prime[factor], false}});
    case Dir::V:
      return cov(Dir::S, factor).add(cov(Dir::T, factor), kInvSqrt2,
                                     -kI * kInvSqrt2);
    case Dir::Vbar:
      return cov(Dir::S, factor).add(cov(Dir::T, factor), kInvSqrt2,
                                     kI * kInvSqrt2);
  }
  throw std::logic_error("cov: bad direction");
}

const OperatorMatrix& BasicComplex::curvature_vvbar(int factor) const {
  auto it = curv_cache_.find(factor);
  if (it == curv_cache_.end()) {
    // R(V,Vbar) = i R(S,T); R(S,T) acts on the coframe as K times the
    // rotation w -> i w, wbar -> -i wbar.
    OperatorMatrix r = realize(
        {OpTerm{kI * basis_->rotation(factor), factor, true,
                geom_.gauss_curvature[factor], false}});
    it = curv_cache_.emplace(factor, std::move(r)).first;
  }
  return it->second;
}

OperatorMatrix BasicComplex::build(Op which) const {
  const FrameBasis& fb = *basis_;
  const int nf = model_.n();

  auto sum_terms = [&](auto&& per_factor) {
    std::vector<OpTerm> terms;
    for (int j = 0; j < nf; ++j) per_factor(j, terms);
    return realize(terms);
  };

  switch (which) {
    case Op::d_b:
      return sum_terms([&](int j, std::vector<OpTerm>& ts) {
        ts.push_back({fb.wedge_T(j), j, false, FourierScalar(), true});
        ts.push_back({fb.d_structure(j), j, true, geom_.h_prime[j], false});
      });
    case Op::wedge_kappa:
      return sum_terms([&](int j, std::vector<OpTerm>& ts) {
        ts.push_back({fb.wedge_T(j), j, true, geom_.h_prime[j], false});
      });
    case Op::wedge_kappa_10:
      // kappa^{1,0}_j = -(i h'_j / sqrt2) w^j
      return sum_terms([&](int j, std::vector<OpTerm>& ts) {
        ts.push_back({-kI * kInvSqrt2 * fb.wedge_gen(j), j, true,
                      geom_.h_prime[j], false});
      });
    case Op::wedge_kappa_01:
      return sum_terms([&](int j, std::vector<OpTerm>& ts) {
        ts.push_back({kI * kInvSqrt2 * fb.wedge_gen(nf + j), j, true,
                      geom_.h_prime[j], false});
      });
    case Op::contract_kappa:
      return sum_terms([&](int j, std::vector<OpTerm>& ts) {
        ts.push_back({fb.contract_T(j), j, true, geom_.h_prime[j], false});
      });
    case Op::contract_h10:
      // H^{1,0}_j = (i h'_j / sqrt2) V_j
      return sum_terms([&](int j, std::vector<OpTerm>& ts) {
        ts.push_back({kI * kInvSqrt2 * fb.contract_gen(j), j, true,
                      geom_.h_prime[j], false});
      });
    case Op::contract_h01:
      return sum_terms([&](int j, std::vector<OpTerm>& ts) {
        ts.push_back({-kI * kInvSqrt2 * fb.contract_gen(nf + j), j, true,
                      geom_.h_prime[j], false});
      });
    case Op::d_t:
      return op(Op::d_b).add(op(Op::wedge_kappa), 1.0, -1.0);
    case Op::d_k:
      return op(Op::d_b).add(op(Op::wedge_kappa), 1.0, -0.5);
    case Op::delta_b:
      return op(Op::d_b).adjoint();
    case Op::delta_t:
      return op(Op::d_t).adjoint();
    case Op::delta_k:
      return op(Op::d_k).adjoint();
    case Op::partial_b:
      return op(Op::d_b).bidegree_component(fb, 1, 0);
    case Op::partialbar_b:
      return op(Op::d_b).bidegree_component(fb, 0, 1);
    case Op::partial_t:
      return op(Op::d_t).bidegree_component(fb, 1, 0);
    case Op::partialbar_t:
      return op(Op::d_t).bidegree_component(fb, 0, 1);
    case Op::partial_k:
      return op(Op::d_k).bidegree_component(fb, 1, 0);
    case Op::partialbar_k:
      return op(Op::d_k).bidegree_component(fb, 0, 1);
    case Op::partial_b_adj:
      return op(Op::partial_b).adjoint();
    case Op::partialbar_b_adj:
      return op(Op::partialbar_b).adjoint();
    case Op::partial_t_adj:
      return op(Op::partial_t).adjoint();
    case Op::partialbar_t_adj:
      return op(Op::partialbar_t).adjoint();
    case Op::partial_k_adj:
      return op(Op::partial_k).adjoint();
    case Op::partialbar_k_adj:
      return op(Op::partialbar_k).adjoint();
    case Op::laplace_b:
      return op(Op::d_b).compose(op(Op::delta_b))
          .add(op(Op::delta_b).compose(op(Op::d_b)));
    case Op::laplace_t:
      return op(Op::d_t).compose(op(Op::delta_t))
          .add(op(Op::delta_t).compose(op(Op::d_t)));
    case Op::laplace_k:
      return op(Op::d_k).compose(op(Op::delta_k))
          .add(op(Op::delta_k).compose(op(Op::d_k)));
    case Op::box_b:
      return op(Op::partial_b).compose(op(Op::partial_b_adj))
          .add(op(Op::partial_b_adj).compose(op(Op::partial_b)));
    case Op::boxbar_b:
      return op(Op::partialbar_b).compose(op(Op::partialbar_b_adj))
          .add(op(Op::partialbar_b_adj).compose(op(Op::partialbar_b)));
    case Op::box_t:
      return op(Op::partial_t).compose(op(Op::partial_t_adj))
          .add(op(Op::partial_t_adj).compose(op(Op::partial_t)));
    case Op::boxbar_t:
      return op(Op::partialbar_t).compose(op(Op::partialbar_t_adj))
          .add(op(Op::partialbar_t_adj).compose(op(Op::partialbar_t)));
    case Op::box_k:
      return op(Op::partial_k).compose(op(Op::partial_k_adj))
          .add(op(Op::partial_k_adj).compose(op(Op::partial_k)));
    case Op::boxbar_k:
      return op(Op::partialbar_k).compose(op(Op::partialbar_k_adj))
          .add(op(Op::partialbar_k_adj).compose(op(Op::partialbar_k)));
    case Op::lefschetz:
      return realize({OpTerm{fb.lefschetz_L(), -1, false, FourierScalar(),
                             false}});
    case Op::lefschetz_adj:
      return op(Op::lefschetz).adjoint();
    case Op::star:
      return realize({OpTerm{fb.star(), -1, false, FourierScalar(), false}});
    case Op::phase_c:
      return realize({OpTerm{fb.phase_C(false), -1, false, FourierScalar(),
                             false}});
    case Op::phase_c_inv:
      return realize({OpTerm{fb.phase_C(true), -1, false, FourierScalar(),
                             false}});
    case Op::d_k_c:
      return op(Op::phase_c_inv).compose(op(Op::d_k)).compose(op(Op::phase_c));
    case Op::delta_k_c:
      return op(Op::phase_c_inv)
          .compose(op(Op::delta_k))
          .compose(op(Op::phase_c));
    case Op::laplace_k_c:
      return op(Op::d_k_c).compose(op(Op::delta_k_c))
          .add(op(Op::delta_k_c).compose(op(Op::d_k_c)));
    case Op::nabla_kappa: {
      OperatorMatrix acc = OperatorMatrix::zero(fb, grid_, per_mode_);
      for (int j = 0; j < nf; ++j)
        acc = acc.add(mult(j, geom_.h_prime[j]).compose(cov(Dir::T, j)));
      return acc;
    }
    case Op::nabla_h10: {
      OperatorMatrix acc = OperatorMatrix::zero(fb, grid_, per_mode_);
      for (int j = 0; j < nf; ++j)
        acc = acc.add(
            mult(j, geom_.h_prime[j]).compose(cov(Dir::V, j)).scaled(
                kI * kInvSqrt2));
      return acc;
    }
    case Op::nabla_h01: {
      OperatorMatrix acc = OperatorMatrix::zero(fb, grid_, per_mode_);
      for (int j = 0; j < nf; ++j)
        acc = acc.add(
            mult(j, geom_.h_prime[j]).compose(cov(Dir::Vbar, j)).scaled(
                -kI * kInvSqrt2));
      return acc;
    }
    case Op::lie_kappa:
      return op(Op::d_b).compose(op(Op::contract_kappa))
          .add(op(Op::contract_kappa).compose(op(Op::d_b)));
    case Op::lie_correction:
      return op(Op::lie_kappa).add(op(Op::nabla_kappa), 1.0, -1.0);
    case Op::mult_kappa_sq:
      return sum_terms([&](int j, std::vector<OpTerm>& ts) {
        ts.push_back({Eigen::MatrixXcd::Identity(fb.dim(), fb.dim()), j, true,
                      geom_.h_prime_sq[j], false});
      });
    case Op::rough_tr: {
      // The kappa-sharp drift cancels the frame divergence exactly, leaving
      // -sum_j (cov_S^2 + cov_T^2).
      OperatorMatrix acc = OperatorMatrix::zero(fb, grid_, per_mode_);
      for (int j = 0; j < nf; ++j) {
        acc = acc.add(cov(Dir::S, j).compose(cov(Dir::S, j)), 1.0, -1.0);
        acc = acc.add(cov(Dir::T, j).compose(cov(Dir::T, j)), 1.0, -1.0);
      }
      return acc;
    }
    case Op::rough_t: {
      // -sum_j cov_V cov_Vbar; equals cov_Vbar^dagger cov_Vbar summed.
      OperatorMatrix acc = OperatorMatrix::zero(fb, grid_, per_mode_);
      for (int j = 0; j < nf; ++j)
        acc = acc.add(cov(Dir::V, j).compose(cov(Dir::Vbar, j)), 1.0, -1.0);
      return acc;
    }
    case Op::rough_tbar: {
      OperatorMatrix acc = OperatorMatrix::zero(fb, grid_, per_mode_);
      for (int j = 0; j < nf; ++j)
        acc = acc.add(cov(Dir::Vbar, j).compose(cov(Dir::V, j)), 1.0, -1.0);
      return acc;
    }
    case Op::curvature_f: {
      // F = sum_{a,b} theta^a /\ E_b . R(E_b, E_a); within one factor the
      // nonzero pairs are (S,T) and (T,S), and R(S,T) acts as K times the
      // frame rotation.
      OperatorMatrix acc = OperatorMatrix::zero(fb, grid_, per_mode_);
      for (int j = 0; j < nf; ++j) {
        Eigen::MatrixXcd frame =
            (fb.wedge_T(j) * fb.contract_S(j) -
             fb.wedge_S(j) * fb.contract_T(j)) *
            fb.rotation(j);
        acc = acc.add(realize({OpTerm{frame, j, true,
                                      geom_.gauss_curvature[j], false}}));
      }
      return acc;
    }
  }
  throw std::logic_error("unknown operator");
}

std::vector<long> BasicComplex::slot_indices(int r, int s) const {
  const long M = grid_.count();
  std::vector<long> out;
  for (int i : basis_->bidegree_indices(r, s))
    for (long m = 0; m < M; ++m) out.push_back(i * M + m);
  return out;
}

std::vector<long> BasicComplex::slot_indices_degree(int d) const {
  const long M = grid_.count();
  std::vector<long> out;
  for (int i : basis_->degree_indices(d))
    for (long m = 0; m < M; ++m) out.push_back(i * M + m);
  return out;
}

Eigen::VectorXcd BasicComplex::conjugate_vector(
    const Eigen::VectorXcd& v) const {
  const long M = grid_.count();
  std::vector<int> perm;
  std::vector<double> phase;
  basis_->conjugation_map(perm, phase);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (int i = 0; i < basis_->dim(); ++i) {
    for (long m = 0; m < M; ++m) {
      auto k = grid_.unflatten(m);
      for (auto& kk : k) kk = -kk;
      long mneg = grid_.flatten(k);
      out[perm[i] * M + mneg] = phase[i] * std::conj(v[i * M + m]);
    }
  }
  return out;
}

}  // namespace tbc

#include "tbc/form.hpp"

#include <stdexcept>

namespace tbc {

BasicForm BasicForm::scalar(const BasicComplex& ctx, int factor,
                            const FourierScalar& f) {
  return monomial(ctx, 0, 0, factor, f);
}

BasicForm BasicForm::monomial(const BasicComplex& ctx, uint32_t amask,
                              uint32_t bmask, int factor,
                              const FourierScalar& f) {
  BasicForm out(ctx);
  const ModeGrid& g = ctx.grid();
  int mono = ctx.basis().index(amask, bmask);
  if (f.order() > g.N)
    throw std::invalid_argument("BasicForm: coefficient order exceeds N");
  std::vector<int> k(g.n, 0);
  for (int kk = -f.order(); kk <= f.order(); ++kk) {
    k[factor] = kk;
    out.v_[mono * g.count() + g.flatten(k)] = f.coeff(kk);
  }
  return out;
}

BasicForm BasicForm::random(const BasicComplex& ctx, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  BasicForm out(ctx);
  for (long i = 0; i < out.v_.size(); ++i)
    out.v_[i] = cd(dist(rng), dist(rng));
  out.v_ /= out.v_.norm();
  return out;
}

FourierScalar BasicForm::coefficient(int mono_idx, int factor) const {
  const ModeGrid& g = ctx_->grid();
  FourierScalar f(g.N);
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * g.N + 1);
  std::vector<int> k(g.n, 0);
  for (int kk = -g.N; kk <= g.N; ++kk) {
    k[factor] = kk;
    c[kk + g.N] = v_[mono_idx * g.count() + g.flatten(k)];
  }
  return FourierScalar(g.N, std::move(c));
}

Eigen::VectorXcd BasicForm::coefficient_modes(int mono_idx) const {
  return v_.segment(mono_idx * ctx_->grid().count(), ctx_->grid().count());
}

BasicForm d_B(const BasicForm& phi) { return phi.apply(Op::d_b); }
BasicForm d_T(const BasicForm& phi) { return phi.apply(Op::d_t); }
BasicForm d_kappa(const BasicForm& phi) { return phi.apply(Op::d_k); }

BasicForm wedge_kappa(const BasicForm& phi, KappaPart part) {
  switch (part) {
    case KappaPart::full:
      return phi.apply(Op::wedge_kappa);
    case KappaPart::p10:
      return phi.apply(Op::wedge_kappa_10);
    case KappaPart::p01:
      return phi.apply(Op::wedge_kappa_01);
  }
  throw std::logic_error("wedge_kappa: bad part");
}

BasicForm contract_H(const BasicForm& phi, KappaPart part) {
  switch (part) {
    case KappaPart::full:
      return phi.apply(Op::contract_kappa);
    case KappaPart::p10:
      return phi.apply(Op::contract_h10);
    case KappaPart::p01:
      return phi.apply(Op::contract_h01);
  }
  throw std::logic_error("contract_H: bad part");
}

BasicForm bar_star(const BasicForm& phi) { return phi.apply(Op::star); }

BasicForm bidegree_project(const BasicForm& phi, int r, int s) {
  const BasicComplex& ctx = phi.ctx();
  const long M = ctx.grid().count();
  BasicForm out(ctx);
  if (r < 0 || r > ctx.n() || s < 0 || s > ctx.n()) return out;  // empty form
  for (int i : ctx.basis().bidegree_indices(r, s))
    out.vec().segment(i * M, M) = phi.vec().segment(i * M, M);
  return out;
}

BasicForm lefschetz(const BasicForm& phi) { return phi.apply(Op::lefschetz); }
BasicForm contract_omega(const BasicForm& phi) {
  return phi.apply(Op::lefschetz_adj);
}

BasicForm covariant_derivative(const BasicForm& phi, Dir dir, int factor) {
  return phi.apply(phi.ctx().cov(dir, factor));
}

BasicForm conjugate(const BasicForm& phi) {
  return BasicForm(phi.ctx(), phi.ctx().conjugate_vector(phi.vec()));
}

cd inner(const BasicForm& a, const BasicForm& b) {
  return (b.vec().adjoint() * a.vec())(0);
}

Eigen::VectorXcd pointwise_inner(const BasicForm& a, const BasicForm& b) {
  const BasicComplex& ctx = a.ctx();
  const ModeGrid& g = ctx.grid();
  const long M = g.count();
  // <a,b>(t) = sum_m a_m(t) conj(b_m(t)); the conjugate of a mode-k
  // coefficient contributes at mode -k, so each monomial adds the correlation
  // of its coefficient lattices.  Output modes are kept on the same lattice.
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(M);
  for (int mono = 0; mono < ctx.basis().dim(); ++mono) {
    Eigen::VectorXcd fa = a.vec().segment(mono * M, M);
    Eigen::VectorXcd fbv = b.vec().segment(mono * M, M);
    for (long ma = 0; ma < M; ++ma) {
      if (fa[ma] == cd(0, 0)) continue;
      auto ka = g.unflatten(ma);
      for (long mb = 0; mb < M; ++mb) {
        if (fbv[mb] == cd(0, 0)) continue;
        auto kb = g.unflatten(mb);
        std::vector<int> kk(g.n);
        bool in_range = true;
        for (int j = 0; j < g.n; ++j) {
          kk[j] = ka[j] - kb[j];
          if (kk[j] < -g.N || kk[j] > g.N) in_range = false;
        }
        if (!in_range) continue;
        out[g.flatten(kk)] += fa[ma] * std::conj(fbv[mb]);
      }
    }
  }
  return out;
}

}  // namespace tbc

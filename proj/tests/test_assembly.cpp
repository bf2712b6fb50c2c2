#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "tbc/assembly.hpp"
#include "tbc/form.hpp"

using namespace tbc;
using doctest::Approx;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cd kI(0, 1);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Change of frame on one factor: columns express the unit complex frame in
// the real coframe (S*, T*), so U maps (w, wbar)-coordinates to (S*, T*)
// coordinates.
Eigen::Matrix2cd gen_to_real() {
  Eigen::Matrix2cd U;
  U << kInvSqrt2, kInvSqrt2, kI * kInvSqrt2, -kI * kInvSqrt2;
  return U;
}

}  // namespace

TEST_CASE("twisted differential mode block in real coordinates") {
  auto m = ModelSpec::carriere(3);
  double c0 = m.factors()[0].c;
  BasicComplex ctx(m, 8);
  const auto& fb = ctx.basis();
  int iw = fb.index(1, 0), iwb = fb.index(0, 1), i0 = fb.index(0, 0);
  for (int k : {-3, 0, 2}) {
    long mode = ctx.grid().flatten({k});
    Eigen::MatrixXcd B = ctx.op(Op::d_k).block(mode);
    Eigen::Vector2cd col_gen(B(iw, i0), B(iwb, i0));
    Eigen::Vector2cd col_real = gen_to_real() * col_gen;
    // expected column (0, 2 pi i k - c/2) in (S*, T*) coordinates
    CHECK(std::abs(col_real(0)) <= 1e-12);
    CHECK(std::abs(col_real(1) - (cd(0, kTwoPi * k) - c0 / 2.0)) <= 1e-12);
  }
}

TEST_CASE("twisted Laplacian scalar block") {
  auto m = ModelSpec::carriere(3);
  double c0 = m.factors()[0].c;
  BasicComplex ctx(m, 8);
  int i0 = ctx.basis().index(0, 0);
  for (int k = -8; k <= 8; ++k) {
    long mode = ctx.grid().flatten({k});
    cd val = ctx.op(Op::laplace_k).block(mode)(i0, i0);
    double expect = kTwoPi * kTwoPi * k * k + 0.25 * c0 * c0;
    CHECK(std::abs(val - expect) <= 1e-12);
  }
}

TEST_CASE("minimal model has no twist") {
  BasicComplex ctx(ModelSpec::taut(), 8);
  CHECK(op_residual(ctx, ctx.op(Op::d_k), ctx.op(Op::d_b)) == 0.0);
  CHECK(op_residual(ctx, ctx.op(Op::laplace_k), ctx.op(Op::laplace_b)) ==
        0.0);
}

TEST_CASE("operator algebra basics") {
  BasicComplex ctx(ModelSpec::carriere(3), 6);
  const auto& A = ctx.op(Op::d_k);
  CHECK(A.adjoint().adjoint().residual_vs(A) == 0.0);
  CHECK(A.commutator(A).norm() == 0.0);
  // adjoint pairing on random forms
  auto phi = BasicForm::random(ctx, 1);
  auto psi = BasicForm::random(ctx, 2);
  for (Op op : {Op::d_k, Op::star, Op::lefschetz, Op::boxbar_k}) {
    cd lhs = inner(phi.apply(op), psi);
    cd rhs = inner(phi, psi.apply(ctx.op(op).adjoint()));
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("residual measure") {
  BasicComplex ctx(ModelSpec::carriere(3), 32);
  const auto& A = ctx.op(Op::laplace_k);
  CHECK(A.residual_vs(A) == 0.0);
  auto d2 = ctx.op(Op::d_k).compose(ctx.op(Op::d_k));
  CHECK(d2.norm() / std::max(1.0, ctx.op(Op::d_k).norm() *
                                      ctx.op(Op::d_k).norm()) <= 1e-12);
}

TEST_CASE("sign-flipped codifferential is detected") {
  // Negative control: using +1/2 contraction instead of -1/2 moves the
  // operator far from the true adjoint; the discrepancy is cleanest on the
  // zero mode, where no derivative term can mask it.
  BasicComplex ctx(ModelSpec::carriere(3), 8);
  auto flipped = ctx.op(Op::delta_b).add(ctx.op(Op::contract_kappa), 1.0, 0.5);
  auto truth = ctx.op(Op::d_k).adjoint();
  long zero = ctx.grid().flatten({0});
  double res = (truth.block(zero) - flipped.block(zero)).norm() /
               std::max(1.0, truth.block(zero).norm());
  CHECK(res > 0.1);
  // globally the two operators still differ
  CHECK(op_residual(ctx, truth, flipped) > 1e-3);
}

TEST_CASE("per-mode and coupled realizations agree") {
  auto m = ModelSpec::carriere(3);
  BasicComplex ctx(m, 4);
  REQUIRE(ctx.per_mode());
  for (Op op : {Op::d_b, Op::d_k, Op::laplace_k, Op::star}) {
    const auto& per_mode = ctx.op(op);
    // Re-realize the same operator on the coupled layout by resumming the
    // defining terms of a twin complex forced into coupled storage.
    OperatorMatrix coupled = per_mode.to_coupled();
    CHECK(per_mode.residual_vs(coupled) == 0.0);
    CHECK(coupled.residual_vs(per_mode) == 0.0);
  }
  // A genuinely coupled realization of the same model matches blockwise.
  std::vector<OpTerm> terms;
  terms.push_back({ctx.basis().wedge_T(0), 0, false, FourierScalar(), true});
  terms.push_back({ctx.basis().d_structure(0), 0, true,
                   ctx.geom().h_prime[0], false});
  auto direct = OperatorMatrix::realize(ctx.basis(), ctx.grid(), false, terms);
  CHECK(direct.residual_vs(ctx.op(Op::d_b).to_coupled()) <= 1e-14);
}

TEST_CASE("grading of the assembled operators") {
  BasicComplex ctx(ModelSpec::product(ModelSpec::carriere(3),
                                      ModelSpec::taut()),
                   2);
  // d_kappa raises total degree by one: it equals the sum of its two
  // bidegree components and nothing else.
  auto d10 = ctx.op(Op::d_k).bidegree_component(ctx.basis(), 1, 0);
  auto d01 = ctx.op(Op::d_k).bidegree_component(ctx.basis(), 0, 1);
  CHECK(op_residual(ctx, ctx.op(Op::d_k), d10.add(d01)) <= 1e-14);
  // The twisted Laplacian and the box family preserve the bidegree (the
  // untwisted Laplacian does not on a nontaut model).
  for (Op op : {Op::laplace_k, Op::boxbar_b, Op::boxbar_k, Op::boxbar_t})
    CHECK(op_residual(ctx, ctx.op(op),
                      ctx.op(op).bidegree_component(ctx.basis(), 0, 0)) <=
          1e-14);
}

TEST_CASE("identity suite on the hyperbolic model") {
  BasicComplex ctx(ModelSpec::carriere(3), 32);
  auto rep = identity_suite(ctx);
  for (const auto& e : rep.entries) {
    CAPTURE(e.name);
    CHECK(e.pass);
    if (!std::isnan(e.residual) && e.anchor != "laplacian-blocks-psd")
      CHECK(e.residual <= 1e-10);
  }
}

TEST_CASE("identity suite on the minimal model") {
  BasicComplex ctx(ModelSpec::taut(), 32);
  auto rep = identity_suite(ctx);
  bool saw_collapse = false;
  for (const auto& e : rep.entries) {
    CAPTURE(e.name);
    CHECK(e.pass);
    if (e.anchor == "minimal-model-collapse") saw_collapse = true;
  }
  CHECK(saw_collapse);
}

TEST_CASE("identity suite on a mode-coupled suspension") {
  BasicComplex ctx(
      ModelSpec::suspension(std::log(2.0), FourierScalar::cosine(1, 0.2)),
      32);
  REQUIRE_FALSE(ctx.per_mode());
  auto rep = identity_suite(ctx);
  for (const auto& e : rep.entries) {
    CAPTURE(e.name);
    CHECK(e.pass);
    if (!std::isnan(e.residual) && e.anchor != "laplacian-blocks-psd")
      CHECK(e.residual <= 1e-8);
  }
}

TEST_CASE("identity suite on a product model") {
  BasicComplex ctx(ModelSpec::product(ModelSpec::carriere(3),
                                      ModelSpec::taut()),
                   8);
  auto rep = identity_suite(ctx);
  for (const auto& e : rep.entries) {
    CAPTURE(e.name);
    CHECK(e.pass);
  }
}

TEST_CASE("operator names round-trip") {
  for (Op op : {Op::d_b, Op::laplace_k, Op::boxbar_t, Op::star,
                Op::curvature_f}) {
    Op back;
    REQUIRE(op_from_string(op_name(op), back));
    CHECK(back == op);
  }
  Op dummy;
  CHECK_FALSE(op_from_string("no_such_operator", dummy));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "tbc/assembly.hpp"
#include "tbc/harmonic.hpp"
#include "tbc/weitzenbock.hpp"

using namespace tbc;
using doctest::Approx;

namespace {
constexpr double kPiSq4 = 4.0 * std::numbers::pi * std::numbers::pi;
}

TEST_CASE("rough Laplacian scalar blocks") {
  // On functions the rough Laplacian is -d^2/dt^2 per factor; the
  // mean-curvature drift cancels the frame divergence, so the block is
  // 4 pi^2 k^2 for the flat and the hyperbolic model alike.
  for (auto model : {ModelSpec::taut(), ModelSpec::carriere(3)}) {
    BasicComplex c(model, 8);
    auto rough = rough_laplacian(c, RoughVariant::tr);
    int i0 = c.basis().index(0, 0);
    for (int k : {0, 1, 5}) {
      cd val = rough.block(c.grid().flatten({k}))(i0, i0);
      CHECK(std::abs(val - kPiSq4 * k * k) <= 1e-12);
    }
    CHECK(rough.hermiticity_defect() <= 1e-14);
  }
}

TEST_CASE("rough family is positive semidefinite") {
  for (auto model :
       {ModelSpec::carriere(3),
        ModelSpec::suspension(0.2, FourierScalar::cosine(1, 0.3)),
        ModelSpec::product(ModelSpec::taut(), ModelSpec::carriere(3))}) {
    BasicComplex c(model, 6);
    for (auto v : {RoughVariant::tr, RoughVariant::T, RoughVariant::Tbar}) {
      auto A = rough_laplacian(c, v);
      CHECK(A.hermiticity_defect() <= 1e-13);
      double mn = std::numeric_limits<double>::infinity();
      if (A.per_mode()) {
        for (long m = 0; m < c.grid().count(); ++m) {
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A.block(m));
          mn = std::min(mn, es.eigenvalues().minCoeff());
        }
      } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A.coupled());
        mn = es.eigenvalues().minCoeff();
      }
      CHECK(mn >= -1e-12 * std::max(1.0, A.norm()));
    }
  }
}

TEST_CASE("curvature endomorphism values") {
  auto m = ModelSpec::carriere(3);
  double c0 = m.factors()[0].c;
  BasicComplex c(m, 4);
  auto F = curvature_endomorphism(c);
  long mode = c.grid().flatten({0});
  Eigen::MatrixXcd B = F.block(mode);
  const auto& fb = c.basis();
  // zero on functions and on the top degree (the holonomy acts trivially on
  // the determinant lines of a surface)
  CHECK(std::abs(B(fb.index(0, 0), fb.index(0, 0))) <= 1e-14);
  CHECK(std::abs(B(fb.index(1, 1), fb.index(1, 1))) <= 1e-14);
  // Gauss curvature times the identity on one-forms
  for (int idx : {fb.index(1, 0), fb.index(0, 1)})
    CHECK(std::abs(B(idx, idx) - cd(-c0 * c0, 0)) <= 1e-12);
  // same at every mode (zeroth order)
  CHECK((F.block(c.grid().flatten({3})) - B).norm() <= 1e-14);
  // flat model: zero everywhere
  BasicComplex ct(ModelSpec::taut(), 4);
  CHECK(curvature_endomorphism(ct).norm() == 0.0);
}

TEST_CASE("Lie correction values") {
  BasicComplex ct(ModelSpec::taut(), 4);
  CHECK(lie_correction(ct).norm() <= 1e-14);
  auto m = ModelSpec::carriere(3);
  double c0 = m.factors()[0].c;
  BasicComplex c(m, 4);
  auto A = lie_correction(c);
  const auto& fb = c.basis();
  long mode = c.grid().flatten({2});
  // vanishes on functions
  CHECK(std::abs(A.block(mode)(fb.index(0, 0), fb.index(0, 0))) <= 1e-13);
  // acts on the coframe by h'^2 on S* and h'' = 0 on T*: in the unit complex
  // frame that is the symmetric matrix (h'^2/2) [[1,1],[1,1]].
  Eigen::Matrix2cd block;
  block << A.block(mode)(fb.index(1, 0), fb.index(1, 0)),
      A.block(mode)(fb.index(1, 0), fb.index(0, 1)),
      A.block(mode)(fb.index(0, 1), fb.index(1, 0)),
      A.block(mode)(fb.index(0, 1), fb.index(0, 1));
  Eigen::Matrix2cd expect;
  expect << c0 * c0 / 2, c0 * c0 / 2, c0 * c0 / 2, c0 * c0 / 2;
  CHECK((block - expect).norm() <= 1e-12);
}

TEST_CASE("curvature decomposition suite closes on exact models") {
  for (auto model : {ModelSpec::carriere(3), ModelSpec::taut(),
                     ModelSpec::product(ModelSpec::carriere(3),
                                        ModelSpec::taut())}) {
    int N = model.n() > 1 ? 8 : 32;
    BasicComplex c(model, N);
    auto rep = weitzenbock_residuals(c);
    for (const auto& e : rep.entries) {
      CAPTURE(e.name);
      CHECK(e.pass);
      if (!std::isnan(e.residual) && e.anchor != "rough-laplacian-psd" &&
          e.anchor != "coclosed-gauge-residual")
        CHECK(e.residual <= 1e-10);
    }
  }
}

TEST_CASE("curvature decomposition suite closes on a coupled model") {
  BasicComplex c(
      ModelSpec::suspension(std::log(2.0), FourierScalar::cosine(1, 0.2)),
      24);
  auto rep = weitzenbock_residuals(c);
  bool saw_gauge = false;
  for (const auto& e : rep.entries) {
    CAPTURE(e.name);
    CHECK(e.pass);
    if (e.anchor == "coclosed-gauge-residual") {
      saw_gauge = true;
      CHECK(e.residual > 0.1);  // the perturbed model is genuinely off-gauge
    } else if (!std::isnan(e.residual) && e.anchor != "rough-laplacian-psd") {
      CHECK(e.residual <= 1e-8);
    }
  }
  CHECK(saw_gauge);
}

TEST_CASE("minimal model collapses every decomposition") {
  BasicComplex c(ModelSpec::taut(), 16);
  auto rough = rough_laplacian(c, RoughVariant::tr);
  CHECK(op_residual(c, c.op(Op::laplace_b), rough) <= 1e-14);
  CHECK(op_residual(c, c.op(Op::laplace_k), rough) <= 1e-14);
}

TEST_CASE("vanishing probe on the hyperbolic model") {
  BasicComplex c(ModelSpec::carriere(3), 16);
  auto rep = vanishing_probe(c);
  bool deg0_predicts = false, deg1_inconclusive = false;
  for (const auto& e : rep.entries) {
    CAPTURE(e.name);
    CHECK(e.pass);
    if (e.name == "curvature positivity on degree 0") {
      deg0_predicts = e.observed.find("predicts vanishing") !=
                      std::string::npos;
    }
    if (e.name == "curvature positivity on degree 1")
      deg1_inconclusive = e.observed.find("inconclusive") !=
                          std::string::npos;
  }
  // F + |kappa|^2/4 is strictly positive on functions, so degree 0 must be
  // predicted to vanish; on one-forms the curvature wins and no prediction
  // is made (negative Ricci), yet the table vanishes anyway.
  CHECK(deg0_predicts);
  CHECK(deg1_inconclusive);
}

TEST_CASE("vanishing probe on flat models") {
  BasicComplex c(ModelSpec::taut(), 12);
  auto rep = vanishing_probe(c);
  for (const auto& e : rep.entries) {
    CAPTURE(e.name);
    CHECK(e.pass);
    if (e.name == "nonnegative Ricci first-degree vanishing")
      CHECK(e.expected == "no prediction");  // flat and taut: inapplicable
  }
  // perturbed flat model: still taut, h^{1,0} = 1 survives, and all
  // hypotheses stay inapplicable
  BasicComplex cp(ModelSpec::suspension(0.0, FourierScalar::cosine(1, 0.1)),
                  12);
  auto tk = cohomology(cp, Flavor::kappa);
  CHECK(tk.bigraded[1][0] == 1);
  auto rep2 = vanishing_probe(cp);
  for (const auto& e : rep2.entries) {
    CAPTURE(e.name);
    CHECK(e.pass);
  }
}

TEST_CASE("harmonic holomorphic forms are parallel exactly on gauge models") {
  BasicComplex c(ModelSpec::taut(), 12);
  auto k = kernel_basis(c, c.op(Op::laplace_k), Slot::bidegree(1, 0));
  REQUIRE(k.dim == 1);
  CHECK(c.cov(Dir::Vbar, 0).apply(k.basis.col(0)).norm() <= 1e-12);
  // off gauge the derivative energy follows the quarter-norm identity
  // instead (checked by the probe); exercise it directly here
  BasicComplex cp(ModelSpec::suspension(0.0, FourierScalar::cosine(1, 0.4)),
                  16);
  auto kp = kernel_basis(cp, cp.op(Op::laplace_k), Slot::bidegree(1, 0));
  REQUIRE(kp.dim == 1);
  Eigen::VectorXcd v = kp.basis.col(0);
  double energy = cp.cov(Dir::Vbar, 0).apply(v).squaredNorm();
  CHECK(energy > 1e-4);  // genuinely nonparallel
  double target =
      0.125 * (v.adjoint() * cp.op(Op::mult_kappa_sq).apply(v))(0).real();
  CHECK(energy == Approx(target).epsilon(1e-8));
}

#include "tbc/assembly.hpp"

#include <Eigen/Eigenvalues>

namespace tbc {

namespace {
const cd kI(0, 1);
}

double op_residual(const BasicComplex& ctx, const OperatorMatrix& a,
                   const OperatorMatrix& b) {
  return a.residual_vs(b, ctx.interior_margin());
}

namespace {

// sum_d z^(d+offset) P_d with z = -1 (degree-parity sign).
OperatorMatrix degree_sign(const BasicComplex& c, int offset) {
  std::vector<cd> z(c.codim() + 1);
  for (int d = 0; d <= c.codim(); ++d)
    z[d] = ((d + offset) % 2 == 0) ? cd(1, 0) : cd(-1, 0);
  return c.realize({OpTerm{c.basis().degree_phase(z), -1, false,
                           FourierScalar(), false}});
}

OperatorMatrix frame_only(const BasicComplex& c, const Eigen::MatrixXcd& F) {
  return c.realize({OpTerm{F, -1, false, FourierScalar(), false}});
}

struct SuiteBuilder {
  const BasicComplex& c;
  CheckReport& rep;
  double tol;

  void residual(const std::string& name, const std::string& anchor,
                const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
    auto& e = rep.add(name, anchor);
    e.residual = op_residual(c, lhs, rhs);
    e.tolerance = tol;
    e.pass = e.residual <= tol;
  }
  // ||lhs|| relative to a caller-supplied scale; used when the natural
  // comparison target is zero and roundoff grows with the factor norms.
  void vanishes(const std::string& name, const std::string& anchor,
                const OperatorMatrix& lhs, double scale = 1.0) {
    auto& e = rep.add(name, anchor);
    e.residual = lhs.norm(c.interior_margin()) / std::max(1.0, scale);
    e.tolerance = tol;
    e.pass = e.residual <= tol;
  }
  // Commutator identities compared two-sided, so the residual is relative to
  // the product's own size.
  void commute(const std::string& name, const std::string& anchor,
               const OperatorMatrix& a, const OperatorMatrix& b) {
    residual(name, anchor, a.compose(b), b.compose(a));
  }
};

double min_eigenvalue(const BasicComplex& ctx, const OperatorMatrix& A) {
  double mn = std::numeric_limits<double>::infinity();
  if (A.per_mode()) {
    for (long m = 0; m < ctx.grid().count(); ++m) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A.block(m));
      mn = std::min(mn, es.eigenvalues().minCoeff());
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A.coupled());
    mn = std::min(mn, es.eigenvalues().minCoeff());
  }
  return mn;
}

}  // namespace

CheckReport identity_suite(const BasicComplex& c) {
  CheckReport rep;
  rep.suite = "identities";
  rep.model_id = c.model().id();
  rep.N = c.N();
  rep.representation = c.per_mode() ? "per-mode" : "coupled";
  SuiteBuilder sb{c, rep, c.identity_tol()};
  const int n = c.n();

  // Differential structure.
  sb.vanishes("d_B squared", "exterior-derivative-squares-to-zero",
              c.op(Op::d_b).compose(c.op(Op::d_b)),
              c.op(Op::d_b).norm() * c.op(Op::d_b).norm());
  sb.vanishes("d_T squared", "t-differential-squares-to-zero",
              c.op(Op::d_t).compose(c.op(Op::d_t)),
              c.op(Op::d_t).norm() * c.op(Op::d_t).norm());
  sb.vanishes("d_kappa squared", "twisted-differential-squares-to-zero",
              c.op(Op::d_k).compose(c.op(Op::d_k)),
              c.op(Op::d_k).norm() * c.op(Op::d_k).norm());
  sb.vanishes("delta_kappa squared", "twisted-codifferential-squares-to-zero",
              c.op(Op::delta_k).compose(c.op(Op::delta_k)),
              c.op(Op::delta_k).norm() * c.op(Op::delta_k).norm());
  sb.residual("d_B bidegree splitting", "bidegree-splitting-of-d",
              c.op(Op::d_b),
              c.op(Op::partial_b).add(c.op(Op::partialbar_b)));
  sb.residual("d_kappa bidegree splitting", "bidegree-splitting-of-twisted-d",
              c.op(Op::d_k),
              c.op(Op::partial_k).add(c.op(Op::partialbar_k)));
  sb.residual("partial_kappa from wedge shift", "twisted-dolbeault-10",
              c.op(Op::partial_k),
              c.op(Op::partial_b).add(c.op(Op::wedge_kappa_10), 1.0, -0.5));
  sb.residual("partialbar_kappa from wedge shift", "twisted-dolbeault-01",
              c.op(Op::partialbar_k),
              c.op(Op::partialbar_b).add(c.op(Op::wedge_kappa_01), 1.0, -0.5));
  sb.residual("partial_T from wedge shift", "t-dolbeault-10",
              c.op(Op::partial_t),
              c.op(Op::partial_b).add(c.op(Op::wedge_kappa_10), 1.0, -1.0));

  // Adjoint routes.
  sb.residual("delta_B via star of d_T", "codifferential-star-route",
              c.op(Op::delta_b),
              c.op(Op::star).compose(c.op(Op::d_t)).compose(c.op(Op::star))
                  .scaled(-1.0));
  sb.residual("delta_T via star of d_B", "t-codifferential-star-route",
              c.op(Op::delta_t),
              c.op(Op::star).compose(c.op(Op::d_b)).compose(c.op(Op::star))
                  .scaled(-1.0));
  {
    auto acc = OperatorMatrix::zero(c.basis(), c.grid(), c.per_mode());
    for (int j = 0; j < n; ++j) {
      acc = acc.add(
          frame_only(c, c.basis().contract_S(j)).compose(c.cov(Dir::S, j)));
      acc = acc.add(
          frame_only(c, c.basis().contract_T(j)).compose(c.cov(Dir::T, j)));
    }
    sb.residual("delta_T frame contraction formula",
                "codifferential-frame-contraction", c.op(Op::delta_t),
                acc.scaled(-1.0));
  }
  {
    auto acc10 = OperatorMatrix::zero(c.basis(), c.grid(), c.per_mode());
    auto acc01 = OperatorMatrix::zero(c.basis(), c.grid(), c.per_mode());
    for (int j = 0; j < n; ++j) {
      acc10 = acc10.add(frame_only(c, c.basis().contract_gen(j))
                            .compose(c.cov(Dir::Vbar, j)));
      acc01 = acc01.add(frame_only(c, c.basis().contract_gen(n + j))
                            .compose(c.cov(Dir::V, j)));
    }
    sb.residual("partial_T adjoint frame formula",
                "dolbeault-adjoint-frame-contraction-10",
                c.op(Op::partial_t_adj), acc10.scaled(-1.0));
    sb.residual("partialbar_T adjoint frame formula",
                "dolbeault-adjoint-frame-contraction-01",
                c.op(Op::partialbar_t_adj), acc01.scaled(-1.0));
  }
  sb.residual("partial_B adjoint mean-curvature shift",
              "adjoint-mean-curvature-shift-10", c.op(Op::partial_b_adj),
              c.op(Op::partial_t_adj).add(c.op(Op::contract_h10)));
  sb.residual("partialbar_B adjoint mean-curvature shift",
              "adjoint-mean-curvature-shift-01", c.op(Op::partialbar_b_adj),
              c.op(Op::partialbar_t_adj).add(c.op(Op::contract_h01)));
  sb.residual("partial_kappa adjoint shift", "twisted-adjoint-shift-10",
              c.op(Op::partial_k_adj),
              c.op(Op::partial_b_adj).add(c.op(Op::contract_h10), 1.0, -0.5));
  sb.residual("partialbar_kappa adjoint shift", "twisted-adjoint-shift-01",
              c.op(Op::partialbar_k_adj),
              c.op(Op::partialbar_b_adj).add(c.op(Op::contract_h01), 1.0,
                                             -0.5));
  sb.residual("delta_kappa splits into adjoint pair",
              "twisted-codifferential-splitting", c.op(Op::delta_k),
              c.op(Op::partial_k_adj).add(c.op(Op::partialbar_k_adj)));
  sb.residual("delta_kappa contraction shift",
              "twisted-codifferential-contraction-shift", c.op(Op::delta_k),
              c.op(Op::delta_b).add(c.op(Op::contract_kappa), 1.0, -0.5));

  // Star commutations.
  sb.commute("twisted Laplacian commutes with star",
             "twisted-laplacian-commutes-with-star", c.op(Op::laplace_k),
             c.op(Op::star));
  sb.commute("twisted Laplacian commutes with d_kappa",
             "twisted-laplacian-commutes-with-d", c.op(Op::laplace_k),
             c.op(Op::d_k));
  sb.commute("twisted Laplacian commutes with delta_kappa",
             "twisted-laplacian-commutes-with-delta", c.op(Op::laplace_k),
             c.op(Op::delta_k));
  sb.residual("star intertwines d_kappa and delta_kappa",
              "star-intertwines-twisted-pair",
              c.op(Op::d_k).compose(c.op(Op::star)),
              c.op(Op::star).compose(c.op(Op::delta_k))
                  .compose(degree_sign(c, 0)));
  sb.residual("star intertwines delta_kappa and d_kappa",
              "star-intertwines-twisted-pair-reverse",
              c.op(Op::star).compose(c.op(Op::d_k)),
              c.op(Op::delta_k).compose(c.op(Op::star))
                  .compose(degree_sign(c, 1)));
  sb.residual("star intertwines basic and t Laplacians",
              "star-intertwines-basic-and-t-laplacians",
              c.op(Op::laplace_b).compose(c.op(Op::star)),
              c.op(Op::star).compose(c.op(Op::laplace_t)));
  sb.residual("star intertwines twisted Dolbeault pair",
              "star-intertwines-twisted-dolbeault",
              c.op(Op::star).compose(c.op(Op::partialbar_k)),
              c.op(Op::partial_k_adj).compose(c.op(Op::star))
                  .compose(degree_sign(c, 1)));
  sb.residual("star intertwines twisted Dolbeault adjoints",
              "star-intertwines-twisted-dolbeault-adjoint",
              c.op(Op::star).compose(c.op(Op::partialbar_k_adj)),
              c.op(Op::partial_k).compose(c.op(Op::star))
                  .compose(degree_sign(c, 0)));

  // Kaehler commutators, untwisted then twisted.
  sb.residual("commutator of Lambda with partial_B",
              "kaehler-commutator-lambda-partial",
              c.op(Op::lefschetz_adj).commutator(c.op(Op::partial_b)),
              c.op(Op::partialbar_t_adj).scaled(-kI));
  sb.residual("commutator of Lambda with partialbar_B",
              "kaehler-commutator-lambda-partialbar",
              c.op(Op::lefschetz_adj).commutator(c.op(Op::partialbar_b)),
              c.op(Op::partial_t_adj).scaled(kI));
  sb.residual("commutator of L with partial_B adjoint",
              "kaehler-commutator-l-partial-adjoint",
              c.op(Op::lefschetz).commutator(c.op(Op::partial_b_adj)),
              c.op(Op::partialbar_t).scaled(-kI));
  sb.residual("commutator of L with partialbar_B adjoint",
              "kaehler-commutator-l-partialbar-adjoint",
              c.op(Op::lefschetz).commutator(c.op(Op::partialbar_b_adj)),
              c.op(Op::partial_t).scaled(kI));
  for (Op z : {Op::d_b, Op::partial_b, Op::partialbar_b})
    sb.commute(std::string("L commutes with ") + op_name(z),
               "kaehler-vanishing-commutators", c.op(Op::lefschetz), c.op(z));
  for (Op z : {Op::delta_b, Op::partial_b_adj, Op::partialbar_b_adj})
    sb.commute(std::string("Lambda commutes with ") + op_name(z),
               "kaehler-vanishing-commutators", c.op(Op::lefschetz_adj),
               c.op(z));
  sb.residual("commutator of Lambda with partial_kappa",
              "twisted-kaehler-commutator-lambda-partial",
              c.op(Op::lefschetz_adj).commutator(c.op(Op::partial_k)),
              c.op(Op::partialbar_k_adj).scaled(-kI));
  sb.residual("commutator of Lambda with partialbar_kappa",
              "twisted-kaehler-commutator-lambda-partialbar",
              c.op(Op::lefschetz_adj).commutator(c.op(Op::partialbar_k)),
              c.op(Op::partial_k_adj).scaled(kI));
  sb.residual("commutator of L with partial_kappa adjoint",
              "twisted-kaehler-commutator-l-partial-adjoint",
              c.op(Op::lefschetz).commutator(c.op(Op::partial_k_adj)),
              c.op(Op::partialbar_k).scaled(-kI));
  sb.residual("commutator of L with partialbar_kappa adjoint",
              "twisted-kaehler-commutator-l-partialbar-adjoint",
              c.op(Op::lefschetz).commutator(c.op(Op::partialbar_k_adj)),
              c.op(Op::partial_k).scaled(kI));
  for (Op z : {Op::d_k, Op::partial_k, Op::partialbar_k})
    sb.commute(std::string("L commutes with ") + op_name(z),
               "twisted-kaehler-vanishing-commutators", c.op(Op::lefschetz),
               c.op(z));
  for (Op z : {Op::delta_k, Op::partial_k_adj, Op::partialbar_k_adj})
    sb.commute(std::string("Lambda commutes with ") + op_name(z),
               "twisted-kaehler-vanishing-commutators",
               c.op(Op::lefschetz_adj), c.op(z));

  // Box operators.
  sb.residual("twisted box operators agree", "twisted-box-operators-agree",
              c.op(Op::box_k), c.op(Op::boxbar_k));
  sb.residual("twisted Laplacian doubles the box",
              "twisted-laplacian-doubles-box", c.op(Op::laplace_k),
              c.op(Op::box_k).scaled(2.0));
  sb.commute("L commutes with the twisted Laplacian",
             "lefschetz-commutes-with-twisted-laplacian",
             c.op(Op::lefschetz), c.op(Op::laplace_k));

  // Degree-phase conjugation.
  sb.residual("conjugated differential as Dolbeault difference",
              "phase-conjugated-differential", c.op(Op::d_k_c),
              c.op(Op::partialbar_k).add(c.op(Op::partial_k), 1.0, -1.0)
                  .scaled(kI));
  sb.residual("d_kappa anticommutes with its conjugate",
              "conjugated-differential-anticommutes",
              c.op(Op::d_k).compose(c.op(Op::d_k_c)),
              c.op(Op::d_k_c).compose(c.op(Op::d_k)).scaled(-1.0));
  sb.residual("conjugated Laplacian is the twisted Laplacian",
              "conjugated-laplacian-agrees", c.op(Op::laplace_k_c),
              c.op(Op::laplace_k));
  sb.residual("conjugated codifferential adjoint route",
              "conjugated-codifferential-adjoint", c.op(Op::delta_k_c),
              c.op(Op::d_k_c).adjoint());

  // Lefschetz structure.
  {
    auto SLS =
        c.op(Op::star).compose(c.op(Op::lefschetz)).compose(c.op(Op::star));
    sb.residual("Lambda from graded star conjugation of L",
                "lambda-star-conjugation-graded", c.op(Op::lefschetz_adj),
                SLS.compose(degree_sign(c, 0)));
    auto acc = OperatorMatrix::zero(c.basis(), c.grid(), c.per_mode());
    for (int j = 0; j < n; ++j)
      acc = acc.add(frame_only(c, kI * c.basis().contract_gen(n + j) *
                                      c.basis().contract_gen(j)));
    sb.residual("Lambda equals Kaehler-form contraction",
                "lambda-as-contraction", c.op(Op::lefschetz_adj), acc);
  }
  {
    // [L, X contraction] = wedge by J X-flat, etc., over the real frame.
    double worst1 = 0, worst2 = 0, worst3 = 0, worst4 = 0;
    for (int j = 0; j < n; ++j) {
      auto iS = frame_only(c, c.basis().contract_S(j));
      auto iT = frame_only(c, c.basis().contract_T(j));
      auto eS = frame_only(c, c.basis().wedge_S(j));
      auto eT = frame_only(c, c.basis().wedge_T(j));
      const auto& L = c.op(Op::lefschetz);
      const auto& La = c.op(Op::lefschetz_adj);
      worst1 = std::max({worst1, op_residual(c, L.commutator(iS), eT),
                         op_residual(c, L.commutator(iT), eS.scaled(-1.0))});
      worst2 = std::max({worst2, op_residual(c, La.commutator(eS),
                                             iT.scaled(-1.0)),
                         op_residual(c, La.commutator(eT), iS)});
      auto zero = OperatorMatrix::zero(c.basis(), c.grid(), c.per_mode());
      worst3 = std::max({worst3, op_residual(c, L.commutator(eS), zero),
                         op_residual(c, L.commutator(eT), zero)});
      worst4 = std::max({worst4, op_residual(c, La.commutator(iS), zero),
                         op_residual(c, La.commutator(iT), zero)});
    }
    auto put = [&](const std::string& name, double v) {
      auto& e = rep.add(name, "lefschetz-contraction-identities");
      e.residual = v;
      e.tolerance = c.identity_tol();
      e.pass = v <= e.tolerance;
    };
    put("commutator of L with frame contractions", worst1);
    put("commutator of Lambda with frame wedges", worst2);
    put("L commutes with frame wedges", worst3);
    put("Lambda commutes with frame contractions", worst4);
  }

  // Grading.
  sb.residual("Laplacian preserves bidegree", "laplacian-preserves-bidegree",
              c.op(Op::laplace_k),
              c.op(Op::laplace_k).bidegree_component(c.basis(), 0, 0));
  sb.residual("box preserves bidegree", "box-preserves-bidegree",
              c.op(Op::boxbar_b),
              c.op(Op::boxbar_b).bidegree_component(c.basis(), 0, 0));
  sb.residual("partialbar_kappa raises s by one", "dolbeault-grading",
              c.op(Op::partialbar_k),
              c.op(Op::partialbar_k).bidegree_component(c.basis(), 0, 1));

  // Positivity of the Laplacian family.
  for (Op z : {Op::laplace_b, Op::laplace_t, Op::laplace_k, Op::boxbar_b,
               Op::boxbar_t, Op::boxbar_k}) {
    double mn = min_eigenvalue(c, c.op(z));
    auto& e = rep.add(std::string(op_name(z)) + " positive semidefinite",
                      "laplacian-blocks-psd");
    e.residual = std::max(0.0, -mn);
    e.tolerance = 1e-12 * std::max(1.0, c.op(z).norm());
    e.observed = std::to_string(mn);
    e.pass = e.residual <= e.tolerance;
  }

  // Collapse of the twistings on a minimal model.
  if (is_taut(c.model()) && c.model().mode_diagonal()) {
    sb.residual("minimal model: d_kappa equals d_B", "minimal-model-collapse",
                c.op(Op::d_k), c.op(Op::d_b));
    sb.residual("minimal model: Laplacians agree (B vs T)",
                "minimal-model-collapse", c.op(Op::laplace_b),
                c.op(Op::laplace_t));
    sb.residual("minimal model: Laplacians agree (B vs kappa)",
                "minimal-model-collapse", c.op(Op::laplace_b),
                c.op(Op::laplace_k));
  }

  return rep;
}

}  // namespace tbc

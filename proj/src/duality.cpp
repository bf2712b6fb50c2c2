#include "tbc/duality.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <functional>

namespace tbc {

namespace {

CheckReport make_report(const BasicComplex& c, const std::string& suite) {
  CheckReport rep;
  rep.suite = suite;
  rep.model_id = c.model().id();
  rep.N = c.N();
  rep.representation = c.per_mode() ? "per-mode" : "coupled";
  return rep;
}

// Does `map` carry span(K) bijectively onto span(W)?  Requires equal
// dimensions, full rank of the pairing, and the image lying inside span(W).
struct MappedRank {
  int rank = 0;
  double leak = 0;  // norm of the image component outside span(W)
};

MappedRank mapped_rank(const OperatorMatrix& map, const Eigen::MatrixXcd& K,
                       const Eigen::MatrixXcd& W, double tol) {
  MappedRank out;
  if (K.cols() == 0) return out;
  Eigen::MatrixXcd image(K.rows(), K.cols());
  for (int i = 0; i < K.cols(); ++i) image.col(i) = map.apply(K.col(i));
  if (W.cols() == 0) {
    out.leak = image.norm();
    return out;
  }
  Eigen::MatrixXcd pairing = W.adjoint() * image;
  out.rank = column_rank(pairing, tol);
  out.leak = (image - W * pairing).norm();
  return out;
}

MappedRank mapped_rank_vectors(
    const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& map,
    const Eigen::MatrixXcd& K, const Eigen::MatrixXcd& W, double tol) {
  MappedRank out;
  if (K.cols() == 0) return out;
  Eigen::MatrixXcd image(K.rows(), K.cols());
  for (int i = 0; i < K.cols(); ++i) image.col(i) = map(K.col(i));
  if (W.cols() == 0) {
    out.leak = image.norm();
    return out;
  }
  Eigen::MatrixXcd pairing = W.adjoint() * image;
  out.rank = column_rank(pairing, tol);
  out.leak = (image - W * pairing).norm();
  return out;
}

std::string dims_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

CheckReport poincare_check(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "poincare");
  const int q = c.codim();
  const auto& lap = c.op(Op::laplace_k);
  std::vector<KernelResult> kers(q + 1);
  for (int d = 0; d <= q; ++d)
    kers[d] = kernel_basis(c, lap, Slot::of_degree(d), tol);
  for (int d = 0; d <= q; ++d) {
    auto& e = rep.add("twisted degree " + std::to_string(d) + " vs " +
                          std::to_string(q - d),
                      "twisted-poincare-symmetry");
    e.expected = std::to_string(kers[q - d].dim);
    e.observed = std::to_string(kers[d].dim);
    auto mr = mapped_rank(c.op(Op::star), kers[d].basis, kers[q - d].basis,
                          tol);
    e.residual = mr.leak;
    e.tolerance = 1e-8;
    e.pass = kers[d].dim == kers[q - d].dim && mr.rank == kers[d].dim &&
             mr.leak <= 1e-8;
  }
  return rep;
}

CheckReport twisted_duality_check(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "twisted-duality");
  const int q = c.codim(), n = c.n();
  std::vector<KernelResult> kb(q + 1), kt(q + 1);
  for (int d = 0; d <= q; ++d) {
    kb[d] = kernel_basis(c, c.op(Op::laplace_b), Slot::of_degree(d), tol);
    kt[d] = kernel_basis(c, c.op(Op::laplace_t), Slot::of_degree(d), tol);
  }
  for (int d = 0; d <= q; ++d) {
    // star carries t-flavor harmonics of degree d onto basic-flavor
    // harmonics of degree q-d.
    auto& e = rep.add("basic degree " + std::to_string(q - d) +
                          " vs t-flavor degree " + std::to_string(d),
                      "basic-vs-t-duality");
    e.expected = std::to_string(kt[d].dim);
    e.observed = std::to_string(kb[q - d].dim);
    auto mr = mapped_rank(c.op(Op::star), kt[d].basis, kb[q - d].basis, tol);
    e.residual = mr.leak;
    e.tolerance = 1e-8;
    e.pass = kb[q - d].dim == kt[d].dim && mr.rank == kt[d].dim &&
             mr.leak <= 1e-8;
  }
  // Bigraded refinement: h_B^{r,s} = h_T^{n-r,n-s} via conjugate-star.
  for (int r = 0; r <= n; ++r)
    for (int s = 0; s <= n; ++s) {
      auto kbrs =
          kernel_basis(c, c.op(Op::boxbar_b), Slot::bidegree(r, s), tol);
      auto ktrs = kernel_basis(c, c.op(Op::boxbar_t),
                               Slot::bidegree(n - r, n - s), tol);
      auto& e = rep.add("Dolbeault (" + std::to_string(r) + "," +
                            std::to_string(s) + ") vs t-flavor (" +
                            std::to_string(n - r) + "," +
                            std::to_string(n - s) + ")",
                        "basic-vs-t-serre-duality");
      e.expected = std::to_string(ktrs.dim);
      e.observed = std::to_string(kbrs.dim);
      auto sharp = [&](const Eigen::VectorXcd& v) {
        return c.op(Op::star).apply(c.conjugate_vector(v));
      };
      auto mr = mapped_rank_vectors(sharp, kbrs.basis, ktrs.basis, tol);
      e.residual = mr.leak;
      e.tolerance = 1e-8;
      e.pass = kbrs.dim == ktrs.dim && mr.rank == kbrs.dim && mr.leak <= 1e-8;
    }
  return rep;
}

CheckReport kodaira_serre_check(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "kodaira-serre");
  const int n = c.n();
  const auto& box = c.op(Op::boxbar_k);
  auto sharp = [&](const Eigen::VectorXcd& v) {
    return c.op(Op::star).apply(c.conjugate_vector(v));
  };
  for (int r = 0; r <= n; ++r)
    for (int s = 0; s <= n; ++s) {
      auto krs = kernel_basis(c, box, Slot::bidegree(r, s), tol);
      auto kdual = kernel_basis(c, box, Slot::bidegree(n - r, n - s), tol);
      auto& e = rep.add("twisted Dolbeault (" + std::to_string(r) + "," +
                            std::to_string(s) + ") vs (" +
                            std::to_string(n - r) + "," +
                            std::to_string(n - s) + ")",
                        "twisted-serre-duality");
      e.expected = std::to_string(kdual.dim);
      e.observed = std::to_string(krs.dim);
      auto mr = mapped_rank_vectors(sharp, krs.basis, kdual.basis, tol);
      e.residual = mr.leak;
      e.tolerance = 1e-8;
      e.pass = krs.dim == kdual.dim && mr.rank == krs.dim && mr.leak <= 1e-8;
    }
  return rep;
}

CheckReport hodge_sum_check(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "hodge-sum");
  auto table = cohomology(c, Flavor::kappa, tol);
  for (int l = 0; l <= c.codim(); ++l) {
    int sum = 0;
    std::string parts;
    for (int r = 0; r <= c.n(); ++r) {
      int s = l - r;
      if (s < 0 || s > c.n()) continue;
      sum += table.bigraded[r][s];
      parts += (parts.empty() ? "" : "+") +
               std::to_string(table.bigraded[r][s]);
    }
    auto& e = rep.add("degree " + std::to_string(l) + " refines",
                      "graded-dimension-refines-into-bidegrees");
    e.expected = std::to_string(table.graded[l]);
    e.observed = parts + "=" + std::to_string(sum);
    e.pass = sum == table.graded[l];
  }
  for (int r = 0; r <= c.n(); ++r)
    for (int s = r + 1; s <= c.n(); ++s) {
      auto& e = rep.add("conjugation symmetry (" + std::to_string(r) + "," +
                            std::to_string(s) + ")",
                        "bigraded-conjugation-symmetry");
      e.expected = std::to_string(table.bigraded[s][r]);
      e.observed = std::to_string(table.bigraded[r][s]);
      e.pass = table.bigraded[r][s] == table.bigraded[s][r];
    }
  return rep;
}

CheckReport tautness_check(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "tautness");
  auto k0 = kernel_basis(c, c.op(Op::laplace_k), Slot::of_degree(0), tol);
  auto kq = kernel_basis(c, c.op(Op::laplace_k), Slot::of_degree(c.codim()),
                         tol);
  bool taut = is_taut(c.model());
  auto& e = rep.add("tautness equivalence", "tautness-vs-twisted-kernel");
  e.expected = taut ? "nonzero kernels" : "zero kernels";
  e.observed = "h0=" + std::to_string(k0.dim) +
               " hq=" + std::to_string(kq.dim);
  e.pass = (taut == (k0.dim != 0)) && (taut == (kq.dim != 0));
  return rep;
}

CheckReport hard_lefschetz_check(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "hard-lefschetz");
  const int q = c.codim(), n = c.n();
  const auto& lap = c.op(Op::laplace_k);
  const auto& L = c.op(Op::lefschetz);
  std::vector<KernelResult> kers(q + 1);
  for (int d = 0; d <= q; ++d)
    kers[d] = kernel_basis(c, lap, Slot::of_degree(d), tol);

  for (int r = 0; r <= q; ++r)
    for (int s = 1; r + 2 * s <= q; ++s) {
      OperatorMatrix Ls = L;
      for (int i = 1; i < s; ++i) Ls = Ls.compose(L);
      auto mr = mapped_rank(Ls, kers[r].basis, kers[r + 2 * s].basis, tol);
      bool want_inj = s <= n - r;
      bool want_surj = s >= n - r;
      if (!want_inj && !want_surj) continue;
      std::string what = want_inj && want_surj ? "bijective"
                         : want_inj            ? "injective"
                                               : "surjective";
      auto& e = rep.add("L^" + std::to_string(s) + " on twisted degree " +
                            std::to_string(r) + " is " + what,
                        "lefschetz-power-rank");
      e.expected = want_inj ? std::to_string(kers[r].dim)
                            : std::to_string(kers[r + 2 * s].dim);
      e.observed = std::to_string(mr.rank);
      e.residual = mr.leak;
      e.tolerance = 1e-8;
      bool ok = mr.leak <= 1e-8;
      if (want_inj && mr.rank != kers[r].dim) ok = false;
      if (want_surj && mr.rank != kers[r + 2 * s].dim) ok = false;
      e.pass = ok;
    }

  // Primitive-harmonic expansion of every degree.
  const auto& Lam = c.op(Op::lefschetz_adj);
  for (int r = 0; r <= q; ++r) {
    std::vector<int> dims;
    Eigen::MatrixXcd spanning(kers[r].basis.rows(), 0);
    for (int s = 0; r - 2 * s >= 0; ++s) {
      const auto& K = kers[r - 2 * s];
      // primitive part of the harmonic space
      Eigen::MatrixXcd lk(K.basis.rows(), K.dim);
      for (int i = 0; i < K.dim; ++i) lk.col(i) = Lam.apply(K.basis.col(i));
      Eigen::MatrixXcd Y = null_basis(K.dim ? Eigen::MatrixXcd(lk)
                                            : Eigen::MatrixXcd(0, 0),
                                      tol);
      Eigen::MatrixXcd img =
          K.dim ? Eigen::MatrixXcd(K.basis * Y) : Eigen::MatrixXcd(
                                                       K.basis.rows(), 0);
      for (int i = 0; i < s; ++i) {
        for (int cidx = 0; cidx < img.cols(); ++cidx)
          img.col(cidx) = c.op(Op::lefschetz).apply(img.col(cidx));
      }
      dims.push_back(column_rank(img, tol));
      Eigen::MatrixXcd grown(spanning.rows(), spanning.cols() + img.cols());
      grown << spanning, img;
      spanning = std::move(grown);
    }
    int sum = 0;
    for (int d : dims) sum += d;
    int span_rank = column_rank(spanning, tol);
    auto& e = rep.add("primitive expansion of twisted degree " +
                          std::to_string(r),
                      "primitive-harmonic-expansion");
    e.expected = std::to_string(kers[r].dim);
    e.observed = dims_str(dims) + " span " + std::to_string(span_rank);
    e.pass = sum == kers[r].dim && span_rank == kers[r].dim;
  }
  return rep;
}

CheckReport primitive_decomposition_check(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "primitive-decomposition");
  const int q = c.codim(), n = c.n();
  // L and its adjoint act on the coframe only, with the same block at every
  // mode, so the pointwise statements reduce to the frame algebra.
  Eigen::MatrixXcd L = c.basis().lefschetz_L();
  Eigen::MatrixXcd Lam = c.basis().lefschetz_Lambda();
  const int D = c.basis().dim();

  auto degree_cols = [&](const Eigen::MatrixXcd& A, int d) {
    auto idx = c.basis().degree_indices(d);
    Eigen::MatrixXcd sub(A.rows(), idx.size());
    for (size_t i = 0; i < idx.size(); ++i) sub.col(i) = A.col(idx[i]);
    return sub;
  };
  auto embed_degree = [&](int d) {
    auto idx = c.basis().degree_indices(d);
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(D, idx.size());
    for (size_t i = 0; i < idx.size(); ++i) E(idx[i], i) = 1.0;
    return E;
  };

  // Primitive ranks per degree; vanishing above the middle dimension.
  std::vector<Eigen::MatrixXcd> prim(q + 1);
  for (int r = 0; r <= q; ++r) {
    Eigen::MatrixXcd E = embed_degree(r);
    prim[r] = E * null_basis(Lam * E, tol);
  }
  for (int r = n + 1; r <= q; ++r) {
    auto& e = rep.add("no primitive forms in degree " + std::to_string(r),
                      "primitive-vanishing-above-middle");
    e.expected = "0";
    e.observed = std::to_string(prim[r].cols());
    e.pass = prim[r].cols() == 0;
  }
  for (int r = 0; r <= n; ++r) {
    int expect = int(c.basis().degree_indices(r).size()) -
                 (r >= 2 ? int(c.basis().degree_indices(r - 2).size()) : 0);
    auto& e = rep.add("primitive rank in degree " + std::to_string(r),
                      "primitive-rank-count");
    e.expected = std::to_string(expect);
    e.observed = std::to_string(prim[r].cols());
    e.pass = int(prim[r].cols()) == expect;
  }

  // Windows of injectivity and surjectivity of Lefschetz powers.
  for (int r = 0; r <= q; ++r)
    for (int s = 1; r + 2 * s <= q; ++s) {
      Eigen::MatrixXcd Ls = Eigen::MatrixXcd::Identity(D, D);
      for (int i = 0; i < s; ++i) Ls = L * Ls;
      Eigen::MatrixXcd map = Ls * embed_degree(r);
      int rk = column_rank(map, tol);
      int dom = int(c.basis().degree_indices(r).size());
      int codom = int(c.basis().degree_indices(r + 2 * s).size());
      if (s <= n - r) {
        auto& e = rep.add("L^" + std::to_string(s) + " injective on degree " +
                              std::to_string(r),
                          "lefschetz-injective-window");
        e.expected = std::to_string(dom);
        e.observed = std::to_string(rk);
        e.pass = rk == dom;
      }
      if (s >= n - r) {
        auto& e = rep.add("L^" + std::to_string(s) + " surjective on degree " +
                              std::to_string(r),
                          "lefschetz-surjective-window");
        e.expected = std::to_string(codom);
        e.observed = std::to_string(rk);
        e.pass = rk == codom;
      }
    }

  // Powers on primitive forms: nonzero through the window, zero beyond.
  for (int r = 0; r <= n; ++r) {
    if (prim[r].cols() == 0) continue;
    Eigen::MatrixXcd img = prim[r];
    int s = 0;
    bool ok = true;
    for (; s <= n - r; ++s) {
      if (column_rank(img, tol) != prim[r].cols()) ok = false;
      img = L * img;
    }
    double beyond = img.norm();  // L^{n-r+1} on primitives
    auto& e = rep.add("Lefschetz window on primitives of degree " +
                          std::to_string(r),
                      "primitive-power-window");
    e.residual = beyond;
    e.tolerance = 1e-10;
    e.observed = ok ? "injective through window" : "rank drop inside window";
    e.pass = ok && beyond <= 1e-10;
  }

  // Every degree splits as a sum of Lefschetz images of primitives.
  for (int r = 0; r <= q; ++r) {
    long total = 0;
    std::vector<int> dims;
    Eigen::MatrixXcd spanning(D, 0);
    for (int s = 0; r - 2 * s >= 0; ++s) {
      Eigen::MatrixXcd img = prim[r - 2 * s];
      for (int i = 0; i < s; ++i) img = L * img;
      int rk = column_rank(img, tol);
      dims.push_back(rk);
      Eigen::MatrixXcd grown(D, spanning.cols() + img.cols());
      grown << spanning, img;
      spanning = std::move(grown);
      total += rk;
    }
    int dim_r = int(c.basis().degree_indices(r).size());
    auto& e = rep.add("primitive expansion of form degree " +
                          std::to_string(r),
                      "primitive-form-expansion");
    e.expected = std::to_string(dim_r);
    e.observed = dims_str(dims) + " span " +
                 std::to_string(column_rank(spanning, tol));
    e.pass = total == dim_r && column_rank(spanning, tol) == dim_r;
  }
  return rep;
}

CheckReport ddc_lemma_check(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "ddc-subspaces");
  const int q = c.codim();
  const long M = c.grid().count();
  const auto& dk = c.op(Op::d_k);
  const auto& dkc = c.op(Op::d_k_c);
  auto ddc = dk.compose(dkc);

  auto block_cols = [&](const OperatorMatrix& A, long mode,
                        const std::vector<int>& cols) {
    Eigen::MatrixXcd sub(c.basis().dim(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
      sub.col(j) = A.block(mode).col(cols[j]);
    return sub;
  };

  for (int r = 1; r <= q; ++r) {
    auto below = c.basis().degree_indices(r - 1);
    auto below2 = r >= 2 ? c.basis().degree_indices(r - 2) : std::vector<int>{};
    double worst = 0;
    long dim1 = 0, dim2 = 0;
    auto handle = [&](const Eigen::MatrixXcd& dkM, const Eigen::MatrixXcd& U,
                      const Eigen::MatrixXcd& S2cols) {
      // ker d inside span(U): null space of d restricted to the span.
      Eigen::MatrixXcd S1;
      if (U.cols() > 0) {
        Eigen::MatrixXcd dU = dkM * U;
        Eigen::MatrixXcd Y = null_basis(dU, tol);
        S1 = range_basis(U * Y, tol);
      } else {
        S1 = Eigen::MatrixXcd::Zero(U.rows(), 0);
      }
      Eigen::MatrixXcd S2 = range_basis(S2cols, tol);
      worst = std::max(worst, projector_distance(S1, S2));
      dim1 += S1.cols();
      dim2 += S2.cols();
    };
    if (c.per_mode()) {
      for (long m = 0; m < M; ++m)
        handle(dk.block(m), range_basis(block_cols(dkc, m, below), tol),
               r >= 2 ? block_cols(ddc, m, below2)
                      : Eigen::MatrixXcd::Zero(c.basis().dim(), 0));
    } else {
      std::vector<long> bidx, b2idx;
      for (int mono : below)
        for (long m = 0; m < M; ++m) bidx.push_back(mono * M + m);
      for (int mono : below2)
        for (long m = 0; m < M; ++m) b2idx.push_back(mono * M + m);
      Eigen::MatrixXcd dkcCols(dkc.coupled().rows(), bidx.size());
      for (size_t j = 0; j < bidx.size(); ++j)
        dkcCols.col(j) = dkc.coupled().col(bidx[j]);
      Eigen::MatrixXcd ddcCols(ddc.coupled().rows(), b2idx.size());
      for (size_t j = 0; j < b2idx.size(); ++j)
        ddcCols.col(j) = ddc.coupled().col(b2idx[j]);
      handle(dk.coupled(), range_basis(dkcCols, tol), ddcCols);
    }
    auto& e = rep.add("closed conjugate-image subspace, degree " +
                          std::to_string(r),
                      "closed-meets-conjugate-image");
    e.expected = std::to_string(dim2);
    e.observed = std::to_string(dim1);
    e.residual = worst;
    e.tolerance = 1e-10;
    e.pass = dim1 == dim2 && worst <= 1e-10;
  }
  return rep;
}

CheckReport holomorphic_harmonic_check(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "holomorphic-harmonic");
  const int n = c.n();
  const long M = c.grid().count();
  const auto& dbk = c.op(Op::partialbar_k);
  for (int r = 0; r <= n; ++r) {
    auto harm = kernel_basis(c, c.op(Op::laplace_k), Slot::bidegree(r, 0),
                             tol);
    auto monos = c.basis().bidegree_indices(r, 0);
    // Kernel of the twisted Dolbeault operator on the slot.
    double worst = 0;
    long hol = 0;
    Eigen::MatrixXcd holbasis(c.basis().dim() * M, 0);
    auto collect = [&](const Eigen::MatrixXcd& cols,
                       const std::vector<long>& idx) {
      Eigen::MatrixXcd Y = null_basis(cols, tol);
      Eigen::MatrixXcd emb =
          Eigen::MatrixXcd::Zero(c.basis().dim() * M, Y.cols());
      for (int cc = 0; cc < Y.cols(); ++cc)
        for (size_t i = 0; i < idx.size(); ++i)
          emb(idx[i], cc) = Y(i, cc);
      Eigen::MatrixXcd grown(emb.rows(), holbasis.cols() + emb.cols());
      grown << holbasis, emb;
      holbasis = std::move(grown);
      hol += Y.cols();
    };
    if (c.per_mode()) {
      for (long m = 0; m < M; ++m) {
        Eigen::MatrixXcd cols(c.basis().dim(), monos.size());
        for (size_t j = 0; j < monos.size(); ++j)
          cols.col(j) = dbk.block(m).col(monos[j]);
        std::vector<long> idx;
        for (int mono : monos) idx.push_back(mono * M + m);
        collect(cols, idx);
      }
    } else {
      std::vector<long> idx;
      for (int mono : monos)
        for (long m = 0; m < M; ++m) idx.push_back(mono * M + m);
      Eigen::MatrixXcd cols(dbk.coupled().rows(), idx.size());
      for (size_t j = 0; j < idx.size(); ++j)
        cols.col(j) = dbk.coupled().col(idx[j]);
      collect(cols, idx);
    }
    worst = projector_distance(holbasis, harm.basis);
    auto& e = rep.add("type (" + std::to_string(r) +
                          ",0): closed equals harmonic",
                      "holomorphic-equals-harmonic");
    e.expected = std::to_string(harm.dim);
    e.observed = std::to_string(hol);
    e.residual = worst;
    e.tolerance = 1e-8;
    e.pass = hol == harm.dim && worst <= 1e-8;
  }
  return rep;
}

CheckReport negative_controls(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "negative-controls");
  if (is_taut(c.model())) return rep;  // controls target nontaut models
  auto tb = cohomology(c, Flavor::B, tol);
  {
    bool symmetric = true;
    for (int r = 0; r <= c.codim(); ++r)
      if (tb.graded[r] != tb.graded[c.codim() - r]) symmetric = false;
    auto& e = rep.add("untwisted Poincare symmetry breaks",
                      "untwisted-poincare-control");
    e.expected = "asymmetric";
    e.observed = symmetric ? "symmetric" : "asymmetric " +
                                               dims_str(tb.graded);
    e.pass = !symmetric;
  }
  {
    bool serre = true, conj = true;
    for (int r = 0; r <= c.n(); ++r)
      for (int s = 0; s <= c.n(); ++s) {
        if (tb.bigraded[r][s] != tb.bigraded[c.n() - r][c.n() - s])
          serre = false;
        if (tb.bigraded[r][s] != tb.bigraded[s][r]) conj = false;
      }
    auto& e = rep.add("untwisted Serre symmetry breaks",
                      "untwisted-serre-control");
    e.expected = "asymmetric";
    e.observed = serre ? "symmetric" : "asymmetric";
    e.pass = !serre;
    auto& e2 = rep.add("untwisted conjugation symmetry breaks",
                       "untwisted-conjugation-control");
    e2.expected = "asymmetric";
    e2.observed = conj ? "symmetric" : "asymmetric";
    e2.pass = !conj;
  }
  return rep;
}

CheckReport duality_suite(const BasicComplex& c, double tol) {
  auto rep = make_report(c, "dualities");
  for (const CheckReport& sub :
       {poincare_check(c, tol), twisted_duality_check(c, tol),
        kodaira_serre_check(c, tol), hodge_sum_check(c, tol),
        tautness_check(c, tol), hard_lefschetz_check(c, tol),
        primitive_decomposition_check(c, tol), ddc_lemma_check(c, tol),
        holomorphic_harmonic_check(c, tol), negative_controls(c, tol)}) {
    for (const auto& e : sub.entries) {
      rep.entries.push_back(e);
      rep.entries.back().name = sub.suite + ": " + e.name;
    }
  }
  return rep;
}

}  // namespace tbc

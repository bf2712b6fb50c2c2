#pragma once

#include "tbc/complex.hpp"
#include "tbc/report.hpp"

namespace tbc {

enum class RoughVariant { tr, T, Tbar };

/// Rough Laplacian of the requested variant.  All three are Hermitian
/// positive semidefinite; the mean-curvature drift of the frame formula
/// cancels the frame divergence exactly on these models, leaving pure
/// second-order compositions of covariant derivatives.
OperatorMatrix rough_laplacian(const BasicComplex& ctx, RoughVariant v);

/// Zeroth-order curvature endomorphism built from the per-factor Gauss
/// curvature.
OperatorMatrix curvature_endomorphism(const BasicComplex& ctx);

/// Lie-derivative correction along the mean-curvature vector: the Lie
/// derivative (Cartan formula) minus the covariant derivative.
OperatorMatrix lie_correction(const BasicComplex& ctx);

/// Verifies the rough-Laplacian decompositions of both graded Laplacians,
/// the Dolbeault box expansions with their curvature terms, the type (r,0)
/// and (r,n) reductions, and the adjoint-wedge reductions.  Identities whose
/// textbook form assumes the coclosed mean-curvature gauge carry the gauge
/// defect explicitly, so every entry closes at machine precision on every
/// model; the gauge residual itself is reported.
CheckReport weitzenbock_residuals(const BasicComplex& ctx);

/// Evaluates the curvature-positivity hypotheses of the vanishing theorems
/// on the model, derives the implied vanishing predictions, and cross-checks
/// them against computed kernel dimensions.  Hypotheses that fail are
/// reported as inconclusive and never contradict the tables.
CheckReport vanishing_probe(const BasicComplex& ctx, double kernel_tol = 1e-9);

}  // namespace tbc

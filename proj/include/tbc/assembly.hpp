#pragma once

#include "tbc/complex.hpp"
#include "tbc/report.hpp"

namespace tbc {

/// Runs the full catalog of operator identities as matrix residual checks:
/// differential structure, adjoint formula routes, star commutations, the
/// Kaehler commutator package, box/Laplacian relations, the degree-phase
/// conjugation algebra, and positivity of the Laplacian blocks.
CheckReport identity_suite(const BasicComplex& ctx);

/// Relative residual between two realized operators, honoring the model's
/// truncation margin.
double op_residual(const BasicComplex& ctx, const OperatorMatrix& a,
                   const OperatorMatrix& b);

}  // namespace tbc

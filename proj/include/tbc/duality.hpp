#pragma once

#include "tbc/complex.hpp"
#include "tbc/harmonic.hpp"
#include "tbc/report.hpp"

namespace tbc {

/// Twisted Poincare symmetry: h^r = h^{q-r} for the twisted flavor, with the
/// star operator carrying harmonics onto harmonics in complementary degree.
CheckReport poincare_check(const BasicComplex& ctx, double tol = 1e-9);

/// Untwisted duality: h_B^r = h_T^{q-r} (graded) and the bigraded analogue,
/// realized by the star operator between the two harmonic families.
CheckReport twisted_duality_check(const BasicComplex& ctx, double tol = 1e-9);

/// Serre-type symmetry of the twisted Dolbeault table via conjugate-star.
CheckReport kodaira_serre_check(const BasicComplex& ctx, double tol = 1e-9);

/// Graded dimensions refine into bidegrees, and the table is conjugation
/// symmetric.
CheckReport hodge_sum_check(const BasicComplex& ctx, double tol = 1e-9);

/// Tautness is equivalent to a nonvanishing twisted kernel in degree 0 / q.
CheckReport tautness_check(const BasicComplex& ctx, double tol = 1e-9);

/// Rank conditions of Lefschetz powers between twisted harmonic spaces and
/// the primitive-harmonic dimension bookkeeping.
CheckReport hard_lefschetz_check(const BasicComplex& ctx, double tol = 1e-9);

/// Pointwise Lefschetz structure of the form spaces: primitive ranks,
/// injectivity/surjectivity windows of Lefschetz powers, and the primitive
/// expansion of every degree.
CheckReport primitive_decomposition_check(const BasicComplex& ctx,
                                          double tol = 1e-9);

/// Subspace identity: closed forms inside the conjugated image coincide with
/// the image of the composed second-order operator.
CheckReport ddc_lemma_check(const BasicComplex& ctx, double tol = 1e-9);

/// On (r,0), the kernel of the twisted Dolbeault operator coincides with the
/// twisted harmonic space.
CheckReport holomorphic_harmonic_check(const BasicComplex& ctx,
                                       double tol = 1e-9);

/// Negative controls on nontaut models: the untwisted tables break the
/// symmetries the twisted tables satisfy.  Entries pass when the expected
/// asymmetry is observed.
CheckReport negative_controls(const BasicComplex& ctx, double tol = 1e-9);

/// All of the above in one report.
CheckReport duality_suite(const BasicComplex& ctx, double tol = 1e-9);

}  // namespace tbc

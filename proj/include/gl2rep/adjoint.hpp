#pragma once

#include "gl2rep/weights.hpp"

namespace gl2rep {

/// The adjoint comodule of GL2 on the basis e11, e12, e21, e22, assembled by
/// symbolic conjugation g e_ij g^-1 with g the generic matrix and g^-1 its
/// explicit adjugate over D.
Comodule adjoint_gl2_points(Ring ring);

/// The same comodule from the coordinate construction: the two coactions
/// Delta and Delta^-1 on A[z_ij] composed through multiplication, restricted
/// to I/I^2 on the basis t1, e_x, e_y, t2, then dualized via the transpose
/// inverse and identified with gl2 by T1, x, y, T2 |-> e11, e12, e21, e22.
Comodule adjoint_gl2_coords(Ring ring);

/// Entrywise equality of the two constructions, comodule axioms, and the
/// counit sanity of the auxiliary coactions.
Report adjoint_equality(Ring ring);

/// Restrictions of the adjoint to k[N] and k[T]: the two block matrices,
/// the weight multiset {(0,0), (-1,1), (1,-1), (0,0)}, the roots +-(1,-1),
/// and the refined decomposition into {e11, e22} and {e12, e21}.
Report adjoint_restrictions(Ring ring);

/// The adjoint comodule of SL2 on the basis x, H, y over k[S], obtained by
/// conjugating the span {e12, e11 - e22, e21} and setting D = 1.
Comodule adjoint_sl2(Ring ring);

/// sl2-closure inside gl2, comodule axioms over k[S], the SL2 weights
/// [2, 0, -2], and the refined decomposition {x, y} + {H}.
Report adjoint_sl2_check(Ring ring);

}  // namespace gl2rep

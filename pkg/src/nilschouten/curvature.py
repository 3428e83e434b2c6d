"""Ricci curvature of the left-invariant metric, from structure constants.

Two entry points compute the Ricci tensor.  The general four-term formula

    ric(u, v) = -1/2 B(u, v) - 1/2 tr(ad_u ad*_v) - 1/4 tr(J_u J_v)
                - 1/2 (<ad_H u, v> + <ad_H v, u>)

keeps the Killing-form and mean-curvature terms; the nilpotent two-term
formula drops them because B and H vanish identically on nilpotent
algebras.  Keeping both enables an exact agreement test that guards the
-1/2 and -1/4 coefficients against sign errors.  Nilpotency is not
re-verified here: deciding it needs a parameter sample, and the built-in
catalog guarantees it.

The mean-curvature term is implemented with the sign written above; its
convention varies across the literature, and since H vanishes identically
on every algebra this package ships, the choice is untestable here.

In the orthonormal basis the musical isomorphism is the identity on
matrices, so the Ricci operator and the (0,2) Ricci tensor share one
matrix; ``ricci_operator`` exists so the distinction stays visible in the
interface.  Trace convention: tr(A compose B) = sum_{i,j} A[i][j]B[j][i].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .liealg import (
    Matrix,
    MetricLieAlgebra,
    mat_add,
    mat_trace,
    trace_product,
)
from .ratpoly import Polynomial

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class CurvatureData:
    """Ricci tensor, Ricci operator and scalar curvature of one algebra."""

    ricci_tensor: Matrix
    ricci_operator: Matrix
    scalar: Polynomial


def ricci_nilpotent_from_tensor(tensor: list) -> Matrix:
    """Two-term Ricci matrix from an (evaluated or symbolic) structure tensor.

    Generic over the scalar ring, so the same code produces the polynomial
    matrices of the symbolic pipeline and the numeric matrices the
    feasibility oracle works with.
    """
    n = len(tensor)
    # ad_{e_i}[k][j] = c[i][j][k];  J_{e_i}[k][j] = c[j][k][i]
    ads = [[[tensor[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]
    jops = [[[tensor[j][k][i] for j in range(n)] for k in range(n)] for i in range(n)]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            # tr(ad_u ad*_v) = sum of entrywise products of ad_u and ad_v
            frob = Fraction(0)
            for k in range(n):
                for l in range(n):
                    frob = frob + ads[i][k][l] * ads[j][k][l]
            jtrace = trace_product(jops[i], jops[j])
            row.append(-_HALF * frob + -_QUARTER * jtrace)
        out.append(row)
    return out


def ricci_tensor_nilpotent(g: MetricLieAlgebra) -> Matrix:
    """ric(v_i, v_j) by the nilpotent two-term formula, as a Polynomial matrix."""
    return ricci_nilpotent_from_tensor(g.c)


def ricci_tensor_general(g: MetricLieAlgebra) -> Matrix:
    """ric(v_i, v_j) by the four-term formula with Killing and ad_H terms."""
    n = g.dim
    base = ricci_tensor_nilpotent(g)
    killing = g.killing_form()
    ad_h = g.ad_matrix(g.mean_curvature_vector())
    extra = [
        [
            -_HALF * killing[i][j] + -_HALF * (ad_h[j][i] + ad_h[i][j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return mat_add(base, extra)


def ricci_operator(g: MetricLieAlgebra) -> Matrix:
    """Matrix of the Ricci operator Ric, with ric(u, v) = <Ric u, v>.

    Equal to ricci_tensor_nilpotent(g) entry by entry: raising an index
    with an orthonormal inner product does not change the matrix.
    """
    return ricci_tensor_nilpotent(g)


def scalar_curvature(g: MetricLieAlgebra) -> Polynomial:
    """Trace of the Ricci operator."""
    return mat_trace(ricci_operator(g))


def curvature_data(g: MetricLieAlgebra) -> CurvatureData:
    ric = ricci_tensor_nilpotent(g)
    return CurvatureData(
        ricci_tensor=ric,
        ricci_operator=[list(row) for row in ric],
        scalar=mat_trace(ric),
    )

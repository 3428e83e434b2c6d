"""Schouten-like metrics, algebraic Schouten solitons and nilsolitons.

The candidate endomorphism is D = Ric - (lambda0*s + c)*Id with s the
scalar curvature and lambda0, c treated as fresh polynomial parameters
(serialized "lambda0" and "c").  The metric is Schouten-like exactly when
D is a derivation, i.e. every residual

    D[v_i, v_j] - [D v_i, v_j] - [v_i, D v_j]

vanishes.  Collecting the nonzero residual coordinates, sign-normalized
and deduplicated, yields the obstruction system: a finite set of
polynomials in the structure parameters together with lambda0 and c whose
common real vanishing (at admissible parameter values) characterizes the
algebraic Schouten solitons.

The numeric oracle is deliberately independent of any per-algebra case
analysis.  At a sample, lambda0 and c enter only through mu = lambda0*s + c,
and for fixed real s that combination ranges over all reals; so existence
of (lambda0, c) is equivalent to existence of a single real mu with
Ric - mu*Id a derivation (nilsolitons are the same question, being the
lambda0 = 0 special case).  With D = Ric - mu*Id the residual of the pair
(i, j) is affine in mu:

    residual_ij(mu) = residual_ij(Ric) + mu * [v_i, v_j]

because Id[X, Y] - [Id X, Y] - [X, Id Y] = -[X, Y].  Stacking all
coordinates gives an overdetermined linear problem r0 + mu*r1 = 0: any
nonzero coordinate of r1 pins the unique candidate mu, and checking the
remaining coordinates decides feasibility exactly.  Float mode instead
takes the least-squares mu and compares the residual norm against an
absolute tolerance of 1e-10 (the systems are 5x5 with entries far below
the scale where double precision could blur that bound).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Mapping, Sequence

from .curvature import ricci_nilpotent_from_tensor, ricci_operator, scalar_curvature
from .liealg import (
    Matrix,
    MetricLieAlgebra,
    Vector,
    basis_vector,
    is_zero_scalar,
    mat_is_symmetric,
    mat_column,
    vec_sub,
)
from .ratpoly import Polynomial

LAMBDA0 = "lambda0"
SOLITON_CONSTANT = "c"

FLOAT_TOLERANCE = 1e-10


class NotNilpotentAtSampleError(ValueError):
    """The evaluated algebra is not nilpotent, so the two-term Ricci formula
    (and with it the soliton analysis) does not apply."""


@dataclass(frozen=True)
class CandidateDerivation:
    """Matrix of X -> (Ric - (lambda0*s + c) Id) X over the extended ring."""

    matrix: Matrix


@dataclass(frozen=True)
class ObstructionSystem:
    """Sign-normalized generators whose common vanishing is the soliton condition.

    ``provenance[k]`` records the 1-based bracket pair (i, j) and coordinate
    index of the residual the k-th generator was first collected from.
    """

    generators: tuple[Polynomial, ...]
    provenance: tuple[tuple[tuple[int, int], int], ...]

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class SolitonVerdict:
    """Outcome of the numeric feasibility decision at one sample.

    In exact mode ``witness_mu`` is a Fraction (or QuadRat for samples in a
    quadratic extension); in float mode it is a float.  ``residual_norm``
    is the Euclidean norm of the stacked residual at the best mu, reported
    as a float even when the decision itself was exact.
    """

    status: Literal["feasible", "infeasible"]
    witness_mu: object | None
    witness_d: Matrix | None
    residual_norm: float

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


# -- symbolic side -----------------------------------------------------------


def candidate_derivation(g: MetricLieAlgebra) -> CandidateDerivation:
    """D = Ric - (lambda0*s + c) Id as a matrix over params + {lambda0, c}."""
    reserved = {LAMBDA0, SOLITON_CONSTANT}.intersection(g.parameters())
    if reserved:
        raise ValueError(
            f"algebra parameters collide with soliton constants: {sorted(reserved)}"
        )
    ric = ricci_operator(g)
    shift = Polynomial.parameter(LAMBDA0) * scalar_curvature(g) + Polynomial.parameter(
        SOLITON_CONSTANT
    )
    matrix = [
        [ric[i][j] - shift if i == j else ric[i][j] for j in range(g.dim)]
        for i in range(g.dim)
    ]
    return CandidateDerivation(matrix)


def derivation_residual(
    g: MetricLieAlgebra, d: Matrix
) -> list[tuple[tuple[int, int], Vector]]:
    """Residuals D[v_i,v_j] - [Dv_i,v_j] - [v_i,Dv_j] for every pair i < j.

    D is a derivation exactly when every residual vector vanishes.  Works
    for any square matrix over the algebra's polynomial ring, possibly
    extended by lambda0 and c.
    """
    n = g.dim
    if len(d) != n or any(len(row) != n for row in d):
        raise ValueError(f"derivation candidate must be {n}x{n}")
    basis = [basis_vector(n, i) for i in range(n)]
    columns = [mat_column(d, i) for i in range(n)]
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            image = g.bracket(basis[i], basis[j])
            lhs = [
                sum((d[k][l] * image[l] for l in range(n)), Polynomial.zero())
                for k in range(n)
            ]
            residual = vec_sub(
                vec_sub(lhs, g.bracket(columns[i], basis[j])),
                g.bracket(basis[i], columns[j]),
            )
            out.append(((i + 1, j + 1), residual))
    return out


def obstruction_system(g: MetricLieAlgebra) -> ObstructionSystem:
    """Collect, normalize and deduplicate the residuals of the candidate D.

    Generators keep the parameter prefactors of the raw residual
    coordinates (products like ``alpha*beta*gamma`` stay prefactored rather
    than being split), because that is what sign normalization of the
    residual coordinates produces.
    """
    d = candidate_derivation(g).matrix
    generators: list[Polynomial] = []
    provenance: list[tuple[tuple[int, int], int]] = []
    for pair, residual in derivation_residual(g, d):
        for k, coordinate in enumerate(residual):
            if is_zero_scalar(coordinate):
                continue
            normalized = coordinate.sign_normalized()
            if normalized not in generators:
                generators.append(normalized)
                provenance.append((pair, k + 1))
    return ObstructionSystem(tuple(generators), tuple(provenance))


def symmetric_derivation_check(g: MetricLieAlgebra, d: Matrix) -> bool:
    """Whether D is symmetric with respect to the metric, i.e. D == D^T
    entrywise (the basis is orthonormal)."""
    if len(d) != g.dim:
        raise ValueError(f"matrix must be {g.dim}x{g.dim}")
    return mat_is_symmetric(d)


# -- numeric oracle ----------------------------------------------------------


def _numeric_residual_parts(tensor: list, ric: Matrix) -> tuple[list, list]:
    """Stacked coordinates of r0 = residual(Ric) and r1 (bracket coordinates)."""
    n = len(tensor)
    r0: list = []
    r1: list = []
    columns = [mat_column(ric, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            image = [tensor[i][j][k] for k in range(n)]
            lhs = [
                sum((ric[k][l] * image[l] for l in range(n)), Fraction(0))
                for k in range(n)
            ]
            ei = [Fraction(1) if t == i else Fraction(0) for t in range(n)]
            ej = [Fraction(1) if t == j else Fraction(0) for t in range(n)]
            term_i = _tensor_bracket(tensor, columns[i], ej)
            term_j = _tensor_bracket(tensor, ei, columns[j])
            for k in range(n):
                r0.append(lhs[k] - term_i[k] - term_j[k])
                r1.append(image[k])
    return r0, r1


def _tensor_bracket(tensor: list, u: Sequence, v: Sequence) -> Vector:
    n = len(tensor)
    out = [Fraction(0)] * n
    for i in range(n):
        if u[i] == 0:
            continue
        for j in range(n):
            if v[j] == 0:
                continue
            row = tensor[i][j]
            for k in range(n):
                if row[k] != 0:
                    out[k] = out[k] + u[i] * v[j] * row[k]
    return out


def _least_squares_norm(r0: list, r1: list) -> tuple[float, float]:
    """Float least-squares mu and resulting residual norm for r0 + mu*r1."""
    f0 = [float(x) for x in r0]
    f1 = [float(x) for x in r1]
    denom = sum(x * x for x in f1)
    mu = 0.0 if denom == 0.0 else -sum(a * b for a, b in zip(f0, f1)) / denom
    norm = math.sqrt(sum((a + mu * b) ** 2 for a, b in zip(f0, f1)))
    return mu, norm


def _verdict(status: str, mu, witness_d, norm: float) -> SolitonVerdict:
    return SolitonVerdict(status, mu, witness_d, norm)


def _require_nilpotent(g: MetricLieAlgebra, sample: Mapping[str, object]) -> None:
    if g.nilpotency_step(sample) is None:
        raise NotNilpotentAtSampleError(
            f"{g.label or 'algebra'} is not nilpotent at {dict(sample)}"
        )


def numeric_soliton_oracle(
    g: MetricLieAlgebra,
    sample: Mapping[str, object],
    mode: Literal["exact", "float"] = "exact",
    tolerance: float = FLOAT_TOLERANCE,
) -> SolitonVerdict:
    """Decide whether some real mu makes Ric - mu*Id a derivation at the sample.

    Exact mode pins mu from any nonzero bracket coordinate and verifies the
    remaining linear conditions in rational (or quadratic-extension)
    arithmetic; no tolerance is involved.  Float mode solves the
    least-squares problem and accepts residual norms up to ``tolerance``.
    """
    g.check_sample(sample)
    _require_nilpotent(g, sample)
    tensor = g.evaluate_structure(sample)
    if mode == "float":
        tensor = [[[float(x) for x in row] for row in plane] for plane in tensor]
    elif mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    ric = ricci_nilpotent_from_tensor(tensor)
    r0, r1 = _numeric_residual_parts(tensor, ric)
    n = g.dim

    if mode == "float":
        mu, norm = _least_squares_norm(r0, r1)
        if norm <= tolerance:
            witness = [
                [ric[i][j] - (mu if i == j else 0.0) for j in range(n)] for i in range(n)
            ]
            return _verdict("feasible", mu, witness, norm)
        return _verdict("infeasible", None, None, norm)

    pivot = next((k for k, x in enumerate(r1) if x != 0), None)
    if pivot is None:
        if all(x == 0 for x in r0):
            return _verdict("feasible", Fraction(0), ric, 0.0)
        return _verdict("infeasible", None, None, _least_squares_norm(r0, r1)[1])
    mu = -r0[pivot] / r1[pivot]
    if all(a + mu * b == 0 for a, b in zip(r0, r1)):
        witness = [
            [ric[i][j] - (mu if i == j else 0) for j in range(n)] for i in range(n)
        ]
        return _verdict("feasible", mu, witness, 0.0)
    return _verdict("infeasible", None, None, _least_squares_norm(r0, r1)[1])


def schouten_like_check(
    g: MetricLieAlgebra,
    sample: Mapping[str, object],
    mu,
    mode: Literal["exact", "float"] = "exact",
    tolerance: float = FLOAT_TOLERANCE,
) -> bool:
    """Verify the defining tensor identity directly for D := Ric - mu*Id.

    Checks ric(v_i, v_j) = mu*delta_ij + D_ij (the decomposition itself),
    that D is symmetric, and that D is a derivation.  By the equivalence
    between Schouten-like metrics and algebraic Schouten solitons this must
    agree with the oracle's feasibility at the same mu; the acceptance
    suite exercises exactly that.
    """
    g.check_sample(sample)
    _require_nilpotent(g, sample)
    tensor = g.evaluate_structure(sample)
    if mode == "float":
        tensor = [[[float(x) for x in row] for row in plane] for plane in tensor]
        mu = float(mu)
    ric = ricci_nilpotent_from_tensor(tensor)
    n = g.dim
    d = [[ric[i][j] - (mu if i == j else 0 * mu) for j in range(n)] for i in range(n)]

    for i in range(n):
        for j in range(n):
            decomposition = (mu if i == j else 0 * mu) + d[i][j]
            if mode == "exact" and decomposition != ric[i][j]:
                return False
            if mode == "float" and abs(decomposition - ric[i][j]) > tolerance:
                return False
    if not mat_is_symmetric(d):
        return False

    columns = [mat_column(d, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            image = [tensor[i][j][k] for k in range(n)]
            lhs = [
                sum((d[k][l] * image[l] for l in range(n)), Fraction(0))
                for k in range(n)
            ]
            ei = [Fraction(1) if t == i else Fraction(0) for t in range(n)]
            ej = [Fraction(1) if t == j else Fraction(0) for t in range(n)]
            term_i = _tensor_bracket(tensor, columns[i], ej)
            term_j = _tensor_bracket(tensor, ei, columns[j])
            for k in range(n):
                value = lhs[k] - term_i[k] - term_j[k]
                if mode == "exact" and value != 0:
                    return False
                if mode == "float" and abs(value) > tolerance:
                    return False
    return True


def nilsoliton_check(
    g: MetricLieAlgebra,
    sample: Mapping[str, object],
    mode: Literal["exact", "float"] = "exact",
    tolerance: float = FLOAT_TOLERANCE,
) -> SolitonVerdict:
    """Decide Ric in R*Id + Der(g) at the sample.

    Identical decision procedure to numeric_soliton_oracle: the constants of
    the Schouten condition enter only through mu = lambda0*s + c, which for
    any fixed lambda0 sweeps all reals as c does, so the nilsoliton question
    (lambda0 = 0) and the Schouten-like question have the same answer.
    Provided as a named operation because the classification corollaries are
    stated for nilsolitons.
    """
    return numeric_soliton_oracle(g, sample, mode=mode, tolerance=tolerance)

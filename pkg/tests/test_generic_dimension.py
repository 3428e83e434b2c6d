"""End-to-end run on a user-defined algebra of dimension != 5.

The machinery is dimension-generic; only the built-in catalog is
five-dimensional.  The three-dimensional one-bracket table
[v1, v2] = alpha*v3 exercises the whole pipeline (file format, curvature,
obstruction system, oracle) away from the catalog.
"""

from __future__ import annotations

import random
from fractions import Fraction

from nilschouten.algfile import parse_algebra_file
from nilschouten.curvature import ricci_tensor_nilpotent, scalar_curvature
from nilschouten.ratpoly import Polynomial
from nilschouten.soliton import (
    numeric_soliton_oracle,
    obstruction_system,
    schouten_like_check,
)

HEISENBERG_3 = """\
dim 3
param alpha positive
bracket 1 2 : alpha*e3
"""


def test_dim3_curvature():
    g = parse_algebra_file(HEISENBERG_3).algebra
    ric = ricci_tensor_nilpotent(g)
    half = Fraction(-1, 2)
    alpha = Polynomial.parameter("alpha")
    assert ric == [
        [half * alpha ** 2, Polynomial.zero(), Polynomial.zero()],
        [Polynomial.zero(), half * alpha ** 2, Polynomial.zero()],
        [Polynomial.zero(), Polynomial.zero(), -half * alpha ** 2],
    ]
    assert scalar_curvature(g) == half * alpha ** 2


def test_dim3_obstruction_system():
    g = parse_algebra_file(HEISENBERG_3).algebra
    system = obstruction_system(g)
    expected = Polynomial.parse("alpha*((3-lambda0)*alpha^2+2*c)").sign_normalized()
    assert list(system.generators) == [expected]
    assert system.provenance == (((1, 2), 3),)


def test_dim3_always_feasible():
    # every inner product on this table is a soliton: mu = -3/2*alpha^2
    g = parse_algebra_file(HEISENBERG_3).algebra
    rng = random.Random(83)
    for _ in range(20):
        alpha = Fraction(rng.randint(1, 30), rng.randint(1, 10))
        verdict = numeric_soliton_oracle(g, {"alpha": alpha})
        assert verdict.feasible
        assert verdict.witness_mu == Fraction(-3, 2) * alpha ** 2
        assert schouten_like_check(g, {"alpha": alpha}, verdict.witness_mu)


def test_dim3_nilpotency_and_structure():
    g = parse_algebra_file(HEISENBERG_3).algebra
    assert g.nilpotency_step({"alpha": Fraction(2)}) == 2
    assert all(x == 0 for row in g.killing_form() for x in row)
    assert all(x == 0 for x in g.mean_curvature_vector())

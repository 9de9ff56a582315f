"""Exact rank computations against a Fraction-based oracle."""

import random
from fractions import Fraction

import numpy as np

from fiberlab.linalg import (
    QQ,
    GFp,
    coordinates_in_span,
    field_for,
    nullspace,
    rank_exact,
    rank_mod_p,
    rank_over,
    rref,
)


def rank_fraction_oracle(matrix) -> int:
    rows = [[Fraction(int(v)) for v in row] for row in matrix]
    rank = 0
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        piv = next((i for i, r in enumerate(rows) if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        prow = rows.pop(piv)
        rank += 1
        prow = [v / prow[col] for v in prow]
        rows = [
            [a - r[col] * b for a, b in zip(r, prow)] if r[col] != 0 else r
            for r in rows
        ]
        col += 1
    return rank


def test_ranks_match_oracle_random():
    rng = random.Random(2026)
    for _ in range(60):
        rows = rng.randint(1, 12)
        cols = rng.randint(1, 12)
        mat = np.array(
            [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)],
            dtype=np.int64,
        )
        want = rank_fraction_oracle(mat)
        assert rank_over(mat, 0) == want
        sparse = [
            {j: int(v) for j, v in enumerate(row) if v}
            for row in mat
        ]
        assert rank_exact(sparse) == want
        # a large prime cannot collide with minors this small
        assert rank_mod_p(mat, 32003) == want


def test_rank_mod_small_prime_can_drop():
    mat = np.array([[2]], dtype=np.int64)
    assert rank_mod_p(mat, 2) == 0
    assert rank_over(mat, 0) == 1


def test_rref_and_nullspace_q():
    field = QQ()
    rows = [[1, 2, 0], [0, 0, 1]]
    rows = [[field.from_int(v) for v in r] for r in rows]
    red, pivots = rref(rows, field)
    assert pivots == [0, 2]
    ns = nullspace(rows, 3, field)
    assert len(ns) == 1
    vec = ns[0]
    # kernel vector: x = -2y, z = 0
    assert vec[0] == Fraction(-2) and vec[1] == Fraction(1) and vec[2] == 0


def test_coordinates_in_span_both_fields():
    for char in (0, 32003):
        field = field_for(char)
        basis = [
            [field.from_int(1), field.from_int(0), field.from_int(1)],
            [field.from_int(0), field.from_int(1), field.from_int(1)],
        ]
        target = [field.from_int(2), field.from_int(3), field.from_int(5)]
        coords = coordinates_in_span(basis, target, field)
        assert coords is not None
        recon = [
            field.add(field.mul(coords[0], basis[0][i]), field.mul(coords[1], basis[1][i]))
            for i in range(3)
        ]
        assert all(field.is_zero(field.sub(a, b)) for a, b in zip(recon, target))
        outside = [field.from_int(1), field.from_int(0), field.from_int(0)]
        assert coordinates_in_span(basis, outside, field) is None


def test_gfp_arithmetic():
    f = GFp(7)
    assert f.mul(3, 5) == 1
    assert f.inv(3) == 5
    assert f.is_zero(f.sub(3, 3))

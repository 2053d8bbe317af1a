from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from heartbox.errors import MalformedInput
from heartbox.linalg import (FieldSpec, Matrix, Span, inverse, kernel_vectors, rank, rref, solve,
                             solve_kernel)

import oracles

QQ = FieldSpec.rationals()
GF7 = FieldSpec.prime(7)
GF5 = FieldSpec.prime(5)


@st.composite
def matrices(draw, field=None, max_dim=6):
    field = field or draw(st.sampled_from([QQ, GF7, GF5]))
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    if field.kind == "Q":
        entry = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    else:
        entry = st.integers(0, field.p - 1)
    rows = draw(st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(field, rows)


def _plain(m: Matrix) -> list[list]:
    return [[Fraction(int(x.numerator), int(x.denominator)) if m.field.kind == "Q" else int(x) for x in row]
            for row in m.data]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_bareiss(m):
    assert rank(m) == oracles.rank(_plain(m), m.field.p)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_kernel_is_a_kernel_of_the_right_size(m):
    K = solve_kernel(m)
    assert K.cols == oracles.kernel_dim(_plain(m), m.cols, m.field.p)
    assert (m @ K).is_zero()
    assert rank(K) == K.cols


@settings(max_examples=80, deadline=None)
@given(matrices(max_dim=5), st.data())
def test_solve_recovers_consistent_systems(m, data):
    F = m.field
    x = Matrix.from_rows(F, [[data.draw(st.integers(-3, 3))] for _ in range(m.cols)])
    b = m @ x
    sol = solve(m, b)
    assert sol is not None and m @ sol == b


@settings(max_examples=60, deadline=None)
@given(matrices(max_dim=5))
def test_inverse_when_square_and_full_rank(m):
    if m.rows != m.cols:
        return
    inv = inverse(m)
    if rank(m) < m.rows:
        assert inv is None
    else:
        assert (m @ inv).is_identity() and (inv @ m).is_identity()


@settings(max_examples=60, deadline=None)
@given(matrices(max_dim=5))
def test_rref_is_idempotent(m):
    R, r, piv = rref(m)
    R2, r2, piv2 = rref(R)
    assert (R, r, piv) == (R2, r2, piv2)
    assert r == len(piv) == rank(m)


def test_span_reduce_and_contains():
    sp = Span(QQ, 3, [[1, 1, 0], [0, 1, 1]])
    assert sp.dim == 2
    assert sp.contains([QQ.coerce(1), QQ.coerce(2), QQ.coerce(1)])
    assert not sp.contains([QQ.coerce(1), QQ.zero, QQ.zero])


def test_kernel_vectors_of_zero_matrix():
    assert len(kernel_vectors(Matrix.zeros(GF7, 2, 3))) == 3


def test_matrix_json_round_trip():
    m = Matrix.from_rows(QQ, [[Fraction(1, 2), 3], [0, Fraction(-4, 6)]])
    assert Matrix.from_json(m.to_json()) == m
    g = Matrix.from_rows(GF7, [[1, 6], [3, 0]])
    assert Matrix.from_json(g.to_json()) == g


@pytest.mark.parametrize("bad", [
    {"field": {"kind": "Fp", "p": 7}, "rows": 1, "cols": 1, "entries": [9]},
    {"field": {"kind": "Q"}, "rows": 1, "cols": 1, "entries": ["2/4"]},
    {"field": {"kind": "Fp", "p": 6}, "rows": 1, "cols": 1, "entries": [1]},
])
def test_malformed_matrix_literals(bad):
    with pytest.raises(MalformedInput):
        Matrix.from_json(bad)

from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from heartbox.complexes import (BoundedComplex, ChainMap, cohomology, cohomology_dims, concentrated, cone,
                                direct_sum_complexes, from_sequence, hom_homotopy, homotopy_equivalent,
                                identity_map, is_acyclic, is_null_homotopic, minimize, module_map_complex,
                                shift, tensor_complexes, zero_map)
from heartbox.fixtures import a3rad2, nakayama
from heartbox.linalg import Matrix
from heartbox.modules import direct_sum, hom_basis, is_isomorphic, regular_module

from helpers import random_complex


def _iso(a, b) -> bool:
    return is_isomorphic(a, b) is not None


def socle_embedding(F):
    k, L = F["k"], F["Lambda"]
    return hom_basis(k, L).basis[0]


def top_projection(F):
    k, L = F["k"], F["Lambda"]
    return hom_basis(L, k).basis[0]


def ar_complex(F):
    """[k -> Λ -> k] in degrees -2..0."""
    return from_sequence([F["k"], F["Lambda"], F["k"]], [socle_embedding(F), top_projection(F)])


def contractible(m, lo=-1):
    return from_sequence([m, m], [Matrix.identity(m.field, m.dim)], hi=lo + 1)


# -- Hom in the homotopy category --------------------------------------------

def test_hom_of_stalks_is_module_hom(a3):
    for m in a3.catalog_modules():
        for n in a3.catalog_modules():
            assert hom_homotopy(concentrated(m), concentrated(n)).dim == hom_basis(m, n).dim


def test_contractible_source_has_no_maps(nak2):
    c = contractible(nak2["Lambda"])
    for target in (concentrated(nak2["k"], -1), ar_complex(nak2), c):
        assert hom_homotopy(c, target).dim == 0


def test_end_of_the_ar_complex_is_one_dimensional(nak2):
    x = ar_complex(nak2)
    assert hom_homotopy(x, x).dim == 1


# -- cones, shifts -------------------------------------------------------------

def test_cone_of_identity_is_contractible(a3):
    x = from_sequence([a3["P2"], a3["P1"]], [hom_basis(a3["P2"], a3["P1"]).basis[0]])
    assert minimize(cone(identity_map(x))).complex.is_zero()


def test_cone_of_zero_map_splits(a3):
    x = concentrated(a3["S1"], 0)
    y = concentrated(a3["P2"], 0)
    c = cone(zero_map(x, y))
    assert homotopy_equivalent(c, direct_sum_complexes([shift(x, 1), y])) is not None


def test_cone_of_socle_embedding(nak2):
    f = module_map_complex(socle_embedding(nak2), nak2["k"], nak2["Lambda"])
    c = cone(f)
    assert c.dims() == {-1: 1, 0: 2}
    assert _iso(cohomology(c, 0), nak2["k"])
    assert cohomology_dims(c)[-1] == 0


def test_shift_moves_degrees(a3):
    x = concentrated(a3["S2"], 0)
    assert shift(x, 2).support() == [-2]


# -- tensor products ---------------------------------------------------------

def test_tensor_with_regular_module_is_identity(nak3):
    R = regular_module(nak3.algebra)
    x = from_sequence([nak3["M1"], nak3["M2"]], [hom_basis(nak3["M1"], nak3["M2"]).basis[0]])
    t = tensor_complexes(x, concentrated(R, 0))
    assert homotopy_equivalent(t, x) is not None


def test_tensor_of_two_term_complexes(nak3):
    R = regular_module(nak3.algebra)
    x = from_sequence([R, R], [nak3.algebra.left_mult(nak3.algebra.basis_vec(1))])
    t = tensor_complexes(x, x)
    t.validate()
    assert t.lo == -2 and t.hi == 0
    assert t.dims() == {-2: 3, -1: 6, 0: 3}


# -- minimisation and cohomology ---------------------------------------------

def test_minimize_examples(nak2):
    L = nak2["Lambda"]
    assert minimize(contractible(L)).complex.is_zero()
    x = ar_complex(nak2)
    assert minimize(x).complex.dims() == x.dims()
    s, incs, projs = direct_sum([nak2["k"], L])
    d = projs[1].__class__.identity(L.field, 2) @ projs[1]
    y = from_sequence([s, L], [d])
    m = minimize(y).complex
    assert m.trimmed().dims() == {-1: 1}


def test_cohomology_examples(nak2):
    assert _iso(cohomology(concentrated(nak2["k"]), 0), nak2["k"])
    assert is_acyclic(contractible(nak2["Lambda"]))
    x = ar_complex(nak2)
    h = cohomology_dims(x)
    assert h == {-2: 0, -1: 0, 0: 0}


FIXTURES = {"nak3": lambda: nakayama(7, 3), "a3": a3rad2}


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(sorted(FIXTURES)), st.integers(0, 10 ** 6))
def test_minimize_is_a_homotopy_equivalence(name, seed):
    F = FIXTURES[name]()
    x = random_complex(F, random.Random(seed), steps=2)
    mz = minimize(x)
    m = mz.complex
    m.validate()
    assert is_null_homotopic(mz.v @ mz.u - identity_map(x))
    assert is_null_homotopic(mz.u @ mz.v - identity_map(m))
    nonzero = lambda h: {d: v for d, v in h.items() if v}
    assert nonzero(cohomology_dims(x)) == nonzero(cohomology_dims(m))
    assert minimize(m).complex.total_dim() == m.total_dim()


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(sorted(FIXTURES)), st.integers(0, 10 ** 6))
def test_hom_dimension_is_homotopy_invariant(name, seed):
    F = FIXTURES[name]()
    rng = random.Random(seed)
    x = random_complex(F, rng, steps=2)
    y = random_complex(F, rng, steps=1)
    assert hom_homotopy(x, y).dim == hom_homotopy(minimize(x).complex, minimize(y).complex).dim


def test_differentials_square_to_zero_is_enforced(nak2):
    L = nak2["Lambda"]
    one = Matrix.identity(L.field, 2)
    with pytest.raises((ValueError, AssertionError)):
        from_sequence([L, L, L], [one, one])


def test_chain_map_condition_is_enforced(nak2):
    x = ar_complex(nak2)
    bad = {-2: Matrix.identity(x.field, 1)}
    with pytest.raises((ValueError, AssertionError)):
        ChainMap(x, x, bad)

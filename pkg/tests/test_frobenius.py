from __future__ import annotations

import pytest

from heartbox.algebra import Algebra
from heartbox.complexes import concentrated, homotopy_equivalent, minimize
from heartbox.errors import NotCommutative, NotFrobenius
from heartbox.fixtures import nakayama
from heartbox.frobenius import (d_on_module, dual_complex, dual_projective, duality_dA, duality_dC,
                                is_frobenius, truncated_resolution)
from heartbox.heart import SubcatDescriptor, ar_sequence, is_heart_object, simple_quotient_L
from heartbox.linalg import FieldSpec
from heartbox.modules import hom_basis, is_isomorphic, star
from heartbox.soergel import coinvariant_fixture

QQ = FieldSpec.rationals()


def _heq(x, y) -> bool:
    return homotopy_equivalent(x, y) is not None


def qxq() -> Algebra:
    return Algebra("QxQ", QQ, 2, ["e", "f"], {(0, 0): [(0, 1)], (1, 1): [(1, 1)]}, [1, 1]).validate()


def square_zero_plane() -> Algebra:
    """Q[x, y]/(x, y)^2: commutative, local, socle of dimension two."""
    mul = {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (0, 2): [(2, 1)], (1, 0): [(1, 1)], (2, 0): [(2, 1)]}
    return Algebra("Q[x,y]/m^2", QQ, 3, ["1", "x", "y"], mul, [1, 0, 0]).validate()


@pytest.fixture(scope="module")
def a2():
    return coinvariant_fixture("A2")


def test_frobenius_recognition(nak2, nak3, a3):
    assert is_frobenius(nak2.algebra) and is_frobenius(nak3.algebra)
    assert is_frobenius(qxq())
    assert not is_frobenius(a3.algebra)
    assert not is_frobenius(square_zero_plane())


def test_dualities_refuse_bad_algebras(a3):
    with pytest.raises(NotCommutative):
        duality_dA(concentrated(a3["S1"]))
    A = square_zero_plane()
    from heartbox.modules import regular_module

    with pytest.raises(NotFrobenius):
        dual_projective(regular_module(A))


def test_truncated_resolution_shape(nak2):
    r = truncated_resolution(nak2["k"])
    assert r.complex.lo == -2 and r.complex.hi == 0
    assert [r.complex.term(d).dim for d in (-2, -1, 0)] == [1, 2, 2]


def test_dual_of_the_regular_projective(nak2):
    L = nak2["Lambda"]
    assert is_isomorphic(star(L)[0], L) is not None
    assert _heq(duality_dA(concentrated(L)), concentrated(L))


def test_ar_sequence_is_self_dual(nak2, nak3):
    for F, m in ((nak2, "k"), (nak3, "M1"), (nak3, "M2")):
        L = ar_sequence(F[m])
        assert _heq(duality_dA(L), L)


@pytest.mark.parametrize("n", [2, 3])
def test_da_squared_is_identity(n):
    F = nakayama(7, n)
    c = SubcatDescriptor.all(F.catalog_modules())
    samples = [concentrated(m) for m in F.catalog_modules()]
    samples += [ar_sequence(m) for m in F.catalog_modules() if m.dim < n]
    for v in samples:
        d = duality_dA(v)
        assert is_heart_object(d, c)
        assert _heq(duality_dA(d), minimize(v).complex)


def test_two_routes_agree_on_projectives(nak2, nak3):
    for F in (nak2, nak3):
        for m in F.catalog_modules():
            assert _heq(dual_complex(concentrated(m)), d_on_module(m))


def test_dual_complex_is_an_involution_up_to_homotopy(nak3):
    x = ar_sequence(nak3["M2"])
    once = minimize(dual_complex(x)).complex
    assert _heq(once, x)
    assert _heq(minimize(dual_complex(once)).complex, minimize(x).complex)


def test_dc_squared_on_soergel_projective(a2):
    c = SubcatDescriptor.add(a2.catalog_modules())
    P = concentrated(a2["B_s"])
    once = duality_dC(P, c)
    twice = duality_dC(once, c)
    assert _heq(twice, P)


def test_hom_symmetry_on_self_dual_pairs(a2):
    mods = a2.catalog_modules()
    self_dual = [b for b in mods if is_isomorphic(star(b)[0], b) is not None]
    assert len(self_dual) == len(mods)
    for b in self_dual:
        for b2 in self_dual:
            assert hom_basis(b, b2).dim == hom_basis(b2, b).dim


def test_dc_of_simple_is_simple(nak3):
    c = SubcatDescriptor.all(nak3.catalog_modules())
    for m in nak3.catalog_modules():
        L = simple_quotient_L(m, c)
        d = duality_dC(L, c)
        assert is_heart_object(d, c)

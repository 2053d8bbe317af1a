from __future__ import annotations

import pytest

from heartbox.complexes import concentrated, from_sequence, is_acyclic, minimize
from heartbox.errors import DepthExceeded
from heartbox.heart import SubcatDescriptor, c_approximation, serre_P, simple_quotient_L
from heartbox.iyama import (STRICT, c_dimension, check_max_n_orthogonal, dtr_omega_check, ext_range,
                            heart_membership, higher_ar_sequence, injective_shape_check, split_trichotomy,
                            verify_ar_duality)
from heartbox.linalg import Matrix
from heartbox.modules import direct_sum, ext_dim, hom_basis, is_isomorphic, is_projective


def all_of(F):
    return SubcatDescriptor.all(F.catalog_modules())


def test_ext_ranges():
    assert list(ext_range(0)) == []
    assert list(ext_range(2)) == [1, 2]
    assert list(ext_range(2, STRICT)) == [1]
    with pytest.raises(ValueError):
        ext_range(1, "loose")


def test_classical_case_passes(nak2, nak3):
    for F in (nak2, nak3):
        rep = check_max_n_orthogonal(all_of(F), 0, F.catalog_modules())
        assert rep.passes and rep.witnesses == []


def test_a3_example_is_one_orthogonal(a3, iyama_c):
    rep = check_max_n_orthogonal(iyama_c, 1, a3.catalog_modules())
    assert rep.passes
    assert rep.excluded == ["S2"]
    assert sorted(rep.right_perp) == sorted(rep.left_perp) == ["P1", "P2", "S1", "S3"]
    assert rep.contains_proj and rep.contains_inj and rep.functorially_finite
    assert rep.to_json()["passes"] is True


def test_a3_example_fails_at_n2(a3, iyama_c):
    rep = check_max_n_orthogonal(iyama_c, 2, a3.catalog_modules())
    assert not rep.passes
    assert ("S1", "S3", 2) in [tuple(w) for w in rep.witnesses]
    assert ext_dim(a3["S1"], a3["S3"], 2) == 1


def test_strict_convention_reads_differently(a3, iyama_c):
    # with 1 <= i < 1 there is no condition, so the perps are the whole catalogue
    rep = check_max_n_orthogonal(iyama_c, 1, a3.catalog_modules(), convention=STRICT)
    assert not rep.passes and rep.witnesses == []
    assert "S2" in rep.right_perp


def test_the_full_catalogue_is_not_one_orthogonal(a3):
    rep = check_max_n_orthogonal(all_of(a3), 1, a3.catalog_modules())
    assert not rep.passes and rep.witnesses


# -- shapes ------------------------------------------------------------------

def test_heart_membership(a3, iyama_c):
    L = minimize(simple_quotient_L(a3["S1"], iyama_c)).complex
    assert heart_membership(L.window(-3, 0), iyama_c, 1)
    assert heart_membership(concentrated(a3["P2"]), iyama_c, 1)
    P2, P1 = a3["P2"], a3["P1"]
    zero = Matrix.zeros(P2.field, P1.dim, P2.dim)
    assert not heart_membership(from_sequence([P2, P1], [zero]), iyama_c, 1)
    assert not heart_membership(concentrated(a3["S2"]), iyama_c, 1)


def test_injective_shapes(a3, iyama_c):
    assert injective_shape_check(serre_P(a3["S1"], iyama_c), iyama_c, 1)
    assert injective_shape_check(concentrated(a3["S1"]), iyama_c, 1)
    assert not injective_shape_check(concentrated(a3["P3"]), iyama_c, 1)


# -- higher almost split sequences ---------------------------------------------

def test_classical_sequences(nak2, nak3):
    s = higher_ar_sequence(nak2["k"], all_of(nak2), 0)
    assert s.render(nak2.catalog_modules()) == "0 -> M1 -> M2 -> M1 -> 0"
    s = higher_ar_sequence(nak3["M2"], all_of(nak3), 0)
    assert s.render(nak3.catalog_modules()) == "0 -> M2 -> M1⊕M3 -> M2 -> 0"
    assert s.length == 3


def test_a3_sequence(a3, iyama_c):
    s = higher_ar_sequence(a3["S1"], iyama_c, 1)
    assert s.render(a3.catalog_modules()) == "0 -> S3 -> P2 -> P1 -> S1 -> 0"
    assert is_acyclic(s.complex)
    assert all(iyama_c.contains(t) for t in s.terms())
    assert is_isomorphic(s.start_term, a3["S3"]) is not None
    assert s.to_json(a3.catalog_modules())["length"] == 4


def test_projective_end_term_gives_no_sequence(a3, iyama_c):
    s = higher_ar_sequence(a3["P1"], iyama_c, 1)
    assert s.start_term.dim == 0


@pytest.mark.parametrize("fx, x, n", [("nak2", "k", 0), ("nak3", "M1", 0), ("nak3", "M2", 0), ("a3", "S1", 1)])
def test_start_term_is_dtr_of_syzygy(request, fx, x, n):
    F = request.getfixturevalue(fx)
    c = request.getfixturevalue("iyama_c") if fx == "a3" else all_of(F)
    assert dtr_omega_check(F[x], c, n)


def test_ar_duality_on_every_pair(nak2, nak3, a3, iyama_c):
    cases = [(nak2, all_of(nak2), 0), (nak3, all_of(nak3), 0), (a3, iyama_c, 1)]
    count = 0
    for F, c, n in cases:
        mods = F.catalog_modules() if c.is_all else c.generators
        for x in mods:
            if is_projective(x):
                continue
            for y in mods:
                lhs, rhs = verify_ar_duality(x, y, c, n)
                assert lhs == rhs, (x.label(), y.label())
                count += 1
    assert count >= 8


def test_duality_examples(nak2, a3, iyama_c):
    assert verify_ar_duality(nak2["k"], nak2["k"], all_of(nak2), 0) == (1, 1)
    assert verify_ar_duality(a3["S1"], a3["S1"], iyama_c, 1) == (1, 1)
    a, b = verify_ar_duality(a3["S1"], a3["P1"], iyama_c, 1)
    assert a == b


# -- resolutions and split sequences --------------------------------------------

def test_godement_resolutions_terminate_within_n(a3, iyama_c):
    for m in a3.catalog_modules():
        assert c_dimension(m, iyama_c, depth=1) <= 1
    with pytest.raises(DepthExceeded):
        projs = SubcatDescriptor.add([a3["P1"], a3["P2"], a3["S3"]])
        c_approximation(concentrated(a3["S1"]), projs, depth=1)


def test_split_trichotomy(a3, iyama_c):
    s = higher_ar_sequence(a3["S1"], iyama_c, 1).complex
    assert split_trichotomy(s) == (False, False, False)
    P1, P2 = a3["P1"], a3["P2"]
    S, incl, proj = direct_sum([P1, P2])
    split = from_sequence([P1, S, P2], [incl[0], proj[1]])
    assert split_trichotomy(split) == (True, True, True)
    g = hom_basis(P2, P1).basis[0]
    assert split_trichotomy(from_sequence([P2, P1], [g])) == (False, False, False)

from __future__ import annotations

import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from heartbox.errors import MalformedInput
from heartbox.linalg import Matrix
from heartbox.modules import (Module, ModuleMap, direct_sum, dual_D, end_basis, ext_dim, hom_basis,
                              hom_naive, indecomposable_summands, injective_hull, is_homomorphism,
                              is_injective, is_isomorphic, is_projective, min_projective_resolution,
                              module_from_json, module_to_json, projective_cover, radical_top_socle,
                              stable_hom_dim, star, syzygy, transpose_dtr)

from helpers import random_sum, scrambled


def _iso(a, b) -> bool:
    return is_isomorphic(a, b) is not None


# -- Hom ---------------------------------------------------------------------

def test_hom_examples(nak2, nak3, a3):
    assert hom_basis(nak3["M3"], nak3["M3"]).dim == 3
    assert hom_basis(nak2["k"], nak2["Lambda"]).dim == 1
    assert hom_basis(a3["S1"], a3["S3"]).dim == 0


def test_hom_contains_identity(a3):
    for m in a3.catalog_modules():
        H = end_basis(m)
        ident = Matrix.identity(m.field, m.dim)
        assert H.combine(H.coords(ident)) == ident


@pytest.mark.parametrize("fx", ["nak3", "a3"])
def test_hom_presentation_matches_naive_solver(fx, request):
    F = request.getfixturevalue(fx)
    mods = F.catalog_modules()
    for m in mods:
        for n in mods:
            H = hom_basis(m, n)
            assert H.dim == len(hom_naive(m, n))
            assert all(is_homomorphism(m, n, b) for b in H.basis)


def test_hom_duality_symmetry(a3, nak3):
    for F in (a3, nak3):
        mods = F.catalog_modules()
        for m in mods:
            for n in mods:
                assert hom_basis(m, n).dim == hom_basis(dual_D(n), dual_D(m)).dim


# -- isomorphism and decomposition -------------------------------------------

def test_isomorphism_examples(nak2):
    k, L = nak2["k"], nak2["Lambda"]
    assert _iso(k, k)
    assert not _iso(k, L)
    rng = random.Random(3)
    assert _iso(scrambled(L, rng), L)


def test_decomposition_examples(nak2, a3):
    s, _, _ = direct_sum([nak2["Lambda"], nak2["k"]])
    dec = indecomposable_summands(s)
    assert sorted(m.dim for m, _ in dec.summands) == [1, 2]
    assert indecomposable_summands(nak2["k"]).summands[0][1] == 1
    from heartbox.modules import regular_module

    reg = indecomposable_summands(regular_module(a3.algebra))
    found = sorted(a3.catalog[[_iso(p, c) for c in a3.catalog_modules()].index(True)]
                   for p, _ in reg.summands)
    assert found == ["P1", "P2", "S3"]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.integers(0, 10_000))
def test_decomposition_recovers_random_sums(idx, seed):
    from heartbox.fixtures import nakayama

    F = nakayama(7, 3)
    rng = random.Random(seed)
    pieces = [F[f"M{i}"] for i in idx]
    X = random_sum(pieces, rng)
    dec = indecomposable_summands(X)
    got = Counter()
    for m, mult in dec.summands:
        name = next(n for n in F.catalog if _iso(m, F[n]))
        got[name] += mult
    assert got == Counter(f"M{i}" for i in idx)
    to, back = dec.iso_to_sum()
    assert (back @ to).is_identity()


@settings(max_examples=15, deadline=None)
@given(st.lists(st.sampled_from(["S1", "S2", "S3", "P1", "P2"]), min_size=1, max_size=3), st.integers(0, 999))
def test_decomposition_over_a3(names, seed):
    from heartbox.fixtures import a3rad2

    F = a3rad2()
    X = random_sum([F[n] for n in names], random.Random(seed))
    got = Counter()
    for m, mult in indecomposable_summands(X).summands:
        got[next(n for n in F.catalog if _iso(m, F[n]))] += mult
    assert got == Counter(names)


# -- radical, covers, hulls --------------------------------------------------

def test_radical_top_socle(nak3, a3):
    r = radical_top_socle(nak3["M3"])
    assert (r.radical.dim, r.top.dim, r.socle.dim) == (2, 1, 1)
    r = radical_top_socle(a3["P1"])
    assert _iso(r.radical, a3["S2"]) and _iso(r.top, a3["S1"]) and _iso(r.socle, a3["S2"])
    s = radical_top_socle(a3["S2"])
    assert (s.radical.dim, s.top.dim, s.socle.dim) == (0, 1, 1)


def test_covers_and_hulls(nak3, a3):
    c = projective_cover(nak3["M3"])
    assert c.source.dim == 3 and c.matrix.is_identity()
    c = projective_cover(nak3["M1"])
    assert _iso(c.source, nak3["M3"])
    h = injective_hull(a3["S2"])
    assert _iso(h.target, a3["P1"])


# -- resolutions, syzygies, DTr ----------------------------------------------

def test_syzygies(nak2, a3):
    assert _iso(syzygy(nak2["k"], 1), nak2["k"])
    assert _iso(syzygy(a3["S1"], 1), a3["S2"])
    assert _iso(syzygy(a3["S1"], 2), a3["S3"])
    res = min_projective_resolution(a3["P1"], 2)
    assert all(t.dim == 0 for t in res.terms[1:])


def test_dtr_examples(nak2, nak3, a3):
    assert _iso(transpose_dtr(nak2["k"]), nak2["k"])
    assert _iso(transpose_dtr(nak3["M2"]), nak3["M2"])
    assert _iso(transpose_dtr(a3["S2"]), a3["S3"])


@pytest.mark.parametrize("fx", ["nak3", "a3"])
def test_dtr_matches_nonprojectives_with_noninjectives(fx, request):
    F = request.getfixturevalue(fx)
    cat = F.catalog_modules()
    nonproj = [m for m in cat if not is_projective(m)]
    noninj = [m for m in cat if not is_injective(m)]
    images = []
    for m in nonproj:
        t = transpose_dtr(m)
        hit = [i for i, n in enumerate(noninj) if _iso(t, n)]
        assert len(hit) == 1
        images.append(hit[0])
    assert sorted(images) == list(range(len(noninj)))


def test_duals(nak2, a3):
    for m in a3.catalog_modules():
        assert _iso(dual_D(dual_D(m)), m)
    L = nak2["Lambda"]
    DL = dual_D(L)
    assert _iso(DL, L)
    s, _ = star(a3["S1"])
    assert s.dim == 0


def test_ext_and_stable_hom(nak2, a3):
    assert ext_dim(nak2["k"], nak2["k"], 1) == 1
    assert ext_dim(a3["S1"], a3["S3"], 2) == 1
    assert stable_hom_dim(a3["S1"], a3["S1"]) == 1
    for p in ("P1", "P2", "S3"):
        for n in a3.catalog_modules():
            assert ext_dim(a3[p], n, 1) == 0 and ext_dim(a3[p], n, 2) == 0


# -- file format -------------------------------------------------------------

def test_module_json_round_trip(a3):
    m = a3["P1"]
    back = module_from_json(module_to_json(m), a3.algebra)
    assert back.action == m.action


def test_module_file_rejects_non_modules(nak2):
    obj = module_to_json(nak2["Lambda"])
    obj["action"][1]["entries"] = [1, 0, 0, 1]   # x acting invertibly violates x^2 = 0
    with pytest.raises(MalformedInput):
        module_from_json(obj, nak2.algebra)


def test_module_map_checks_intertwining(nak2):
    k, L = nak2["k"], nak2["Lambda"]
    bad = Matrix.from_rows(k.field, [[1], [0]])
    with pytest.raises(MalformedInput):
        ModuleMap(k, L, bad, check=True)

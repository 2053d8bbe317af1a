"""Maximal n-orthogonal subcategories and their higher almost split sequences.

Index convention: by default the Ext-orthogonality ranges over ``1 <= i <= n``,
so that ``n = 0`` is the classical case (every module) and the A3 example
``add{P1, P2, P3, S1}`` is 1-orthogonal.  ``convention="strict"`` switches to
``1 <= i < n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .complexes import BoundedComplex, cohomology_dims, is_acyclic, minimize
from .heart import (SubcatDescriptor, c_approximation, c_cover, is_simple, serre_P, simple_quotient_L)
from .errors import NoCover
from .modules import (Module, catalog_label, dual_D, ext_dim, indecomposable_injectives,
                      indecomposable_projectives, is_injective, is_isomorphic, is_projective,
                      stable_hom_dim, syzygy, transpose_dtr, zero_module)
from .complexes import concentrated

ADJUSTED = "adjusted"
STRICT = "strict"


def ext_range(n: int, convention: str = ADJUSTED) -> range:
    if convention == ADJUSTED:
        return range(1, n + 1)
    if convention == STRICT:
        return range(1, n)
    raise ValueError(f"unknown convention {convention!r}")


def _matches(m: Module, mods: Sequence[Module]) -> bool:
    return any(m is g or is_isomorphic(m, g) is not None for g in mods)


@dataclass
class OrthogonalityReport:
    n: int
    convention: str
    passes: bool
    witnesses: list[tuple[str, str, int]]
    contains_proj: bool
    contains_inj: bool
    functorially_finite: bool
    right_perp: list[str]
    left_perp: list[str]
    excluded: list[str] = dc_field(default_factory=list)
    ext_table: dict[tuple[str, str, int], int] = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "convention": self.convention,
            "passes": self.passes,
            "witnesses": [list(w) for w in self.witnesses],
            "contains_proj": self.contains_proj,
            "contains_inj": self.contains_inj,
            "functorially_finite": self.functorially_finite,
            "right_perp": self.right_perp,
            "left_perp": self.left_perp,
            "excluded": self.excluded,
        }


def check_max_n_orthogonal(c: SubcatDescriptor, n: int, catalog: Sequence[Module],
                           convention: str = ADJUSTED) -> OrthogonalityReport:
    """Verify that C is maximal n-orthogonal relative to a complete indecomposable catalogue.

    Completeness of ``catalog`` is the caller's responsibility.
    """
    gens = list(catalog) if c.is_all else list(c.generators)
    idx = ext_range(n, convention)
    table: dict[tuple[str, str, int], int] = {}

    def ext(x: Module, y: Module, i: int) -> int:
        key = (x.label(), y.label(), i)
        if key not in table:
            table[key] = ext_dim(x, y, i)
        return table[key]

    witnesses = []
    for x in gens:
        for y in gens:
            for i in idx:
                if ext(x, y, i):
                    witnesses.append((x.label(), y.label(), i))
    right = [y for y in catalog if all(ext(g, y, i) == 0 for g in gens for i in idx)]
    left = [x for x in catalog if all(ext(x, g, i) == 0 for g in gens for i in idx)]
    in_c = [m for m in catalog if _matches(m, gens)]
    A = catalog[0].algebra if catalog else gens[0].algebra
    contains_proj = all(_matches(p, gens) for p in indecomposable_projectives(A))
    contains_inj = all(_matches(q, gens) for q in indecomposable_injectives_over(A))
    ff = functorially_finite(c, catalog)

    def same(a: list[Module], b: list[Module]) -> bool:
        return len(a) == len(b) and all(_matches(m, b) for m in a)

    passes = (not witnesses and same(right, in_c) and same(left, in_c)
              and contains_proj and contains_inj and ff)
    return OrthogonalityReport(
        n, convention, passes, witnesses, contains_proj, contains_inj, ff,
        [m.label() for m in right], [m.label() for m in left],
        [m.label() for m in catalog if not _matches(m, gens)], table)


def indecomposable_injectives_over(A) -> list[Module]:
    """Indecomposable injectives as modules over ``A`` itself."""
    out = []
    for q in indecomposable_injectives(A):
        out.append(q if q.algebra is A else Module(A, q.action, name=q.name, check=False, dim=q.dim))
    return out


def functorially_finite(c: SubcatDescriptor, catalog: Sequence[Module]) -> bool:
    """Covers exist for every catalogue module, and dually over the opposite algebra."""
    if c.is_all:
        return True
    try:
        for m in catalog:
            c_cover(m, c)
    except NoCover:
        return False
    dual = SubcatDescriptor.add([dual_D(g) for g in c.generators])
    try:
        for m in catalog:
            c_cover(dual_D(m), dual)
    except NoCover:
        return False
    return True


# ---------------------------------------------------------------------------
# shapes


def heart_membership(v: BoundedComplex, c: SubcatDescriptor, n: int) -> bool:
    """Window inside ``[-n-2, 0]``, terms in C, no negative cohomology."""
    if v.is_zero():
        return True
    t = v.trimmed()
    if t.lo < -n - 2 or t.hi > 0:
        return False
    if not c.complex_in(t):
        return False
    return all(d >= 0 or k == 0 for d, k in cohomology_dims(t).items())


def injective_shape_check(j: BoundedComplex, c: SubcatDescriptor, n: int) -> bool:
    """``[X -> I^{-n-1} -> ... -> I^0]``: injective terms in degrees ``-n-1..0``, X in C in degree ``-n-2``."""
    m = minimize(j).complex
    if m.is_zero():
        return True
    if m.lo < -n - 2 or m.hi > 0:
        return False
    for d in range(-n - 1, 1):
        t = m.term(d)
        if t.dim and not is_injective(t):
            return False
    return c.contains(m.term(-n - 2))


# ---------------------------------------------------------------------------
# higher almost split sequences


@dataclass
class HigherARSequence:
    """``0 -> X' -> C^{-n} -> ... -> C^0 -> X -> 0`` stored as a complex in degrees ``-n-2..0``."""

    complex: BoundedComplex
    n: int
    end_term: Module
    start_term: Module

    @property
    def length(self) -> int:
        """Number of nonzero terms."""
        return sum(1 for d in self.complex.degrees() if self.complex.term(d).dim)

    def terms(self) -> list[Module]:
        return [self.complex.term(d) for d in range(-self.n - 2, 1)]

    def render(self, catalog: Sequence[Module] = ()) -> str:
        names = []
        for t in self.terms():
            names.append(catalog_label(t, catalog) if catalog else (t.label() if t.dim else "0"))
        # padding zeros on the left are dropped from the display
        while len(names) > 1 and names[0] == "0":
            names.pop(0)
        return " -> ".join(["0"] + names + ["0"])

    def to_json(self, catalog: Sequence[Module] = ()) -> dict:
        return {"n": self.n, "sequence": self.render(catalog),
                "terms": [catalog_label(t, catalog) for t in self.terms()],
                "length": self.length}


def higher_ar_sequence(x: Module, c: SubcatDescriptor, n: int, depth: int | None = None) -> HigherARSequence:
    """The simple top of ``P_x`` read as an exact sequence ending in ``x``."""
    L = minimize(simple_quotient_L(x, c, depth)).complex
    t = L.trimmed()
    if t.lo < -n - 2:
        raise AssertionError(f"simple object is longer than the {n}-orthogonal window")
    full = t.window(-n - 2, 0)
    if not is_projective(x):
        if not is_acyclic(full):
            raise AssertionError("higher almost split sequence is not exact")
        if not is_simple(full, c):
            raise AssertionError("condition (*) fails")
        start = full.term(-n - 2)
    else:
        start = zero_module(x.algebra)
    return HigherARSequence(full, n, full.term(0), start)


def verify_ar_duality(x: Module, y: Module, c: SubcatDescriptor, n: int,
                      depth: int | None = None) -> tuple[int, int]:
    """``(dim stable Hom(x, y), dim Ext^{n+1}(y, X'))``."""
    seq = higher_ar_sequence(x, c, n, depth)
    return stable_hom_dim(x, y), ext_dim(y, seq.start_term, n + 1)


def dtr_omega_check(x: Module, c: SubcatDescriptor, n: int, depth: int | None = None) -> bool:
    """``X' ≅ DTr Omega^n x``."""
    seq = higher_ar_sequence(x, c, n, depth)
    target = transpose_dtr(syzygy(x, n))
    return is_isomorphic(seq.start_term, target) is not None


def c_dimension(m: Module, c: SubcatDescriptor, depth: int | None = None) -> int:
    """Length of the Godement C-resolution of ``m``."""
    ap = c_approximation(concentrated(m, 0), c, depth)
    mn = minimize(ap.complex).complex
    return -mn.lo if not mn.is_zero() else 0


def split_trichotomy(seq: BoundedComplex) -> tuple[bool, bool, bool]:
    """For an exact sequence with terms in C: (last map split, first map split, null-homotopic)."""
    from .complexes import identity_map, is_null_homotopic
    from .heart import _has_section
    from .linalg import Matrix, solve
    from .modules import hom_basis

    t = seq.trimmed()
    last = _has_section(t.diff(t.hi - 1), t.term(t.hi - 1), t.term(t.hi))
    # the first map is split mono when some retraction exists
    a, b = t.term(t.lo), t.term(t.lo + 1)
    d = t.diff(t.lo)
    H = hom_basis(b, a)
    F = a.field
    first = False
    if H.dim:
        n = a.dim * a.dim
        M = Matrix.from_columns(F, [(r @ d).flatten() for r in H.basis], n)
        first = solve(M, Matrix.from_columns(F, [Matrix.identity(F, a.dim).flatten()], n)) is not None
    elif a.dim == 0:
        first = True
    null = is_null_homotopic(identity_map(t))
    return last, first, null

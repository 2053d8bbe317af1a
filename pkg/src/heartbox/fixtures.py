"""Built-in algebras and module catalogues used by the tests and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra
from .linalg import FieldSpec, Matrix
from .modules import Module, indecomposable_projectives, is_isomorphic, simple_modules


@dataclass
class Fixture:
    """An algebra together with named modules (a complete indecomposable catalogue when known)."""

    algebra: Algebra
    modules: dict[str, Module]
    catalog: list[str] = dc_field(default_factory=list)
    notes: dict = dc_field(default_factory=dict)

    def __getitem__(self, name: str) -> Module:
        return self.modules[name]

    def catalog_modules(self) -> list[Module]:
        return [self.modules[n] for n in self.catalog]


def _parse_field(field) -> FieldSpec:
    if isinstance(field, FieldSpec):
        return field
    if field in (None, "Q", "QQ"):
        return FieldSpec.rationals()
    return FieldSpec.prime(int(field))


def truncated_polynomial(p: int | FieldSpec, n: int) -> Algebra:
    """k[x]/(x^n) on the monomial basis."""
    f = _parse_field(p)
    mul = {}
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mul[(i, j)] = [(i + j, 1)]
    labels = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, n)]
    unit = [1] + [0] * (n - 1)
    name = f"k[x]/(x^{n})" if f.kind == "Q" else f"GF({f.p})[x]/(x^{n})"
    return Algebra(name, f, n, labels, mul, unit).validate()


def _uniserial(A: Algebra, i: int) -> Module:
    """k[x]/(x^i) as a module over k[x]/(x^n)."""
    f = A.field
    acts = []
    for j in range(A.dim):
        M = Matrix.zeros(f, i, i)
        for c in range(i):
            if c + j < i:
                M.data[c + j][c] = f.one
        acts.append(M)
    return Module(A, acts, name=f"M{i}")


def nakayama(p: int | FieldSpec = 7, n: int = 2) -> Fixture:
    """k[x]/(x^n) with its indecomposables M1..Mn (M1 = k, Mn = the regular module)."""
    if n < 1:
        raise ValueError("n must be positive")
    A = truncated_polynomial(p, n)
    mods = {f"M{i}": _uniserial(A, i) for i in range(1, n + 1)}
    mods["k"] = mods["M1"]
    mods["Lambda"] = mods[f"M{n}"]
    return Fixture(A, mods, [f"M{i}" for i in range(1, n + 1)], {"kind": "nakayama", "n": n})


def a3rad2_algebra(field=None) -> Algebra:
    """Path algebra of 1 -> 2 -> 3 modulo paths of length two.

    Basis e1, e2, e3, a, b with a = e2 a e1 and b = e3 b e2.
    """
    f = _parse_field(field)
    e1, e2, e3, a, b = range(5)
    mul = {
        (e1, e1): [(e1, 1)], (e2, e2): [(e2, 1)], (e3, e3): [(e3, 1)],
        (e2, a): [(a, 1)], (a, e1): [(a, 1)],
        (e3, b): [(b, 1)], (b, e2): [(b, 1)],
    }
    name = "A3/rad^2" if f.kind == "Q" else f"A3/rad^2 over GF({f.p})"
    return Algebra(name, f, 5, ["e1", "e2", "e3", "a", "b"], mul, [1, 1, 1, 0, 0]).validate()


def _rep(A: Algebra, dims: tuple[int, int, int], a_map, b_map, name: str) -> Module:
    """Module from a quiver representation V1 -a-> V2 -b-> V3."""
    f = A.field
    n = sum(dims)
    off = [0, dims[0], dims[0] + dims[1]]

    def proj(v):
        M = Matrix.zeros(f, n, n)
        for i in range(dims[v]):
            M.data[off[v] + i][off[v] + i] = f.one
        return M

    def arrow(src, dst, mat):
        M = Matrix.zeros(f, n, n)
        for r, row in enumerate(mat):
            for c, x in enumerate(row):
                M.data[off[dst] + r][off[src] + c] = f.coerce(x)
        return M

    acts = [proj(0), proj(1), proj(2), arrow(0, 1, a_map), arrow(1, 2, b_map)]
    return Module(A, acts, name=name)


def a3rad2(field=None) -> Fixture:
    """A3 modulo rad^2 with its five indecomposables S1, S2, S3 = P3, P1, P2."""
    A = a3rad2_algebra(field)
    mods = {
        "S1": _rep(A, (1, 0, 0), [], [], "S1"),
        "S2": _rep(A, (0, 1, 0), [], [], "S2"),
        "S3": _rep(A, (0, 0, 1), [], [], "S3"),
        "P1": _rep(A, (1, 1, 0), [[1]], [], "P1"),
        "P2": _rep(A, (0, 1, 1), [], [[1]], "P2"),
    }
    mods["P3"] = mods["S3"]
    mods["I1"] = mods["S1"]
    mods["I2"] = mods["P1"]
    mods["I3"] = mods["P2"]
    return Fixture(A, mods, ["S1", "S2", "S3", "P1", "P2"], {"kind": "a3rad2"})


def name_catalog(A: Algebra, catalog: list[Module]) -> None:
    """Rename the cached projectives and simples of ``A`` after matching catalogue entries."""
    for P in indecomposable_projectives(A) + simple_modules(A):
        for c in catalog:
            if is_isomorphic(P, c) is not None:
                P.name = c.name
                break

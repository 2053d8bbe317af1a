"""Bounded cochain complexes of modules, chain maps and the homotopy category.

A complex stores its terms for degrees ``lo..hi``; outside the window every
term is zero.  ``diff(d)`` is the matrix of ``X^d -> X^{d+1}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra
from .errors import AlgebraMismatch, NotCommutative
from .linalg import Matrix, Span, block, block_diag, inverse, kronecker, rank, solve, solve_kernel
from .modules import (HomBasis, Module, _decompose_pieces, direct_sum, hom_basis, quotient_module,
                      submodule, zero_module)


class BoundedComplex:
    __slots__ = ("algebra", "lo", "terms", "diffs", "name", "_cache")

    def __init__(self, algebra: Algebra, lo: int, terms: Sequence[Module], diffs: Sequence[Matrix],
                 name: str | None = None, check: bool = True):
        if not terms:
            terms = [zero_module(algebra)]
        if len(diffs) != len(terms) - 1:
            raise ValueError("need one differential between consecutive terms")
        self.algebra = algebra
        self.lo = lo
        self.terms = list(terms)
        self.diffs = list(diffs)
        self.name = name
        self._cache: dict = {}
        for i, d in enumerate(self.diffs):
            if d.shape != (self.terms[i + 1].dim, self.terms[i].dim):
                raise ValueError(f"differential in degree {lo + i} has the wrong shape")
        if check:
            self.validate()

    @property
    def hi(self) -> int:
        return self.lo + len(self.terms) - 1

    @property
    def field(self):
        return self.algebra.field

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def term(self, d: int) -> Module:
        if self.lo <= d <= self.hi:
            return self.terms[d - self.lo]
        return zero_module(self.algebra)

    def diff(self, d: int) -> Matrix:
        if self.lo <= d < self.hi:
            return self.diffs[d - self.lo]
        return Matrix.zeros(self.field, self.term(d + 1).dim, self.term(d).dim)

    def dims(self) -> dict[int, int]:
        return {d: self.term(d).dim for d in self.degrees()}

    def total_dim(self) -> int:
        return sum(t.dim for t in self.terms)

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def support(self) -> list[int]:
        return [d for d in self.degrees() if self.term(d).dim]

    def validate(self) -> "BoundedComplex":
        for t in self.terms:
            if not t.algebra.same_as(self.algebra):
                raise AlgebraMismatch("complex terms over different algebras")
        for i in range(len(self.diffs) - 1):
            if not (self.diffs[i + 1] @ self.diffs[i]).is_zero():
                raise AssertionError(f"d o d != 0 at degree {self.lo + i}")
        for i, d in enumerate(self.diffs):
            src, tgt = self.terms[i], self.terms[i + 1]
            for g in self.algebra.generators:
                if d @ src.action[g] != tgt.action[g] @ d:
                    raise AssertionError(f"differential in degree {self.lo + i} is not a module map")
        return self

    def window(self, lo: int, hi: int) -> "BoundedComplex":
        """Same complex presented on ``[lo, hi]`` (must contain the support)."""
        for d in self.support():
            if d < lo or d > hi:
                raise ValueError(f"degree {d} lies outside the requested window")
        terms = [self.term(d) for d in range(lo, hi + 1)]
        diffs = [self.diff(d) for d in range(lo, hi)]
        return BoundedComplex(self.algebra, lo, terms, diffs, name=self.name, check=False)

    def trimmed(self) -> "BoundedComplex":
        sup = self.support()
        if not sup:
            return zero_complex(self.algebra)
        return self.window(sup[0], sup[-1])

    def __repr__(self) -> str:
        parts = []
        for d in self.degrees():
            t = self.term(d)
            parts.append(f"{d}:{t.label() if t.dim else '0'}")
        return f"Complex[{' -> '.join(parts)}]"

    def describe(self, catalog: Sequence[Module] = ()) -> str:
        """Arrow chain of the terms, named after ``catalog`` entries when given."""
        from .modules import catalog_label, indecomposable_summands

        out = []
        for d in self.degrees():
            t = self.term(d)
            if t.dim == 0:
                out.append("0")
                continue
            if catalog:
                out.append(catalog_label(t, catalog))
                continue
            dec = indecomposable_summands(t)
            names = []
            for s, mlt in dec.summands:
                names.append(s.label() if mlt == 1 else f"{s.label()}^{mlt}")
            out.append("⊕".join(names))
        return " -> ".join(out)


def zero_complex(A: Algebra) -> BoundedComplex:
    return BoundedComplex(A, 0, [zero_module(A)], [], check=False)


def concentrated(m: Module, degree: int = 0) -> BoundedComplex:
    """``m[-degree]``: the module placed in a single degree."""
    return BoundedComplex(m.algebra, degree, [m], [], name=m.name, check=False)


def two_term(f_matrix: Matrix, source: Module, target: Module, lo: int = -1) -> BoundedComplex:
    return BoundedComplex(source.algebra, lo, [source, target], [f_matrix])


def from_sequence(mods: Sequence[Module], maps: Sequence[Matrix], hi: int = 0) -> BoundedComplex:
    """Complex whose last term sits in degree ``hi``."""
    return BoundedComplex(mods[0].algebra, hi - len(mods) + 1, list(mods), list(maps))


def shift(x: BoundedComplex, n: int) -> BoundedComplex:
    """``x[n]``: ``x[n]^d = x^{d+n}`` with differential multiplied by ``(-1)^n``."""
    sign = -1 if n % 2 else 1
    diffs = [d if sign == 1 else -d for d in x.diffs]
    return BoundedComplex(x.algebra, x.lo - n, x.terms, diffs, check=False)


# ---------------------------------------------------------------------------
# chain maps


class ChainMap:
    __slots__ = ("source", "target", "comps")

    def __init__(self, source: BoundedComplex, target: BoundedComplex, comps: dict[int, Matrix],
                 check: bool = True):
        self.source = source
        self.target = target
        f = source.field
        full = {}
        for d in range(min(source.lo, target.lo), max(source.hi, target.hi) + 1):
            s, t = source.term(d).dim, target.term(d).dim
            c = comps.get(d)
            if c is None or s == 0 or t == 0:
                c = Matrix.zeros(f, t, s)
            elif c.shape != (t, s):
                raise ValueError(f"component in degree {d} has the wrong shape")
            full[d] = c
        self.comps = full
        if check:
            self.validate()

    def comp(self, d: int) -> Matrix:
        c = self.comps.get(d)
        if c is None:
            return Matrix.zeros(self.source.field, self.target.term(d).dim, self.source.term(d).dim)
        return c

    def degrees(self) -> list[int]:
        return sorted(self.comps)

    def validate(self) -> "ChainMap":
        x, y = self.source, self.target
        for d in self.degrees():
            if self.comp(d + 1) @ x.diff(d) != y.diff(d) @ self.comp(d):
                raise AssertionError(f"chain map does not commute at degree {d}")
        return self

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        comps = {d: self.comp(d) @ other.comp(d) for d in set(self.degrees()) | set(other.degrees())}
        return ChainMap(other.source, self.target, comps, check=False)

    def __add__(self, other: "ChainMap") -> "ChainMap":
        comps = {d: self.comp(d) + other.comp(d) for d in set(self.degrees()) | set(other.degrees())}
        return ChainMap(self.source, self.target, comps, check=False)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        comps = {d: self.comp(d) - other.comp(d) for d in set(self.degrees()) | set(other.degrees())}
        return ChainMap(self.source, self.target, comps, check=False)

    def scale(self, c) -> "ChainMap":
        return ChainMap(self.source, self.target, {d: m.scale(c) for d, m in self.comps.items()},
                        check=False)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.comps.values())


def identity_map(x: BoundedComplex) -> ChainMap:
    return ChainMap(x, x, {d: Matrix.identity(x.field, x.term(d).dim) for d in x.degrees()},
                    check=False)


def zero_map(x: BoundedComplex, y: BoundedComplex) -> ChainMap:
    return ChainMap(x, y, {}, check=False)


def module_map_complex(f: Matrix, m: Module, n: Module, degree: int = 0) -> ChainMap:
    return ChainMap(concentrated(m, degree), concentrated(n, degree), {degree: f})


def shift_map(f: ChainMap, n: int) -> ChainMap:
    return ChainMap(shift(f.source, n), shift(f.target, n),
                    {d - n: m for d, m in f.comps.items()}, check=False)


# ---------------------------------------------------------------------------
# cones


def cone(f: ChainMap) -> BoundedComplex:
    """``Cone(f)^d = X^{d+1} ⊕ Y^d`` with differential ``[[-d_X, 0], [f, d_Y]]``."""
    x, y = f.source, f.target
    lo = min(x.lo - 1, y.lo)
    hi = max(x.hi - 1, y.hi)
    F = x.field
    terms = []
    for d in range(lo, hi + 1):
        a, b = x.term(d + 1), y.term(d)
        if a.dim == 0:
            terms.append(b)
        elif b.dim == 0:
            terms.append(a)
        else:
            terms.append(direct_sum([a, b])[0])
    diffs = []
    for d in range(lo, hi):
        xa, xb = x.term(d + 1).dim, x.term(d + 2).dim
        ya, yb = y.term(d).dim, y.term(d + 1).dim
        diffs.append(block([[-x.diff(d + 1), None], [f.comp(d + 1), y.diff(d)]], F,
                           [xb, yb], [xa, ya]))
    return BoundedComplex(x.algebra, lo, terms, diffs)


def cone_inclusion(f: ChainMap) -> ChainMap:
    """The canonical map ``Y -> Cone(f)``."""
    C = cone(f)
    x, y = f.source, f.target
    F = x.field
    comps = {}
    for d in y.degrees():
        a, b = x.term(d + 1).dim, y.term(d).dim
        comps[d] = block([[None], [Matrix.identity(F, b)]], F, [a, b], [b])
    return ChainMap(y, C, comps)


def cone_projection(f: ChainMap) -> ChainMap:
    """The canonical map ``Cone(f) -> X[1]``."""
    C = cone(f)
    x, y = f.source, f.target
    F = x.field
    X1 = shift(x, 1)
    comps = {}
    for d in C.degrees():
        a, b = x.term(d + 1).dim, y.term(d).dim
        comps[d] = block([[Matrix.identity(F, a), None]], F, [a], [a, b])
    return ChainMap(C, X1, comps)


# ---------------------------------------------------------------------------
# Hom in the homotopy category


@dataclass
class HomotopyHomSpace:
    source: BoundedComplex
    target: BoundedComplex
    degrees: list[int]
    bases: dict[int, HomBasis]
    chain_basis: list[list]          # coordinate vectors of a chain-map basis
    null_span: Span                  # span of null-homotopic maps in coordinates
    reps: list[ChainMap]             # representatives of a quotient basis

    @property
    def dim(self) -> int:
        return len(self.reps)

    @property
    def chain_dim(self) -> int:
        return len(self.chain_basis)

    @property
    def null_dim(self) -> int:
        return self.null_span.dim

    def coords(self, f: ChainMap) -> list:
        out = []
        for d in self.degrees:
            out.extend(self.bases[d].coords(f.comp(d)))
        return out

    def from_coords(self, v: Sequence) -> ChainMap:
        comps = {}
        off = 0
        for d in self.degrees:
            hb = self.bases[d]
            comps[d] = hb.combine(v[off:off + hb.dim])
            off += hb.dim
        return ChainMap(self.source, self.target, comps, check=False)

    def is_null(self, f: ChainMap) -> bool:
        return self.null_span.contains(self.coords(f))

    def quotient_coords(self, f: ChainMap) -> list:
        """Coordinates of the class of ``f`` against ``reps``."""
        F = self.source.field
        v = self.null_span.reduce(self.coords(f))
        if not self.reps:
            if any(v):
                raise ValueError("map is not a chain map")
            return []
        cols = [self.null_span.reduce(self.coords(r)) for r in self.reps]
        M = Matrix.from_columns(F, cols, len(v))
        sol = solve(M, Matrix.from_columns(F, [v], len(v)))
        if sol is None:
            raise ValueError("map is not a chain map")
        return [sol.data[i][0] for i in range(len(self.reps))]


def hom_homotopy(x: BoundedComplex, y: BoundedComplex) -> HomotopyHomSpace:
    """Hom in the homotopy category: chain maps modulo null-homotopic ones."""
    if not x.algebra.same_as(y.algebra):
        raise AlgebraMismatch("complexes over different algebras")
    F = x.field
    degrees = [d for d in range(max(x.lo, y.lo), min(x.hi, y.hi) + 1)
               if x.term(d).dim and y.term(d).dim]
    bases = {d: hom_basis(x.term(d), y.term(d)) for d in degrees}
    degrees = [d for d in degrees if bases[d].dim]
    offs = {}
    n = 0
    for d in degrees:
        offs[d] = n
        n += bases[d].dim
    # equations d_Y f^d - f^{d+1} d_X = 0, one block of rows per degree
    rows: list[list] = []
    eq_degrees = sorted(set(degrees) | {d - 1 for d in degrees})
    for d in eq_degrees:
        ny, nx = y.term(d + 1).dim, x.term(d).dim
        if ny == 0 or nx == 0:
            continue
        cols: dict[int, list] = {}
        if d in offs:
            dy = y.diff(d)
            for a, b in enumerate(bases[d].basis):
                cols[offs[d] + a] = (dy @ b).flatten()
        if d + 1 in offs:
            dx = x.diff(d)
            for a, b in enumerate(bases[d + 1].basis):
                v = (b @ dx).flatten()
                cols[offs[d + 1] + a] = [F.neg(t) for t in v]
        if not cols:
            continue
        length = ny * nx
        for r in range(length):
            row = [F.zero] * n
            nz = False
            for c, v in cols.items():
                if v[r]:
                    row[c] = v[r]
                    nz = True
            if nz:
                rows.append(row)
    if n == 0:
        chain = []
    elif rows:
        chain = solve_kernel(Matrix(F, len(rows), n, rows)).columns()
    else:
        chain = [[F.one if i == j else F.zero for i in range(n)] for j in range(n)]
    # null-homotopic maps d_Y h + h d_X
    null_vecs = []
    for d in range(min(x.lo, y.lo + 1), max(x.hi, y.hi + 1) + 1):
        xs, yt = x.term(d), y.term(d - 1)
        if xs.dim == 0 or yt.dim == 0:
            continue
        H = hom_basis(xs, yt)
        for h in H.basis:
            v = [F.zero] * n
            if d in offs:
                c = bases[d].coords(y.diff(d - 1) @ h)
                v[offs[d]:offs[d] + len(c)] = c
            if d - 1 in offs:
                c = bases[d - 1].coords(h @ x.diff(d - 1))
                o = offs[d - 1]
                for i, t in enumerate(c):
                    v[o + i] = F.add(v[o + i], t)
            if any(v):
                null_vecs.append(v)
    null = Span(F, n, null_vecs)
    reps = []
    grow = null
    for v in chain:
        if not grow.contains(v):
            grow = grow.extended([v])
            reps.append(v)
    hs = HomotopyHomSpace(x, y, degrees, bases, chain, null, [])
    hs.reps = [hs.from_coords(v) for v in reps]
    return hs


def is_null_homotopic(f: ChainMap) -> bool:
    return hom_homotopy(f.source, f.target).is_null(f)


# ---------------------------------------------------------------------------
# cohomology


def cohomology(x: BoundedComplex, i: int) -> Module:
    """``H^i(x) = Ker d^i / Im d^{i-1}``."""
    t = x.term(i)
    if t.dim == 0:
        return zero_module(x.algebra)
    K, Kin = submodule(t, solve_kernel(x.diff(i)).columns())
    if K.dim == 0:
        return K
    im = x.diff(i - 1).columns()
    sp = Span(x.field, t.dim, Kin.columns())
    coords = [[c[p] for p in sp.pivots] for c in im]
    # Kin columns are the Span rows, so coordinates in K are the pivot entries
    Q, _, _ = quotient_module(K, Span(x.field, K.dim, coords))
    return Q


def cohomology_dims(x: BoundedComplex) -> dict[int, int]:
    out = {}
    for i in x.degrees():
        r_in = rank(x.diff(i - 1)) if x.term(i - 1).dim else 0
        r_out = rank(x.diff(i)) if x.term(i + 1).dim else 0
        out[i] = x.term(i).dim - r_in - r_out
    return out


def is_acyclic(x: BoundedComplex) -> bool:
    return all(v == 0 for v in cohomology_dims(x).values())


# ---------------------------------------------------------------------------
# minimisation by Gaussian elimination


@dataclass
class Minimized:
    """``complex`` with mutually homotopy-inverse chain maps ``u: x -> complex`` and ``v``."""

    complex: BoundedComplex
    u: ChainMap
    v: ChainMap


def minimize(x: BoundedComplex) -> Minimized:
    """Strip contractible summands ``[P -iso-> P]`` by Gaussian elimination."""
    F = x.field
    lo, hi = x.lo, x.hi
    pieces: dict[int, list[Module]] = {}
    D: dict[int, Matrix] = {}
    U: dict[int, Matrix] = {}
    V: dict[int, Matrix] = {}
    for d in range(lo, hi + 1):
        t = x.term(d)
        ps = _decompose_pieces(t)
        pieces[d] = [p for p, _, _ in ps]
        if ps:
            T = Matrix.from_columns(F, [c for _, inc, _ in ps for c in inc.columns()], t.dim)
            Tinv = inverse(T)
            if Tinv is None:
                raise AssertionError("decomposition does not give a basis")
        else:
            T = Tinv = Matrix(F, 0, 0, [])
        V[d], U[d] = T, Tinv
    for d in range(lo, hi):
        D[d] = U[d + 1] @ x.diff(d) @ V[d]

    def offsets(d):
        out, o = [], 0
        for p in pieces[d]:
            out.append((o, p.dim))
            o += p.dim
        return out

    def find_pivot():
        for d in range(lo, hi):
            M = D[d]
            for a, (oa, ka) in enumerate(offsets(d)):
                for b, (ob, kb) in enumerate(offsets(d + 1)):
                    if ka != kb:
                        continue
                    phi = M.submatrix(list(range(ob, ob + kb)), list(range(oa, oa + ka)))
                    if rank(phi) == ka:
                        return d, a, b
        return None

    while True:
        piv = find_pivot()
        if piv is None:
            break
        i, a, b = piv
        oi, oj = offsets(i), offsets(i + 1)
        oa, ka = oi[a]
        ob, kb = oj[b]
        n_i = sum(k for _, k in oi)
        n_j = sum(k for _, k in oj)
        Ia = list(range(oa, oa + ka))
        IB = [c for c in range(n_i) if not oa <= c < oa + ka]
        Jb = list(range(ob, ob + kb))
        JC = [r for r in range(n_j) if not ob <= r < ob + kb]
        M = D[i]
        phi_inv = inverse(M.submatrix(Jb, Ia))
        beta = M.submatrix(Jb, IB)
        gamma = M.submatrix(JC, Ia)
        delta = M.submatrix(JC, IB)
        g_phi = gamma @ phi_inv
        D[i] = delta - g_phi @ beta
        if i - 1 >= lo:
            D[i - 1] = D[i - 1].submatrix(IB, None)
        if i + 1 < hi:
            D[i + 1] = D[i + 1].submatrix(None, JC)
        U[i] = U[i].submatrix(IB, None)
        U[i + 1] = U[i + 1].submatrix(JC, None) - g_phi @ U[i + 1].submatrix(Jb, None)
        V[i] = V[i].submatrix(None, IB) - V[i].submatrix(None, Ia) @ (phi_inv @ beta)
        V[i + 1] = V[i + 1].submatrix(None, JC)
        del pieces[i][a]
        del pieces[i + 1][b]
    terms = []
    for d in range(lo, hi + 1):
        if pieces[d]:
            if len(pieces[d]) == 1:
                terms.append(pieces[d][0])
            else:
                terms.append(direct_sum(pieces[d])[0])
        else:
            terms.append(zero_module(x.algebra))
    m = BoundedComplex(x.algebra, lo, terms, [D[d] for d in range(lo, hi)], name=x.name)
    u = ChainMap(x, m, dict(U), check=True)
    v = ChainMap(m, x, dict(V), check=True)
    mt = m.trimmed()
    if mt.lo != m.lo or mt.hi != m.hi:
        u = ChainMap(x, mt, u.comps, check=False)
        v = ChainMap(mt, x, v.comps, check=False)
        m = mt
    return Minimized(m, u, v)


def minimal(x: BoundedComplex) -> BoundedComplex:
    return minimize(x).complex


def homotopy_equivalent(x: BoundedComplex, y: BoundedComplex) -> tuple[ChainMap, ChainMap] | None:
    """Mutually inverse homotopy classes ``x -> y -> x``, or None.

    Both sides are minimised first; minimal complexes are homotopy equivalent
    exactly when they are isomorphic as complexes, which reduces to finding an
    invertible chain map.
    """
    mx, my = minimize(x), minimize(y)
    a, b = mx.complex, my.complex
    if a.is_zero() and b.is_zero():
        return zero_map(x, y), zero_map(y, x)
    if {d: a.term(d).dim for d in a.support()} != {d: b.term(d).dim for d in b.support()}:
        return None
    H = hom_homotopy(a, b)
    iso = _invertible_chain_map(H, a, b)
    if iso is None:
        return None
    inv_comps = {d: inverse(iso.comp(d)) for d in a.support()}
    back = ChainMap(b, a, inv_comps)
    fwd = my.v @ iso @ mx.u
    bwd = mx.v @ back @ my.u
    return fwd, bwd


def _invertible_chain_map(H: HomotopyHomSpace, a: BoundedComplex, b: BoundedComplex) -> ChainMap | None:
    import itertools
    import random

    F = a.field
    sup = a.support()

    def invertible(f: ChainMap) -> bool:
        return all(rank(f.comp(d)) == a.term(d).dim for d in sup)

    basis = [H.from_coords(v) for v in H.chain_basis]
    if not basis:
        return None
    for f in basis:
        if invertible(f):
            return f
    size = F.size
    if size is not None and size ** len(basis) <= 4096:
        for coeffs in itertools.product(range(size), repeat=len(basis)):
            if any(coeffs):
                f = _combine(basis, coeffs, F)
                if invertible(f):
                    return f
        return None
    rng = random.Random(0)
    for _ in range(64):
        coeffs = [F.coerce(rng.randrange(1, 101)) for _ in basis]
        f = _combine(basis, coeffs, F)
        if invertible(f):
            return f
    return None


def _combine(maps: Sequence[ChainMap], coeffs: Sequence, F) -> ChainMap:
    out = maps[0].scale(F.coerce(coeffs[0]))
    for m, c in zip(maps[1:], coeffs[1:]):
        if c:
            out = out + m.scale(F.coerce(c))
    return out


# ---------------------------------------------------------------------------
# tensor products over a commutative algebra


class Bimodule(Module):
    """Module with an extra commuting right action (``right[i]`` acts on column vectors)."""

    __slots__ = ("right",)

    def __init__(self, algebra: Algebra, action, right, name: str | None = None, check: bool = True):
        super().__init__(algebra, action, name=name, check=False)
        self.right = tuple(right)
        if check:
            self.validate()
            for g in algebra.generators:
                for h in algebra.generators:
                    if self.action[g] @ self.right[h] != self.right[h] @ self.action[g]:
                        raise AssertionError("left and right actions do not commute")


def right_action(m: Module) -> tuple[Matrix, ...]:
    r = getattr(m, "right", None)
    if r is not None:
        return r
    if not m.algebra.is_commutative():
        raise NotCommutative("tensor product of left modules needs a commutative algebra")
    return m.action


@dataclass
class TensorData:
    module: Module
    proj: Matrix      # M ⊗_k N -> M ⊗_R N
    section: Matrix   # linear section


def tensor_modules(m: Module, n: Module) -> TensorData:
    """``m ⊗_R n`` as the quotient of ``m ⊗_k n`` by ``m r ⊗ x - m ⊗ r x``."""
    A = m.algebra
    F = A.field
    R = right_action(m)
    Im = Matrix.identity(F, m.dim)
    In = Matrix.identity(F, n.dim)
    vecs = []
    for g in A.generators:
        K = kronecker(R[g], In) - kronecker(Im, n.action[g])
        vecs.extend(c for c in K.columns() if any(c))
    sp = Span(F, m.dim * n.dim, vecs)
    acts = [kronecker(M, In) for M in m.action]
    big = Module(A, acts, check=False, dim=m.dim * n.dim)
    q, P, S = quotient_module(big, sp)
    return TensorData(q, P, S)


def tensor_complexes(x: BoundedComplex, y: BoundedComplex) -> BoundedComplex:
    """Total complex of ``x ⊗_R y`` with ``d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db``."""
    A = x.algebra
    F = A.field
    lo, hi = x.lo + y.lo, x.hi + y.hi
    cache: dict[tuple[int, int], TensorData] = {}

    def td(p, q):
        key = (p, q)
        if key not in cache:
            cache[key] = tensor_modules(x.term(p), y.term(q))
        return cache[key]

    def pairs(n):
        return [(p, n - p) for p in range(x.lo, x.hi + 1) if y.lo <= n - p <= y.hi]

    terms = []
    layout = {}
    for n in range(lo, hi + 1):
        mods = [td(p, q).module for p, q in pairs(n)]
        nonzero = [mm for mm in mods if mm.dim]
        layout[n] = pairs(n)
        if not nonzero:
            terms.append(zero_module(A))
        elif len(nonzero) == 1 and len(mods) == 1:
            terms.append(nonzero[0])
        else:
            terms.append(direct_sum(mods)[0] if len(mods) > 1 else mods[0])
    diffs = []
    for n in range(lo, hi):
        src, tgt = layout[n], layout[n + 1]
        rs = [td(p, q).module.dim for p, q in tgt]
        cs = [td(p, q).module.dim for p, q in src]
        blocks = []
        for (p2, q2) in tgt:
            row = []
            for (p, q) in src:
                if p2 == p + 1 and q2 == q:
                    row.append(_tensor_map(td(p, q), td(p2, q2), x.diff(p), Matrix.identity(F, y.term(q).dim)))
                elif p2 == p and q2 == q + 1:
                    mat = _tensor_map(td(p, q), td(p2, q2), Matrix.identity(F, x.term(p).dim), y.diff(q))
                    row.append(-mat if p % 2 else mat)
                else:
                    row.append(None)
            blocks.append(row)
        diffs.append(block(blocks, F, rs, cs))
    out = BoundedComplex(A, lo, terms, diffs)
    return out


def _tensor_map(src: TensorData, tgt: TensorData, f: Matrix, g: Matrix) -> Matrix:
    return tgt.proj @ kronecker(f, g) @ src.section


def tensor_module_maps(f: Matrix, m: Module, m2: Module, g: Matrix, n: Module, n2: Module) -> Matrix:
    return _tensor_map(tensor_modules(m, n), tensor_modules(m2, n2), f, g)


def direct_sum_complexes(xs: Sequence[BoundedComplex]) -> BoundedComplex:
    """Degreewise direct sum of complexes over the same algebra."""
    if len(xs) == 1:
        return xs[0]
    A = xs[0].algebra
    F = A.field
    lo = min(x.lo for x in xs)
    hi = max(x.hi for x in xs)
    terms = []
    for d in range(lo, hi + 1):
        mods = [x.term(d) for x in xs]
        nz = [m for m in mods if m.dim]
        if not nz:
            terms.append(zero_module(A))
        elif len(nz) == 1:
            terms.append(nz[0])
        else:
            terms.append(direct_sum(nz)[0])
    diffs = [block_diag([x.diff(d) for x in xs], F) for d in range(lo, hi)]
    return BoundedComplex(A, lo, terms, diffs)

"""Finite-dimensional left modules given by action matrices, and the classical
homological toolkit built on them: Hom spaces, Krull-Schmidt decomposition,
radicals, covers and hulls, resolutions, transpose, duals, Ext and stable Hom.

Maps are matrices acting on column vectors, so a map ``M -> N`` has shape
``(dim N, dim M)`` and intertwines: ``f @ rho_M(a) == rho_N(a) @ f``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import Algebra
from .errors import AlgebraMismatch, CharTooSmall, MalformedInput, SplitFailure
from .linalg import (FieldSpec, Matrix, Span, _rref_rows, block_diag, hstack, inverse, rank,
                     solve, solve_kernel, vstack)
from . import polys


_SEED = 0


def set_seed(seed: int) -> None:
    """Seed for the random sampling in isomorphism and splitting searches."""
    global _SEED
    _SEED = seed


class Module:
    """Left module over ``algebra``; ``action[i]`` is the matrix of basis element i."""

    __slots__ = ("algebra", "dim", "action", "name", "_cache", "summands", "__weakref__")

    def __init__(self, algebra: Algebra, action: Sequence[Matrix], name: str | None = None,
                 check: bool = True, dim: int | None = None):
        if len(action) != algebra.dim:
            raise MalformedInput(f"need {algebra.dim} action matrices, got {len(action)}")
        self.algebra = algebra
        self.action = tuple(action)
        self.dim = action[0].rows if action else (dim or 0)
        self.name = name
        self._cache: dict = {}
        # optional known decomposition: list of (indecomposable, inclusion, projection)
        self.summands: list | None = None
        if check:
            self.validate()

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def __repr__(self) -> str:
        return f"Module({self.name or '?'}, dim={self.dim})"

    def label(self) -> str:
        return self.name or f"<dim {self.dim}>"

    def validate(self) -> "Module":
        A = self.algebra
        n = self.dim
        for m in self.action:
            if m.shape != (n, n) or m.field != A.field:
                raise MalformedInput("action matrices must be square over the algebra field")
        if self.act(A.unit) != Matrix.identity(A.field, n):
            raise MalformedInput("unit does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.action[i] @ self.action[j]
                rhs = self.act(A.product(A.basis_vec(i), A.basis_vec(j)))
                if lhs != rhs:
                    raise MalformedInput(f"action breaks the relation e{i} e{j}")
        return self

    def act(self, a: Sequence) -> Matrix:
        """Matrix of an arbitrary algebra element given by coefficients."""
        key = ("act", tuple(a))
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        f = self.field
        n = self.dim
        if f.kind == "Fp":
            p = f.p
            acc = [[0] * n for _ in range(n)]
            for c, M in zip(a, self.action):
                if c:
                    for i in range(n):
                        ri, mi = acc[i], M.data[i]
                        for j in range(n):
                            if mi[j]:
                                ri[j] += c * mi[j]
            out = Matrix(f, n, n, [[x % p for x in r] for r in acc])
        else:
            out = Matrix.zeros(f, n, n)
            for c, M in zip(a, self.action):
                if c:
                    for i in range(n):
                        ri, mi = out.data[i], M.data[i]
                        for j in range(n):
                            if mi[j]:
                                ri[j] += c * mi[j]
        self._cache[key] = out
        return out

    def gen_action(self) -> list[Matrix]:
        return [self.action[g] for g in self.algebra.generators]


class ModuleMap:
    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Module, target: Module, matrix: Matrix, check: bool = False):
        if matrix.shape != (target.dim, source.dim):
            raise ValueError(f"map shape {matrix.shape} does not match {target.dim}x{source.dim}")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check and not is_homomorphism(source, target, matrix):
            raise MalformedInput("matrix does not intertwine the module actions")

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)

    def __repr__(self) -> str:
        return f"ModuleMap({self.source.label()} -> {self.target.label()})"


def is_homomorphism(m: Module, n: Module, f: Matrix) -> bool:
    for g in m.algebra.generators:
        if f @ m.action[g] != n.action[g] @ f:
            return False
    return True


def _same_algebra(m: Module, n: Module) -> None:
    if not m.algebra.same_as(n.algebra):
        raise AlgebraMismatch(f"{m.algebra.name} vs {n.algebra.name}")


# ---------------------------------------------------------------------------
# elementary constructions


def zero_module(A: Algebra) -> Module:
    z = A._cache.get("zero_module")
    if z is None:
        z = Module(A, [Matrix(A.field, 0, 0, []) for _ in range(A.dim)], name="0", check=False)
        z.summands = []
        A._cache["zero_module"] = z
    return z


def regular_module(A: Algebra) -> Module:
    R = A._cache.get("regular_module")
    if R is None:
        R = Module(A, A.left_regular, name=A.name, check=False)
        A._cache["regular_module"] = R
    return R


def submodule(m: Module, vectors: Sequence[Sequence], name: str | None = None) -> tuple[Module, Matrix]:
    """Submodule spanned by ``vectors`` (which must be closed) and its inclusion."""
    sp = Span(m.field, m.dim, vectors)
    return submodule_from_span(m, sp, name)


def submodule_from_span(m: Module, sp: Span, name: str | None = None) -> tuple[Module, Matrix]:
    U = sp.basis_matrix()
    piv = sp.pivots
    acts = []
    for M in m.action:
        MU = M @ U
        acts.append(MU.submatrix(piv, None))
    sub = Module(m.algebra, acts, name=name, check=False, dim=sp.dim)
    return sub, U


def quotient_module(m: Module, sp: Span, name: str | None = None) -> tuple[Module, Matrix, Matrix]:
    """``m / sp`` with its projection and a linear section."""
    f = m.field
    comp = sp.complement_indices()
    cols = []
    for j in range(m.dim):
        e = [f.zero] * m.dim
        e[j] = f.one
        r = sp.reduce(e)
        cols.append([r[c] for c in comp])
    P = Matrix.from_columns(f, cols, len(comp))
    S = Matrix.zeros(f, m.dim, len(comp))
    for a, c in enumerate(comp):
        S.data[c][a] = f.one
    acts = [P @ M @ S for M in m.action]
    q = Module(m.algebra, acts, name=name, check=False, dim=len(comp))
    return q, P, S


def generated_submodule(m: Module, vectors: Sequence[Sequence]) -> Span:
    """Smallest submodule containing ``vectors``."""
    sp = Span(m.field, m.dim, vectors)
    gens = m.gen_action()
    frontier = list(sp.rows)
    while frontier:
        new = []
        for v in frontier:
            for G in gens:
                w = G.apply(v)
                if any(sp.reduce(w)):
                    new.append(w)
        if not new:
            break
        before = sp.dim
        sp = sp.extended(new)
        if sp.dim == before:
            break
        frontier = sp.rows
    return sp


def direct_sum(mods: Sequence[Module], name: str | None = None) -> tuple[Module, list[Matrix], list[Matrix]]:
    """Block-diagonal direct sum with injections and projections."""
    if not mods:
        raise ValueError("direct_sum of an empty list; use zero_module")
    A = mods[0].algebra
    f = A.field
    acts = [block_diag([m.action[i] for m in mods], f) for i in range(A.dim)]
    total = sum(m.dim for m in mods)
    s = Module(A, acts, name=name, check=False, dim=total)
    incs, projs = [], []
    off = 0
    for m in mods:
        I = Matrix.zeros(f, total, m.dim)
        P = Matrix.zeros(f, m.dim, total)
        for i in range(m.dim):
            I.data[off + i][i] = f.one
            P.data[i][off + i] = f.one
        incs.append(I)
        projs.append(P)
        off += m.dim
    known = []
    for m, I, P in zip(mods, incs, projs):
        if m.summands is None:
            known = None
            break
        for (ind, i2, p2) in m.summands:
            known.append((ind, I @ i2, p2 @ P))
    s.summands = known
    return s, incs, projs


def direct_sum_name(names: Sequence[str]) -> str:
    return "⊕".join(names) if names else "0"


def kernel(f: ModuleMap) -> tuple[Module, Matrix]:
    K = solve_kernel(f.matrix)
    return submodule(f.source, K.columns())


def image(f: ModuleMap) -> tuple[Module, Matrix]:
    return submodule(f.target, f.matrix.columns())


def cokernel(f: ModuleMap) -> tuple[Module, Matrix, Matrix]:
    sp = Span(f.target.field, f.target.dim, f.matrix.columns())
    return quotient_module(f.target, sp)


def pullback(f: ModuleMap, g: ModuleMap) -> tuple[Module, Matrix, Matrix]:
    """``{(a, b) : f a = g b}`` with its two projections (f, g share a target)."""
    if f.target is not g.target and f.target.dim != g.target.dim:
        raise ValueError("pullback needs a common target")
    F = f.source.field
    top = hstack([f.matrix, -g.matrix], F, f.target.dim)
    s, _, _ = direct_sum([f.source, g.source])
    K = solve_kernel(top)
    P, U = submodule(s, K.columns())
    a, b = f.source.dim, g.source.dim
    pa = U.submatrix(list(range(a)), None)
    pb = U.submatrix(list(range(a, a + b)), None)
    return P, pa, pb


# ---------------------------------------------------------------------------
# Hom spaces


class HomBasis:
    """Basis of Hom(m, n) with fast coordinate extraction."""

    def __init__(self, source: Module, target: Module, basis: list[Matrix]):
        self.source = source
        self.target = target
        self.basis = basis
        f = source.field
        vecs = [b.flatten() for b in basis]
        n = target.dim * source.dim
        rows = [list(v) for v in vecs]
        # positions where the basis is invertible
        trans = [[vecs[a][k] for a in range(len(vecs))] for k in range(n)]
        piv_rows = []
        work = [list(v) for v in vecs]
        pv = _rref_rows(work, n, f) if work else []
        self._positions = pv
        if basis:
            sub = Matrix(f, len(pv), len(basis), [trans[k] for k in pv])
            inv = inverse(sub)
            if inv is None:
                raise AssertionError("hom basis is not independent")
            self._inv = inv
        else:
            self._inv = None
        del rows, piv_rows

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, g: Matrix) -> list:
        """Coordinates of a homomorphism in this basis."""
        if not self.basis:
            return []
        flat = g.flatten()
        return self._inv.apply([flat[k] for k in self._positions])

    def combine(self, coeffs: Sequence) -> Matrix:
        f = self.source.field
        out = Matrix.zeros(f, self.target.dim, self.source.dim)
        for c, b in zip(coeffs, self.basis):
            if c:
                out = out + b.scale(c)
        return out

    def maps(self) -> list[ModuleMap]:
        return [ModuleMap(self.source, self.target, b) for b in self.basis]


def hom_space(m: Module, n: Module) -> list[ModuleMap]:
    """Basis of Hom_R(m, n)."""
    return hom_basis(m, n).maps()


def hom_basis(m: Module, n: Module) -> HomBasis:
    _same_algebra(m, n)
    cache = m._cache.setdefault("hom", {})
    hit = cache.get(id(n))
    if hit is not None and hit[0] is n:
        return hit[1]
    if m.dim == 0 or n.dim == 0:
        hb = HomBasis(m, n, [])
    else:
        try:
            mats = _hom_via_presentation(m, n)
        except CharTooSmall:
            mats = hom_naive(m, n)
        hb = HomBasis(m, n, mats)
    cache[id(n)] = (n, hb)
    return hb


def hom_naive(m: Module, n: Module) -> list[Matrix]:
    """Hom via the full intertwining system X A = B X over algebra generators."""
    f = m.field
    dm, dn = m.dim, n.dim
    nv = dm * dn
    rows = []
    for g in m.algebra.generators:
        A = m.action[g].data
        B = n.action[g].data
        for i in range(dn):
            Bi = B[i]
            for j in range(dm):
                row = [f.zero] * nv
                for l in range(dm):
                    a = A[l][j]
                    if a:
                        row[i * dm + l] = f.add(row[i * dm + l], a)
                for l in range(dn):
                    b = Bi[l]
                    if b:
                        row[l * dm + j] = f.sub(row[l * dm + j], b)
                if any(row):
                    rows.append(row)
    K = solve_kernel(Matrix(f, len(rows), nv, rows) if rows else Matrix(f, 0, nv, []))
    out = []
    for v in K.columns():
        out.append(Matrix(f, dn, dm, [v[i * dm:(i + 1) * dm] for i in range(dn)]))
    return out


@dataclass
class _Presentation:
    gens: list[tuple[list, list]]          # (vector in m, idempotent coefficient vector)
    domain_blocks: list[list[list]]        # per generator: basis of R e as algebra elements
    relations: list[list[list]]            # per relation: per generator an algebra element
    section: list[list[list]]              # per basis vector of m: per generator an algebra element


def _presentation(m: Module) -> _Presentation:
    hit = m._cache.get("presentation")
    if hit is not None:
        return hit
    A = m.algebra
    f = A.field
    reps = primitive_idempotents(A)
    rad_span = radical_span(m)
    chosen = Span(f, m.dim)
    gens = []
    for e in reps:
        E = m.act(e)
        for v in E.columns():
            if not any(v):
                continue
            w = rad_span.reduce(v)
            if any(chosen.reduce(w)):
                chosen = chosen.extended([w])
                gens.append((v, e))
    # domain: sum of R e_i, mapped by a -> a v_i
    blocks = []
    cols = []
    for v, e in gens:
        Re = Span(f, A.dim, [A.product(A.basis_vec(i), e) for i in range(A.dim)]).rows
        blocks.append(Re)
        for a in Re:
            cols.append(m.act(a).apply(v))
    Phi = Matrix.from_columns(f, cols, m.dim)
    if rank(Phi) != m.dim:
        raise AssertionError("top lifts do not generate the module")
    K = solve_kernel(Phi).columns()

    def split(vec):
        parts = []
        off = 0
        for Re in blocks:
            el = A.zero_vec()
            for c, a in zip(vec[off:off + len(Re)], Re):
                if c:
                    el = A.add(el, A.scale(c, a))
            parts.append(el)
            off += len(Re)
        return parts

    relations = [split(k) for k in K]
    ident = Matrix.identity(f, m.dim)
    sec = solve(Phi, ident)
    section = [split(c) for c in sec.columns()]
    pres = _Presentation(gens, blocks, relations, section)
    m._cache["presentation"] = pres
    return pres


def _hom_via_presentation(m: Module, n: Module) -> list[Matrix]:
    pres = _presentation(m)
    f = m.field
    A = m.algebra
    # unknowns: w_i in e_i n, parametrised by a basis U_i of e_i n
    Us = []
    for _, e in pres.gens:
        sp = Span(f, n.dim, n.act(e).columns())
        Us.append(sp.basis_matrix())
    sizes = [U.cols for U in Us]
    nv = sum(sizes)
    if nv == 0:
        return []
    rows = []
    for rel in pres.relations:
        blocks = [n.act(a) @ U for a, U in zip(rel, Us)]
        for r in range(n.dim):
            row = []
            for B in blocks:
                row.extend(B.data[r])
            if any(row):
                rows.append(row)
    K = solve_kernel(Matrix(f, len(rows), nv, rows) if rows else Matrix(f, 0, nv, []))
    out = []
    for y in K.columns():
        ws = []
        off = 0
        for U, s in zip(Us, sizes):
            ws.append(U.apply(y[off:off + s]))
            off += s
        cols = []
        for parts in pres.section:
            acc = [f.zero] * n.dim
            for a, w in zip(parts, ws):
                if any(a):
                    v = n.act(a).apply(w)
                    acc = [f.add(x, z) for x, z in zip(acc, v)]
            cols.append(acc)
        out.append(Matrix.from_columns(f, cols, n.dim))
    del A
    return out


def end_basis(m: Module) -> HomBasis:
    return hom_basis(m, m)


# ---------------------------------------------------------------------------
# radical, top, socle


def radical_span(m: Module) -> Span:
    hit = m._cache.get("rad_span")
    if hit is not None:
        return hit
    A = m.algebra
    J = A.jacobson_radical()
    vecs = []
    for j in J.rows:
        vecs.extend(m.act(j).columns())
    sp = Span(m.field, m.dim, vecs)
    m._cache["rad_span"] = sp
    return sp


def socle_span(m: Module) -> Span:
    A = m.algebra
    J = A.jacobson_radical()
    if not J.rows:
        return Span(m.field, m.dim, Matrix.identity(m.field, m.dim).columns())
    stacked = vstack([m.act(j) for j in J.rows], m.field, m.dim)
    return Span(m.field, m.dim, solve_kernel(stacked).columns())


@dataclass
class RadicalTopSocle:
    radical: Module
    radical_inclusion: Matrix
    top: Module
    top_projection: Matrix
    socle: Module
    socle_inclusion: Matrix


def radical_top_socle(m: Module) -> RadicalTopSocle:
    rs = radical_span(m)
    rad, ri = submodule_from_span(m, rs)
    top, tp, _ = quotient_module(m, rs)
    soc, si = submodule_from_span(m, socle_span(m))
    return RadicalTopSocle(rad, ri, top, tp, soc, si)


# ---------------------------------------------------------------------------
# algebra-level catalogues


def primitive_idempotents(A: Algebra) -> list[list]:
    """Primitive idempotents with pairwise non-isomorphic projectives R e."""
    hit = A._cache.get("idempotent_reps")
    if hit is not None:
        return hit
    es = A.primitive_idempotents()
    J = A.jacobson_radical()
    reps: list[list] = []
    for e in es:
        # R e ~ R f iff e and f land in the same block of R/J, i.e. e R f is not in J
        if any(_linked(A, J, e, f) for f in reps):
            continue
        reps.append(e)
    projs = [_projective_from_idempotent(A, e) for e in reps]
    A._cache["idempotent_reps"] = reps
    A._cache["projective_reps"] = projs
    return reps


def _linked(A: Algebra, J, e: list, f: list) -> bool:
    for i in range(A.dim):
        if not J.contains(A.product(A.product(e, A.basis_vec(i)), f)):
            return True
    return False


def _projective_from_idempotent(A: Algebra, e: list) -> Module:
    R = regular_module(A)
    vecs = [A.product(A.basis_vec(i), e) for i in range(A.dim)]
    P, _ = submodule(R, vecs)
    P.summands = [(P, Matrix.identity(A.field, P.dim), Matrix.identity(A.field, P.dim))]
    return P


def indecomposable_projectives(A: Algebra) -> list[Module]:
    primitive_idempotents(A)
    return A._cache["projective_reps"]


def simple_modules(A: Algebra) -> list[Module]:
    hit = A._cache.get("simples")
    if hit is None:
        hit = []
        for P in indecomposable_projectives(A):
            S, _, _ = quotient_module(P, radical_span(P))
            S.summands = [(S, Matrix.identity(A.field, S.dim), Matrix.identity(A.field, S.dim))]
            hit.append(S)
        A._cache["simples"] = hit
    return hit


def indecomposable_injectives(A: Algebra) -> list[Module]:
    hit = A._cache.get("injectives")
    if hit is None:
        hit = []
        for Q in indecomposable_projectives(A.opposite()):
            I = dual_D(Q)
            I.summands = [(I, Matrix.identity(A.field, I.dim), Matrix.identity(A.field, I.dim))]
            hit.append(I)
        A._cache["injectives"] = hit
    return hit


# ---------------------------------------------------------------------------
# covers and hulls


def projective_cover(m: Module) -> ModuleMap:
    """Minimal projective cover P -> m (summands are the catalogue projectives)."""
    hit = m._cache.get("projective_cover")
    if hit is not None:
        return hit
    A = m.algebra
    f = A.field
    if m.dim == 0:
        z = zero_module(A)
        cov = ModuleMap(z, m, Matrix(f, 0, 0, []))
        m._cache["projective_cover"] = cov
        return cov
    pres = _presentation(m)
    reps = primitive_idempotents(A)
    projs = indecomposable_projectives(A)
    pieces: list[Module] = []
    cols = []
    for v, e in pres.gens:
        k = next(i for i, r in enumerate(reps) if r is e)
        P = projs[k]
        pieces.append(P)
        # generator of P = R e is e itself, in P-coordinates
        # map: basis vector b of P (an algebra element in R e) -> b v
        R = regular_module(A)
        U = _proj_embedding(A, k)
        for j in range(P.dim):
            a = U.column(j)
            cols.append(m.act(a).apply(v))
    Psum, _, _ = direct_sum(pieces, name=direct_sum_name([p.label() for p in pieces]))
    mat = Matrix.from_columns(f, cols, m.dim)
    cov = ModuleMap(Psum, m, mat)
    if rank(mat) != m.dim:
        raise AssertionError("projective cover is not surjective")
    m._cache["projective_cover"] = cov
    del R
    return cov


def _proj_embedding(A: Algebra, k: int) -> Matrix:
    key = ("proj_embedding", k)
    hit = A._cache.get(key)
    if hit is None:
        e = primitive_idempotents(A)[k]
        vecs = [A.product(A.basis_vec(i), e) for i in range(A.dim)]
        hit = Span(A.field, A.dim, vecs).basis_matrix()
        A._cache[key] = hit
    return hit


def injective_hull(m: Module) -> ModuleMap:
    hit = m._cache.get("injective_hull")
    if hit is not None:
        return hit
    Dm = dual_D(m)
    cov = projective_cover(Dm)
    I = dual_D(cov.source)
    if cov.source.summands is not None:
        I.summands = [(dual_D_cached(ind), p.T, i.T) for ind, i, p in cov.source.summands]
        # summands of a hull are injective indecomposables from the catalogue
        cat = indecomposable_injectives(m.algebra)
        fixed = []
        for ind, inc, proj in I.summands:
            match = next((c for c in cat if c.dim == ind.dim and c.action == ind.action), None)
            fixed.append((match or ind, inc, proj))
        I.summands = fixed
    hull = ModuleMap(m, I, cov.matrix.T)
    m._cache["injective_hull"] = hull
    return hull


def dual_D_cached(m: Module) -> Module:
    hit = m._cache.get("dual")
    if hit is None:
        hit = dual_D(m)
    return hit


def is_projective(m: Module) -> bool:
    return projective_cover(m).source.dim == m.dim


def is_injective(m: Module) -> bool:
    return injective_hull(m).target.dim == m.dim


# ---------------------------------------------------------------------------
# dualities


def dual_D(m: Module) -> Module:
    """Vector-space dual with transposed action, a module over the opposite algebra."""
    hit = m._cache.get("dual")
    if hit is not None:
        return hit
    op = m.algebra.opposite()
    name = None
    if m.name:
        name = m.name[2:-1] if m.name.startswith("D(") and m.name.endswith(")") else f"D({m.name})"
    d = Module(op, [M.T for M in m.action], name=name, check=False, dim=m.dim)
    d._cache["dual"] = m
    m._cache["dual"] = d
    return d


def dual_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(dual_D(f.target), dual_D(f.source), f.matrix.T)


def star(m: Module) -> tuple[Module, HomBasis]:
    """M* = Hom_R(M, R) as a left module over the opposite algebra, with its Hom basis."""
    hit = m._cache.get("star")
    if hit is not None:
        return hit
    A = m.algebra
    R = regular_module(A)
    hb = hom_basis(m, R)
    op = A.opposite()
    acts = []
    for i in range(A.dim):
        Ri = A.right_regular[i]
        cols = [hb.coords(Ri @ b) for b in hb.basis]
        acts.append(Matrix.from_columns(A.field, cols, hb.dim) if hb.dim else Matrix(A.field, 0, 0, []))
    name = f"{m.name}*" if m.name else None
    s = Module(op, acts, name=name, check=False, dim=hb.dim)
    m._cache["star"] = (s, hb)
    return s, hb


def star_map(f: ModuleMap) -> ModuleMap:
    """f* : N* -> M* for f : M -> N, given by precomposition."""
    sN, hN = star(f.target)
    sM, hM = star(f.source)
    cols = [hM.coords(b @ f.matrix) for b in hN.basis]
    mat = Matrix.from_columns(f.source.field, cols, hM.dim) if cols else Matrix.zeros(f.source.field, hM.dim, 0)
    return ModuleMap(sN, sM, mat)


# ---------------------------------------------------------------------------
# decomposition


@dataclass
class Decomposition:
    module: Module
    summands: list[tuple[Module, int]]
    pieces: list[tuple[Module, Matrix, Matrix]]   # (indecomposable, inclusion, projection)
    classes: list[int] = dc_field(default_factory=list)   # class index of each piece
    witnesses: list[Matrix] = dc_field(default_factory=list)  # iso piece -> class representative

    def iso_to_sum(self) -> tuple[Matrix, Matrix]:
        """Mutually inverse maps ``M -> ⊕ pieces`` and back."""
        f = self.module.field
        n = self.module.dim
        to = vstack([p for _, _, p in self.pieces], f, n) if self.pieces else Matrix(f, 0, n, [])
        back = hstack([i for _, i, _ in self.pieces], f, n) if self.pieces else Matrix(f, n, 0, [])
        return to, back


def _power(X: Matrix, n: int) -> Matrix:
    """X^k for some k >= n (repeated squaring)."""
    k = 1
    while k < n:
        X = X @ X
        k *= 2
    return X


def _krylov_minpoly(X: Matrix, f: FieldSpec) -> list:
    """Minimal polynomial of a square matrix as lcm of local minimal polynomials."""
    from sympy import lcm

    n = X.rows
    result = None
    seen = Span(f, n)
    for j in range(n):
        v = [f.zero] * n
        v[j] = f.one
        if seen.contains(v):
            continue
        chain = [v]
        sp = Span(f, n, [v])
        while True:
            w = X.apply(chain[-1])
            if sp.contains(w):
                break
            chain.append(w)
            sp = sp.extended([w])
        seen = seen.extended(chain)
        k = len(chain)
        M = Matrix.from_columns(f, chain, n)
        c = solve(M, Matrix.from_columns(f, [w], n))
        local = [f.neg(c.data[i][0]) for i in range(k)] + [f.one]
        P = polys._to_sympy(local, f)
        result = P if result is None else lcm(result, P)
        if seen.dim == n:
            break
    mu = polys._from_sympy(result, f)
    inv = f.inv(mu[-1])
    return [f.mul(inv, c) for c in mu]


def _poly_of_matrix(q: Sequence, X: Matrix) -> Matrix:
    f = X.field
    acc = Matrix.scalar(f, q[-1], X.rows)
    for c in reversed(q[:-1]):
        acc = acc @ X + Matrix.scalar(f, c, X.rows)
    return acc


def _fitting_split(X: Matrix) -> tuple[list, list] | None:
    """(Ker X^N, Im X^N) as vector lists when X is neither nilpotent nor invertible."""
    n = X.rows
    XN = _power(X, n)
    r = rank(XN)
    if r == 0 or r == n:
        return None
    K = solve_kernel(XN).columns()
    I = Span(X.field, n, XN.columns()).rows
    return K, I


def _eigen_shift(X: Matrix) -> tuple[object, Matrix] | None:
    """(lam, X - lam) when X has a single eigenvalue lam in the field, else None."""
    f = X.field
    n = X.rows
    lam = None
    if f.characteristic == 0 or n % f.characteristic:
        tr = f.zero
        for i in range(n):
            tr = f.add(tr, X.data[i][i])
        lam = f.mul(tr, f.inv(f.coerce(n)))
    else:
        v = [f.zero] * n
        v[0] = f.one
        chain = [v]
        sp = Span(f, n, [v])
        while True:
            w = X.apply(chain[-1])
            if sp.contains(w):
                break
            chain.append(w)
            sp = sp.extended([w])
        M = Matrix.from_columns(f, chain, n)
        c = solve(M, Matrix.from_columns(f, [w], n))
        local = [f.neg(c.data[i][0]) for i in range(len(chain))] + [f.one]
        facs = polys.factor(local, f)
        if len(facs) != 1 or len(facs[0][0]) != 2:
            return None
        lam = f.neg(facs[0][0][0])
    N = X - Matrix.scalar(f, lam, n)
    if _power(N, n).is_zero():
        return lam, N
    return None


def _split_by_element(X: Matrix) -> tuple[list, list] | None:
    f = X.field
    sp = _fitting_split(X)
    if sp is not None:
        return sp
    mu = _krylov_minpoly(X, f)
    facs = polys.factor(mu, f)
    if len(facs) < 2:
        return None
    q1 = polys.power(facs[0][0], facs[0][1], f)
    rest = [f.one]
    for q, m in facs[1:]:
        rest = polys.multiply(rest, polys.power(q, m, f), f)
    U1 = solve_kernel(_poly_of_matrix(q1, X)).columns()
    U2 = solve_kernel(_poly_of_matrix(rest, X)).columns()
    return U1, U2


def _local_or_split(m: Module, E: list[Matrix], seed: int | None = None) -> tuple[list, list] | None:
    """Either certify End(m) local (return None) or return a splitting (U1, U2)."""
    f = m.field
    n = m.dim
    nilps: list[Matrix] = []
    for X in E:
        sh = _eigen_shift(X)
        if sh is None:
            res = _split_by_element(X)
            if res is not None:
                return res
            raise SplitFailure("endomorphism with an irreducible non-linear minimal polynomial")
        if not sh[1].is_zero():
            nilps.append(sh[1])
    if not nilps:
        return None  # End(m) is the base field
    if len(nilps) < len(E) - 1 and Span(f, n * n, [N.flatten() for N in nilps]).dim < len(E) - 1:
        pass
    Jp = Span(f, n * n, [N.flatten() for N in nilps])
    if Jp.dim != len(E) - 1:
        # the identity is not spanned separately; combination of shifts is invertible
        pass
    # closure test: products of shifted basis elements
    for a in nilps:
        for b in nilps:
            P = a @ b
            if P.is_zero():
                continue
            if not Jp.contains(P.flatten()) or not _power(P, n).is_zero():
                res = _split_by_element(P)
                if res is not None:
                    return res
    for i, a in enumerate(nilps):
        for b in nilps[i + 1:]:
            S = a + b
            if not _power(S, n).is_zero():
                res = _split_by_element(S)
                if res is not None:
                    return res
    # Jp is closed under products; check nilpotency of the whole subspace
    power = list(Jp.rows)
    for _ in range(n + 1):
        if not power:
            return None
        mats = [Matrix(f, n, n, [v[i * n:(i + 1) * n] for i in range(n)]) for v in power]
        prods = [(A_ @ N).flatten() for A_ in mats for N in nilps]
        power = Span(f, n * n, prods).rows
    rng = random.Random(_SEED if seed is None else seed)
    for _ in range(64):
        X = Matrix.zeros(f, n, n)
        for N in nilps:
            X = X + N.scale(f.coerce(rng.randrange(1, 97)))
        res = _split_by_element(X)
        if res is not None:
            return res
    raise SplitFailure("could not decide whether the endomorphism ring is local")


def _decompose_pieces(m: Module) -> list[tuple[Module, Matrix, Matrix]]:
    if m.dim == 0:
        return []
    if m.summands is not None:
        return list(m.summands)
    E = end_basis(m).basis
    split = _local_or_split(m, E)
    if split is None:
        ident = Matrix.identity(m.field, m.dim)
        return [(m, ident, ident)]
    U1, U2 = split
    f = m.field
    T = Matrix.from_columns(f, list(U1) + list(U2), m.dim)
    Tinv = inverse(T)
    if Tinv is None:
        raise AssertionError("splitting subspaces are not complementary")
    k = len(U1)
    out = []
    for lo, hi in ((0, k), (k, m.dim)):
        inc = T.submatrix(None, list(range(lo, hi)))
        proj = Tinv.submatrix(list(range(lo, hi)), None)
        acts = [proj @ M @ inc for M in m.action]
        sub = Module(m.algebra, acts, check=False, dim=hi - lo)
        for ind, i2, p2 in _decompose_pieces(sub):
            out.append((ind, inc @ i2, p2 @ proj))
    return out


def indecomposable_summands(m: Module, catalog: Sequence[Module] = ()) -> Decomposition:
    """Krull-Schmidt decomposition, grouped up to isomorphism.

    When a ``catalog`` of named indecomposables is given, each piece is
    replaced by the matching catalogue module (conjugating the inclusion and
    projection by the witnessing isomorphism).
    """
    hit = m._cache.get("decomposition")
    if hit is not None and not catalog:
        return hit
    raw = _decompose_pieces(m)
    pieces = []
    for ind, inc, proj in raw:
        match = None
        for c in catalog:
            if c is ind:
                match = (c, None)
                break
            w = is_isomorphic(ind, c)
            if w is not None:
                match = (c, w)
                break
        if match is None:
            pieces.append((ind, inc, proj))
        elif match[1] is None:
            pieces.append((ind, inc, proj))
        else:
            c, w = match
            winv = inverse(w.matrix)
            pieces.append((c, inc @ winv, w.matrix @ proj))
    pieces.sort(key=lambda t: (t[0].dim, t[0].label()))
    reps: list[Module] = []
    classes = []
    witnesses = []
    counts: list[int] = []
    for ind, _, _ in pieces:
        for k, r in enumerate(reps):
            w = is_isomorphic(ind, r)
            if w is not None:
                classes.append(k)
                witnesses.append(w.matrix)
                counts[k] += 1
                break
        else:
            reps.append(ind)
            classes.append(len(reps) - 1)
            witnesses.append(Matrix.identity(m.field, ind.dim))
            counts.append(1)
    dec = Decomposition(m, list(zip(reps, counts)), pieces, classes, witnesses)
    if not catalog:
        m._cache["decomposition"] = dec
    return dec


def is_indecomposable(m: Module) -> bool:
    return m.dim > 0 and len(_decompose_pieces(m)) == 1


# ---------------------------------------------------------------------------
# isomorphism


def is_isomorphic(m: Module, n: Module, seed: int | None = None) -> ModuleMap | None:
    """An isomorphism m -> n, or None when none exists."""
    _same_algebra(m, n)
    if m is n:
        return ModuleMap(m, n, Matrix.identity(m.field, m.dim))
    if m.dim != n.dim:
        return None
    if m.dim == 0:
        return ModuleMap(m, n, Matrix(m.field, 0, 0, []))
    H = hom_basis(m, n)
    if H.dim == 0 or H.dim != hom_basis(n, m).dim or hom_basis(m, m).dim != hom_basis(n, n).dim:
        return None
    for b in H.basis:
        if rank(b) == m.dim:
            return ModuleMap(m, n, b)
    f = m.field
    d = H.dim
    size = f.size
    if size is not None and size ** d <= 4096:
        import itertools

        for coeffs in itertools.product(range(size), repeat=d):
            if not any(coeffs):
                continue
            X = H.combine(coeffs)
            if rank(X) == m.dim:
                return ModuleMap(m, n, X)
        return None
    rng = random.Random(_SEED if seed is None else seed)
    for _ in range(64):
        coeffs = [f.coerce(rng.randrange(-50, 51) if size is None else rng.randrange(size)) for _ in range(d)]
        X = H.combine(coeffs)
        if rank(X) == m.dim:
            return ModuleMap(m, n, X)
    return _iso_by_decomposition(m, n)


def _iso_by_decomposition(m: Module, n: Module) -> ModuleMap | None:
    pm = _decompose_pieces(m)
    pn = _decompose_pieces(n)
    if len(pm) != len(pn):
        return None
    used = [False] * len(pn)
    f = m.field
    total = Matrix.zeros(f, n.dim, m.dim)
    for ind, inc, proj in pm:
        for k, (ind2, inc2, proj2) in enumerate(pn):
            if used[k] or ind.dim != ind2.dim:
                continue
            H = hom_basis(ind, ind2)
            w = next((b for b in H.basis if rank(b) == ind.dim), None)
            if w is not None:
                used[k] = True
                total = total + inc2 @ w @ proj
                break
        else:
            return None
    return ModuleMap(m, n, total)


# ---------------------------------------------------------------------------
# resolutions, syzygies, transpose


@dataclass
class Resolution:
    """P^{-l} -> ... -> P^0 -> m; ``diffs[i]`` maps P^{-i-1} -> P^{-i}."""

    module: Module
    terms: list[Module]
    diffs: list[Matrix]
    augmentation: Matrix
    syzygies: list[Module]


def min_projective_resolution(m: Module, length: int) -> Resolution:
    cov = projective_cover(m)
    terms = [cov.source]
    diffs: list[Matrix] = []
    syz = [m]
    prev_incl = None
    K, Kin = kernel(cov)
    syz.append(K)
    cur_cover = cov
    for i in range(length):
        if K.dim == 0:
            break
        c = projective_cover(K)
        d = Kin @ c.matrix
        terms.append(c.source)
        diffs.append(d)
        K2, K2in = kernel(c)
        syz.append(K2)
        K, Kin = K2, K2in
        cur_cover = c
    del prev_incl, cur_cover
    res = Resolution(m, terms, diffs, cov.matrix, syz)
    _check_minimal(res)
    return res


def _check_minimal(res: Resolution) -> None:
    for i, d in enumerate(res.diffs):
        tgt = res.terms[i]
        rs = radical_span(tgt)
        for col in d.columns():
            if any(rs.reduce(col)):
                raise AssertionError("resolution differential leaves the radical")


def syzygy(m: Module, n: int) -> Module:
    """Omega^n m (Omega^0 m = m)."""
    cur = m
    for _ in range(n):
        cur, _ = kernel(projective_cover(cur))
    return cur


def strip_projective_summands(m: Module) -> Module:
    dec = indecomposable_summands(m)
    keep = [(ind, inc, proj) for ind, inc, proj in dec.pieces if not is_projective(ind)]
    if len(keep) == len(dec.pieces):
        return m
    if not keep:
        return zero_module(m.algebra)
    s, _, _ = direct_sum([k[0] for k in keep])
    return s


def minimal_presentation(m: Module) -> tuple[Module, Module, Matrix, Matrix]:
    """(P^{-1}, P^0, boundary P^{-1} -> P^0, cover P^0 -> m)."""
    cov = projective_cover(m)
    K, Kin = kernel(cov)
    c = projective_cover(K)
    return c.source, cov.source, Kin @ c.matrix, cov.matrix


def transpose_dtr(m: Module) -> Module:
    """DTr m via Coker(boundary*), after stripping projective summands."""
    hit = m._cache.get("dtr")
    if hit is not None:
        return hit
    A = m.algebra
    mm = strip_projective_summands(m)
    if mm.dim == 0:
        out = zero_module(A)
    else:
        P1, P0, d, _ = minimal_presentation(mm)
        ds = star_map(ModuleMap(P1, P0, d))
        tr, _, _ = cokernel(ds)
        out = dual_D(tr)
        if not out.algebra.same_as(A):
            raise AssertionError("DTr landed over the wrong algebra")
        if out.algebra is not A:
            out = Module(A, out.action, check=False, dim=out.dim)
    m._cache["dtr"] = out
    return out


def transpose_tr(m: Module) -> Module:
    mm = strip_projective_summands(m)
    if mm.dim == 0:
        return zero_module(m.algebra.opposite())
    P1, P0, d, _ = minimal_presentation(mm)
    tr, _, _ = cokernel(star_map(ModuleMap(P1, P0, d)))
    return tr


# ---------------------------------------------------------------------------
# Ext and stable Hom


def ext_dim(m: Module, n: Module, i: int) -> int:
    if i < 0:
        raise ValueError("negative Ext degree")
    res = min_projective_resolution(m, i + 1)
    f = m.field

    def hom_dim(j):
        return hom_basis(res.terms[j], n).dim if j < len(res.terms) else 0

    def delta_rank(j):
        # Hom(P^{-j}, n) -> Hom(P^{-j-1}, n), g -> g o d
        if j + 1 >= len(res.terms):
            return 0
        H0 = hom_basis(res.terms[j], n)
        H1 = hom_basis(res.terms[j + 1], n)
        if H0.dim == 0 or H1.dim == 0:
            return 0
        d = res.diffs[j]
        cols = [H1.coords(b @ d) for b in H0.basis]
        return rank(Matrix.from_columns(f, cols, H1.dim))

    kernel_dim = hom_dim(i) - delta_rank(i)
    image_dim = delta_rank(i - 1) if i >= 1 else 0
    return kernel_dim - image_dim


def stable_hom_dim(m: Module, n: Module) -> int:
    H = hom_basis(m, n)
    if H.dim == 0:
        return 0
    cov = projective_cover(n)
    G = hom_basis(m, cov.source)
    cols = [H.coords(cov.matrix @ g) for g in G.basis]
    r = rank(Matrix.from_columns(m.field, cols, H.dim)) if cols else 0
    return H.dim - r


# ---------------------------------------------------------------------------
# serialisation


def module_to_json(m: Module) -> dict:
    return {"algebra": m.algebra.name, "dim": m.dim, "action": [M.to_json() for M in m.action]}


def module_from_json(obj, algebra: Algebra) -> Module:
    try:
        acts = [Matrix.from_json(a) for a in obj["action"]]
        dim = obj["dim"]
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad module literal: {exc}") from exc
    if any(a.shape != (dim, dim) for a in acts):
        raise MalformedInput("action matrix shape does not match dim")
    if any(a.field != algebra.field for a in acts):
        raise MalformedInput("action matrices are over the wrong field")
    return Module(algebra, acts, name=obj.get("name"), dim=dim)


def map_to_json(f: ModuleMap, source: str, target: str) -> dict:
    return {"source": source, "target": target, "matrix": f.matrix.to_json()}


def catalog_label(m: Module, catalog: Sequence[Module]) -> str:
    """Name ``m`` as a direct sum of catalogue entries, e.g. ``P1⊕S3``; unknown pieces keep their label."""
    if m.dim == 0:
        return "0"
    names = []
    for ind, _, _ in _decompose_pieces(m):
        hit = next((c for c in catalog if c is ind or is_isomorphic(ind, c) is not None), None)
        names.append((hit or ind).label())
    return direct_sum_name(sorted(names))

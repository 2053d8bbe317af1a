"""Dualities on hearts over a commutative Frobenius algebra.

``d_A`` sends ``P_M`` to ``[Omega^2 M* -> P^{-1} -> P^0]`` built from a minimal
projective presentation of ``M*`` and extends to ``[K -> L -> M]`` by the
kernel formula.  ``dual_complex`` is a second, independent route: it dualises
an arbitrary bounded complex termwise, resolves the result by a strict
horseshoe and totalises.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .complexes import BoundedComplex, ChainMap, concentrated, from_sequence, minimize, zero_complex
from .errors import NotCommutative, NotFrobenius
from .heart import SubcatDescriptor, _tau_geq0_A, heart_ker, pi_C
from .linalg import Matrix, block, solve
from .modules import (Module, ModuleMap, _decompose_pieces, direct_sum, hom_basis, is_isomorphic, kernel,
                      projective_cover, regular_module, star, star_map, submodule, zero_module)


def is_frobenius(A: Algebra) -> bool:
    """Whether the regular module is isomorphic to the dual of the right regular module."""
    R = regular_module(A)
    dual = Module(A, [M.T for M in A.right_regular], check=False, dim=A.dim)
    return is_isomorphic(R, dual) is not None


def _require_frobenius(A: Algebra) -> None:
    if not A.is_commutative():
        raise NotCommutative(f"{A.name} is not commutative")
    hit = A._cache.get("frobenius")
    if hit is None:
        hit = A._cache["frobenius"] = is_frobenius(A)
    if not hit:
        raise NotFrobenius(f"{A.name} is not Frobenius")


# ---------------------------------------------------------------------------
# truncated resolutions


@dataclass
class TruncatedResolution:
    """``[Omega^2 M -> P^{-1} -> P^0]`` in degrees -2..0 with the augmentation ``P^0 -> M``."""

    module: Module
    complex: BoundedComplex
    augmentation: Matrix


def truncated_resolution(m: Module) -> TruncatedResolution:
    cov0 = projective_cover(m)
    K1, K1in = kernel(cov0)
    cov1 = projective_cover(K1)
    d1 = K1in @ cov1.matrix
    K2, K2in = submodule(cov1.source, _kernel_cols(d1))
    x = from_sequence([K2, cov1.source, cov0.source], [K2in, d1], hi=0)
    return TruncatedResolution(m, x, cov0.matrix)


def _kernel_cols(M: Matrix) -> list[list]:
    from .linalg import solve_kernel

    return solve_kernel(M).columns()


def _factor(P: Module, Q: Module, e: Matrix, g: Matrix) -> Matrix:
    """A module map ``h: P -> Q`` with ``e @ h == g``."""
    F = P.field
    H = hom_basis(P, Q)
    if g.is_zero() or H.dim == 0:
        if not g.is_zero():
            raise ValueError("map does not factor")
        return Matrix.zeros(F, Q.dim, P.dim)
    n = g.rows * g.cols
    M = Matrix.from_columns(F, [(e @ b).flatten() for b in H.basis], n)
    sol = solve(M, Matrix.from_columns(F, [g.flatten()], n))
    if sol is None:
        raise ValueError("map does not factor")
    return H.combine(sol.column(0))


def lift_to_resolutions(f: Matrix, src: TruncatedResolution, tgt: TruncatedResolution) -> ChainMap:
    """Comparison map between truncated resolutions over ``f: src.module -> tgt.module``."""
    x, y = src.complex, tgt.complex
    g0 = _factor(x.term(0), y.term(0), tgt.augmentation, f @ src.augmentation)
    g1 = _factor(x.term(-1), y.term(-1), y.diff(-1), g0 @ x.diff(-1))
    g2 = solve(y.diff(-2), g1 @ x.diff(-2)) if y.term(-2).dim and x.term(-2).dim else None
    comps = {0: g0, -1: g1}
    if g2 is not None:
        comps[-2] = g2
    return ChainMap(x, y, comps)


# ---------------------------------------------------------------------------
# the dualities


def dual_projective(m: Module) -> BoundedComplex:
    """``d_A P_m = S_A P_{m*}``."""
    _require_frobenius(m.algebra)
    s, _ = star(m)
    return truncated_resolution(s).complex


def duality_dA(v: BoundedComplex) -> BoundedComplex:
    """``d_A [K -> L -> M] = Ker(d_A P_M -> d_A P_L)``, minimised."""
    A = v.algebra
    _require_frobenius(A)
    t, _ = _tau_geq0_A(v)
    L, M = t.term(-1), t.term(0)
    f = t.diff(-1)
    sM, _ = star(M)
    sL, _ = star(L)
    rM = truncated_resolution(sM)
    rL = truncated_resolution(sL)
    fs = star_map(ModuleMap(L, M, f))
    g = lift_to_resolutions(fs.matrix, rM, rL)
    return minimize(heart_ker(g, SubcatDescriptor.all()).object).complex


def duality_dC(v: BoundedComplex, c: SubcatDescriptor, depth: int | None = None) -> BoundedComplex:
    """``d_C = pi_C . d_A . tau^{>=0}_A``; C is assumed closed under D."""
    t, _ = _tau_geq0_A(v)
    return pi_C(duality_dA(t), c, depth)


# ---------------------------------------------------------------------------
# duality on arbitrary bounded complexes


def _strict_cover(mods: list[Module], maps: list[Matrix]):
    """Projectives ``Q_j ⊕ Q_{j-1}`` covering a complex of modules with strictly square-zero lifts.

    Returns (terms, horizontal maps, augmentations).
    """
    A = mods[0].algebra
    F = A.field
    n = len(mods)
    covs = [projective_cover(m) for m in mods]
    Q = [c.source for c in covs]
    terms, eps = [], []
    for j in range(n):
        parts = [Q[j]] + ([Q[j - 1]] if j > 0 else [])
        parts = [p for p in parts if p.dim]
        terms.append(direct_sum(parts)[0] if len(parts) > 1 else (parts[0] if parts else zero_module(A)))
        prev = maps[j - 1] @ covs[j - 1].matrix if j > 0 else None
        cols = [covs[j].matrix] + ([prev] if j > 0 else [])
        eps.append(block([cols], F, [mods[j].dim], [Q[j].dim] + ([Q[j - 1].dim] if j > 0 else [])))
    horiz = []
    for j in range(n - 1):
        qj, qjm = Q[j].dim, (Q[j - 1].dim if j > 0 else 0)
        qn = Q[j + 1].dim
        # (q, q') -> (0, q)
        horiz.append(block([[None, None], [Matrix.identity(F, qj), None]], F, [qn, qj], [qj, qjm]))
    return terms, horiz, eps


def _restrict(mods, maps, eps):
    ks, kins = [], []
    for m, e in zip(mods, eps):
        K, Kin = submodule(m, _kernel_cols(e))
        ks.append(K)
        kins.append(Kin)
    kmaps = []
    for j, h in enumerate(maps):
        if ks[j].dim and ks[j + 1].dim:
            kmaps.append(solve(kins[j + 1], h @ kins[j]))
        else:
            kmaps.append(Matrix.zeros(mods[0].field, ks[j + 1].dim, ks[j].dim))
    return ks, kmaps, kins


def dual_complex(x: BoundedComplex) -> BoundedComplex:
    """Extension of ``d_A`` to bounded complexes by a strict horseshoe on ``x*`` and totalisation."""
    A = x.algebra
    _require_frobenius(A)
    F = A.field
    x = x.trimmed()
    if x.is_zero():
        return zero_complex(A)
    # x* with (x*)^i = (x^{-i})*
    lo = -x.hi
    mods, maps = [], []
    for i in range(lo, -x.lo + 1):
        mods.append(star(x.term(-i))[0])
    for i in range(lo, -x.lo):
        src, tgt = x.term(-i - 1), x.term(-i)
        maps.append(star_map(ModuleMap(src, tgt, x.diff(-i - 1))).matrix)
    P0, h0, e0 = _strict_cover(mods, maps)
    K1, k1, K1in = _restrict(P0, h0, e0)
    P1, h1, e1 = _strict_cover(K1, k1)
    K2, k2, K2in = _restrict(P1, h1, e1)
    # record summands piecewise so that minimisation never decomposes the big totals
    for K in K2:
        if K.summands is None:
            K.summands = _decompose_pieces(K)
    rows = [(-2, K2, k2), (-1, P1, h1), (0, P0, h0)]
    vert = {-2: K2in, -1: [Kin @ e for Kin, e in zip(K1in, e1)]}
    n = len(mods)
    # total degree of (column j, vertical v) is lo + j + v
    tlo, thi = lo - 2, lo + n - 1
    terms, diffs = [], []
    layout = {}
    for t in range(tlo, thi + 1):
        pieces = []
        for v, mods_v, _ in rows:
            j = t - lo - v
            if 0 <= j < n:
                pieces.append((j, v, mods_v[j]))
        layout[t] = pieces
        nz = [p for _, _, p in pieces if p.dim]
        terms.append(direct_sum(nz)[0] if len(nz) > 1 else (nz[0] if nz else zero_module(A)))
    for t in range(tlo, thi):
        src, tgt = layout[t], layout[t + 1]
        blocks = []
        for (j2, v2, m2) in tgt:
            row = []
            for (j, v, m) in src:
                if m.dim == 0 or m2.dim == 0:
                    row.append(None)
                elif j2 == j + 1 and v2 == v:
                    hm = dict((vv, hh) for vv, _, hh in rows)[v]
                    row.append(hm[j])
                elif j2 == j and v2 == v + 1:
                    d = vert[v][j]
                    row.append(d if j % 2 == 0 else -d)
                else:
                    row.append(None)
            blocks.append(row)
        rs = [m2.dim for _, _, m2 in tgt]
        cs = [m.dim for _, _, m in src]
        full = block(blocks, F, rs, cs) if blocks and src else Matrix.zeros(F, sum(rs), sum(cs))
        # drop zero-dimensional pieces, which direct_sum skipped
        diffs.append(full)
    return BoundedComplex(A, tlo, terms, diffs)


def d_on_module(m: Module) -> BoundedComplex:
    return duality_dA(concentrated(m, 0))

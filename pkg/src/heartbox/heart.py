"""Hearts of t-structures cut out by an additive subcategory C of mod R.

Objects of the heart are bounded complexes with terms in C, top degree at
most zero and no cohomology in negative degrees.  Morphisms are homotopy
classes of chain maps.  ``C`` is either all of mod R (``ALL``) or the additive
closure of finitely many indecomposables (``ADD``).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .complexes import (BoundedComplex, ChainMap, concentrated, cone, cone_inclusion, cone_projection,
                        cohomology_dims, direct_sum_complexes, from_sequence, hom_homotopy, identity_map,
                        is_acyclic, minimize, shift, shift_map, zero_complex, zero_map)
from .errors import CatalogRequired, DepthExceeded, NoCover, NoNonzeroTau, SplitFailure
from .linalg import Matrix, Span, hstack, rank, solve, solve_kernel, vstack
from .modules import (Module, ModuleMap, _decompose_pieces, _eigen_shift, cokernel, direct_sum,
                      direct_sum_name, dual_D, hom_basis, injective_hull, is_isomorphic,
                      is_projective, kernel, pullback, star, submodule, transpose_dtr, zero_module)

ALL = "ALL"
ADD = "ADD"


# ---------------------------------------------------------------------------
# subcategories


@dataclass
class SubcatDescriptor:
    """Either all of mod R or add(generators) for pairwise non-isomorphic indecomposables."""

    mode: str = ALL
    generators: list[Module] = dc_field(default_factory=list)
    indec_catalog: list[Module] | None = None
    name: str | None = None

    def __post_init__(self):
        if self.mode not in (ALL, ADD):
            raise ValueError(f"unknown subcategory mode {self.mode!r}")
        if self.mode == ADD:
            if not self.generators:
                raise ValueError("ADD mode needs at least one generator")
            for i, g in enumerate(self.generators):
                if len(_decompose_pieces(g)) != 1:
                    raise ValueError(f"generator {g.label()} is not indecomposable")
                for h in self.generators[:i]:
                    if is_isomorphic(g, h) is not None:
                        raise ValueError(f"generators {h.label()} and {g.label()} are isomorphic")
        self._member: dict[int, tuple[Module, bool]] = {}

    @classmethod
    def all(cls, catalog: Sequence[Module] | None = None) -> "SubcatDescriptor":
        return cls(ALL, [], list(catalog) if catalog is not None else None, "mod")

    @classmethod
    def add(cls, generators: Sequence[Module], catalog: Sequence[Module] | None = None) -> "SubcatDescriptor":
        names = ",".join(g.label() for g in generators)
        return cls(ADD, list(generators), list(catalog) if catalog is not None else None,
                   f"add{{{names}}}")

    @property
    def is_all(self) -> bool:
        return self.mode == ALL

    def contains(self, m: Module) -> bool:
        """Whether every indecomposable summand of ``m`` is isomorphic to a generator."""
        if self.is_all or m.dim == 0:
            return True
        hit = self._member.get(id(m))
        if hit is not None and hit[0] is m:
            return hit[1]
        ok = True
        for ind, _, _ in _decompose_pieces(m):
            if not any(g is ind or is_isomorphic(ind, g) is not None for g in self.generators):
                ok = False
                break
        self._member[id(m)] = (m, ok)
        return ok

    def test_objects(self) -> list[Module]:
        """Indecomposables of C to test against (generators, or the catalogue in ALL mode)."""
        if not self.is_all:
            return list(self.generators)
        if self.indec_catalog is None:
            raise CatalogRequired("this test quantifies over all of C; supply an indecomposable catalogue")
        return list(self.indec_catalog)

    def complex_in(self, x: BoundedComplex) -> bool:
        return all(self.contains(x.term(d)) for d in x.degrees())


@dataclass
class HeartObject:
    complex: BoundedComplex
    subcat: SubcatDescriptor
    certified: bool = False

    def certify(self) -> "HeartObject":
        self.certified = is_heart_object(self.complex, self.subcat)
        return self


def is_heart_object(x: BoundedComplex, c: SubcatDescriptor) -> bool:
    if x.is_zero():
        return True
    if x.trimmed().hi > 0 or not c.complex_in(x):
        return False
    return all(v == 0 for d, v in cohomology_dims(x).items() if d < 0)


def heart_object(x: BoundedComplex, c: SubcatDescriptor) -> HeartObject:
    """Minimise and certify."""
    return HeartObject(minimize(x).complex, c).certify()


# ---------------------------------------------------------------------------
# radicals of Hom spaces between indecomposables


def _radical_end_coords(m: Module) -> list[list]:
    """Coordinate vectors (in the End basis) spanning rad End(m), for m indecomposable."""
    H = hom_basis(m, m)
    F = m.field
    lams = []
    for b in H.basis:
        res = _eigen_shift(b)
        if res is None:
            raise SplitFailure(f"End({m.label()}) is not split local")
        lams.append(res[0])
    # rad is the kernel of the residue character, which is linear on End
    return solve_kernel(Matrix(F, 1, H.dim, [lams])).columns()


def radical_hom(src: Module, tgt: Module) -> list[Matrix]:
    """Basis of rad(src, tgt) for indecomposable src and tgt."""
    H = hom_basis(src, tgt)
    if H.dim == 0:
        return []
    w = is_isomorphic(src, tgt) if src.dim == tgt.dim else None
    if w is None:
        return list(H.basis)
    # transport the radical of End(src) along an isomorphism
    E = hom_basis(src, src)
    return [w.matrix @ E.combine(v) for v in _radical_end_coords(src)]


def nonsplit_maps(v: Module, x: Module) -> Span:
    """J(v, x) in Hom(v, x) coordinates, for x indecomposable.

    A map is in J when no component on an indecomposable piece of ``v`` is an
    isomorphism; for indecomposable ``x`` this is the same as not being a split
    epimorphism.
    """
    H = hom_basis(v, x)
    F = x.field
    vecs = []
    for ind, inc, proj in _decompose_pieces(v):
        for r in radical_hom(ind, x):
            vecs.append(H.coords(r @ proj))
    # maps vanishing on a piece are in J as well; they come from the other pieces
    return Span(F, H.dim, vecs)


# ---------------------------------------------------------------------------
# covers


def c_cover(m: Module, c: SubcatDescriptor) -> ModuleMap:
    """Minimal right C-approximation ``C_m -> m``; it must be surjective."""
    F = m.field
    if c.is_all:
        return ModuleMap(m, m, Matrix.identity(F, m.dim))
    if m.dim == 0:
        z = zero_module(m.algebra)
        return ModuleMap(z, m, Matrix(F, 0, 0, []))
    gens = c.generators
    homs = [hom_basis(g, m) for g in gens]
    total = Span(F, m.dim, [col for h in homs for b in h.basis for col in b.columns()])
    if total.dim != m.dim:
        raise NoCover(f"{c.name or 'C'} does not cover {m.label()}")
    pieces: list[Module] = []
    blocks: list[Matrix] = []
    for i, g in enumerate(gens):
        H = homs[i]
        if H.dim == 0:
            continue
        composites = []
        for j, g2 in enumerate(gens):
            for phi in homs[j].basis:
                for r in radical_hom(g, g2):
                    composites.append(H.coords(phi @ r))
        sp = Span(F, H.dim, composites)
        for k in sp.complement_indices():
            pieces.append(g)
            blocks.append(H.basis[k])
    src, incs, projs = direct_sum(pieces, name=direct_sum_name([p.label() for p in pieces]))
    src.summands = list(zip(pieces, incs, projs))
    mat = hstack(blocks, F, m.dim)
    if rank(mat) != m.dim:
        raise NoCover(f"{c.name or 'C'} does not cover {m.label()}")
    return ModuleMap(src, m, mat)


# ---------------------------------------------------------------------------
# approximations


@dataclass
class Approximation:
    """``complex`` with terms in C and a quasi-isomorphism ``map: complex -> x``."""

    complex: BoundedComplex
    map: ChainMap


def default_depth(x: BoundedComplex) -> int:
    return x.algebra.dim + 2


def c_approximation(x: BoundedComplex, c: SubcatDescriptor, depth: int | None = None,
                    check: bool = True) -> Approximation:
    """Godement resolution of ``x`` by C-covers, built from the top degree downwards.

    ``depth`` bounds how many degrees below the window of ``x`` the recursion may
    reach before :class:`DepthExceeded` is raised.
    """
    if c.complex_in(x):
        return Approximation(x, identity_map(x))
    x = x.trimmed()
    if depth is None:
        depth = default_depth(x)
    F = x.field
    A = x.algebra
    N = x.hi
    cov = c_cover(x.term(N), c)
    terms = {N: cov.source}
    cmaps = {N: cov.matrix}
    diffs: dict[int, Matrix] = {}
    n = N
    while True:
        Cn = terms[n]
        if n + 1 in terms:
            K, Kin = submodule(Cn, solve_kernel(diffs[n]).columns())
        else:
            K, Kin = Cn, Matrix.identity(F, Cn.dim)
        phi = cmaps[n] @ Kin
        Xn, Xm = x.term(n), x.term(n - 1)
        P, pa, pb = pullback(ModuleMap(K, Xn, phi), ModuleMap(Xm, Xn, x.diff(n - 1)))
        if P.dim == 0 and n - 1 < x.lo:
            break
        if n - 1 < x.lo - depth:
            raise DepthExceeded(n - 1)
        cv = c_cover(P, c)
        terms[n - 1] = cv.source
        diffs[n - 1] = Kin @ pa @ cv.matrix
        cmaps[n - 1] = pb @ cv.matrix
        n -= 1
    lo = min(terms)
    xc = BoundedComplex(A, lo, [terms[d] for d in range(lo, N + 1)], [diffs[d] for d in range(lo, N)],
                        check=check)
    a = ChainMap(xc, x, cmaps, check=check)
    if check and not is_acyclic(cone(a)):
        raise AssertionError("C-approximation is not a quasi-isomorphism")
    return Approximation(xc, a)


def pi_C(v: BoundedComplex, c: SubcatDescriptor, depth: int | None = None) -> BoundedComplex:
    """The C-approximation of ``v``, minimised."""
    return minimize(c_approximation(v, c, depth).complex).complex


def lift_through(h: ChainMap, a: ChainMap) -> ChainMap:
    """A chain map ``g`` with ``a @ g`` homotopic to ``h`` (``h: Z -> Y``, ``a: Y' -> Y``)."""
    Z, Yp = h.source, a.source
    F = Z.field
    H1 = hom_homotopy(Z, Yp)
    H2 = hom_homotopy(Z, h.target)
    n2 = len(H2.coords(h))
    gens = [H1.from_coords(v) for v in H1.chain_basis]
    cols = [H2.coords(a @ g) for g in gens] + list(H2.null_span.rows)
    if not cols:
        if any(H2.coords(h)):
            raise ValueError("map does not factor")
        return zero_map(Z, Yp)
    M = Matrix.from_columns(F, cols, n2)
    sol = solve(M, Matrix.from_columns(F, [H2.coords(h)], n2))
    if sol is None:
        raise ValueError("map does not factor up to homotopy")
    out = zero_map(Z, Yp)
    for k, g in enumerate(gens):
        cf = sol.data[k][0]
        if cf:
            out = out + g.scale(cf)
    return ChainMap(Z, Yp, out.comps)


def pi_C_map(f: ChainMap, c: SubcatDescriptor, depth: int | None = None) -> ChainMap:
    """The induced map between C-approximations of source and target."""
    ax = c_approximation(f.source, c, depth)
    ay = c_approximation(f.target, c, depth)
    return lift_through(f @ ax.map, ay.map)


# ---------------------------------------------------------------------------
# truncations


def _tau_leq0_A(x: BoundedComplex) -> tuple[BoundedComplex, ChainMap]:
    """``[... -> X^{-1} -> Ker d^0]`` with its inclusion into ``x``."""
    A = x.algebra
    F = x.field
    if x.lo > 0:
        z = zero_complex(A)
        return z, zero_map(z, x)
    K, Kin = submodule(x.term(0), solve_kernel(x.diff(0)).columns())
    terms = [x.term(d) for d in range(x.lo, 0)] + [K]
    diffs = [x.diff(d) for d in range(x.lo, -1)]
    if x.lo < 0:
        # corestrict d^{-1} into the kernel
        diffs.append(solve(Kin, x.diff(-1)) if K.dim else Matrix.zeros(F, 0, x.term(-1).dim))
    t = BoundedComplex(A, x.lo, terms, diffs)
    comps = {d: Matrix.identity(F, x.term(d).dim) for d in range(x.lo, 0)}
    comps[0] = Kin
    return t, ChainMap(t, x, comps)


def _tau_geq0_A(x: BoundedComplex) -> tuple[BoundedComplex, ChainMap]:
    """``[Ker d^{-1} -> X^{-1} -> X^0 -> ...]`` with the canonical map from ``x``."""
    A = x.algebra
    F = x.field
    if x.hi < -1:
        z = zero_complex(A)
        return z, zero_map(x, z)
    K, Kin = submodule(x.term(-1), solve_kernel(x.diff(-1)).columns())
    hi = max(x.hi, 0)
    terms = [K] + [x.term(d) for d in range(-1, hi + 1)]
    diffs = [Kin] + [x.diff(d) for d in range(-1, hi)]
    t = BoundedComplex(A, -2, terms, diffs)
    comps = {d: Matrix.identity(F, x.term(d).dim) for d in range(-1, hi + 1)}
    d2 = x.diff(-2)
    comps[-2] = solve(Kin, d2) if K.dim else Matrix.zeros(F, 0, x.term(-2).dim)
    return t, ChainMap(x, t, comps)


def truncate_leq0(x: BoundedComplex, c: SubcatDescriptor, depth: int | None = None) -> BoundedComplex:
    t, _ = _tau_leq0_A(x)
    return pi_C(t, c, depth)


def truncate_geq0(x: BoundedComplex, c: SubcatDescriptor, depth: int | None = None) -> BoundedComplex:
    t, _ = _tau_geq0_A(x)
    return pi_C(t, c, depth)


# ---------------------------------------------------------------------------
# kernels, cokernels, images


@dataclass
class HeartMorphismResult:
    """A heart object together with its structure map (into the source or out of the target)."""

    object: BoundedComplex
    map: ChainMap


def heart_ker(f: ChainMap, c: SubcatDescriptor, depth: int | None = None) -> HeartMorphismResult:
    """Kernel of ``f`` in the heart, with its map to ``f.source``."""
    C1 = shift(cone(f), -1)
    to_x = shift_map(cone_projection(f), -1)
    C1 = to_x.source
    t, inc = _tau_leq0_A(C1)
    ap = c_approximation(t, c, depth)
    mn = minimize(ap.complex)
    k = mn.complex
    m = to_x @ inc @ ap.map @ mn.v
    return HeartMorphismResult(k, ChainMap(k, f.source, m.comps))


def heart_coker(f: ChainMap, c: SubcatDescriptor, depth: int | None = None) -> HeartMorphismResult:
    """Cokernel of ``f`` in the heart, with the map from ``f.target``."""
    Cf = cone(f)
    inc = cone_inclusion(f)
    t, q = _tau_geq0_A(Cf)
    ap = c_approximation(t, c, depth)
    mn = minimize(ap.complex)
    g = lift_through(q @ inc, ap.map)
    g = mn.u @ g
    return HeartMorphismResult(mn.complex, ChainMap(f.target, mn.complex, g.comps))


def heart_image(f: ChainMap, c: SubcatDescriptor, depth: int | None = None) -> HeartMorphismResult:
    """Image of ``f`` as the kernel of ``target -> Coker f``, with its map to ``f.target``."""
    q = heart_coker(f, c, depth)
    return heart_ker(q.map, c, depth)


# ---------------------------------------------------------------------------
# zero and surjectivity tests


def _has_section(d: Matrix, src: Module, tgt: Module) -> bool:
    """Whether the module map ``d: src -> tgt`` is a split epimorphism."""
    F = src.field
    if tgt.dim == 0:
        return True
    if src.dim == 0 or rank(d) < tgt.dim:
        return False
    H = hom_basis(tgt, src)
    if H.dim == 0:
        return False
    n = tgt.dim * tgt.dim
    cols = [(d @ s).flatten() for s in H.basis]
    M = Matrix.from_columns(F, cols, n)
    ident = Matrix.identity(F, tgt.dim).flatten()
    return solve(M, Matrix.from_columns(F, [ident], n)) is not None


def is_zero_heart(v: BoundedComplex) -> bool:
    """A heart object vanishes iff ``V^{-1} -> V^0`` is a split epimorphism."""
    return _has_section(v.diff(-1), v.term(-1), v.term(0))


def is_surjective_heart(f: ChainMap) -> bool:
    """``f: X -> Y`` is an epimorphism iff ``X^0 ⊕ Y^{-1} -> Y^0`` is a split epimorphism."""
    x, y = f.source, f.target
    F = x.field
    a, b = x.term(0), y.term(-1)
    mods = [m for m in (a, b) if m.dim]
    if not mods:
        return y.term(0).dim == 0
    s = mods[0] if len(mods) == 1 else direct_sum(mods)[0]
    parts = []
    if a.dim:
        parts.append(f.comp(0))
    if b.dim:
        parts.append(y.diff(-1))
    return _has_section(hstack(parts, F, y.term(0).dim), s, y.term(0))


# ---------------------------------------------------------------------------
# simple objects


def is_simple(v: BoundedComplex, c: SubcatDescriptor) -> bool:
    """Test condition (*): ``Hom(W, C^{-n}) -> ... -> Hom(W, C^{-1}) -> J(W, X) -> 0`` is exact.

    Here ``X = V^0`` must be indecomposable and ``W`` runs over the
    indecomposables of C.
    """
    tests = c.test_objects()
    m = minimize(v).complex
    if m.is_zero() or m.hi != 0:
        return False
    X = m.term(0)
    if len(_decompose_pieces(X)) != 1:
        return False
    F = m.field
    for W in tests:
        # composite maps (d^{k})_* : Hom(W, C^k) -> Hom(W, C^{k+1}) in coordinates
        bases = {d: hom_basis(W, m.term(d)) for d in range(m.lo - 1, 1)}

        def push(d: int) -> Matrix:
            src, tgt = bases[d], bases[d + 1]
            if src.dim == 0 or tgt.dim == 0:
                return Matrix.zeros(F, tgt.dim, src.dim)
            return Matrix.from_columns(F, [tgt.coords(m.diff(d) @ b) for b in src.basis], tgt.dim)

        J = nonsplit_maps(W, X)
        # image of Hom(W, C^{-1}) equals J(W, X)
        if bases[-1].dim:
            img = Span(F, bases[0].dim, push(-1).columns())
        else:
            img = Span(F, bases[0].dim, [])
        if img.dim != J.dim or any(not J.contains(r) for r in img.rows):
            return False
        # exactness at Hom(W, C^k) for k < 0, including injectivity at the left end
        for d in range(m.lo, 0):
            out_rank = rank(push(d)) if bases[d].dim and bases[d + 1].dim else 0
            in_rank = rank(push(d - 1)) if d - 1 >= m.lo and bases[d - 1].dim and bases[d].dim else 0
            if bases[d].dim - out_rank != in_rank:
                return False
    return True


# ---------------------------------------------------------------------------
# Serre functor


def _min_injective_copresentation(m: Module) -> BoundedComplex:
    """``[m -> I -> J]`` in degrees -2, -1, 0 from a minimal injective resolution."""
    h0 = injective_hull(m)
    I = h0.target
    Q, q, _ = cokernel(h0)
    h1 = injective_hull(Q)
    return from_sequence([m, I, h1.target], [h0.matrix, h1.matrix @ q], hi=0)


def serre_A(m: Module) -> BoundedComplex:
    """``S_A P_m``: ``[DTr M -> I -> J]`` on non-projective summands, ``D(M*)`` on projective ones."""
    parts = []
    for ind, _, _ in _decompose_pieces(m):
        if is_projective(ind):
            s, _ = star(ind)
            parts.append(concentrated(dual_D(s), 0))
        else:
            parts.append(_min_injective_copresentation(transpose_dtr(ind)))
    if not parts:
        return zero_complex(m.algebra)
    return minimize(direct_sum_complexes(parts)).complex


def serre_P(m: Module, c: SubcatDescriptor, depth: int | None = None) -> BoundedComplex:
    """``S_C P_m = pi_C(S_A P_m)``."""
    return pi_C(serre_A(m), c, depth)


def projective_object(m: Module) -> BoundedComplex:
    """``P_m = m`` in degree zero."""
    return concentrated(m, 0)


def simple_quotient_L(m: Module, c: SubcatDescriptor, depth: int | None = None,
                      check: bool = True) -> BoundedComplex:
    """The simple top of ``P_m`` as the image of a map ``tau: P_m -> S_C P_m`` killing the radical."""
    F = m.field
    P = projective_object(m)
    S = serre_P(m, c, depth)
    H = hom_homotopy(P, S)
    if H.dim == 0:
        raise NoNonzeroTau(f"Hom(P, S P) vanishes for {m.label()}")
    E = hom_basis(m, m)
    rad = [E.combine(v) for v in _radical_end_coords(m)]
    rows_blocks = []
    for r in rad:
        rc = ChainMap(P, P, {0: r}, check=False)
        cols = [H.quotient_coords(t @ rc) for t in H.reps]
        rows_blocks.append(Matrix.from_columns(F, cols, H.dim))
    if rows_blocks:
        sys = vstack(rows_blocks, F, H.dim)
        sol = solve_kernel(sys).columns()
    else:
        sol = [[F.one if i == j else F.zero for i in range(H.dim)] for j in range(H.dim)]
    if not sol:
        raise NoNonzeroTau(f"no map P -> S P kills the radical of {m.label()}")
    coeffs = sol[0]
    tau = zero_map(P, S)
    for cf, t in zip(coeffs, H.reps):
        if cf:
            tau = tau + t.scale(cf)
    L = heart_image(ChainMap(P, S, tau.comps), c, depth).object
    if check and (not c.is_all or c.indec_catalog is not None):
        if not is_simple(L, c):
            raise AssertionError(f"image of tau is not simple for {m.label()}")
    return L


# ---------------------------------------------------------------------------
# identities


def verify_serre_duality(m: Module, v: BoundedComplex, c: SubcatDescriptor,
                         depth: int | None = None) -> tuple[int, int]:
    """``(dim Hom(P_m, v), dim Hom(v, S_C P_m))``; they agree when duality holds."""
    left = hom_homotopy(projective_object(m), v).dim
    right = hom_homotopy(v, serre_P(m, c, depth)).dim
    return left, right


def verify_sigma_identity(cgen: Module, c: SubcatDescriptor, samples: Sequence[BoundedComplex],
                          depth: int | None = None) -> bool:
    """Check ``Hom_{H_A}(W, S_A P_C) = Hom_{H_C}(pi_C W, S_C P_C)`` dimensionwise on samples."""
    SA = serre_A(cgen)
    SC = pi_C(SA, c, depth)
    for w in samples:
        a = hom_homotopy(w, SA).dim
        b = hom_homotopy(pi_C(w, c, depth), SC).dim
        if a != b:
            return False
    return True


def ar_sequence(m: Module) -> BoundedComplex:
    """The almost split sequence ``[DTr M -> E -> M]`` in degrees -2..0, M indecomposable non-projective.

    E is the pushout of ``Omega M -> P_0`` along a map ``Omega M -> DTr M``
    whose Ext class spans the socle of Ext^1(M, DTr M) over End(M).
    """
    from .modules import projective_cover, quotient_module

    F = m.field
    cov = projective_cover(m)
    P0 = cov.source
    K, Kin = kernel(cov)
    N = transpose_dtr(m)
    hb = hom_basis(K, N)
    restricted = Span(F, hb.dim, [hb.coords(h @ Kin) for h in hom_basis(P0, N).basis])
    # lifts of radical endomorphisms of M to Omega M
    EP = hom_basis(P0, P0)
    HPM = hom_basis(P0, m)
    lift_sys = Matrix.from_columns(F, [HPM.coords(cov.matrix @ b) for b in EP.basis], HPM.dim)
    E = hom_basis(m, m)
    blocks = []
    for v in _radical_end_coords(m):
        rho = E.combine(v)
        sol = solve(lift_sys, Matrix.from_columns(F, [HPM.coords(rho @ cov.matrix)], HPM.dim))
        sigma = EP.combine(sol.column(0))
        s_k = solve(Kin, sigma @ Kin)
        cols = [restricted.reduce(hb.coords(eta @ s_k)) for eta in hb.basis]
        blocks.append(Matrix.from_columns(F, cols, hb.dim))
    if blocks:
        W = solve_kernel(vstack(blocks, F, hb.dim)).columns()
    else:
        W = [[F.one if i == j else F.zero for i in range(hb.dim)] for j in range(hb.dim)]
    eta_c = next((w for w in W if not restricted.contains(w)), None)
    if eta_c is None:
        raise AssertionError(f"Ext^1({m.label()}, DTr) has no socle element")
    eta = hb.combine(eta_c)
    s, _, _ = direct_sum([P0, N])
    rel = vstack([Kin, eta.scale(F.neg(F.one))], F, K.dim)
    Em, q, sec = quotient_module(s, Span(F, s.dim, rel.columns()))
    into = q @ vstack([Matrix.zeros(F, P0.dim, N.dim), Matrix.identity(F, N.dim)], F, N.dim)
    onto = hstack([cov.matrix, Matrix.zeros(F, m.dim, N.dim)], F, m.dim) @ sec
    return from_sequence([N, Em, m], [into, onto], hi=0)


def classical_ar_object(m: Module) -> BoundedComplex:
    """``L^A_m``: ``[0 -> rad M -> M]`` for projective M, else the almost split sequence."""
    from .modules import radical_span, submodule_from_span

    if is_projective(m):
        R, Rin = submodule_from_span(m, radical_span(m))
        return from_sequence([R, m], [Rin], hi=0)
    return ar_sequence(m)


def ker_pi_object(cmap: ModuleMap, y: Module, g: Matrix) -> BoundedComplex:
    """``[X -> C ⊕ Y -> Z]`` for a C-cover ``cmap: C -> Z`` and ``g: Y -> Z``; X is the pullback."""
    C, Z = cmap.source, cmap.target
    F = Z.field
    P, pa, pb = pullback(cmap, ModuleMap(y, Z, g))
    s, _, _ = direct_sum([C, y])
    inc = vstack([pa, pb.scale(F.neg(F.one))], F, P.dim)
    out = hstack([cmap.matrix, g], F, Z.dim)
    return from_sequence([P, s, Z], [inc, out], hi=0)

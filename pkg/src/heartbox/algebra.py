"""Finite-dimensional associative unital algebras given by structure constants."""
from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .errors import CharTooSmall, MalformedInput, NotAssociative, SplitFailure, UnitLawFails
from .linalg import FieldSpec, Matrix, _rref_rows, solve_kernel
from . import polys


class SubspaceBasis:
    """A subspace of an algebra, stored as an RREF row basis."""

    def __init__(self, ambient: "Algebra", rows: list[list], pivots: list[int]):
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def columns(self) -> Matrix:
        a = self.ambient
        return Matrix.from_columns(a.field, self.rows, a.dim)

    def reduce(self, v: Sequence) -> list:
        """Normal form of ``v`` modulo the subspace (pivot coordinates cleared)."""
        f = self.ambient.field
        v = list(v)
        for r, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                for j, x in enumerate(r):
                    if x:
                        v[j] = f.sub(v[j], f.mul(c, x))
        return v

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def complement_indices(self) -> list[int]:
        ps = set(self.pivots)
        return [j for j in range(self.ambient.dim) if j not in ps]


def _span(vectors, n: int, field: FieldSpec) -> tuple[list[list], list[int]]:
    rows = [list(v) for v in vectors if any(v)]
    piv = _rref_rows(rows, n, field)
    return rows[:len(piv)], piv


class Algebra:
    """Associative unital algebra with basis ``e_0..e_{d-1}``.

    ``mul`` maps ``(i, j)`` to a list of ``(k, c)`` pairs meaning
    ``e_i e_j = sum c e_k``.  Construction does not validate; call
    :meth:`validate` (fixtures and the file loader always do).
    """

    def __init__(self, name: str, field: FieldSpec, dim: int, basis_labels: Sequence[str],
                 mul: dict[tuple[int, int], list[tuple[int, object]]], unit: Sequence):
        if len(basis_labels) != dim or len(unit) != dim:
            raise MalformedInput("basis labels / unit length do not match dim")
        self.name = name
        self.field = field
        self.dim = dim
        self.basis_labels = list(basis_labels)
        clean: dict[tuple[int, int], list[tuple[int, object]]] = {}
        for (i, j), terms in mul.items():
            acc: dict[int, object] = {}
            for k, c in terms:
                if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                    raise MalformedInput(f"structure constant index out of range: {(i, j, k)}")
                acc[k] = field.add(acc.get(k, field.zero), field.coerce(c))
            t = sorted((k, c) for k, c in acc.items() if c)
            if t:
                clean[(i, j)] = t
        self.mul = clean
        self.unit = [field.coerce(x) for x in unit]
        self._opposite: Algebra | None = None
        self._cache: dict = {}

    # identity -------------------------------------------------------------
    @cached_property
    def key(self) -> tuple:
        f = self.field
        return (f, self.dim, tuple(sorted((i, j, k, f.scalar_to_json(c))
                                         for (i, j), t in self.mul.items() for k, c in t)),
                tuple(f.scalar_to_json(x) for x in self.unit))

    def same_as(self, other: "Algebra") -> bool:
        return self is other or self.key == other.key

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, dim={self.dim}, {self.field})"

    # element arithmetic ---------------------------------------------------
    def zero_vec(self) -> list:
        return [self.field.zero] * self.dim

    def basis_vec(self, i: int) -> list:
        v = self.zero_vec()
        v[i] = self.field.one
        return v

    def product(self, a: Sequence, b: Sequence) -> list:
        f = self.field
        out = self.zero_vec()
        nzb = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in nzb:
                t = self.mul.get((i, j))
                if t:
                    xy = f.mul(x, y)
                    for k, c in t:
                        out[k] = f.add(out[k], f.mul(xy, c))
        return out

    def add(self, a: Sequence, b: Sequence) -> list:
        f = self.field
        return [f.add(x, y) for x, y in zip(a, b)]

    def sub(self, a: Sequence, b: Sequence) -> list:
        f = self.field
        return [f.sub(x, y) for x, y in zip(a, b)]

    def scale(self, c, a: Sequence) -> list:
        f = self.field
        return [f.mul(c, x) for x in a]

    def power(self, a: Sequence, n: int) -> list:
        out = list(self.unit)
        for _ in range(n):
            out = self.product(out, a)
        return out

    def is_commutative(self) -> bool:
        f = self.field
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.mul.get((i, j), []) != self.mul.get((j, i), []):
                    return False
        return True

    # representation matrices ---------------------------------------------
    def left_mult(self, a: Sequence) -> Matrix:
        """Matrix of ``x -> a x`` on the algebra (columns = images of basis)."""
        cols = [self.product(a, self.basis_vec(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_mult(self, a: Sequence) -> Matrix:
        cols = [self.product(self.basis_vec(j), a) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    @cached_property
    def left_regular(self) -> list[Matrix]:
        return [self.left_mult(self.basis_vec(i)) for i in range(self.dim)]

    @cached_property
    def right_regular(self) -> list[Matrix]:
        return [self.right_mult(self.basis_vec(i)) for i in range(self.dim)]

    # validation -----------------------------------------------------------
    def validate(self) -> "Algebra":
        f = self.field
        d = self.dim
        for i in range(d):
            ei = self.basis_vec(i)
            if self.product(self.unit, ei) != ei or self.product(ei, self.unit) != ei:
                raise UnitLawFails(i)
        table = {key: t for key, t in self.mul.items()}

        def combo(terms, row):
            out: dict[int, object] = {}
            for l, c in terms:
                for k2, c2 in table.get(row(l), ()):
                    out[k2] = f.add(out.get(k2, f.zero), f.mul(c, c2))
            return {k: v for k, v in out.items() if v}

        for i in range(d):
            for j in range(d):
                tij = table.get((i, j), ())
                for k in range(d):
                    lhs = combo(tij, lambda l: (l, k))
                    rhs = combo(table.get((j, k), ()), lambda l: (i, l))
                    if lhs != rhs:
                        raise NotAssociative(i, j, k)
        return self

    # opposite -------------------------------------------------------------
    def opposite(self) -> "Algebra":
        if self._opposite is None:
            if self.is_commutative():
                self._opposite = self
            else:
                mul = {(j, i): list(t) for (i, j), t in self.mul.items()}
                name = self.name[:-3] if self.name.endswith("^op") else self.name + "^op"
                op = Algebra(name, self.field, self.dim, self.basis_labels, mul, self.unit)
                op._opposite = self
                self._opposite = op
        return self._opposite

    # generators -----------------------------------------------------------
    @cached_property
    def generators(self) -> list[int]:
        """Basis indices that generate the algebra (the unit is implicit)."""
        f = self.field
        span_rows, piv = _span([self.unit], self.dim, f)
        gens: list[int] = []
        for i in range(self.dim):
            probe = SubspaceBasis(self, span_rows, piv)
            if probe.contains(self.basis_vec(i)):
                continue
            gens.append(i)
            span_rows, piv = self._closure([self.unit] + [self.basis_vec(g) for g in gens])
            if len(span_rows) == self.dim:
                break
        return gens

    def _closure(self, seeds: list[list]) -> tuple[list[list], list[int]]:
        f = self.field
        rows, piv = _span(seeds, self.dim, f)
        while True:
            new = [self.product(a, b) for a in rows for b in seeds]
            rows2, piv2 = _span(rows + new, self.dim, f)
            if len(rows2) == len(rows):
                return rows2, piv2
            rows, piv = rows2, piv2

    def subspace(self, vectors) -> SubspaceBasis:
        rows, piv = _span(vectors, self.dim, self.field)
        return SubspaceBasis(self, rows, piv)

    # radical --------------------------------------------------------------
    def jacobson_radical(self) -> SubspaceBasis:
        """Radical of the trace form of the regular representation."""
        if "radical" in self._cache:
            return self._cache["radical"]
        f = self.field
        d = self.dim
        if f.kind == "Fp" and f.p <= d:
            raise CharTooSmall(f"trace criterion needs p > dim = {d}, have p = {f.p}")
        traces = []
        for M in self.left_regular:
            t = f.zero
            for i in range(d):
                t = f.add(t, M.data[i][i])
            traces.append(t)
        gram = [[f.zero] * d for _ in range(d)]
        for (i, j), terms in self.mul.items():
            s = f.zero
            for k, c in terms:
                s = f.add(s, f.mul(c, traces[k]))
            gram[i][j] = s
        ker = solve_kernel(Matrix(f, d, d, [list(r) for r in zip(*gram)]) if d else Matrix(f, 0, 0, []))
        J = self.subspace(ker.columns())
        self._check_radical(J)
        self._cache["radical"] = J
        return J

    def _check_radical(self, J: SubspaceBasis) -> None:
        for b in J.rows:
            for i in range(self.dim):
                ei = self.basis_vec(i)
                if not (J.contains(self.product(ei, b)) and J.contains(self.product(b, ei))):
                    raise AssertionError("trace radical is not a two-sided ideal")
        power = J.rows
        for _ in range(self.dim + 1):
            if not power:
                break
            prod = [self.product(x, y) for x in power for y in J.rows]
            power, _ = _span(prod, self.dim, self.field)
        if power:
            raise AssertionError("trace radical is not nilpotent")

    def quotient_by(self, J: SubspaceBasis, name: str | None = None) -> tuple["Algebra", list[int]]:
        """The algebra ``A/J`` on the complement basis indices of ``J``."""
        comp = J.complement_indices()
        pos = {c: n for n, c in enumerate(comp)}
        f = self.field
        mul = {}
        for a, i in enumerate(comp):
            for b, j in enumerate(comp):
                v = J.reduce(self.product(self.basis_vec(i), self.basis_vec(j)))
                t = [(pos[k], c) for k, c in enumerate(v) if c]
                if t:
                    mul[(a, b)] = t
        unit = J.reduce(self.unit)
        q = Algebra(name or f"{self.name}/J", f, len(comp), [self.basis_labels[c] for c in comp],
                    mul, [unit[c] for c in comp])
        return q, comp

    def is_semisimple(self) -> bool:
        return self.jacobson_radical().dim == 0

    # idempotents ----------------------------------------------------------
    def primitive_idempotents(self) -> list[list]:
        """Complete set of orthogonal primitive idempotents, lifted from A/J."""
        if "idempotents" in self._cache:
            return self._cache["idempotents"]
        J = self.jacobson_radical()
        B, comp = self.quotient_by(J)
        if B.jacobson_radical().dim:
            raise AssertionError("quotient by the trace radical is not semisimple")
        bar = _split_semisimple(B)
        f = self.field

        def lift_vec(v):
            out = self.zero_vec()
            for c, x in zip(comp, v):
                out[c] = x
            return out

        lifted: list[list] = []
        rest = list(self.unit)
        for k, eb in enumerate(bar):
            if k == len(bar) - 1:
                e = rest
            else:
                x = lift_vec(eb)
                x = self.product(self.product(rest, x), rest)
                e = self._newton(x)
            lifted.append(e)
            rest = self.sub(rest, e)
        self._check_idempotents(lifted)
        self._cache["idempotents"] = lifted
        return lifted

    def _newton(self, x: list) -> list:
        e = x
        for _ in range(2 * self.dim + 4):
            e2 = self.product(e, e)
            if e2 == e:
                return e
            e3 = self.product(e2, e)
            e = self.sub(self.scale(self.field.coerce(3), e2), self.scale(self.field.coerce(2), e3))
        raise SplitFailure("idempotent lifting did not converge")

    def _check_idempotents(self, es: list[list]) -> None:
        total = self.zero_vec()
        for i, a in enumerate(es):
            if self.product(a, a) != a:
                raise AssertionError("lifted element is not idempotent")
            for j, b in enumerate(es):
                if i != j and any(self.product(a, b)):
                    raise AssertionError("lifted idempotents are not orthogonal")
            total = self.add(total, a)
        if total != self.unit:
            raise AssertionError("idempotents do not sum to 1")

    def corner(self, e: Sequence) -> SubspaceBasis:
        return self.subspace([self.product(self.product(e, self.basis_vec(i)), e) for i in range(self.dim)])


# ---------------------------------------------------------------------------
# splitting a semisimple algebra


def _split_semisimple(B: Algebra) -> list[list]:
    if B.dim == 0:
        return []
    out: list[list] = []
    stack = [list(B.unit)]
    while stack:
        e = stack.pop()
        parts = _split_once(B, e)
        if parts is None:
            out.append(e)
        else:
            stack.extend(reversed(parts))
    # primitive and split: each corner is the base field
    for e in out:
        if B.corner(e).dim != 1:
            raise SplitFailure("semisimple quotient has a non-split simple factor")
    return out


def _candidates(B: Algebra, C: SubspaceBasis):
    basis = C.rows
    yield from basis
    for a in basis:
        for b in basis:
            yield B.product(a, b)
    for i, a in enumerate(basis):
        for b in basis[i + 1:]:
            yield B.add(a, b)


def _split_once(B: Algebra, e: list) -> list[list] | None:
    """Two or more orthogonal idempotents summing to ``e``, or None if primitive."""
    C = B.corner(e)
    if C.dim <= 1:
        return None
    f = B.field
    saw_irreducible = False
    for x in _candidates(B, C):
        mu = polys.minimal_polynomial(B, x, e)
        if len(mu) <= 2:
            continue
        factors = polys.factor(mu, f)
        if len(factors) >= 2:
            return polys.crt_idempotents(B, x, e, factors, f)
        (q, mult), = factors
        if mult > 1:
            y = polys.evaluate(B, q, x, e)
        elif len(q) == 2:
            continue
        else:
            saw_irreducible = True
            continue
        g = _idempotent_of_right_ideal(B, y, C)
        if g is not None:
            return [g, B.sub(e, g)]
    if saw_irreducible:
        raise SplitFailure("semisimple quotient needs a field extension to split")
    raise SplitFailure("could not split a semisimple corner over the base field")


def _idempotent_of_right_ideal(B: Algebra, y: list, C: SubspaceBasis) -> list | None:
    """Idempotent generator g of the right ideal yC (inside the corner C)."""
    f = B.field
    gens, _ = _span([B.product(y, c) for c in C.rows], B.dim, f)
    if not gens or len(gens) >= C.dim:
        return None
    m = len(gens)
    # unknown g = sum_a z_a gens[a]; require g r = r for r in gens
    eqs = []
    rhs = []
    for r in gens:
        prods = [B.product(ga, r) for ga in gens]
        for k in range(B.dim):
            eqs.append([prods[a][k] for a in range(m)])
            rhs.append(r[k])
    from .linalg import solve
    A = Matrix(f, len(eqs), m, eqs)
    b = Matrix(f, len(rhs), 1, [[x] for x in rhs])
    z = solve(A, b)
    if z is None:
        return None
    g = B.zero_vec()
    for a in range(m):
        g = B.add(g, B.scale(z.data[a][0], gens[a]))
    if B.product(g, g) != g:
        return None
    return g


def algebra_from_json(obj) -> Algebra:
    try:
        field = FieldSpec.from_json(obj["field"])
        dim = obj["dim"]
        labels = obj.get("basis_labels") or [f"e{i}" for i in range(dim)]
        unit = [field.scalar_from_json(x) for x in obj["unit"]]
        mul: dict = {}
        for entry in obj["mul"]:
            i, j, k, c = entry
            mul.setdefault((i, j), []).append((k, field.coerce(c)))
        name = obj["name"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad algebra literal: {exc}") from exc
    return Algebra(name, field, dim, labels, mul, unit).validate()


def algebra_to_json(a: Algebra) -> dict:
    f = a.field
    return {"name": a.name, "field": f.to_json(), "dim": a.dim, "basis_labels": list(a.basis_labels),
            "unit": [f.scalar_to_json(x) for x in a.unit],
            "mul": [[i, j, k, str(f.scalar_to_json(c))]
                    for (i, j), t in sorted(a.mul.items()) for k, c in t]}

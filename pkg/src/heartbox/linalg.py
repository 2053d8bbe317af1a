"""Exact scalars and dense matrices over GF(p) and the rationals.

Scalars are plain Python ints reduced into ``[0, p)`` for prime fields and
``gmpy2.mpq`` values for the rationals.  A :class:`Matrix` stores its entries
as a list of row lists and is never mutated after construction; every
operation returns a fresh matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import gmpy2

from .errors import FieldMismatch, MalformedInput

_mpq = gmpy2.mpq
_MPQ_TYPE = type(_mpq(0))


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``kind == "Q"``) or GF(p) (``kind == "Fp"``)."""

    kind: str
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "Q":
            if self.p is not None:
                raise MalformedInput("rational field takes no modulus")
        elif self.kind == "Fp":
            p = self.p
            if not isinstance(p, int) or not 2 <= p < 2**61 or not _is_prime(p):
                raise MalformedInput(f"GF(p) needs a prime 2 <= p < 2^61, got {p!r}")
        else:
            raise MalformedInput(f"unknown field kind {self.kind!r}")

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("Q")

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("Fp", p)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "Fp"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    @property
    def size(self) -> int | None:
        """Number of elements, or None when infinite."""
        return self.p if self.kind == "Fp" else None

    def __str__(self) -> str:
        return "QQ" if self.kind == "Q" else f"GF({self.p})"

    # scalar helpers -------------------------------------------------------
    @property
    def zero(self):
        return 0 if self.kind == "Fp" else _mpq(0)

    @property
    def one(self):
        return 1 if self.kind == "Fp" else _mpq(1)

    def coerce(self, x):
        """Bring an int, Fraction, mpq or ``"a/b"`` string into the field."""
        if self.kind == "Fp":
            p = self.p
            if isinstance(x, str):
                x = Fraction(x)
            if isinstance(x, int):
                return x % p
            if isinstance(x, (Fraction, _MPQ_TYPE)):
                num, den = int(x.numerator), int(x.denominator)
                if den % p == 0:
                    raise MalformedInput(f"{x} has no image in GF({p})")
                return num * pow(den, -1, p) % p
            raise MalformedInput(f"cannot coerce {x!r} into GF({p})")
        if isinstance(x, _MPQ_TYPE):
            return x
        if isinstance(x, str):
            try:
                return _mpq(Fraction(x))
            except (ValueError, ZeroDivisionError) as exc:
                raise MalformedInput(f"bad rational literal {x!r}") from exc
        if isinstance(x, (int, Fraction)):
            return _mpq(x)
        raise MalformedInput(f"cannot coerce {x!r} into QQ")

    def inv(self, x):
        if self.kind == "Fp":
            return pow(x, -1, self.p)
        return 1 / x

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "Fp" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "Fp" else a - b

    def mul(self, a, b):
        return a * b % self.p if self.kind == "Fp" else a * b

    def neg(self, a):
        return -a % self.p if self.kind == "Fp" else -a

    def scalar_to_json(self, x):
        if self.kind == "Fp":
            return int(x)
        num, den = int(x.numerator), int(x.denominator)
        return str(num) if den == 1 else f"{num}/{den}"

    def scalar_from_json(self, v):
        if self.kind == "Fp":
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.p:
                raise MalformedInput(f"GF({self.p}) entry must be an int in [0,p): {v!r}")
            return v
        if not isinstance(v, str):
            raise MalformedInput(f"rational entries are strings 'num/den', got {v!r}")
        q = self.coerce(v)
        if self.scalar_to_json(q) != v:
            raise MalformedInput(f"rational literal not in lowest terms: {v!r}")
        return q

    def to_json(self) -> dict:
        return {"kind": "Q"} if self.kind == "Q" else {"kind": "Fp", "p": self.p}

    @staticmethod
    def from_json(obj) -> "FieldSpec":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise MalformedInput(f"bad field literal {obj!r}")
        if obj["kind"] == "Q":
            return FieldSpec("Q")
        if obj["kind"] == "Fp":
            return FieldSpec("Fp", obj.get("p"))
        raise MalformedInput(f"bad field kind {obj['kind']!r}")


def _is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


QQ = FieldSpec("Q")


class Matrix:
    """Dense row-major matrix with entries in a :class:`FieldSpec`."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldSpec, rows: int, cols: int, data: list[list]):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    # construction ---------------------------------------------------------
    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        data = [[field.coerce(x) for x in r] for r in rows]
        c = len(data[0]) if data else (cols or 0)
        if any(len(r) != c for r in data):
            raise MalformedInput("ragged matrix rows")
        return cls(field, len(data), c, data)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], rows: int) -> "Matrix":
        z = field.zero
        data = [[z] * len(columns) for _ in range(rows)]
        for j, col in enumerate(columns):
            for i in range(rows):
                data[i][j] = col[i]
        return cls(field, rows, len(columns), data)

    @classmethod
    def scalar(cls, field: FieldSpec, c, n: int) -> "Matrix":
        c = field.coerce(c)
        z = field.zero
        return cls(field, n, n, [[c if i == j else z for j in range(n)] for i in range(n)])

    # basic protocol -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def column(self, j: int) -> list:
        return [r[j] for r in self.data]

    def columns(self) -> list[list]:
        return [[r[j] for r in self.data] for j in range(self.cols)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.data)
        return f"Matrix[{self.field}]({self.rows}x{self.cols}: {body})"

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i, r in enumerate(self.data):
            for j, x in enumerate(r):
                if x != (1 if i == j else 0):
                    return False
        return True

    def copy_rows(self) -> list[list]:
        return [list(r) for r in self.data]

    # arithmetic -----------------------------------------------------------
    def _check(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        if self.field.kind == "Fp":
            p = self.field.p
            data = [[(a + b) % p for a, b in zip(r, s)] for r, s in zip(self.data, other.data)]
        else:
            data = [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)]
        return Matrix(self.field, self.rows, self.cols, data)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        if self.field.kind == "Fp":
            p = self.field.p
            data = [[(a - b) % p for a, b in zip(r, s)] for r, s in zip(self.data, other.data)]
        else:
            data = [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)]
        return Matrix(self.field, self.rows, self.cols, data)

    def __neg__(self) -> "Matrix":
        if self.field.kind == "Fp":
            p = self.field.p
            data = [[-a % p for a in r] for r in self.data]
        else:
            data = [[-a for a in r] for r in self.data]
        return Matrix(self.field, self.rows, self.cols, data)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        if self.field.kind == "Fp":
            p = self.field.p
            data = [[a * c % p for a in r] for r in self.data]
        else:
            data = [[a * c for a in r] for r in self.data]
        return Matrix(self.field, self.rows, self.cols, data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        n = other.cols
        odata = other.data
        z = self.field.zero
        out = []
        if self.field.kind == "Fp":
            p = self.field.p
            for r in self.data:
                acc = [0] * n
                for k, a in enumerate(r):
                    if a:
                        ok = odata[k]
                        for j in range(n):
                            b = ok[j]
                            if b:
                                acc[j] += a * b
                out.append([x % p for x in acc])
        else:
            for r in self.data:
                acc = [z] * n
                for k, a in enumerate(r):
                    if a:
                        ok = odata[k]
                        for j in range(n):
                            b = ok[j]
                            if b:
                                acc[j] += a * b
                out.append(acc)
        return Matrix(self.field, self.rows, n, out)

    def apply(self, vec: Sequence) -> list:
        """Matrix times a column vector given as a list."""
        if self.field.kind == "Fp":
            p = self.field.p
            return [sum(a * b for a, b in zip(r, vec) if a) % p for r in self.data]
        z = self.field.zero
        return [sum((a * b for a, b in zip(r, vec) if a), z) for r in self.data]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows, [list(c) for c in zip(*self.data)] if self.rows
                      else [[] for _ in range(self.cols)])

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "Matrix":
        rs = range(self.rows) if rows is None else rows
        if cols is None:
            data = [list(self.data[i]) for i in rs]
            return Matrix(self.field, len(data), self.cols, data)
        data = [[self.data[i][j] for j in cols] for i in rs]
        return Matrix(self.field, len(data), len(cols), data)

    def flatten(self) -> list:
        return [x for r in self.data for x in r]

    # serialisation --------------------------------------------------------
    def to_json(self) -> dict:
        f = self.field
        return {"field": f.to_json(), "rows": self.rows, "cols": self.cols,
                "entries": [f.scalar_to_json(x) for r in self.data for x in r]}

    @staticmethod
    def from_json(obj) -> "Matrix":
        try:
            field = FieldSpec.from_json(obj["field"])
            r, c, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad matrix literal: {exc}") from exc
        if not isinstance(r, int) or not isinstance(c, int) or r < 0 or c < 0:
            raise MalformedInput("matrix shape must be non-negative ints")
        if not isinstance(entries, list) or len(entries) != r * c:
            raise MalformedInput(f"expected {r * c} entries")
        vals = [field.scalar_from_json(v) for v in entries]
        return Matrix(field, r, c, [vals[i * c:(i + 1) * c] for i in range(r)])


# ---------------------------------------------------------------------------
# elimination


def _rref_rows(rows: list[list], ncols: int, field: FieldSpec) -> list[int]:
    """Reduce ``rows`` in place to reduced row-echelon form; return pivots.

    Zero rows end up at the bottom.  Only the nonzero support of the pivot
    row is touched when clearing a column, which pays off on the sparse
    systems produced by intertwiner equations.
    """
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    if field.kind == "Fp":
        p = field.p
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if rows[i][c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                rows[piv], rows[r] = rows[r], rows[piv]
            pr = rows[r]
            inv = pow(pr[c], -1, p)
            if inv != 1:
                for j in range(c, ncols):
                    if pr[j]:
                        pr[j] = pr[j] * inv % p
            nz = [j for j in range(c, ncols) if pr[j]]
            for i in range(nrows):
                if i != r:
                    ri = rows[i]
                    f = ri[c]
                    if f:
                        for j in nz:
                            ri[j] = (ri[j] - f * pr[j]) % p
            pivots.append(c)
            r += 1
    else:
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if rows[i][c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                rows[piv], rows[r] = rows[r], rows[piv]
            pr = rows[r]
            x = pr[c]
            if x != 1:
                inv = 1 / x
                for j in range(c, ncols):
                    if pr[j]:
                        pr[j] = pr[j] * inv
            nz = [j for j in range(c, ncols) if pr[j]]
            for i in range(nrows):
                if i != r:
                    ri = rows[i]
                    f = ri[c]
                    if f:
                        for j in nz:
                            ri[j] = ri[j] - f * pr[j]
            pivots.append(c)
            r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns."""
    rows = m.copy_rows()
    pivots = _rref_rows(rows, m.cols, m.field)
    return Matrix(m.field, m.rows, m.cols, rows), len(pivots), pivots


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = [list(r) for r in m.data if any(r)]
    return len(_rref_rows(rows, m.cols, m.field))


def solve_kernel(m: Matrix) -> Matrix:
    """Columns form a basis of ``{v : m v = 0}``, in RREF-canonical form."""
    rows = [list(r) for r in m.data if any(r)]
    pivots = _rref_rows(rows, m.cols, m.field)
    field = m.field
    z, o = field.zero, field.one
    pivset = set(pivots)
    free = [j for j in range(m.cols) if j not in pivset]
    cols = []
    for fj in free:
        v = [z] * m.cols
        v[fj] = o
        for r, pc in enumerate(pivots):
            x = rows[r][fj]
            if x:
                v[pc] = field.neg(x)
        cols.append(v)
    return Matrix.from_columns(field, cols, m.cols)


def kernel_vectors(m: Matrix) -> list[list]:
    return solve_kernel(m).columns()


def row_space_basis(vectors: Iterable[Sequence], ncols: int, field: FieldSpec) -> tuple[list[list], list[int]]:
    """RREF basis of the span of ``vectors`` plus its pivot columns."""
    rows = [list(v) for v in vectors if any(v)]
    pivots = _rref_rows(rows, ncols, field)
    return rows[:len(pivots)], pivots


def column_space(m: Matrix) -> Matrix:
    """A basis of the column space taken from the original pivot columns."""
    _, _, piv = rref(m)
    return m.submatrix(None, piv)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with lexicographic index flattening."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    f = a.field
    rows = []
    for ar in a.data:
        for br in b.data:
            if f.kind == "Fp":
                p = f.p
                rows.append([x * y % p for x in ar for y in br])
            else:
                rows.append([x * y for x in ar for y in br])
    return Matrix(f, a.rows * b.rows, a.cols * b.cols, rows)


def hstack(mats: Sequence[Matrix], field: FieldSpec, rows: int) -> Matrix:
    data = [[] for _ in range(rows)]
    for m in mats:
        if m.rows != rows:
            raise ValueError("hstack row mismatch")
        for i in range(rows):
            data[i].extend(m.data[i])
    return Matrix(field, rows, sum(m.cols for m in mats), data)


def vstack(mats: Sequence[Matrix], field: FieldSpec, cols: int) -> Matrix:
    data = []
    for m in mats:
        if m.cols != cols:
            raise ValueError("vstack column mismatch")
        data.extend(list(r) for r in m.data)
    return Matrix(field, len(data), cols, data)


def block_diag(mats: Sequence[Matrix], field: FieldSpec) -> Matrix:
    R = sum(m.rows for m in mats)
    C = sum(m.cols for m in mats)
    out = Matrix.zeros(field, R, C)
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            out.data[r0 + i][c0:c0 + m.cols] = m.data[i]
        r0 += m.rows
        c0 += m.cols
    return out


def block(blocks: Sequence[Sequence[Matrix]], field: FieldSpec, row_sizes: Sequence[int],
          col_sizes: Sequence[int]) -> Matrix:
    """Assemble a block matrix; ``None`` entries are zero blocks."""
    out = Matrix.zeros(field, sum(row_sizes), sum(col_sizes))
    r0 = 0
    for bi, rs in enumerate(row_sizes):
        c0 = 0
        for bj, cs in enumerate(col_sizes):
            m = blocks[bi][bj]
            if m is not None:
                if m.shape != (rs, cs):
                    raise ValueError(f"block ({bi},{bj}) has shape {m.shape}, expected {(rs, cs)}")
                for i in range(rs):
                    out.data[r0 + i][c0:c0 + cs] = m.data[i]
            c0 += cs
        r0 += rs
    return out


def inverse(m: Matrix) -> Matrix | None:
    """Inverse of a square matrix, or None if singular."""
    n = m.rows
    if n != m.cols:
        raise ValueError("inverse of a non-square matrix")
    f = m.field
    z, o = f.zero, f.one
    rows = [list(r) + [o if i == j else z for j in range(n)] for i, r in enumerate(m.data)]
    piv = _rref_rows(rows, 2 * n, f)
    if len(piv) < n or piv[n - 1] != n - 1:
        return None
    return Matrix(f, n, n, [r[n:] for r in rows])


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Some X with ``a X = b``, or None when the system is inconsistent."""
    if a.rows != b.rows:
        raise ValueError("solve: row mismatch")
    f = a.field
    n, k = a.cols, b.cols
    rows = [list(ra) + list(rb) for ra, rb in zip(a.data, b.data)]
    piv = _rref_rows(rows, n + k, f)
    z = f.zero
    x = [[z] * k for _ in range(n)]
    for r, pc in enumerate(piv):
        if pc >= n:
            return None
        x[pc] = rows[r][n:]
    return Matrix(f, n, k, x)


def left_inverse(m: Matrix) -> Matrix:
    """Some L with ``L m = I`` for a matrix of full column rank."""
    sol = solve(m.T, Matrix.identity(m.field, m.cols))
    if sol is None:
        raise ValueError("matrix is not injective")
    return sol.T


def complement_basis(sub: Matrix, n: int) -> list[int]:
    """Standard basis indices completing the columns of ``sub`` to a basis of k^n."""
    rows = [list(c) for c in sub.columns() if any(c)]
    piv = _rref_rows(rows, n, sub.field) if rows else []
    ps = set(piv)
    return [j for j in range(n) if j not in ps]


def vec_is_zero(v: Sequence) -> bool:
    return not any(v)


class Span:
    """Subspace of k^n kept as an RREF row basis (rows[i][pivots[i]] == 1)."""

    __slots__ = ("field", "n", "rows", "pivots")

    def __init__(self, field: FieldSpec, n: int, vectors: Iterable[Sequence] = ()):
        self.field = field
        self.n = n
        rows = [list(v) for v in vectors if any(v)]
        piv = _rref_rows(rows, n, field) if rows else []
        self.rows = rows[:len(piv)]
        self.pivots = piv

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list:
        f = self.field
        v = list(v)
        if f.kind == "Fp":
            p = f.p
            for r, pc in zip(self.rows, self.pivots):
                c = v[pc]
                if c:
                    for j, x in enumerate(r):
                        if x:
                            v[j] = (v[j] - c * x) % p
        else:
            for r, pc in zip(self.rows, self.pivots):
                c = v[pc]
                if c:
                    for j, x in enumerate(r):
                        if x:
                            v[j] = v[j] - c * x
        return v

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coords(self, v: Sequence) -> list:
        """Coordinates of a vector known to lie in the span."""
        return [v[pc] for pc in self.pivots]

    def extended(self, vectors: Iterable[Sequence]) -> "Span":
        return Span(self.field, self.n, list(self.rows) + [list(v) for v in vectors])

    def complement_indices(self) -> list[int]:
        ps = set(self.pivots)
        return [j for j in range(self.n) if j not in ps]

    def basis_matrix(self) -> Matrix:
        return Matrix.from_columns(self.field, self.rows, self.n)

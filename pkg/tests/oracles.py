"""Independent reference computations used only by the tests.

Nothing here imports the package's linear algebra: ranks and kernels come from
fraction-free (Bareiss) elimination on plain Python integers.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm


def _integer_rows(rows: list[list], p: int | None) -> list[list[int]]:
    out = []
    for r in rows:
        if p:
            out.append([int(x) % p for x in r])
        else:
            fr = [Fraction(x) for x in r]
            den = lcm(*[f.denominator for f in fr]) if fr else 1
            out.append([int(f * den) for f in fr])
    return out


def bareiss_echelon(rows: list[list], p: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Row echelon form by Bareiss elimination; returns (rows, pivot columns).

    Over GF(p) the divisions by the previous pivot are exact modular divisions.
    """
    a = _integer_rows(rows, p)
    m = len(a)
    n = len(a[0]) if a else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n):
        if r >= m:
            break
        sel = _find(a, r, m, c, p)
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                num = a[i][j] * piv - a[i][c] * a[r][j]
                if p:
                    a[i][j] = num * pow(prev, -1, p) % p
                else:
                    q, rem = divmod(num, prev)
                    assert rem == 0, "Bareiss division must be exact"
                    a[i][j] = q
            a[i][c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _find(a, r, m, c, p):
    for i in range(r, m):
        if (a[i][c] % p) if p else a[i][c]:
            return i
    return None


def rank(rows: list[list], p: int | None = None) -> int:
    if not rows or not rows[0]:
        return 0
    return len(bareiss_echelon(rows, p)[1])


def kernel_dim(rows: list[list], ncols: int, p: int | None = None) -> int:
    return ncols - rank(rows, p)


def in_kernel(rows: list[list], vec: list, p: int | None = None) -> bool:
    for r in rows:
        s = sum(Fraction(x) * Fraction(v) for x, v in zip(r, vec))
        if p:
            if int(s) % p:
                return False
        elif s:
            return False
    return True

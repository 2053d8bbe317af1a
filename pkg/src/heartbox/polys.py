"""Univariate polynomial helpers for idempotent splitting.

Polynomials are coefficient lists, lowest degree first, with entries in the
base field.  Factorisation and extended gcd are delegated to sympy.
"""
from __future__ import annotations

from typing import Sequence

from .linalg import FieldSpec, _rref_rows


def _to_sympy(coeffs: Sequence, f: FieldSpec):
    from sympy import Poly, Rational, symbols

    t = symbols("t")
    hi = list(reversed(coeffs))
    if f.kind == "Fp":
        return Poly([int(c) for c in hi], t, modulus=f.p)
    return Poly([Rational(int(c.numerator), int(c.denominator)) for c in hi], t, domain="QQ")


def _from_sympy(P, f: FieldSpec) -> list:
    hi = P.all_coeffs()
    if f.kind == "Fp":
        return [int(c) % f.p for c in reversed(hi)]
    from fractions import Fraction

    return [f.coerce(Fraction(int(c.p), int(c.q))) for c in reversed(hi)]


def minimal_polynomial(A, x: Sequence, e: Sequence) -> list:
    """Monic minimal polynomial of ``x`` inside the corner algebra with unit ``e``."""
    f = A.field
    powers = [list(e)]
    while True:
        nxt = A.product(powers[-1], x)
        powers.append(nxt)
        n = len(powers)
        # solve sum_{i<n-1} c_i x^i = -x^{n-1}
        rows = [[powers[i][k] for i in range(n)] for k in range(A.dim)]
        piv = _rref_rows(rows, n, f)
        if n - 1 in piv:
            continue
        coeffs = [f.zero] * n
        coeffs[-1] = f.one
        for r, pc in enumerate(piv):
            coeffs[pc] = f.neg(rows[r][n - 1])
        return coeffs


def factor(mu: Sequence, f: FieldSpec) -> list[tuple[list, int]]:
    """Monic irreducible factors with multiplicities, in a canonical order."""
    P = _to_sympy(mu, f)
    _, facs = P.factor_list()
    out = []
    for q, m in facs:
        c = _from_sympy(q, f)
        lead = c[-1]
        inv = f.inv(lead)
        out.append(([f.mul(inv, a) for a in c], m))
    out.sort(key=lambda qm: (len(qm[0]), [f.scalar_to_json(a) for a in qm[0]], qm[1]))
    return out


def multiply(a: Sequence, b: Sequence, f: FieldSpec) -> list:
    out = [f.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = f.add(out[i + j], f.mul(x, y))
    return out


def power(a: Sequence, n: int, f: FieldSpec) -> list:
    out = [f.one]
    for _ in range(n):
        out = multiply(out, a, f)
    return out


def evaluate(A, q: Sequence, x: Sequence, e: Sequence) -> list:
    """q(x) in the corner algebra with unit e (Horner)."""
    f = A.field
    acc = A.scale(q[-1], e)
    for c in reversed(q[:-1]):
        acc = A.add(A.product(acc, x), A.scale(c, e))
    return acc


def crt_idempotents(A, x: Sequence, e: Sequence, factors, f: FieldSpec) -> list[list]:
    """Orthogonal idempotents attached to the coprime primary factors of mu(x)."""
    from sympy import gcdex

    prim = [power(q, m, f) for q, m in factors]
    total = [f.one]
    for p in prim:
        total = multiply(total, p, f)
    out = []
    for p in prim:
        P = _to_sympy(p, f)
        cof = _to_sympy(_divide_exact(total, p, f), f)
        s, _, g = gcdex(cof, P)
        # s * cof = g (g is a nonzero constant)
        u = (s * cof).rem(_to_sympy(total, f))
        gc = _from_sympy(g, f)[0]
        coeffs = _from_sympy(u, f)
        inv = f.inv(gc)
        coeffs = [f.mul(inv, c) for c in coeffs]
        out.append(evaluate(A, coeffs or [f.zero], x, e))
    return out


def _divide_exact(a: Sequence, b: Sequence, f: FieldSpec) -> list:
    a = list(a)
    db = len(b) - 1
    inv = f.inv(b[-1])
    q = [f.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = f.mul(a[i], inv)
        q[i - db] = c
        if c:
            for j, y in enumerate(b):
                a[i - db + j] = f.sub(a[i - db + j], f.mul(c, y))
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q

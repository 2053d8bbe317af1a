"""Small constructions shared by several test files."""
from __future__ import annotations

import random

from heartbox.linalg import Matrix, inverse
from heartbox.modules import Module, direct_sum


def random_invertible(field, n: int, rng: random.Random) -> Matrix:
    while True:
        M = Matrix.from_rows(field, [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)])
        if inverse(M) is not None:
            return M


def scrambled(m: Module, rng: random.Random, name: str | None = None) -> Module:
    """The same module in a random basis."""
    if m.dim == 0:
        return m
    g = random_invertible(m.field, m.dim, rng)
    gi = inverse(g)
    return Module(m.algebra, [g @ a @ gi for a in m.action], name=name or m.name)


def random_sum(pieces: list[Module], rng: random.Random) -> Module:
    s, _, _ = direct_sum(pieces)
    return scrambled(s, rng, name="X")


def random_chain_map(x, y, rng: random.Random):
    """A random chain map ``x -> y`` (zero when there are none)."""
    from heartbox.complexes import hom_homotopy, zero_map

    H = hom_homotopy(x, y)
    if not H.chain_basis:
        return zero_map(x, y)
    F = x.field
    n = len(H.chain_basis[0])
    v = [F.zero] * n
    for b in H.chain_basis:
        c = F.coerce(rng.randrange(-2, 3))
        v = [F.add(a, F.mul(c, e)) for a, e in zip(v, b)]
    f = H.from_coords(v)
    f.validate()
    return f


def random_complex(fixture, rng: random.Random, steps: int = 2, lo: int = -2, hi: int = 0, mods=None):
    """Iterated cones of random maps between catalogue modules (or ``mods``), all terms inside ``[lo, hi]``."""
    from heartbox.complexes import concentrated, cone, shift

    mods = list(mods) if mods is not None else fixture.catalog_modules()
    x = concentrated(rng.choice(mods), rng.randint(lo, hi))
    for _ in range(steps):
        m = rng.choice(mods)
        if rng.random() < 0.5:
            # Cone(x[-1] -> y) has x^d ⊕ y^d in degree d
            y = concentrated(m, rng.randint(lo, hi))
            x = cone(random_chain_map(shift(x, -1), y, rng))
        else:
            # Cone(y -> x) puts y^{d+1} in degree d
            y = concentrated(m, rng.randint(lo, hi) + 1)
            x = cone(random_chain_map(y, x, rng))
    return x.window(lo, hi) if not x.is_zero() else x

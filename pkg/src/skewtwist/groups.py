"""Finite groups as multiplication tables, plus isomorphism search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import AxiomFails, SizeMismatch
from .tables import Perm, perm_compose

MulTable = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteGroup:
    n: int
    mul: MulTable
    e: int
    inv: Perm

    @classmethod
    def from_table(cls, mul) -> "FiniteGroup":
        """Validate a multiplication table and locate identity and inverses."""
        mul = tuple(tuple(row) for row in mul)
        n = len(mul)
        if any(len(row) != n for row in mul):
            raise SizeMismatch("multiplication table is not square")
        if any(not (0 <= v < n) for row in mul for v in row):
            raise SizeMismatch("multiplication table entry out of range")
        e = None
        for cand in range(n):
            if all(mul[cand][a] == a == mul[a][cand] for a in range(n)):
                e = cand
                break
        if e is None:
            raise AxiomFails("identity", None)
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if mul[a][b] == e and mul[b][a] == e:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise AxiomFails("inverses", a)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise AxiomFails("associativity", (a, b, c))
        return cls(n, mul, e, tuple(inv))

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def op3(self, a: int, b: int, c: int) -> int:
        return self.mul[self.mul[a][b]][c]


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup.from_table([[(a + b) % n for b in range(n)] for a in range(n)])


def klein() -> FiniteGroup:
    """Z2 x Z2 with xor multiplication."""
    return FiniteGroup.from_table([[a ^ b for b in range(4)] for a in range(4)])


def symmetric(n: int) -> FiniteGroup:
    """S_n with elements indexed by permutations of 0..n-1 in lex order."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[perm_compose(p, q)] for q in perms] for p in perms]
    return FiniteGroup.from_table(mul)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    n = g.n * h.n
    mul = [[0] * n for _ in range(n)]
    for a1 in range(g.n):
        for a2 in range(h.n):
            for b1 in range(g.n):
                for b2 in range(h.n):
                    mul[a1 * h.n + a2][b1 * h.n + b2] = g.op(a1, b1) * h.n + h.op(a2, b2)
    return FiniteGroup.from_table(mul)


def z4_radical_group() -> FiniteGroup:
    """(Z4, o) with x o y = x + y + 2xy mod 4; identity 0."""
    return FiniteGroup.from_table([[(a + b + 2 * a * b) % 4 for b in range(4)] for a in range(4)])


def enumerate_isomorphisms(
    g: FiniteGroup, h: FiniteGroup, fixed: tuple[int, int] | None = None
) -> Iterator[Perm]:
    """All group isomorphisms g -> h as image tables, lexicographically.

    Backtracks over images of 0, 1, ... in ascending candidate order,
    pruning on every product already determined by the assigned prefix.
    With fixed=(a, b), only isomorphisms sending a to b are produced.
    """
    if g.n != h.n:
        raise SizeMismatch(f"orders differ: {g.n} vs {h.n}")
    n = g.n
    img = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        for a in range(k + 1):
            for b in range(k + 1):
                c = g.mul[a][b]
                if c <= k and img[c] != h.mul[img[a]][img[b]]:
                    return False
        return True

    def extend(k: int) -> Iterator[Perm]:
        if k == n:
            yield tuple(img)
            return
        for cand in range(n):
            if used[cand]:
                continue
            if fixed is not None and k == fixed[0] and cand != fixed[1]:
                continue
            img[k] = cand
            used[cand] = True
            if consistent(k):
                yield from extend(k + 1)
            img[k] = -1
            used[cand] = False

    yield from extend(0)


def are_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    if g.n != h.n:
        return False
    return next(enumerate_isomorphisms(g, h), None) is not None

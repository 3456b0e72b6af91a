"""Braid-form Yang-Baxter solutions on finite sets and Drinfeld twists on them.

A solution is an invertible r: X^2 -> X^2 with r23 r12 r23 = r12 r23 r12.
A twist is a triple (F, Phi, Psi) of bijections satisfying

    T1:  F12 . Psi  =  F23 . Phi
    T2:  Phi . r23  =  r23 . Phi
    T3:  Psi . r12  =  r12 . Psi

and conjugating r by F produces a new solution F r F^-1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import (
    BraidFails,
    Degenerate,
    InvalidTwist,
    NonCommuting,
    NotBijective,
    ShapeMismatch,
    SizeMismatch,
    TooLarge,
)
from .tables import (
    PairMap,
    Perm,
    TripleMap,
    compose_pairmaps,
    compose_triplemaps,
    first_triple_difference,
    lift_12,
    lift_23,
    perm_compose,
    perm_inverse,
    perm_is_bijective,
)


@dataclass(frozen=True)
class YbeSolution:
    n: int
    r: PairMap
    sigma: tuple[Perm, ...]   # sigma[x][y] = first component of r(x, y)
    gamma: tuple[Perm, ...]   # gamma[y][x] = second component of r(x, y)
    involutive: bool
    nondegenerate: bool


@dataclass(frozen=True)
class TwistTriple:
    F: PairMap
    Phi: TripleMap
    Psi: TripleMap

    @classmethod
    def identity(cls, n: int) -> "TwistTriple":
        return cls(PairMap.identity(n), TripleMap.identity(n), TripleMap.identity(n))

    @property
    def n(self) -> int:
        return self.F.n

    def pair_form(self) -> tuple[PairMap, TripleMap]:
        """The (F, G) presentation with G = F12 . Psi = F23 . Phi."""
        return self.F, compose_triplemaps(lift_12(self.F), self.Psi)


@dataclass(frozen=True)
class TwistReport:
    ok: bool
    axiom: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_solution(n: int, r: PairMap) -> YbeSolution:
    """Validate the braid equation and extract the sigma/gamma tables."""
    if r.n != n:
        raise SizeMismatch(f"universe sizes differ: {r.n} vs {n}")
    if not r.is_bijective:
        raise NotBijective("r is not a bijection of X^2")
    r23 = lift_23(r)
    r12 = lift_12(r)
    lhs = compose_triplemaps(r23, compose_triplemaps(r12, r23))
    rhs = compose_triplemaps(r12, compose_triplemaps(r23, r12))
    if lhs != rhs:
        raise BraidFails(first_triple_difference(lhs, rhs))
    sigma = tuple(tuple(r(x, y)[0] for y in range(n)) for x in range(n))
    gamma = tuple(tuple(r(x, y)[1] for x in range(n)) for y in range(n))
    involutive = compose_pairmaps(r, r) == PairMap.identity(n)
    nondegenerate = all(perm_is_bijective(s) for s in sigma) and all(
        perm_is_bijective(g) for g in gamma
    )
    return YbeSolution(n, r, sigma, gamma, involutive, nondegenerate)


def _check_twist_axioms(s: YbeSolution, t: TwistTriple) -> TwistReport:
    if t.n != s.n:
        raise SizeMismatch(f"universe sizes differ: {t.n} vs {s.n}")
    for name, table in (("F-bijective", t.F), ("Phi-bijective", t.Phi), ("Psi-bijective", t.Psi)):
        if not table.is_bijective:
            return TwistReport(False, name, None)
    f12, f23 = lift_12(t.F), lift_23(t.F)
    lhs = compose_triplemaps(f12, t.Psi)
    rhs = compose_triplemaps(f23, t.Phi)
    if lhs != rhs:
        return TwistReport(False, "T1", first_triple_difference(lhs, rhs))
    r23 = lift_23(s.r)
    lhs = compose_triplemaps(t.Phi, r23)
    rhs = compose_triplemaps(r23, t.Phi)
    if lhs != rhs:
        return TwistReport(False, "T2", first_triple_difference(lhs, rhs))
    r12 = lift_12(s.r)
    lhs = compose_triplemaps(t.Psi, r12)
    rhs = compose_triplemaps(r12, t.Psi)
    if lhs != rhs:
        return TwistReport(False, "T3", first_triple_difference(lhs, rhs))
    return TwistReport(True)


def verify_twist(s: YbeSolution, t: TwistTriple) -> TwistReport:
    """Check T1, T2, T3 in order; report the first violation with a witness."""
    return _check_twist_axioms(s, t)


def apply_twist(s: YbeSolution, t: TwistTriple) -> YbeSolution:
    """The twisted solution F r F^-1, revalidated against the braid equation."""
    report = verify_twist(s, t)
    if not report:
        raise InvalidTwist(f"{report.axiom} fails at {report.witness}")
    twisted = compose_pairmaps(t.F, compose_pairmaps(s.r, t.F.inverse()))
    return check_solution(s.n, twisted)


def compose_twists(outer: TwistTriple, inner: TwistTriple, s: YbeSolution) -> TwistTriple:
    """Groupoid composition: inner twists s, outer twists the result.

    The composite is (G F, F23^-1 phi F23 Phi, F12^-1 psi F12 Psi).
    """
    inner_report = verify_twist(s, inner)
    if not inner_report:
        raise InvalidTwist(f"inner twist: {inner_report.axiom} fails at {inner_report.witness}")
    mid = apply_twist(s, inner)
    outer_report = verify_twist(mid, outer)
    if not outer_report:
        raise InvalidTwist(f"outer twist: {outer_report.axiom} fails at {outer_report.witness}")
    f12, f23 = lift_12(inner.F), lift_23(inner.F)
    f12i, f23i = f12.inverse(), f23.inverse()
    return TwistTriple(
        compose_pairmaps(outer.F, inner.F),
        compose_triplemaps(f23i, compose_triplemaps(outer.Phi, compose_triplemaps(f23, inner.Phi))),
        compose_triplemaps(f12i, compose_triplemaps(outer.Psi, compose_triplemaps(f12, inner.Psi))),
    )


def invert_twist(t: TwistTriple, s: YbeSolution) -> TwistTriple:
    """The inverse twist (F^-1, F23 Phi^-1 F23^-1, F12 Psi^-1 F12^-1) on F r F^-1."""
    report = verify_twist(s, t)
    if not report:
        raise InvalidTwist(f"{report.axiom} fails at {report.witness}")
    f12, f23 = lift_12(t.F), lift_23(t.F)
    return TwistTriple(
        t.F.inverse(),
        compose_triplemaps(f23, compose_triplemaps(t.Phi.inverse(), f23.inverse())),
        compose_triplemaps(f12, compose_triplemaps(t.Psi.inverse(), f12.inverse())),
    )


def doikou_twist(s: YbeSolution) -> TwistTriple:
    """The twist F(x,y) = (x, sigma_x(y)) that flattens the left action.

    Applied to an involutive solution it yields the flip; on any skew-brace
    braiding it yields the trivial braiding of the additive group.
    """
    if any(not perm_is_bijective(sig) for sig in s.sigma):
        bad = next(x for x, sig in enumerate(s.sigma) if not perm_is_bijective(sig))
        raise Degenerate(f"sigma_{bad} is not a bijection")
    sigma, gamma = s.sigma, s.gamma
    F = PairMap.from_callable(s.n, lambda x, y: (x, sigma[x][y]))
    Phi = TripleMap.from_callable(
        s.n, lambda x, y, z: (x, sigma[x][y], sigma[gamma[y][x]][z])
    )
    Psi = TripleMap.from_callable(s.n, lambda x, y, z: (x, y, sigma[x][sigma[y][z]]))
    return TwistTriple(F, Phi, Psi)


def lyubashenko_shape(s: YbeSolution) -> tuple[Perm, Perm]:
    """The (sigma, gamma) pair when r(x,y) = (sigma(y), gamma(x)); else ShapeMismatch."""
    sigma = s.sigma[0]
    gamma = s.gamma[0]
    if any(s.sigma[x] != sigma for x in range(s.n)):
        raise ShapeMismatch("sigma_x depends on x")
    if any(s.gamma[y] != gamma for y in range(s.n)):
        raise ShapeMismatch("gamma_y depends on y")
    return sigma, gamma


def kappa_twist(s: YbeSolution, kappa: Perm) -> TwistTriple:
    """The twist F(x,y) = (x, kappa(y)) on a solution r(x,y) = (sigma(y), gamma(x)).

    kappa must be a bijection of X commuting with both sigma and gamma.
    """
    sigma, gamma = lyubashenko_shape(s)
    if len(kappa) != s.n or not perm_is_bijective(kappa):
        raise NotBijective("kappa is not a bijection of X")
    if perm_compose(kappa, sigma) != perm_compose(sigma, kappa):
        raise NonCommuting("kappa does not commute with sigma")
    if perm_compose(kappa, gamma) != perm_compose(gamma, kappa):
        raise NonCommuting("kappa does not commute with gamma")
    F = PairMap.from_callable(s.n, lambda x, y: (x, kappa[y]))
    Phi = TripleMap.from_callable(s.n, lambda x, y, z: (x, kappa[y], kappa[z]))
    Psi = TripleMap.from_callable(s.n, lambda x, y, z: (x, y, kappa[kappa[z]]))
    return TwistTriple(F, Phi, Psi)


def conjugate_twist(t: TwistTriple, f: Perm) -> TwistTriple:
    """Transport a twist along a solution isomorphism f: conjugate every table
    by f x f (and f x f x f)."""
    n = len(f)
    fi = perm_inverse(f)
    F2 = PairMap.from_callable(n, lambda x, y: tuple(f[c] for c in t.F(fi[x], fi[y])))
    Phi2 = TripleMap.from_callable(
        n, lambda x, y, z: tuple(f[c] for c in t.Phi(fi[x], fi[y], fi[z]))
    )
    Psi2 = TripleMap.from_callable(
        n, lambda x, y, z: tuple(f[c] for c in t.Psi(fi[x], fi[y], fi[z]))
    )
    return TwistTriple(F2, Phi2, Psi2)


def brute_force_twists(s: YbeSolution) -> Iterator[TwistTriple]:
    """Exhaustive twist enumeration at n = 2.

    F ranges over the 24 bijections of X^2 and Phi over the 40320 bijections
    of X^3; Psi is forced by T1 as F12^-1 . F23 . Phi, and candidates are kept
    exactly when T2 and T3 hold.  Output order is lexicographic in (F, Phi).
    """
    if s.n != 2:
        raise TooLarge("brute-force twist enumeration is capped at n = 2")
    n = s.n
    phis = np.array(list(itertools.permutations(range(8))), dtype=np.int64)
    r12 = np.array(lift_12(s.r).table)
    r23 = np.array(lift_23(s.r).table)
    for fperm in itertools.permutations(range(4)):
        F = PairMap(n, fperm)
        f12 = np.array(lift_12(F).table)
        f23 = np.array(lift_23(F).table)
        f12_inv = np.argsort(f12)
        # composition as indexing: (f o g)[i] = f[g[i]]
        psis = f12_inv[f23[phis]]
        t2_ok = (phis[:, r23] == r23[phis]).all(axis=1)
        t3_ok = (psis[:, r12] == r12[psis]).all(axis=1)
        for row in np.nonzero(t2_ok & t3_ok)[0]:
            yield TwistTriple(
                F,
                TripleMap(n, tuple(int(v) for v in phis[row])),
                TripleMap(n, tuple(int(v) for v in psis[row])),
            )

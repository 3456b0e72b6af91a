"""Matched pairs of finite groups and the Theta-maps that induce twists.

A matched pair is (G+, G-) with a left action of G+ on the set G- (written
actL) and a right action of G- on the set G+ (written actR), compatible
with both multiplications.  A Theta-map G-^2 -> G+^2 satisfying the three
cocycle conditions induces a twist triple on G-; specialized to the pair a
skew brace defines on itself (actL = sigma, actR = gamma), Theta(x, y) =
(e, x) recovers the canonical twist onto the trivial brace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .braces import BraidedGroup, verify_brace_twist
from .errors import AxiomFails, InvalidTheta, SizeMismatch, TooLarge
from .groups import FiniteGroup
from .solutions import TwistReport, TwistTriple
from .tables import PairMap, TripleMap, perm_is_bijective

ActionTable = tuple[tuple[int, ...], ...]

DEFAULT_THETA_BUDGET = 10_000_000


@dataclass(frozen=True)
class MatchedPair:
    gplus: FiniteGroup
    gminus: FiniteGroup
    act_left: ActionTable    # act_left[g][b]  = g |> b  in G-
    act_right: ActionTable   # act_right[g][b] = g <| b  in G+


@dataclass(frozen=True)
class ThetaMap:
    nminus: int
    nplus: int
    theta1: tuple[int, ...]  # length nminus^2, values in G+
    theta2: tuple[int, ...]

    def __call__(self, a: int, b: int) -> tuple[int, int]:
        i = a * self.nminus + b
        return self.theta1[i], self.theta2[i]

    @classmethod
    def constant_identity(cls, p: MatchedPair) -> "ThetaMap":
        m, ep = p.gminus.n, p.gplus.e
        return cls(m, p.gplus.n, (ep,) * (m * m), (ep,) * (m * m))

    @classmethod
    def canonical(cls, p: MatchedPair) -> "ThetaMap":
        """Theta(x, y) = (e+, x); only meaningful when G- embeds in G+ (the
        brace pair, where the two carriers coincide)."""
        m, ep = p.gminus.n, p.gplus.e
        t1 = []
        t2 = []
        for a in range(m):
            for b in range(m):
                t1.append(ep)
                t2.append(a)
        return cls(m, p.gplus.n, tuple(t1), tuple(t2))


def check_matched_pair(
    gplus: FiniteGroup, gminus: FiniteGroup, act_left, act_right
) -> MatchedPair:
    """Validate the action and compatibility axioms; first failure wins."""
    act_left = tuple(tuple(row) for row in act_left)
    act_right = tuple(tuple(row) for row in act_right)
    np_, nm = gplus.n, gminus.n
    if len(act_left) != np_ or any(len(row) != nm for row in act_left):
        raise SizeMismatch("act_left must be |G+| x |G-|")
    if len(act_right) != np_ or any(len(row) != nm for row in act_right):
        raise SizeMismatch("act_right must be |G+| x |G-|")
    if any(not (0 <= v < nm) for row in act_left for v in row):
        raise SizeMismatch("act_left entry out of range")
    if any(not (0 <= v < np_) for row in act_right for v in row):
        raise SizeMismatch("act_right entry out of range")
    ep, em = gplus.e, gminus.e
    for b in range(nm):
        if act_left[ep][b] != b:
            raise AxiomFails("left-action-unit", b)
        if act_right[ep][b] != ep:
            raise AxiomFails("plus-unit-fixed", b)
    for g in range(np_):
        if act_left[g][em] != em:
            raise AxiomFails("minus-unit-fixed", g)
        if act_right[g][em] != g:
            raise AxiomFails("right-action-unit", g)
    for g in range(np_):
        for h in range(np_):
            for b in range(nm):
                if act_left[gplus.op(g, h)][b] != act_left[g][act_left[h][b]]:
                    raise AxiomFails("left-action-mul", (g, h, b))
                # (gh) <| b = (g <| (h |> b)) . (h <| b)
                lhs = act_right[gplus.op(g, h)][b]
                rhs = gplus.op(act_right[g][act_left[h][b]], act_right[h][b])
                if lhs != rhs:
                    raise AxiomFails("right-compat", (g, h, b))
    for g in range(np_):
        for b in range(nm):
            for c in range(nm):
                if act_right[g][gminus.op(b, c)] != act_right[act_right[g][b]][c]:
                    raise AxiomFails("right-action-mul", (g, b, c))
                # g |> (bc) = (g |> b) . ((g <| b) |> c)
                lhs = act_left[g][gminus.op(b, c)]
                rhs = gminus.op(act_left[g][b], act_left[act_right[g][b]][c])
                if lhs != rhs:
                    raise AxiomFails("left-compat", (g, b, c))
    return MatchedPair(gplus, gminus, act_left, act_right)


def pair_from_brace(b: BraidedGroup) -> MatchedPair:
    """The self-pair of a brace: both groups are (G, .), actL = sigma, actR = gamma."""
    n = b.n
    act_left = tuple(tuple(b.sigma[g][x] for x in range(n)) for g in range(n))
    act_right = tuple(tuple(b.gamma[x][g] for x in range(n)) for g in range(n))
    return check_matched_pair(b.group, b.group, act_left, act_right)


def _theta_units_ok(p: MatchedPair, theta: ThetaMap) -> tuple[bool, tuple | None]:
    em, ep = p.gminus.e, p.gplus.e
    for a in range(p.gminus.n):
        if theta(em, a)[1] != ep:
            return False, (em, a)
        if theta(a, em)[0] != ep:
            return False, (a, em)
    return True, None


def _theta_condition_failure(p: MatchedPair, theta: ThetaMap, a: int, b: int, c: int):
    """Evaluate the three cocycle conditions at (a, b, c); return the failing
    condition name or None."""
    mm, mp = p.gminus, p.gplus
    actL, actR = p.act_left, p.act_right
    g1 = theta(mm.op(a, b), c)[0]            # Theta_1(ab, c)
    g2 = theta(a, mm.op(b, c))[1]            # Theta_2(a, bc)
    A = actL[g1][a]
    B = actL[actR[g1][a]][b]
    C = actL[g2][b]
    D = actL[actR[g2][b]][c]
    if mp.op(theta(A, B)[0], g1) != theta(a, mm.op(b, c))[0]:
        return "theta-1"
    if mp.op(theta(A, B)[1], actR[g1][a]) != mp.op(theta(C, D)[0], g2):
        return "theta-2"
    if theta(mm.op(a, b), c)[1] != mp.op(theta(C, D)[1], actR[g2][b]):
        return "theta-3"
    return None


def f_theta(p: MatchedPair, theta: ThetaMap) -> PairMap:
    """F_Theta(g, h) = (Theta_1(g,h) |> g, Theta_2(g,h) |> h) on G-^2.

    Bijectivity is reported by the PairMap itself, not assumed here.
    """
    actL = p.act_left
    def fn(g, h):
        u, v = theta(g, h)
        return actL[u][g], actL[v][h]
    return PairMap.from_callable(p.gminus.n, fn)


def check_theta(p: MatchedPair, theta: ThetaMap) -> TwistReport:
    """Unit conditions, the three cocycle conditions, and F_Theta bijectivity."""
    if theta.nminus != p.gminus.n or theta.nplus != p.gplus.n:
        raise SizeMismatch("theta table does not match the pair")
    ok, witness = _theta_units_ok(p, theta)
    if not ok:
        return TwistReport(False, "theta-unit", witness)
    nm = p.gminus.n
    for a in range(nm):
        for b in range(nm):
            for c in range(nm):
                failed = _theta_condition_failure(p, theta, a, b, c)
                if failed is not None:
                    return TwistReport(False, failed, (a, b, c))
    if not f_theta(p, theta).is_bijective:
        return TwistReport(False, "f-theta-bijective", None)
    return TwistReport(True)


def triple_from_theta(p: MatchedPair, theta: ThetaMap, base: BraidedGroup) -> TwistTriple:
    """The induced twist (F_Theta, Phi_Theta, Psi_Theta) on the base brace."""
    report = check_theta(p, theta)
    if not report:
        raise InvalidTheta(f"{report.axiom} fails at {report.witness}")
    if base.n != p.gminus.n:
        raise SizeMismatch("base brace carrier must be G-")
    mm = p.gminus
    actL, actR = p.act_left, p.act_right

    def phi_fn(a, b, c):
        u, v = theta(a, mm.op(b, c))
        return actL[u][a], actL[v][b], actL[actR[v][b]][c]

    def psi_fn(a, b, c):
        u, v = theta(mm.op(a, b), c)
        return actL[u][a], actL[actR[u][a]][b], actL[v][c]

    triple = TwistTriple(
        f_theta(p, theta),
        TripleMap.from_callable(mm.n, phi_fn),
        TripleMap.from_callable(mm.n, psi_fn),
    )
    brace_report = verify_brace_twist(base, triple)
    if not brace_report:
        raise InvalidTheta(
            f"induced triple fails {brace_report.axiom} at {brace_report.witness}"
        )
    return triple


def enumerate_thetas(
    p: MatchedPair, budget: int = DEFAULT_THETA_BUDGET
) -> Iterator[ThetaMap]:
    """All Theta-maps passing check_theta, by depth-first search over entries.

    Entries Theta(a, b) are assigned in lexicographic order of (a, b) and
    candidate values in lexicographic order of the output pair, so the stream
    order is deterministic.  Partial assignments are pruned by the unit
    conditions, by injectivity of the partially built F_Theta, and by any
    cocycle-condition instance all of whose lookups already resolve.  Raises
    TooLarge once more than `budget` assignments have been attempted.
    """
    nm, np_ = p.gminus.n, p.gplus.n
    mm, mp = p.gminus, p.gplus
    actL, actR = p.act_left, p.act_right
    em, ep = mm.e, mp.e
    entries = [(a, b) for a in range(nm) for b in range(nm)]
    theta1 = [-1] * (nm * nm)
    theta2 = [-1] * (nm * nm)
    f_used: set[tuple[int, int]] = set()
    f_of: list[tuple[int, int] | None] = [None] * (nm * nm)
    attempts = 0

    def lookup(a, b):
        i = a * nm + b
        if theta1[i] < 0:
            return None
        return theta1[i], theta2[i]

    def partial_ok() -> bool:
        for a in range(nm):
            for b in range(nm):
                for c in range(nm):
                    th_ab_c = lookup(mm.op(a, b), c)
                    th_a_bc = lookup(a, mm.op(b, c))
                    if th_ab_c is None or th_a_bc is None:
                        continue
                    g1, g2 = th_ab_c[0], th_a_bc[1]
                    A = actL[g1][a]
                    B = actL[actR[g1][a]][b]
                    C = actL[g2][b]
                    D = actL[actR[g2][b]][c]
                    th_AB = lookup(A, B)
                    th_CD = lookup(C, D)
                    if th_AB is not None:
                        if mp.op(th_AB[0], g1) != th_a_bc[0]:
                            return False
                        if th_CD is not None and mp.op(th_AB[1], actR[g1][a]) != mp.op(
                            th_CD[0], g2
                        ):
                            return False
                    if th_CD is not None:
                        if th_ab_c[1] != mp.op(th_CD[1], actR[g2][b]):
                            return False
        return True

    def candidates(a, b):
        us = [ep] if b == em else range(np_)
        vs = [ep] if a == em else range(np_)
        for u in us:
            for v in vs:
                yield u, v

    def extend(k: int) -> Iterator[ThetaMap]:
        nonlocal attempts
        if k == len(entries):
            yield ThetaMap(nm, np_, tuple(theta1), tuple(theta2))
            return
        a, b = entries[k]
        i = a * nm + b
        for u, v in candidates(a, b):
            attempts += 1
            if attempts > budget:
                raise TooLarge(f"theta enumeration exceeded budget of {budget}")
            fval = (actL[u][a], actL[v][b])
            if fval in f_used:
                continue
            theta1[i], theta2[i] = u, v
            f_used.add(fval)
            f_of[i] = fval
            if partial_ok():
                yield from extend(k + 1)
            theta1[i] = theta2[i] = -1
            f_used.discard(fval)
            f_of[i] = None
        return

    for theta in extend(0):
        # Defensive full re-check; cheap relative to the search itself.
        if check_theta(p, theta):
            yield theta

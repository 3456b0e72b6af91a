"""Classification of twists between skew braces by families of additive-group
isomorphisms.

Every twist between trivial braces (G, *, *) -> (G, *', *') is of the form
F(x, y) = (f_p(x), f_p(y)) with p = x*y, for a family {f_g} of isomorphisms
(G, *) -> (G, *') satisfying f_g(g) = g.  Twists between arbitrary braces
decompose as canonical-twist conjugates of family twists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .braces import (
    BraidedGroup,
    apply_brace_twist,
    compose_brace_twists,
    invert_brace_twist,
    theta_canonical_twist,
    trivial_brace,
    verify_brace_twist,
)
from .errors import InvalidFamily, NotClassifiable, SizeMismatch
from .groups import FiniteGroup, are_isomorphic, enumerate_isomorphisms
from .solutions import TwistTriple
from .tables import PairMap, Perm, TripleMap, perm_inverse, perm_is_bijective


@dataclass(frozen=True)
class IsoFamily:
    source: FiniteGroup            # (G, *)
    target: FiniteGroup            # (G, *')
    maps: tuple[Perm, ...]         # maps[g] = image table of f_g

    @property
    def n(self) -> int:
        return self.source.n


def make_iso_family(source: FiniteGroup, target: FiniteGroup, maps) -> IsoFamily:
    """Validate that each f_g is an isomorphism source -> target fixing g."""
    maps = tuple(tuple(m) for m in maps)
    n = source.n
    if target.n != n:
        raise SizeMismatch(f"orders differ: {n} vs {target.n}")
    if source.e != target.e:
        raise InvalidFamily("source and target have different identity elements")
    if len(maps) != n:
        raise InvalidFamily(f"expected {n} maps, got {len(maps)}")
    for g, f in enumerate(maps):
        if len(f) != n or not perm_is_bijective(f):
            raise InvalidFamily(f"f_{g} is not a bijection")
        if f[g] != g:
            raise InvalidFamily(f"f_{g} does not fix {g}")
        for a in range(n):
            for b in range(n):
                if f[source.op(a, b)] != target.op(f[a], f[b]):
                    raise InvalidFamily(f"f_{g} is not a homomorphism at ({a},{b})")
        if f[source.e] != source.e:
            raise InvalidFamily(f"f_{g} moves the identity")
    return IsoFamily(source, target, maps)


def twist_from_family(fam: IsoFamily) -> TwistTriple:
    """The twist on the trivial brace of the source given by F(x,y) = (f_xy(x), f_xy(y)).

    Phi and Psi are filled in with the connecting maps
    alpha_{x,c} = f^-1_{f_xc(c)} . f_xc and beta_{c,z} = f^-1_{f_cz(c)} . f_cz,
    with all index products taken in the source group.
    """
    src = fam.source
    n = src.n
    f = fam.maps
    finv = [perm_inverse(m) for m in f]

    def F_fn(x, y):
        p = src.op(x, y)
        return f[p][x], f[p][y]

    def Phi_fn(x, y, z):
        q = src.op3(x, y, z)
        c = src.op(y, z)
        alpha = lambda t: finv[f[q][c]][f[q][t]]
        return f[q][x], alpha(y), alpha(z)

    def Psi_fn(x, y, z):
        q = src.op3(x, y, z)
        d = src.op(x, y)
        beta = lambda t: finv[f[q][d]][f[q][t]]
        return beta(x), beta(y), f[q][z]

    triple = TwistTriple(
        PairMap.from_callable(n, F_fn),
        TripleMap.from_callable(n, Phi_fn),
        TripleMap.from_callable(n, Psi_fn),
    )
    report = verify_brace_twist(trivial_brace(src), triple)
    if not report:
        raise InvalidFamily(f"family twist fails {report.axiom} at {report.witness}")
    return triple


def family_from_twist(source: FiniteGroup, target: FiniteGroup, t: TwistTriple) -> IsoFamily:
    """Extract the classifying family from a twist between trivial braces.

    f_p(z) is the first component of F(z, z^-1 * p); the extraction is
    validated and round-tripped, failure meaning t is not such a twist.
    """
    n = source.n
    if t.n != n:
        raise SizeMismatch(f"universe sizes differ: {t.n} vs {n}")
    maps = []
    for p in range(n):
        row = []
        for z in range(n):
            q = source.op(source.inv[z], p)
            row.append(t.F(z, q)[0])
        maps.append(tuple(row))
    try:
        fam = make_iso_family(source, target, maps)
    except (InvalidFamily, SizeMismatch) as exc:
        raise NotClassifiable(str(exc)) from exc
    if twist_from_family(fam) != t:
        raise NotClassifiable("extracted family does not reproduce the twist")
    return fam


def enumerate_families(src: FiniteGroup, tgt: FiniteGroup) -> Iterator[IsoFamily]:
    """Cartesian product over g of the isomorphisms src -> tgt fixing g, in lex order."""
    if src.n != tgt.n:
        raise SizeMismatch(f"orders differ: {src.n} vs {tgt.n}")
    stabilizers = [
        list(enumerate_isomorphisms(src, tgt, fixed=(g, g))) for g in range(src.n)
    ]
    if any(not stab for stab in stabilizers):
        return
    for choice in product(*stabilizers):
        yield make_iso_family(src, tgt, choice)


def count_twists(b1: BraidedGroup, b2: BraidedGroup) -> int:
    """Number of twists b1 -> b2: the product of per-element stabilizer sizes
    between the additive groups; zero iff they are non-isomorphic."""
    if b1.n != b2.n:
        return 0
    return math.prod(
        sum(1 for _ in enumerate_isomorphisms(b1.star, b2.star, fixed=(g, g)))
        for g in range(b1.n)
    )


def enumerate_brace_twists(b1: BraidedGroup, b2: BraidedGroup) -> Iterator[TwistTriple]:
    """All twists b1 -> b2, as canonical-twist conjugates of family twists."""
    if b1.n != b2.n:
        return
    theta1 = theta_canonical_twist(b1)
    theta2 = theta_canonical_twist(b2)
    theta2_inv = invert_brace_twist(theta2, b2)
    for fam in enumerate_families(b1.star, b2.star):
        family_twist = twist_from_family(fam)
        inner = compose_brace_twists(family_twist, theta1, b1)
        yield compose_brace_twists(theta2_inv, inner, b1)


def anytwist_f_matches(
    b1: BraidedGroup, b2: BraidedGroup, fam: IsoFamily, t: TwistTriple
) -> bool:
    """Check the closed form of the F-component of a decomposed twist:
    F(x, y) = (f_p(x), f_p(x)^-2 .2 p) with p = x .1 y, where .1 and .2 are
    the multiplications of b1 and b2."""
    n = b1.n
    for x in range(n):
        for y in range(n):
            p = b1.group.op(x, y)
            u = fam.maps[p][x]
            v = b2.group.op(b2.group.inv[u], p)
            if t.F(x, y) != (u, v):
                return False
    return True


def are_twist_related(b1: BraidedGroup, b2: BraidedGroup) -> bool:
    """True iff the additive groups are isomorphic, equivalently count_twists > 0."""
    return b1.n == b2.n and are_isomorphic(b1.star, b2.star)


def braces_isomorphic(b1: BraidedGroup, b2: BraidedGroup) -> bool:
    """Isomorphism of skew braces: one bijection preserving both operations."""
    if b1.n != b2.n:
        return False
    for f in enumerate_isomorphisms(b1.group, b2.group):
        if all(
            f[b1.star.op(a, b)] == b2.star.op(f[a], f[b])
            for a in range(b1.n)
            for b in range(b1.n)
        ):
            return True
    return False

"""Classification of brace twists by families of additive-group isomorphisms."""

from itertools import permutations

import pytest

from skewtwist.braces import apply_brace_twist, trivial_brace, verify_brace_twist
from skewtwist.classification import (
    anytwist_f_matches,
    are_twist_related,
    braces_isomorphic,
    count_twists,
    enumerate_brace_twists,
    enumerate_families,
    family_from_twist,
    make_iso_family,
    twist_from_family,
)
from skewtwist.errors import InvalidFamily, NotClassifiable
from skewtwist.generators import z4_brace
from skewtwist.groups import cyclic, klein, symmetric


def oracle_family_count(g, h):
    """Independent count: product over g of |{isos src->tgt fixing g}|,
    computed by filtering all bijections."""
    total = 1
    for fixed in range(g.n):
        count = 0
        for f in permutations(range(g.n)):
            if f[fixed] != fixed:
                continue
            if all(
                f[g.op(a, b)] == h.op(f[a], f[b])
                for a in range(g.n)
                for b in range(g.n)
            ):
                count += 1
        total *= count
    return total


def test_make_iso_family_validation():
    g = cyclic(3)
    ident = (0, 1, 2)
    neg = (0, 2, 1)
    make_iso_family(g, g, [ident, ident, ident])
    make_iso_family(g, g, [neg, ident, ident])  # negation fixes 0
    with pytest.raises(InvalidFamily):
        make_iso_family(g, g, [ident, neg, ident])  # negation moves 1
    with pytest.raises(InvalidFamily):
        make_iso_family(g, g, [(1, 2, 0), ident, ident])  # not a homomorphism


def test_endo_twist_counts():
    expected = {
        "Z2": (cyclic(2), 1),
        "Z3": (cyclic(3), 2),
        "Z4": (cyclic(4), 4),
        "Klein": (klein(), 48),
    }
    for g, want in expected.values():
        b = trivial_brace(g)
        assert count_twists(b, b) == want
        assert count_twists(b, b) == oracle_family_count(g, g)
        twists = list(enumerate_brace_twists(b, b))
        assert len(twists) == want
        # twists are pairwise distinct
        assert len({(t.F.table, t.Phi.table, t.Psi.table) for t in twists}) == want


def test_family_twist_roundtrip():
    g = cyclic(4)
    b = trivial_brace(g)
    for fam in enumerate_families(g, g):
        t = twist_from_family(fam)
        assert verify_brace_twist(b, t)
        back = family_from_twist(g, g, t)
        assert back.maps == fam.maps


def test_family_from_twist_rejects_non_family_twist():
    g = cyclic(3)
    with pytest.raises(NotClassifiable):
        family_from_twist(g, g, _broken_twist())


def _broken_twist():
    # a valid twist on the flip of Z3 that is NOT of family form:
    # kappa-type F(x,y) = (x, y+1) fails F(e,x) = (e, f(x)) family shape
    from skewtwist.generators import flip_solution
    from skewtwist.solutions import kappa_twist

    return kappa_twist(flip_solution(3), (1, 2, 0))


def test_z3_nontrivial_family_twist_shape():
    g = cyclic(3)
    b = trivial_brace(g)
    fams = list(enumerate_families(g, g))
    assert len(fams) == 2
    ident = tuple(range(3))
    neg = (0, 2, 1)
    assert fams[0].maps == (ident, ident, ident)
    assert fams[1].maps == (neg, ident, ident)
    t = twist_from_family(fams[1])
    # f_p applies only at p = x+y = 0, i.e. swaps the pairs (1,2) and (2,1)
    for x in range(3):
        for y in range(3):
            if (x + y) % 3 == 0 and x != 0:
                assert t.F(x, y) == (neg[x], neg[y])
            else:
                assert t.F(x, y) == (x, y)


def test_twists_map_first_brace_onto_second():
    b1 = z4_brace()
    b2 = trivial_brace(cyclic(4))
    assert are_twist_related(b1, b2)
    assert count_twists(b1, b2) == 4
    twists = list(enumerate_brace_twists(b1, b2))
    assert len(twists) == 4
    for t in twists:
        out = apply_brace_twist(b1, t)
        assert out.group.mul == b2.group.mul
        assert out.r == b2.r


def test_anytwist_f_closed_form():
    b1 = z4_brace()
    b2 = trivial_brace(cyclic(4))
    fams = list(enumerate_families(b1.star, b2.star))
    twists = list(enumerate_brace_twists(b1, b2))
    assert len(fams) == len(twists)
    for fam, t in zip(fams, twists):
        assert anytwist_f_matches(b1, b2, fam, t)


def test_unrelated_braces():
    b1 = trivial_brace(cyclic(4))
    b2 = trivial_brace(klein())
    assert not are_twist_related(b1, b2)
    assert count_twists(b1, b2) == 0
    assert list(enumerate_brace_twists(b1, b2)) == []
    assert count_twists(b1, trivial_brace(cyclic(3))) == 0


def test_braces_isomorphic():
    b = z4_brace()
    assert braces_isomorphic(b, b)
    # twist-related but not isomorphic: different multiplicative groups
    assert are_twist_related(b, trivial_brace(cyclic(4)))
    assert not braces_isomorphic(b, trivial_brace(cyclic(4)))


def test_enumeration_is_deterministic():
    g = klein()
    first = [f.maps for f in enumerate_families(g, g)]
    second = [f.maps for f in enumerate_families(g, g)]
    assert first == second
    assert first == sorted(first)

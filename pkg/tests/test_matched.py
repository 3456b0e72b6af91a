"""Matched pairs of groups, Theta-maps, and the twists they induce."""

import itertools

import pytest

from skewtwist.braces import theta_canonical_twist, trivial_brace
from skewtwist.errors import AxiomFails, InvalidTheta, TooLarge
from skewtwist.generators import z4_brace
from skewtwist.groups import cyclic, klein, symmetric
from skewtwist.matched import (
    MatchedPair,
    ThetaMap,
    check_matched_pair,
    check_theta,
    enumerate_thetas,
    f_theta,
    pair_from_brace,
    triple_from_theta,
)
from skewtwist.solutions import TwistTriple
from skewtwist.tables import PairMap


def test_pair_from_brace_is_valid():
    for b in (z4_brace(), trivial_brace(symmetric(3)), trivial_brace(klein())):
        p = pair_from_brace(b)
        assert p.gplus.mul == b.group.mul
        assert p.gminus.mul == b.group.mul


def test_check_matched_pair_rejects_broken_actions():
    b = trivial_brace(cyclic(3))
    p = pair_from_brace(b)
    # corrupt the left action unit row
    rows = [list(r) for r in p.act_left]
    rows[0] = [1, 0, 2]
    with pytest.raises(AxiomFails) as exc:
        check_matched_pair(p.gplus, p.gminus, rows, p.act_right)
    assert exc.value.axiom == "left-action-unit"
    # corrupt compatibility away from the unit rows
    rows = [list(r) for r in p.act_left]
    if p.gplus.n > 2:
        rows[1] = [rows[1][0], rows[1][2], rows[1][1]]
        with pytest.raises(AxiomFails):
            check_matched_pair(p.gplus, p.gminus, rows, p.act_right)


def test_canonical_theta_matches_canonical_twist():
    for b in (z4_brace(), trivial_brace(symmetric(3)), trivial_brace(cyclic(4))):
        p = pair_from_brace(b)
        theta = ThetaMap.canonical(p)
        assert check_theta(p, theta)
        triple = triple_from_theta(p, theta, b)
        assert triple == theta_canonical_twist(b)


def test_constant_identity_theta_is_identity_twist():
    for b in (z4_brace(), trivial_brace(symmetric(3))):
        p = pair_from_brace(b)
        theta = ThetaMap.constant_identity(p)
        assert check_theta(p, theta)
        assert triple_from_theta(p, theta, b) == TwistTriple.identity(b.n)


def test_check_theta_unit_violation():
    b = trivial_brace(cyclic(3))
    p = pair_from_brace(b)
    # Theta(e, a) second component must be e
    t1 = [0] * 9
    t2 = [1] * 9
    report = check_theta(p, ThetaMap(3, 3, tuple(t1), tuple(t2)))
    assert not report
    assert report.axiom == "theta-unit"


def test_theta_first_projection_fails_on_nonabelian_pair():
    # Theta(x, y) = (x, e) violates the unit condition Theta_1(a, e) = e
    b = trivial_brace(symmetric(3))
    p = pair_from_brace(b)
    t1 = tuple(a for a in range(6) for _ in range(6))
    t2 = (0,) * 36
    report = check_theta(p, ThetaMap(6, 6, t1, t2))
    assert not report
    assert report.axiom is not None


def test_theta_stream_membership_z2():
    p = pair_from_brace(trivial_brace(cyclic(2)))
    got = {(t.theta1, t.theta2) for t in enumerate_thetas(p)}
    constant = ThetaMap.constant_identity(p)
    canonical = ThetaMap.canonical(p)
    assert (constant.theta1, constant.theta2) in got
    assert (canonical.theta1, canonical.theta2) in got


def test_triple_from_theta_rejects_invalid():
    b = trivial_brace(cyclic(3))
    p = pair_from_brace(b)
    bad = ThetaMap(3, 3, (0,) * 9, (1, 0, 0, 0, 0, 0, 0, 0, 0))
    with pytest.raises(InvalidTheta):
        triple_from_theta(p, bad, b)


def oracle_enumerate_thetas(p):
    """Independent oracle: filter every possible Theta table via check_theta.

    Only feasible for |G-| = |G+| = 2 (4^4 = 256 candidates).
    """
    nm, np_ = p.gminus.n, p.gplus.n
    cells = nm * nm
    out = []
    for t1 in itertools.product(range(np_), repeat=cells):
        for t2 in itertools.product(range(np_), repeat=cells):
            theta = ThetaMap(nm, np_, t1, t2)
            if check_theta(p, theta):
                out.append((t1, t2))
    return sorted(out)


def test_enumerate_thetas_matches_oracle_z2():
    p = pair_from_brace(trivial_brace(cyclic(2)))
    got = sorted((t.theta1, t.theta2) for t in enumerate_thetas(p))
    assert got == oracle_enumerate_thetas(p)
    assert len(got) == 4  # derived from the oracle above


def test_enumerate_thetas_z4_all_f_identity():
    p = pair_from_brace(trivial_brace(cyclic(4)))
    thetas = list(enumerate_thetas(p))
    assert len(thetas) == 256  # derived: confirmed by the full validity re-check
    ident = PairMap.identity(4)
    for theta in thetas:
        assert check_theta(p, theta)
        assert f_theta(p, theta) == ident


def test_enumerate_thetas_budget():
    p = pair_from_brace(trivial_brace(cyclic(4)))
    with pytest.raises(TooLarge):
        list(enumerate_thetas(p, budget=10))


def test_theta_stream_is_deterministic():
    p = pair_from_brace(trivial_brace(cyclic(2)))
    first = [(t.theta1, t.theta2) for t in enumerate_thetas(p)]
    second = [(t.theta1, t.theta2) for t in enumerate_thetas(p)]
    assert first == second

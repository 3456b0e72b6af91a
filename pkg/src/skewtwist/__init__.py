"""Finite set-theoretic Yang-Baxter solutions, skew braces, and their twists.

The package represents everything with explicit lookup tables: permutations
of {0..n-1}, maps on pairs/triples encoded row-major, finite groups as
multiplication tables.  It verifies the braid equation and twist axioms,
applies and composes twists, classifies twists between skew braces by
families of additive isomorphisms, and searches matched-pair cocycle maps.
"""

from .errors import (
    AxiomFails,
    BadParams,
    BraidFails,
    Degenerate,
    DocumentError,
    InvalidFamily,
    InvalidTheta,
    InvalidTwist,
    NonCommuting,
    NotABrace,
    NotBijective,
    NotClassifiable,
    ShapeMismatch,
    SizeMismatch,
    SkewtwistError,
    TooLarge,
    UnknownGenerator,
)
from .tables import PairMap, TripleMap
from .groups import FiniteGroup, cyclic, klein, symmetric, z4_radical_group
from .solutions import (
    TwistReport,
    TwistTriple,
    YbeSolution,
    apply_twist,
    brute_force_twists,
    check_solution,
    compose_twists,
    conjugate_twist,
    doikou_twist,
    invert_twist,
    kappa_twist,
    verify_twist,
)
from .braces import (
    BraidedGroup,
    apply_brace_twist,
    braiding_from_brace,
    check_braided_group,
    compose_brace_twists,
    invert_brace_twist,
    phi_reconstruct,
    theta_canonical_twist,
    trivial_brace,
    verify_brace_twist,
)
from .classification import (
    IsoFamily,
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
from .matched import (
    MatchedPair,
    ThetaMap,
    check_matched_pair,
    check_theta,
    enumerate_thetas,
    f_theta,
    pair_from_brace,
    triple_from_theta,
)
from .generators import (
    flip_solution,
    gen,
    lyubashenko_solution,
    parse_cycles,
    s4_solution,
    z4_brace,
)

__all__ = [
    "AxiomFails",
    "BadParams",
    "BraidFails",
    "BraidedGroup",
    "Degenerate",
    "DocumentError",
    "FiniteGroup",
    "InvalidFamily",
    "InvalidTheta",
    "InvalidTwist",
    "IsoFamily",
    "MatchedPair",
    "NonCommuting",
    "NotABrace",
    "NotBijective",
    "NotClassifiable",
    "PairMap",
    "ShapeMismatch",
    "SizeMismatch",
    "SkewtwistError",
    "ThetaMap",
    "TooLarge",
    "TripleMap",
    "TwistReport",
    "TwistTriple",
    "UnknownGenerator",
    "YbeSolution",
    "anytwist_f_matches",
    "apply_brace_twist",
    "apply_twist",
    "are_twist_related",
    "braces_isomorphic",
    "braiding_from_brace",
    "brute_force_twists",
    "check_braided_group",
    "check_matched_pair",
    "check_solution",
    "check_theta",
    "compose_brace_twists",
    "compose_twists",
    "conjugate_twist",
    "count_twists",
    "cyclic",
    "doikou_twist",
    "enumerate_brace_twists",
    "enumerate_families",
    "enumerate_thetas",
    "f_theta",
    "family_from_twist",
    "flip_solution",
    "gen",
    "invert_brace_twist",
    "invert_twist",
    "kappa_twist",
    "klein",
    "lyubashenko_solution",
    "make_iso_family",
    "pair_from_brace",
    "parse_cycles",
    "phi_reconstruct",
    "s4_solution",
    "symmetric",
    "theta_canonical_twist",
    "triple_from_theta",
    "trivial_brace",
    "twist_from_family",
    "verify_brace_twist",
    "verify_twist",
    "z4_brace",
    "z4_radical_group",
]

__version__ = "0.1.0"

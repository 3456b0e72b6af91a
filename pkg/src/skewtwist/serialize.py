"""JSON document encoding/decoding for every structure the CLI handles.

Documents are plain dicts with a "kind" discriminator; elements are
integers, pair tables are row-major lists of [a, b], triple tables
row-major lists of [a, b, c].  Serialization is canonical: sorted keys, no
whitespace, one trailing newline, so round trips are byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from .braces import BraidedGroup, check_braided_group
from .classification import IsoFamily, make_iso_family
from .errors import DocumentError
from .groups import FiniteGroup
from .matched import MatchedPair, ThetaMap, check_matched_pair
from .solutions import TwistTriple, YbeSolution, check_solution
from .tables import PairMap, TripleMap


def canonical_dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _with_meta(doc: dict, name: str | None, notes: str | None) -> dict:
    meta = {}
    if name is not None:
        meta["name"] = name
    if notes is not None:
        meta["notes"] = notes
    if meta:
        doc["meta"] = meta
    return doc


def _pair_table(pm: PairMap) -> list[list[int]]:
    return [list(divmod(v, pm.n)) for v in pm.table]


def _triple_table(tm: TripleMap) -> list[list[int]]:
    out = []
    for v in tm.table:
        ab, c = divmod(v, tm.n)
        a, b = divmod(ab, tm.n)
        out.append([a, b, c])
    return out


def _read_pair_table(n: int, rows: Any) -> PairMap:
    if not isinstance(rows, list) or len(rows) != n * n:
        raise DocumentError(f"pair table must have {n * n} rows")
    table = []
    for row in rows:
        if not isinstance(row, list) or len(row) != 2:
            raise DocumentError("pair table rows must be [a, b]")
        a, b = row
        if not all(isinstance(v, int) and 0 <= v < n for v in (a, b)):
            raise DocumentError("pair table entry out of range")
        table.append(a * n + b)
    return PairMap(n, tuple(table))


def _read_triple_table(n: int, rows: Any) -> TripleMap:
    if not isinstance(rows, list) or len(rows) != n ** 3:
        raise DocumentError(f"triple table must have {n ** 3} rows")
    table = []
    for row in rows:
        if not isinstance(row, list) or len(row) != 3:
            raise DocumentError("triple table rows must be [a, b, c]")
        a, b, c = row
        if not all(isinstance(v, int) and 0 <= v < n for v in (a, b, c)):
            raise DocumentError("triple table entry out of range")
        table.append((a * n + b) * n + c)
    return TripleMap(n, tuple(table))


def _read_rows(n: int, m: int, rows: Any, bound: int, what: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(rows, list) or len(rows) != n:
        raise DocumentError(f"{what} must have {n} rows")
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != m:
            raise DocumentError(f"{what} rows must have {m} entries")
        if not all(isinstance(v, int) and 0 <= v < bound for v in row):
            raise DocumentError(f"{what} entry out of range")
        out.append(tuple(row))
    return tuple(out)


def _read_n(doc: dict, key: str = "n") -> int:
    n = doc.get(key)
    if not isinstance(n, int) or n < 1:
        raise DocumentError(f"missing or invalid {key!r}")
    return n


def solution_to_doc(sol: YbeSolution, name: str | None = None, notes: str | None = None) -> dict:
    return _with_meta({"kind": "solution", "n": sol.n, "r": _pair_table(sol.r)}, name, notes)


def group_to_doc(g: FiniteGroup, name: str | None = None, notes: str | None = None) -> dict:
    return _with_meta({"kind": "group", "n": g.n, "mul": [list(row) for row in g.mul]}, name, notes)


def brace_to_doc(b: BraidedGroup, name: str | None = None, notes: str | None = None) -> dict:
    return _with_meta(
        {
            "kind": "brace",
            "n": b.n,
            "mul": [list(row) for row in b.group.mul],
            "r": _pair_table(b.r),
        },
        name,
        notes,
    )


def twist_to_doc(t: TwistTriple, name: str | None = None, notes: str | None = None) -> dict:
    return _with_meta(
        {
            "kind": "twist",
            "n": t.n,
            "f": _pair_table(t.F),
            "phi": _triple_table(t.Phi),
            "psi": _triple_table(t.Psi),
        },
        name,
        notes,
    )


def family_to_doc(fam: IsoFamily, name: str | None = None, notes: str | None = None) -> dict:
    return _with_meta(
        {
            "kind": "family",
            "n": fam.n,
            "source": [list(row) for row in fam.source.mul],
            "target": [list(row) for row in fam.target.mul],
            "maps": [list(m) for m in fam.maps],
        },
        name,
        notes,
    )


def matched_pair_to_doc(p: MatchedPair, name: str | None = None, notes: str | None = None) -> dict:
    return _with_meta(
        {
            "kind": "matched-pair",
            "nplus": p.gplus.n,
            "nminus": p.gminus.n,
            "gplus": [list(row) for row in p.gplus.mul],
            "gminus": [list(row) for row in p.gminus.mul],
            "actl": [list(row) for row in p.act_left],
            "actr": [list(row) for row in p.act_right],
        },
        name,
        notes,
    )


def theta_to_doc(theta: ThetaMap, name: str | None = None, notes: str | None = None) -> dict:
    rows = [
        [theta.theta1[i], theta.theta2[i]] for i in range(theta.nminus * theta.nminus)
    ]
    return _with_meta(
        {"kind": "theta", "nminus": theta.nminus, "nplus": theta.nplus, "theta": rows},
        name,
        notes,
    )


def doc_to_solution(doc: dict) -> YbeSolution:
    n = _read_n(doc)
    return check_solution(n, _read_pair_table(n, doc.get("r")))


def doc_to_group(doc: dict) -> FiniteGroup:
    n = _read_n(doc)
    rows = _read_rows(n, n, doc.get("mul"), n, "mul")
    return FiniteGroup.from_table(rows)


def doc_to_brace(doc: dict) -> BraidedGroup:
    n = _read_n(doc)
    group = FiniteGroup.from_table(_read_rows(n, n, doc.get("mul"), n, "mul"))
    return check_braided_group(group, _read_pair_table(n, doc.get("r")))


def doc_to_twist(doc: dict) -> TwistTriple:
    n = _read_n(doc)
    return TwistTriple(
        _read_pair_table(n, doc.get("f")),
        _read_triple_table(n, doc.get("phi")),
        _read_triple_table(n, doc.get("psi")),
    )


def doc_to_family(doc: dict) -> IsoFamily:
    n = _read_n(doc)
    source = FiniteGroup.from_table(_read_rows(n, n, doc.get("source"), n, "source"))
    target = FiniteGroup.from_table(_read_rows(n, n, doc.get("target"), n, "target"))
    maps = _read_rows(n, n, doc.get("maps"), n, "maps")
    return make_iso_family(source, target, maps)


def doc_to_matched_pair(doc: dict) -> MatchedPair:
    np_ = _read_n(doc, "nplus")
    nm = _read_n(doc, "nminus")
    gplus = FiniteGroup.from_table(_read_rows(np_, np_, doc.get("gplus"), np_, "gplus"))
    gminus = FiniteGroup.from_table(_read_rows(nm, nm, doc.get("gminus"), nm, "gminus"))
    actl = _read_rows(np_, nm, doc.get("actl"), nm, "actl")
    actr = _read_rows(np_, nm, doc.get("actr"), np_, "actr")
    return check_matched_pair(gplus, gminus, actl, actr)


def doc_to_theta(doc: dict) -> ThetaMap:
    nm = _read_n(doc, "nminus")
    np_ = _read_n(doc, "nplus")
    rows = doc.get("theta")
    if not isinstance(rows, list) or len(rows) != nm * nm:
        raise DocumentError(f"theta table must have {nm * nm} rows")
    t1, t2 = [], []
    for row in rows:
        if not isinstance(row, list) or len(row) != 2:
            raise DocumentError("theta rows must be [u, v]")
        u, v = row
        if not all(isinstance(x, int) and 0 <= x < np_ for x in (u, v)):
            raise DocumentError("theta entry out of range")
        t1.append(u)
        t2.append(v)
    return ThetaMap(nm, np_, tuple(t1), tuple(t2))


_LOADERS = {
    "solution": doc_to_solution,
    "group": doc_to_group,
    "brace": doc_to_brace,
    "twist": doc_to_twist,
    "family": doc_to_family,
    "matched-pair": doc_to_matched_pair,
    "theta": doc_to_theta,
}


def load_document(doc: dict):
    """Dispatch on 'kind'; the payload is validated by its module's checker."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    kind = doc.get("kind")
    if kind == "report":
        return doc
    loader = _LOADERS.get(kind)
    if loader is None:
        raise DocumentError(f"unknown document kind: {kind!r}")
    return loader(doc)


def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    return doc

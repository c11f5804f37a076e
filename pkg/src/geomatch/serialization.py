"""JSON encodings for point sets, families and packing results.

Field order is fixed and only integers and strings appear, so equal values
always encode to identical bytes.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .configurations import RPositionCertificate
from .geometry import Config, Edge, Line, Point, PointSet
from .matching import Matching, MatchingFamily


class FormatError(ValueError):
    """A JSON document does not follow the expected schema."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def digest(text: str | bytes) -> str:
    data = text.encode() if isinstance(text, str) else text
    return hashlib.sha256(data).hexdigest()


def _need(d: dict, key: str, kind: type | tuple[type, ...]) -> Any:
    if key not in d:
        raise FormatError(f"missing field {key!r}")
    v = d[key]
    if not isinstance(v, kind) or isinstance(v, bool):
        raise FormatError(f"field {key!r} has the wrong type")
    return v


def _int_pair(v: Any, what: str) -> tuple[int, int]:
    if not isinstance(v, list) or len(v) != 2 or not all(isinstance(t, int) and not isinstance(t, bool) for t in v):
        raise FormatError(f"{what} must be a pair of integers, got {v!r}")
    return v[0], v[1]


# -- point sets -----------------------------------------------------------------


def pointset_to_json(ps: PointSet, cert: RPositionCertificate | None = None) -> dict:
    out: dict[str, Any] = {"config": ps.config.value, "n2": ps.size, "points": [[p.x, p.y] for p in ps.points]}
    if ps.center is not None:
        out["center_index"] = ps.center
    out["labels"] = list(ps.labels)
    if cert is not None:
        out["certificate"] = {
            "lines": [[ln.a, ln.b, ln.c] for ln in cert.lines],
            "region_assignment": list(cert.region_assignment),
        }
    return out


def pointset_from_json(d: Any) -> tuple[PointSet, RPositionCertificate | None]:
    if not isinstance(d, dict):
        raise FormatError("point set document must be an object")
    try:
        config = Config(_need(d, "config", str))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    pts = [_int_pair(p, "point") for p in _need(d, "points", list)]
    if _need(d, "n2", int) != len(pts):
        raise FormatError("n2 does not match the number of points")
    center = d.get("center_index")
    labels = d.get("labels", [])
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise FormatError("labels must be a list of strings")
    try:
        ps = PointSet(tuple(Point(x, y) for x, y in pts), config, tuple(labels), center)
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from None
    cert = None
    if "certificate" in d:
        c = d["certificate"]
        if not isinstance(c, dict):
            raise FormatError("certificate must be an object")
        try:
            lines = []
            for ln in _need(c, "lines", list):
                if not isinstance(ln, list) or len(ln) != 3 or not all(isinstance(t, int) for t in ln):
                    raise FormatError("certificate lines are [a, b, c] integer triples")
                lines.append(Line.make(*ln))
            assign = _need(c, "region_assignment", list)
            cert = RPositionCertificate(tuple(lines), tuple(int(a) for a in assign))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return ps, cert


# -- families -------------------------------------------------------------------


def _edges_json(edges) -> list[list[int]]:
    return [[e.a, e.b] for e in sorted(edges)]


def family_to_json(f: MatchingFamily) -> dict:
    return {
        "method": f.method,
        "matchings": [_edges_json(m.edges) for m in f.matchings],
        "stones": _edges_json(f.stones),
        "params": dict(f.params),
        "block_tree": [dict(r) for r in f.block_tree],
    }


def family_from_json(d: Any) -> MatchingFamily:
    if not isinstance(d, dict):
        raise FormatError("family document must be an object")
    method = _need(d, "method", str)
    raw = _need(d, "matchings", list)
    try:
        stones = {Edge.of(*_int_pair(s, "stone")) for s in d.get("stones", [])}
    except (TypeError, ValueError) as exc:
        raise FormatError(f"stones: {exc}") from None
    ms = []
    for i, edges in enumerate(raw):
        if not isinstance(edges, list):
            raise FormatError(f"matching {i} must be a list of pairs")
        try:
            es = [Edge.of(*_int_pair(e, "edge")) for e in edges]
        except ValueError as exc:
            raise FormatError(f"matching {i}: {exc}") from None
        if len(set(es)) != len(es):
            raise FormatError(f"matching {i} lists an edge twice")
        ms.append(Matching(frozenset(es), frozenset(stones & set(es))))
    placed = set().union(*(m.stones for m in ms)) if ms else set()
    if placed != stones:
        raise FormatError(f"stones {sorted(map(tuple, stones - placed))} belong to no matching")
    params = d.get("params", {})
    tree = d.get("block_tree", [])
    if not isinstance(params, dict) or not isinstance(tree, list):
        raise FormatError("params must be an object and block_tree a list")
    return MatchingFamily(tuple(ms), method, params, tuple(tree))


def packing_to_json(result) -> dict:
    return {
        "constraint": result.constraint.value,
        "max_size": result.max_size,
        "exhaustive": result.exhaustive,
        "ncpm_count": result.ncpm_count,
        "witness_families": [family_to_json(f) for f in result.witness_families],
    }


# -- files ----------------------------------------------------------------------


def load_json_file(path: str) -> tuple[Any, str]:
    """Parsed document and sha256 of the raw bytes."""
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        return json.loads(raw), digest(raw)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from None


def write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)

"""JSON instance files.

Rationals are strings (``"3"``, ``"3/4"``) and ``"inf"`` is the only extended
value, so no floating point ever enters a file. Layout::

    {
      "carrier":    {"size": 3, "labels": ["a", "b", "c"]},
      "index":      {"size": 2, "labels": ["alpha", "beta"], "leq": [[0, 1]]},
      "distances":  [[["0", "1", "2"], ...], ...],     # one matrix per index
      "objective":  ["3", "1", "0"],
      "scaling":    ["1", "2"],                         # optional
      "start":      0,                                  # optional
      "relation":   [[0, 1], [1, 2]],                   # optional
      "entourages": [[[0, 0], [1, 1]], ...]             # optional
    }

``index.leq`` lists the non-reflexive pairs ``i <= j``; reflexive pairs are
implied. Only ``carrier`` is mandatory.
"""
import json
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError
from .order_core import Carrier, Objective, Relation
from .pseudometric import IndexPoset, PseudometricFamily, ScalingMap
from .rational import format_ext, parse_ext
from .structures import EntourageSystem
from .variational import VariationalInstance


@dataclass(frozen=True)
class InstanceFile:
    carrier: Carrier
    family: Optional[PseudometricFamily] = None
    objective: Optional[Objective] = None
    scaling: Optional[ScalingMap] = None
    start: Optional[int] = None
    relation: Optional[Relation] = None
    entourages: Optional[EntourageSystem] = None

    def variational(self, start=None) -> VariationalInstance:
        if self.family is None or self.objective is None:
            raise ParseError("instance needs distances and an objective", field="distances")
        u = start if start is not None else (self.start or 0)
        return VariationalInstance(self.family, self.objective, self.scaling, u)

    @classmethod
    def from_variational(cls, inst: VariationalInstance):
        return cls(inst.family.carrier, inst.family, inst.objective, inst.scaling, inst.start)


def _rational(value, where):
    if not isinstance(value, str):
        raise ParseError(f"expected a rational string, got {value!r}", field=where)
    try:
        return parse_ext(value)
    except ValueError as exc:
        raise ParseError(str(exc), field=where) from None


def _int(value, where, lo=None, hi=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"expected an integer, got {value!r}", field=where)
    if (lo is not None and value < lo) or (hi is not None and value >= hi):
        raise ParseError(f"integer {value} out of range", field=where)
    return value


def _pairs(value, where, n):
    if not isinstance(value, list):
        raise ParseError("expected a list of pairs", field=where)
    out = []
    for i, p in enumerate(value):
        if not isinstance(p, list) or len(p) != 2:
            raise ParseError("expected a pair [x, y]", field=f"{where}[{i}]")
        out.append((_int(p[0], f"{where}[{i}][0]", 0, n), _int(p[1], f"{where}[{i}][1]", 0, n)))
    return out


def from_dict(doc) -> InstanceFile:
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    unknown = set(doc) - {"carrier", "index", "distances", "objective", "scaling", "start",
                          "relation", "entourages"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}", field=sorted(unknown)[0])
    c = doc.get("carrier")
    if not isinstance(c, dict):
        raise ParseError("missing carrier", field="carrier")
    n = _int(c.get("size"), "carrier.size", 1)
    labels = c.get("labels")
    try:
        carrier = Carrier(n, labels)
    except ValueError as exc:
        raise ParseError(str(exc), field="carrier.labels") from None

    family = None
    if "distances" in doc:
        mats = doc["distances"]
        if not isinstance(mats, list) or not mats:
            raise ParseError("expected a nonempty list of matrices", field="distances")
        idx_doc = doc.get("index", {"size": len(mats), "leq": []})
        if not isinstance(idx_doc, dict):
            raise ParseError("expected an object", field="index")
        k = _int(idx_doc.get("size"), "index.size", 1)
        if k != len(mats):
            raise ParseError(f"index size {k} but {len(mats)} matrices", field="index.size")
        leq = _pairs(idx_doc.get("leq", []), "index.leq", k)
        try:
            index = IndexPoset.from_pairs(k, leq, idx_doc.get("labels"))
        except ValueError as exc:
            raise ParseError(str(exc), field="index") from None
        dist = []
        for lam, m in enumerate(mats):
            where = f"distances[{lam}]"
            if not isinstance(m, list) or len(m) != n:
                raise ParseError(f"expected {n} rows", field=where)
            rows = []
            for x, row in enumerate(m):
                if not isinstance(row, list) or len(row) != n:
                    raise ParseError(f"expected {n} entries", field=f"{where}[{x}]")
                rows.append(tuple(_rational(v, f"{where}[{x}][{y}]") for y, v in enumerate(row)))
            dist.append(tuple(rows))
        try:
            family = PseudometricFamily(carrier, index, tuple(dist))
        except ValueError as exc:
            raise ParseError(str(exc), field="distances") from None

    objective = None
    if "objective" in doc:
        vals = doc["objective"]
        if not isinstance(vals, list) or len(vals) != n:
            raise ParseError(f"expected {n} values", field="objective")
        try:
            objective = Objective(tuple(_rational(v, f"objective[{i}]") for i, v in enumerate(vals)))
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), field="objective") from None

    scaling = None
    if "scaling" in doc:
        vals = doc["scaling"]
        if not isinstance(vals, list):
            raise ParseError("expected a list", field="scaling")
        scaling = ScalingMap(tuple(_rational(v, f"scaling[{i}]") for i, v in enumerate(vals)))

    start = _int(doc["start"], "start", 0, n) if "start" in doc else None
    relation = Relation.from_pairs(carrier, _pairs(doc["relation"], "relation", n)) if "relation" in doc else None

    entourages = None
    if "entourages" in doc:
        ms = doc["entourages"]
        if not isinstance(ms, list) or not ms:
            raise ParseError("expected a nonempty list", field="entourages")
        entourages = EntourageSystem(carrier, tuple(
            frozenset(_pairs(m, f"entourages[{i}]", n)) for i, m in enumerate(ms)))

    return InstanceFile(carrier, family, objective, scaling, start, relation, entourages)


def to_dict(inst: InstanceFile) -> dict:
    doc = {"carrier": {"size": inst.carrier.size}}
    if inst.carrier.labels:
        doc["carrier"]["labels"] = list(inst.carrier.labels)
    if inst.family is not None:
        idx = inst.family.index
        idx_doc = {"size": idx.size}
        if idx.labels:
            idx_doc["labels"] = list(idx.labels)
        idx_doc["leq"] = [[i, j] for i in range(idx.size) for j in range(idx.size)
                          if i != j and idx.leq[i][j]]
        doc["index"] = idx_doc
        doc["distances"] = [[[format_ext(v) for v in row] for row in m] for m in inst.family.dist]
    if inst.objective is not None:
        doc["objective"] = [format_ext(v) for v in inst.objective]
    if inst.scaling is not None:
        doc["scaling"] = [format_ext(v) for v in inst.scaling.h]
    if inst.start is not None:
        doc["start"] = inst.start
    if inst.relation is not None:
        doc["relation"] = [list(p) for p in inst.relation.pairs()]
    if inst.entourages is not None:
        doc["entourages"] = [[list(p) for p in sorted(m)] for m in inst.entourages.members]
    return doc


def loads(text) -> InstanceFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    return from_dict(doc)


def dumps(inst: InstanceFile) -> str:
    return json.dumps(to_dict(inst), indent=2) + "\n"


def load(path) -> InstanceFile:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(inst: InstanceFile, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(inst))

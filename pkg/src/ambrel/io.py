"""JSON serialization for every value type, with canonical ordering.

Subsets serialize as label arrays in point order; families as subset
arrays sorted by mask; pair and grade lists sorted likewise.  Canonical
output means running any operation twice over its own output is a
fixpoint, and fixed seeds give byte-identical files.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from . import crisp, fuzzy
from .capacity import LCapacity, validate_capacity
from .crisp import CrispAmbRep
from .errors import MalformedInput
from .fuzzy import LFuzzyAmbRep
from .hyperspace import FiniteSpace, members
from .hyperencoding import TernaryHyperRelation
from .lattice import FiniteLattice, TNormTable, validate_lattice, validate_tnorm


# -- primitives ----------------------------------------------------------------


def space_payload(space: FiniteSpace) -> list[str]:
    return list(space.points)


def space_from(payload) -> FiniteSpace:
    if not isinstance(payload, list) or not all(isinstance(p, str) for p in payload):
        raise MalformedInput("a space is a list of point labels")
    return FiniteSpace(tuple(payload))


def subset_payload(space: FiniteSpace, mask: int) -> list[str]:
    return list(space.labels(mask))


def subset_from(space: FiniteSpace, payload) -> int:
    if not isinstance(payload, list):
        raise MalformedInput("a subset is a list of point labels")
    try:
        return space.subset(payload)
    except KeyError as e:
        raise MalformedInput(str(e)) from None


def family_payload(space: FiniteSpace, family: int) -> list[list[str]]:
    return [subset_payload(space, s) for s in members(family)]


# -- lattices --------------------------------------------------------------------


def lattice_payload(lat: FiniteLattice, tnorm: TNormTable | None = None) -> dict:
    payload: dict[str, Any] = {
        "elements": list(lat.elements),
        "leq": [[bool(lat.leq[i, j]) for j in range(lat.size)] for i in range(lat.size)],
    }
    payload["tnorm"] = (
        None
        if tnorm is None
        else [[lat.elements[int(tnorm.table[i, j])] for j in range(lat.size)] for i in range(lat.size)]
    )
    return payload


def lattice_from(payload) -> tuple[FiniteLattice, TNormTable | None]:
    if not isinstance(payload, dict) or "elements" not in payload or "leq" not in payload:
        raise MalformedInput("a lattice needs 'elements' and 'leq'")
    lat = validate_lattice(payload["elements"], payload["leq"])
    tn = None
    if payload.get("tnorm") is not None:
        rows = payload["tnorm"]
        try:
            table = [[lat.index(x) for x in row] for row in rows]
        except (KeyError, TypeError) as e:
            raise MalformedInput(f"bad tnorm table: {e}") from None
        tn = validate_tnorm(lat, table)
    return lat, tn


# -- crisp representations ---------------------------------------------------------


def crisp_rep_payload(rep: CrispAmbRep) -> dict:
    return {
        "source": space_payload(rep.source),
        "target": space_payload(rep.target),
        "pairs": [
            [subset_payload(rep.source, a), subset_payload(rep.target, b)]
            for a, b in rep.pairs()
        ],
    }


def crisp_rep_from(payload) -> CrispAmbRep:
    if not isinstance(payload, dict) or not {"source", "target", "pairs"} <= payload.keys():
        raise MalformedInput("a representation needs 'source', 'target' and 'pairs'")
    source = space_from(payload["source"])
    target = space_from(payload["target"])
    try:
        pairs = [
            (subset_from(source, a), subset_from(target, b)) for a, b in payload["pairs"]
        ]
    except (TypeError, ValueError) as e:
        raise MalformedInput(f"bad pair list: {e}") from None
    if payload.get("seed"):
        return crisp.from_seed(source, target, pairs)
    return crisp.validate(source, target, pairs)


# -- graded representations ----------------------------------------------------------


def fuzzy_rep_payload(rep: LFuzzyAmbRep, tnorm: TNormTable | None = None) -> dict:
    lat = rep.lattice
    grades = []
    for a in rep.source.subsets():
        for b in rep.target.subsets():
            g = rep.grade(a, b)
            if b == rep.target.full or g == lat.bottom:
                continue  # defaults: bottom everywhere, top on the full target
            grades.append(
                [subset_payload(rep.source, a), subset_payload(rep.target, b), lat.elements[g]]
            )
    return {
        "source": space_payload(rep.source),
        "target": space_payload(rep.target),
        "lattice": lattice_payload(lat, tnorm),
        "grades": grades,
    }


def fuzzy_rep_from(payload) -> tuple[LFuzzyAmbRep, TNormTable | None]:
    need = {"source", "target", "lattice", "grades"}
    if not isinstance(payload, dict) or not need <= payload.keys():
        raise MalformedInput("a graded representation needs 'source', 'target', 'lattice', 'grades'")
    source = space_from(payload["source"])
    target = space_from(payload["target"])
    lat, tn = lattice_from(payload["lattice"])
    table = np.full((source.full, target.full), lat.bottom, dtype=np.intp)
    table[:, target.full - 1] = lat.top
    try:
        for a_labels, b_labels, g_label in payload["grades"]:
            a = subset_from(source, a_labels)
            b = subset_from(target, b_labels)
            table[a - 1, b - 1] = lat.index(g_label)
    except (TypeError, ValueError, KeyError) as e:
        raise MalformedInput(f"bad grade list: {e}") from None
    return fuzzy.validate(source, target, lat, table), tn


def is_fuzzy_payload(payload) -> bool:
    return isinstance(payload, dict) and "grades" in payload


# -- capacities -----------------------------------------------------------------------


def capacity_payload(cap: LCapacity) -> dict:
    return {
        "space": space_payload(cap.space),
        "lattice": lattice_payload(cap.lattice),
        "values": [
            [subset_payload(cap.space, mask), cap.lattice.elements[cap(mask)]]
            for mask in range(cap.space.full + 1)
        ],
    }


def capacity_from(payload) -> LCapacity:
    need = {"space", "lattice", "values"}
    if not isinstance(payload, dict) or not need <= payload.keys():
        raise MalformedInput("a capacity needs 'space', 'lattice' and 'values'")
    sp = space_from(payload["space"])
    lat, _ = lattice_from(payload["lattice"])
    values = [lat.bottom] * (sp.full + 1)
    try:
        for labels, g_label in payload["values"]:
            values[sp.subset(labels) if labels else 0] = lat.index(g_label)
    except (TypeError, ValueError, KeyError) as e:
        raise MalformedInput(f"bad value list: {e}") from None
    return validate_capacity(sp, lat, values)


# -- ternary hyperrelations -------------------------------------------------------------


def hyper_payload(t: TernaryHyperRelation) -> dict:
    lat = t.lattice
    triples = [
        [
            [subset_payload(t.source, a) for a in members(fam)],
            subset_payload(t.target, b),
            lat.elements[alpha],
        ]
        for fam, b, alpha in t.triples()
    ]
    return {
        "source": space_payload(t.source),
        "target": space_payload(t.target),
        "lattice": lattice_payload(lat),
        "triples": triples,
    }


def hyper_from(payload) -> TernaryHyperRelation:
    need = {"source", "target", "lattice", "triples"}
    if not isinstance(payload, dict) or not need <= payload.keys():
        raise MalformedInput("a hyperrelation needs 'source', 'target', 'lattice', 'triples'")
    source = space_from(payload["source"])
    target = space_from(payload["target"])
    lat, _ = lattice_from(payload["lattice"])
    triples = []
    try:
        for fam_labels, b_labels, g_label in payload["triples"]:
            fam = 0
            for a_labels in fam_labels:
                fam |= 1 << (subset_from(source, a_labels) - 1)
            triples.append((fam, subset_from(target, b_labels), lat.index(g_label)))
    except (TypeError, ValueError, KeyError) as e:
        raise MalformedInput(f"bad triple list: {e}") from None
    return TernaryHyperRelation.from_triples(source, target, lat, triples)


# -- files ---------------------------------------------------------------------------------


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"not valid JSON: {e}") from None


def load_path(path: str):
    try:
        with open(path) as fh:
            return loads(fh.read())
    except OSError as e:
        raise MalformedInput(f"cannot read {path}: {e}") from None

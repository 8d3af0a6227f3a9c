"""JSON document schemas for every object the CLI reads or writes.

Each document carries a ``schema`` version tag.  Parsing is strict: unknown
keys, missing fields and wrong shapes are rejected with a message naming
the offending field.  Emission is deterministic (members and vertex lists
sorted), so documents serve as golden files and always round-trip.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .audit import AuditTrace, SetPair, SetPairFamily
from .core import Hypergraph, Permutation
from .cover import BIPARTITE, COMPLETE, CoverFamily, HostGraph
from .search import GeneralCoverInstance

HYPERGRAPH_SCHEMA = "hypergraph/1"
PERMUTATION_SCHEMA = "permutation/1"
COVER_SCHEMA = "cover/1"
INSTANCE_SCHEMA = "instance/1"
TRACE_SCHEMA = "audit-trace/1"


class SchemaError(ValueError):
    """A document does not match its declared schema."""


def _require_keys(doc: dict, allowed: set[str], what: str) -> None:
    if not isinstance(doc, dict):
        raise SchemaError(f"{what}: expected a JSON object")
    unknown = set(doc) - allowed - {"schema"}
    if unknown:
        raise SchemaError(f"{what}: unknown keys {sorted(unknown)}")


def _check_schema(doc: dict, expected: str, what: str) -> None:
    tag = doc.get("schema")
    if tag is not None and tag != expected:
        raise SchemaError(f"{what}: schema {tag!r}, expected {expected!r}")


def _string_list(value: Any, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise SchemaError(f"{what}: expected a list of strings")
    return value


def _set_list(value: Any, what: str) -> list[frozenset[str]]:
    if not isinstance(value, list):
        raise SchemaError(f"{what}: expected a list of lists")
    return [frozenset(_string_list(item, what)) for item in value]


def _sorted_sets(sets) -> list[list[str]]:
    return [sorted(s) for s in sorted(sets, key=lambda s: (len(s), sorted(s)))]


# --- hypergraphs ---------------------------------------------------------------


def hypergraph_to_doc(h: Hypergraph) -> dict:
    return {
        "schema": HYPERGRAPH_SCHEMA,
        "vertices": list(h.vertices),
        "edges": _sorted_sets(h.edges),
    }


def hypergraph_from_doc(doc: dict) -> Hypergraph:
    _require_keys(doc, {"vertices", "edges"}, "hypergraph")
    _check_schema(doc, HYPERGRAPH_SCHEMA, "hypergraph")
    if "vertices" not in doc or "edges" not in doc:
        raise SchemaError("hypergraph: needs 'vertices' and 'edges'")
    return Hypergraph(
        _string_list(doc["vertices"], "hypergraph.vertices"),
        _set_list(doc["edges"], "hypergraph.edges"),
    )


# --- permutations --------------------------------------------------------------


def permutation_to_doc(p: Permutation) -> dict:
    return {"schema": PERMUTATION_SCHEMA, "map": dict(p.pairs)}


def permutation_from_doc(doc: dict) -> Permutation:
    _require_keys(doc, {"map"}, "permutation")
    _check_schema(doc, PERMUTATION_SCHEMA, "permutation")
    mapping = doc.get("map")
    if not isinstance(mapping, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in mapping.items()
    ):
        raise SchemaError("permutation.map: expected an object of strings")
    return Permutation(mapping)


# --- covers --------------------------------------------------------------------


def cover_to_doc(c: CoverFamily) -> dict:
    if c.host.is_bipartite():
        host = {
            "kind": "bipartite",
            "part1": list(c.host.part1),
            "part2": list(c.host.part2),
        }
    else:
        host = {"kind": "complete", "vertices": list(c.host.part1)}
    return {
        "schema": COVER_SCHEMA,
        "host": host,
        "members": _sorted_sets(c.members),
    }


def cover_from_doc(doc: dict) -> CoverFamily:
    _require_keys(doc, {"host", "members"}, "cover")
    _check_schema(doc, COVER_SCHEMA, "cover")
    host_doc = doc.get("host")
    if not isinstance(host_doc, dict):
        raise SchemaError("cover.host: expected an object")
    kind = host_doc.get("kind")
    if kind == "bipartite":
        _require_keys(host_doc, {"kind", "part1", "part2"}, "cover.host")
        host = HostGraph.bipartite(
            _string_list(host_doc.get("part1"), "cover.host.part1"),
            _string_list(host_doc.get("part2"), "cover.host.part2"),
        )
    elif kind == "complete":
        _require_keys(host_doc, {"kind", "vertices"}, "cover.host")
        host = HostGraph.complete(
            _string_list(host_doc.get("vertices"), "cover.host.vertices")
        )
    else:
        raise SchemaError("cover.host.kind: expected 'bipartite' or 'complete'")
    return CoverFamily(host, _set_list(doc.get("members"), "cover.members"))


def host_kind(host: HostGraph) -> str:
    return BIPARTITE if host.is_bipartite() else COMPLETE


# --- general cover instances -----------------------------------------------------


def instance_to_doc(inst: GeneralCoverInstance) -> dict:
    return {
        "schema": INSTANCE_SCHEMA,
        "ground": list(inst.ground),
        "candidates": _sorted_sets(inst.candidates),
        "restrictions": [
            {"set": sorted(r), "cap": cap} for r, cap in inst.restrictions
        ],
    }


def instance_from_doc(doc: dict) -> GeneralCoverInstance:
    _require_keys(doc, {"ground", "candidates", "restrictions"}, "instance")
    _check_schema(doc, INSTANCE_SCHEMA, "instance")
    rest_doc = doc.get("restrictions")
    if not isinstance(rest_doc, list):
        raise SchemaError("instance.restrictions: expected a list")
    restrictions = []
    for item in rest_doc:
        _require_keys(item, {"set", "cap"}, "instance.restrictions[]")
        if "set" not in item or "cap" not in item:
            raise SchemaError("instance.restrictions[]: needs 'set' and 'cap'")
        if not isinstance(item["cap"], int):
            raise SchemaError("instance.restrictions[].cap: expected an integer")
        restrictions.append(
            (frozenset(_string_list(item["set"], "restriction.set")), item["cap"])
        )
    return GeneralCoverInstance(
        _string_list(doc.get("ground"), "instance.ground"),
        _set_list(doc.get("candidates"), "instance.candidates"),
        restrictions,
    )


# --- audit traces ----------------------------------------------------------------


def _pair_to_doc(p: SetPair) -> dict:
    return {
        "pivot": p.pivot,
        "witness": p.witness,
        "a_members": _sorted_sets(p.a_members),
        "b_members": _sorted_sets(p.b_members),
    }


def _pair_from_doc(doc: dict) -> SetPair:
    _require_keys(doc, {"pivot", "witness", "a_members", "b_members"}, "set pair")
    return SetPair(
        pivot=doc["pivot"],
        witness=doc["witness"],
        a_members=frozenset(_set_list(doc["a_members"], "pair.a_members")),
        b_members=frozenset(_set_list(doc["b_members"], "pair.b_members")),
    )


def trace_to_doc(trace: AuditTrace) -> dict:
    return {
        "schema": TRACE_SCHEMA,
        "cover": cover_to_doc(trace.cover),
        "root": trace.root,
        "degrees": [trace.d1, trace.d2],
        "initial_members": _sorted_sets(trace.initial_members),
        "slack_levels": list(trace.slack_levels),
        "levels": [
            {
                "k": lv.k,
                "frontier": sorted(lv.frontier),
                "tight": list(lv.tight),
                "residuals": {x: sorted(r) for x, r in lv.residuals},
                "extension": sorted(lv.extension),
                "new_members": _sorted_sets(lv.new_members),
                "set_pairs": [_pair_to_doc(p) for p in lv.set_pairs.pairs],
            }
            for lv in trace.levels
        ],
    }


def set_pairs_from_trace_doc(doc: dict) -> list[SetPairFamily]:
    """Re-read just the per-level set-pair families from a trace document."""
    _check_schema(doc, TRACE_SCHEMA, "trace")
    levels = doc.get("levels")
    if not isinstance(levels, list):
        raise SchemaError("trace.levels: expected a list")
    out = []
    for lv in levels:
        pairs = lv.get("set_pairs")
        if not isinstance(pairs, list):
            raise SchemaError("trace.levels[].set_pairs: expected a list")
        out.append(SetPairFamily(pairs=tuple(_pair_from_doc(p) for p in pairs)))
    return out


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"

"""Map document ingestion and serialization.

Two input formats:
  - "json": versioned document
      {"version": "1", "name": ..., "concepts": [{"id": 1, "label": ...}],
       "relations": [{"from": 1, "to": 2, "weight": 0.5}]}
    labels are optional and default to "C<i>";
  - "csv-edges": bare edge list, one "from,to,weight" line per edge,
    1-based ids, no header; the concept set is 1..max(id).
"""
from __future__ import annotations

import json

from .errors import MapParseError
from .model import CognitiveMap, Concept, Relation, build_map

FORMATS = ("json", "csv-edges")
DOCUMENT_VERSION = "1"


def parse_map(text: str, format: str = "json") -> CognitiveMap:
    """Parse a map document; raises MapParseError with the location on failure."""
    if format == "json":
        return _parse_json(text)
    if format == "csv-edges":
        return _parse_csv(text)
    raise ValueError(f"unknown map format {format!r}; expected one of {FORMATS}")


def _require(mapping, key, types, where):
    if key not in mapping:
        raise MapParseError(f"missing required key {key!r}", field=where)
    value = mapping[key]
    if not isinstance(value, types) or isinstance(value, bool):
        raise MapParseError(f"bad type for {key!r}", field=f"{where}.{key}")
    return value


def _parse_json(text: str) -> CognitiveMap:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MapParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise MapParseError("top-level value must be an object")

    version = doc.get("version", DOCUMENT_VERSION)
    if version != DOCUMENT_VERSION:
        raise MapParseError(f"unsupported document version {version!r}", field="version")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise MapParseError("bad type for 'name'", field="name")

    concepts = []
    raw_concepts = _require(doc, "concepts", list, "$")
    for i, item in enumerate(raw_concepts):
        if not isinstance(item, dict):
            raise MapParseError("concept must be an object", field=f"concepts[{i}]")
        cid = _require(item, "id", int, f"concepts[{i}]")
        label = item.get("label", f"C{cid}")
        if not isinstance(label, str):
            raise MapParseError("bad type for 'label'", field=f"concepts[{i}].label")
        concepts.append(Concept(cid, label))

    relations = []
    raw_relations = _require(doc, "relations", list, "$")
    for i, item in enumerate(raw_relations):
        if not isinstance(item, dict):
            raise MapParseError("relation must be an object", field=f"relations[{i}]")
        source = _require(item, "from", int, f"relations[{i}]")
        target = _require(item, "to", int, f"relations[{i}]")
        weight = _require(item, "weight", (int, float), f"relations[{i}]")
        relations.append(Relation(source, target, float(weight)))

    return build_map(concepts, relations, name)


def _parse_csv(text: str) -> CognitiveMap:
    relations = []
    max_id = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise MapParseError("expected 'from,to,weight'", line=lineno)
        try:
            source, target = int(parts[0]), int(parts[1])
            weight = float(parts[2])
        except ValueError as exc:
            raise MapParseError(f"bad value: {exc}", line=lineno) from exc
        relations.append(Relation(source, target, weight))
        max_id = max(max_id, source, target)

    concepts = [Concept(i, f"C{i}") for i in range(1, max_id + 1)]
    return build_map(concepts, relations)


def dump_map_json(cmap: CognitiveMap) -> str:
    """Canonical JSON document for a map; full weight precision."""
    doc = {
        "version": DOCUMENT_VERSION,
        "name": cmap.name,
        "concepts": [{"id": c.id, "label": c.label} for c in cmap.concepts],
        "relations": [
            {"from": r.source, "to": r.target, "weight": r.weight}
            for r in sorted(cmap.relations, key=lambda r: (r.source, r.target))
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def dump_map_csv(cmap: CognitiveMap) -> str:
    lines = [
        f"{r.source},{r.target},{r.weight!r}"
        for r in sorted(cmap.relations, key=lambda r: (r.source, r.target))
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def load_map(path: str) -> CognitiveMap:
    """Read a map file, picking the format from the extension."""
    format = "csv-edges" if str(path).lower().endswith(".csv") else "json"
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise MapParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_map(text, format)

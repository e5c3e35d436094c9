"""Normalized four-dimension artifact catalog.

Every artifact carries exactly four categorical dimensions: origin
place, object type, dynasty, material. Missing metadata becomes the
"Unknown" sentinel so that counts always partition the collection.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

UNKNOWN = "Unknown"


class Dimension(Enum):
    ORIGIN_PLACE = "origin_place"
    OBJECT_TYPE = "object_type"
    DYNASTY = "dynasty"
    MATERIAL = "material"


DIMENSION_NAMES = tuple(d.value for d in Dimension)


class Unidentifiable(ValueError):
    """Raw record has neither a title nor an accession number."""


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class ArtifactRecord:
    id: str
    title: str
    source_url: str
    dims: dict  # Dimension -> str, all four keys always present
    extras: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "id": self.id,
            "title": self.title,
            "source_url": self.source_url,
            "dims": {d.value: self.dims[d] for d in Dimension},
            "extras": dict(self.extras),
        }


@dataclass
class Catalog:
    portal_name: str
    records: list[ArtifactRecord]
    built_at: str = ""

    def __len__(self):
        return len(self.records)

    def get(self, record_id):
        for r in self.records:
            if r.id == record_id:
                return r
        return None


@dataclass(frozen=True)
class Reject:
    source_url: str
    reason: str  # "unidentifiable" | "duplicate"


def _collapse(text: str) -> str:
    return re.sub(r"\s+", " ", text or "").strip()


def _title_case(text: str) -> str:
    return " ".join(word.capitalize() for word in text.split())


def record_id_for(raw_fields: dict, source_url: str) -> str:
    accession = _collapse(raw_fields.get("accession_no", ""))
    if accession:
        return accession
    return hashlib.sha256(source_url.encode("utf-8")).hexdigest()[:16]


def normalize(raw) -> ArtifactRecord:
    """Clean one raw artifact into a catalog record.

    Raises Unidentifiable when there is neither a title nor an
    accession number to anchor the record.
    """
    title = _collapse(raw.fields.get("title", ""))
    accession = _collapse(raw.fields.get("accession_no", ""))
    if not title and not accession:
        raise Unidentifiable(f"no title and no accession_no for {raw.source_url}")
    dims = {}
    for d in Dimension:
        value = _title_case(_collapse(raw.fields.get(d.value, "")))
        dims[d] = value or UNKNOWN
    extras = {
        name: _collapse(value)
        for name, value in raw.fields.items()
        if name not in DIMENSION_NAMES and name != "title" and _collapse(value)
    }
    return ArtifactRecord(
        id=record_id_for(raw.fields, raw.source_url),
        title=title or accession,
        source_url=raw.source_url,
        dims=dims,
        extras=extras,
    )


def build_catalog(raws, portal_name, built_at=""):
    """Normalize all raws into a catalog sorted by id.

    Returns (catalog, rejects). On duplicate ids the first occurrence
    wins; later ones are rejected with reason "duplicate".
    """
    records = {}
    rejects = []
    for raw in raws:
        try:
            rec = normalize(raw)
        except Unidentifiable:
            rejects.append(Reject(raw.source_url, "unidentifiable"))
            continue
        if rec.id in records:
            rejects.append(Reject(raw.source_url, "duplicate"))
            continue
        records[rec.id] = rec
    ordered = [records[k] for k in sorted(records)]
    return Catalog(portal_name=portal_name, records=ordered, built_at=built_at), rejects


def dimension_index(cat: Catalog, d: Dimension):
    """Map each value of dimension d to the sorted ids holding it.

    The buckets partition the catalog: every id lands in exactly one.
    """
    buckets = {}
    for rec in cat.records:
        buckets.setdefault(rec.dims[d], []).append(rec.id)
    return {value: sorted(ids) for value, ids in buckets.items()}


def save_catalog(cat: Catalog, path):
    data = {
        "portal_name": cat.portal_name,
        "built_at": cat.built_at,
        "records": [r.to_json() for r in cat.records],
    }
    Path(path).write_text(json.dumps(data, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")


def catalog_from_json(data) -> Catalog:
    if not isinstance(data, dict) or "records" not in data:
        raise SchemaError("catalog file must be an object with a 'records' array")
    records = []
    for i, item in enumerate(data["records"]):
        for key in ("id", "title", "source_url", "dims"):
            if key not in item:
                raise SchemaError(f"record {i} is missing {key!r}")
        dims = {}
        for d in Dimension:
            if d.value not in item["dims"]:
                raise SchemaError(f"record {i} is missing dimension {d.value!r}")
            dims[d] = item["dims"][d.value]
        records.append(
            ArtifactRecord(
                id=item["id"],
                title=item["title"],
                source_url=item["source_url"],
                dims=dims,
                extras=dict(item.get("extras", {})),
            )
        )
    ids = [r.id for r in records]
    if len(set(ids)) != len(ids):
        raise SchemaError("catalog contains duplicate record ids")
    return Catalog(
        portal_name=data.get("portal_name", ""),
        records=records,
        built_at=data.get("built_at", ""),
    )


def load_catalog(path) -> Catalog:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc}") from exc
    return catalog_from_json(data)

"""Blueprint loading and validation.

A blueprint is a JSON document describing one portal: a paginated
listing-URL template, a selector locating detail links, and a selector
per metadata field. Five field keys are mandatory: title plus the four
catalog dimensions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

MANDATORY_FIELDS = ("title", "origin_place", "object_type", "dynasty", "material")
OPTIONAL_FIELDS = ("image_url", "description", "accession_no")
MAX_PAGES = 10000


class BlueprintError(ValueError):
    """Base class for blueprint validation failures."""


class ParseError(BlueprintError):
    """Blueprint file is not valid JSON."""


class MissingField(BlueprintError):
    def __init__(self, name):
        super().__init__(f"blueprint is missing mandatory field selector {name!r}")
        self.name = name


class MalformedTemplate(BlueprintError):
    """list_url_template must contain the {page} placeholder exactly once."""


@dataclass(frozen=True)
class Blueprint:
    portal_name: str
    list_url_template: str
    page_start: int
    page_end: int
    item_link_selector: str
    field_selectors: dict[str, str]
    request_delay_ms: int = 500
    fixture_dir: str | None = None
    user_agent: str | None = None

    def list_urls(self):
        return [
            self.list_url_template.replace("{page}", str(page))
            for page in range(self.page_start, self.page_end + 1)
        ]


def validate_blueprint(data: dict) -> Blueprint:
    if not isinstance(data, dict):
        raise ParseError("blueprint must be a JSON object")
    for key in ("portal_name", "list_url_template", "item_link_selector", "field_selectors"):
        if key not in data:
            raise MissingField(key)
    selectors = data["field_selectors"]
    if not isinstance(selectors, dict):
        raise ParseError("field_selectors must be an object")
    for name in MANDATORY_FIELDS:
        if not selectors.get(name):
            raise MissingField(name)

    template = data["list_url_template"]
    if template.count("{page}") != 1:
        raise MalformedTemplate(
            f"list_url_template must contain {{page}} exactly once, "
            f"found {template.count('{page}')} in {template!r}"
        )

    page_start = int(data.get("page_start", 0))
    page_end = int(data.get("page_end", page_start))
    if page_start < 0:
        raise BlueprintError("page_start must be >= 0")
    if page_end < page_start:
        raise BlueprintError("page_end must be >= page_start")
    if page_end - page_start + 1 > MAX_PAGES:
        raise BlueprintError(f"page range exceeds sanity bound of {MAX_PAGES} pages")

    delay = int(data.get("request_delay_ms", 500))
    if delay < 0:
        raise BlueprintError("request_delay_ms must be >= 0")

    return Blueprint(
        portal_name=data["portal_name"],
        list_url_template=template,
        page_start=page_start,
        page_end=page_end,
        item_link_selector=data["item_link_selector"],
        field_selectors=dict(selectors),
        request_delay_ms=delay,
        fixture_dir=data.get("fixture_dir"),
        user_agent=data.get("user_agent"),
    )


def load_blueprint(path) -> Blueprint:
    """Load and validate a blueprint JSON file.

    A relative fixture_dir is resolved against the blueprint's own
    directory, so blueprint + fixture corpus travel together.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    bp = validate_blueprint(data)
    if bp.fixture_dir is not None:
        fixture = Path(bp.fixture_dir)
        if not fixture.is_absolute():
            bp = Blueprint(**{**bp.__dict__, "fixture_dir": str(path.parent / fixture)})
    return bp

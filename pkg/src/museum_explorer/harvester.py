"""Fetch portal pages and extract raw artifact fields per a blueprint.

Two page providers exist: a network provider (requests + politeness
delay) and a fixture provider that maps each URL to an on-disk file
named sha256(url).html. When a blueprint sets fixture_dir, no network
access happens at all.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from urllib.parse import urljoin

from .blueprint import Blueprint, MANDATORY_FIELDS
from .htmldoc import parse_html

DEFAULT_USER_AGENT = "museum-explorer/0.1.0 (collection harvester)"


class FetchError(RuntimeError):
    def __init__(self, url, cause):
        super().__init__(f"failed to fetch {url}: {cause}")
        self.url = url
        self.cause = str(cause)


@dataclass
class RawArtifact:
    source_url: str
    fields: dict[str, str]
    fetched_at: str  # ISO-8601 UTC

    def to_json(self):
        return {"source_url": self.source_url, "fields": self.fields, "fetched_at": self.fetched_at}

    @classmethod
    def from_json(cls, data):
        return cls(
            source_url=data["source_url"],
            fields=dict(data["fields"]),
            fetched_at=data.get("fetched_at", ""),
        )


@dataclass
class HarvestReport:
    pages_fetched: int = 0
    records_extracted: int = 0
    suspects: list[str] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    selector_misses: list[str] = field(default_factory=list)

    def to_json(self):
        return {
            "pages_fetched": self.pages_fetched,
            "records_extracted": self.records_extracted,
            "suspects": self.suspects,
            "failures": self.failures,
            "selector_misses": self.selector_misses,
        }


def fixture_filename(url: str) -> str:
    """Deterministic, collision-safe URL-to-file mapping for fixtures."""
    return hashlib.sha256(url.encode("utf-8")).hexdigest() + ".html"


class FixturePages:
    """Reads pages from a directory of sha256(url).html files."""

    def __init__(self, fixture_dir):
        self.dir = Path(fixture_dir)

    def fetch(self, url: str) -> str:
        path = self.dir / fixture_filename(url)
        if not path.exists():
            raise FetchError(url, f"fixture file not found: {path}")
        return path.read_text(encoding="utf-8")


class NetworkPages:
    """Fetches pages over HTTP with a per-request politeness delay."""

    def __init__(self, delay_ms=500, user_agent=None, timeout=30.0):
        self.delay_s = delay_ms / 1000.0
        self.user_agent = user_agent or DEFAULT_USER_AGENT
        self.timeout = timeout
        self._last_fetch = 0.0
        self._session = None

    def fetch(self, url: str) -> str:
        import requests

        if self._session is None:
            self._session = requests.Session()
            self._session.headers["User-Agent"] = self.user_agent
        wait = self._last_fetch + self.delay_s - time.monotonic()
        if wait > 0:
            time.sleep(wait)
        try:
            resp = self._session.get(url, timeout=self.timeout)
            resp.raise_for_status()
        except Exception as exc:
            raise FetchError(url, exc) from exc
        finally:
            self._last_fetch = time.monotonic()
        return resp.text


def page_provider_for(bp: Blueprint):
    if bp.fixture_dir is not None:
        return FixturePages(bp.fixture_dir)
    return NetworkPages(delay_ms=bp.request_delay_ms, user_agent=bp.user_agent)


def enumerate_item_urls(bp: Blueprint, pages, keep_going=False, report: HarvestReport | None = None):
    """Walk the listing pages and collect detail URLs.

    Returns absolute URLs, de-duplicated in first-seen order. A page
    where the link selector matches nothing is recorded as a selector
    miss and contributes no URLs.
    """
    seen = set()
    urls = []
    for list_url in bp.list_urls():
        try:
            html = pages.fetch(list_url)
        except FetchError as exc:
            if not keep_going:
                raise
            if report is not None:
                report.failures.append({"url": exc.url, "reason": exc.cause})
            continue
        if report is not None:
            report.pages_fetched += 1
        doc = parse_html(html)
        links = doc.select(bp.item_link_selector)
        if not links and report is not None:
            report.selector_misses.append(list_url)
        for link in links:
            href = link.attrs.get("href")
            if not href:
                continue
            absolute = urljoin(list_url, href)
            if absolute not in seen:
                seen.add(absolute)
                urls.append(absolute)
    return urls


def extract_record(html: str, url: str, bp: Blueprint, fetched_at: str) -> RawArtifact:
    """Extract one raw record. Total: selectors that match nothing
    store the empty string, never an error."""
    doc = parse_html(html)
    fields = {}
    for name, selector in bp.field_selectors.items():
        el = doc.select_one(selector)
        fields[name] = el.text() if el is not None else ""
    return RawArtifact(source_url=url, fields=fields, fetched_at=fetched_at)


def is_suspect(raw: RawArtifact) -> bool:
    return all(not raw.fields.get(name) for name in MANDATORY_FIELDS)


def harvest(bp: Blueprint, keep_going=False, stamp: str | None = None):
    """Run the full harvest: listing walk, then one fetch per detail URL.

    Returns (records, report). `stamp` overrides per-record timestamps,
    making fixture harvests byte-for-byte reproducible.
    """
    pages = page_provider_for(bp)
    report = HarvestReport()
    urls = enumerate_item_urls(bp, pages, keep_going=keep_going, report=report)
    records = []
    for url in urls:
        try:
            html = pages.fetch(url)
        except FetchError as exc:
            if not keep_going:
                raise
            report.failures.append({"url": exc.url, "reason": exc.cause})
            continue
        report.pages_fetched += 1
        fetched_at = stamp or datetime.now(timezone.utc).isoformat(timespec="seconds")
        raw = extract_record(html, url, bp, fetched_at)
        if is_suspect(raw):
            report.suspects.append(url)
        records.append(raw)
    report.records_extracted = len(records)
    return records, report


def save_raw_artifacts(records, path):
    data = [r.to_json() for r in records]
    Path(path).write_text(json.dumps(data, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")


def load_raw_artifacts(path):
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return [RawArtifact.from_json(item) for item in data]


def save_report(report: HarvestReport, path):
    Path(path).write_text(
        json.dumps(report.to_json(), ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )

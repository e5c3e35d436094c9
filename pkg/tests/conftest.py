import json
from pathlib import Path

import pytest

from museum_explorer.blueprint import load_blueprint
from museum_explorer.catalog import ArtifactRecord, Catalog, Dimension, build_catalog
from museum_explorer.harvester import harvest

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"
STAMP = "2026-01-01T00:00:00+00:00"


@pytest.fixture(scope="session")
def fixture_blueprint():
    return load_blueprint(FIXTURES / "blueprint.json")


@pytest.fixture(scope="session")
def ground_truth():
    return json.loads((FIXTURES / "ground_truth.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def fixture_harvest(fixture_blueprint):
    return harvest(fixture_blueprint, stamp=STAMP)


@pytest.fixture(scope="session")
def fixture_catalog(fixture_harvest):
    records, _ = fixture_harvest
    cat, rejects = build_catalog(records, "Fixture Museum of Goa", built_at=STAMP)
    assert not rejects
    return cat


def make_record(i, origin="Goa", otype="Sculpture", dynasty="Kadamba", material="Stone"):
    return ArtifactRecord(
        id=f"rec-{i:04d}",
        title=f"Artifact {i}",
        source_url=f"https://example.test/a/{i}",
        dims={
            Dimension.ORIGIN_PLACE: origin,
            Dimension.OBJECT_TYPE: otype,
            Dimension.DYNASTY: dynasty,
            Dimension.MATERIAL: material,
        },
    )


def make_catalog(rows, portal="Test Portal"):
    """rows: list of dicts with any of origin/otype/dynasty/material."""
    records = [make_record(i, **row) for i, row in enumerate(rows)]
    return Catalog(portal_name=portal, records=records, built_at=STAMP)

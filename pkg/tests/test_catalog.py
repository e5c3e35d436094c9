import hashlib
import json

import pytest
from hypothesis import given, strategies as st

from museum_explorer.catalog import (
    UNKNOWN,
    Dimension,
    SchemaError,
    Unidentifiable,
    build_catalog,
    dimension_index,
    load_catalog,
    save_catalog,
)
from museum_explorer.harvester import RawArtifact

from conftest import STAMP


def raw(title="Thing", url="https://x.test/1", **fields):
    merged = {"title": title, **fields}
    return RawArtifact(source_url=url, fields=merged, fetched_at=STAMP)


# strategy: raw artifacts with sparse, messy dimension values; fields are
# a function of n so equal urls always mean equal raws
VOCAB = ["copper", "Stone ", "  wood", "kadamba", "GOA", ""]


def _raw_from_n(n):
    pick = lambda shift: VOCAB[(n >> shift) % len(VOCAB)]
    return raw(
        title=f"Item {n}",
        url=f"https://x.test/{n}",
        origin_place=pick(0),
        object_type=pick(2),
        dynasty=pick(4),
        material=pick(6),
    )


raw_artifacts = st.integers(0, 10_000).map(_raw_from_n)


class TestNormalize:
    def test_whitespace_and_title_case(self):
        from museum_explorer.catalog import normalize

        rec = normalize(raw(title=" Hero  Stone ", material="copper"))
        assert rec.title == "Hero Stone"
        assert rec.dims[Dimension.MATERIAL] == "Copper"

    def test_empty_dimension_becomes_unknown(self):
        from museum_explorer.catalog import normalize

        rec = normalize(raw(dynasty=""))
        assert rec.dims[Dimension.DYNASTY] == UNKNOWN

    def test_id_is_url_hash_without_accession(self):
        from museum_explorer.catalog import normalize

        a = normalize(raw(url="https://x.test/same"))
        b = normalize(raw(title="Other", url="https://x.test/same"))
        assert a.id == b.id == hashlib.sha256(b"https://x.test/same").hexdigest()[:16]

    def test_accession_takes_precedence(self):
        from museum_explorer.catalog import normalize

        rec = normalize(raw(accession_no=" GOA-0042 "))
        assert rec.id == "GOA-0042"

    def test_unidentifiable(self):
        from museum_explorer.catalog import normalize

        with pytest.raises(Unidentifiable):
            normalize(raw(title=""))

    @given(raw_artifacts)
    def test_idempotent(self, r):
        from museum_explorer.catalog import normalize

        rec = normalize(r)
        again = normalize(
            RawArtifact(
                source_url=rec.source_url,
                fields={"title": rec.title, **{d.value: rec.dims[d] for d in Dimension}},
                fetched_at=STAMP,
            )
        )
        assert again.title == rec.title
        assert again.dims == rec.dims


class TestBuildCatalog:
    def test_fixture_corpus(self, fixture_harvest):
        records, _ = fixture_harvest
        cat, rejects = build_catalog(records, "Fixture Museum of Goa")
        assert len(cat.records) == 30
        assert rejects == []
        assert [r.id for r in cat.records] == sorted(r.id for r in cat.records)

    def test_duplicate_first_wins(self):
        a = raw(title="First", url="https://x.test/dup")
        b = raw(title="Second", url="https://x.test/dup")
        cat, rejects = build_catalog([a, b], "T")
        assert len(cat.records) == 1
        assert cat.records[0].title == "First"
        assert [r.reason for r in rejects] == ["duplicate"]

    def test_empty_input(self):
        cat, rejects = build_catalog([], "T")
        assert cat.records == [] and rejects == []

    def test_unidentifiable_rejected(self):
        cat, rejects = build_catalog([raw(title="")], "T")
        assert len(cat.records) == 0
        assert [r.reason for r in rejects] == ["unidentifiable"]

    @given(st.lists(raw_artifacts, max_size=20), st.randoms())
    def test_order_insensitive(self, raws, rnd):
        cat1, _ = build_catalog(raws, "T")
        shuffled = list(raws)
        rnd.shuffle(shuffled)
        cat2, _ = build_catalog(shuffled, "T")
        # generated duplicates share the url AND fields, so first-wins
        # makes the whole catalog permutation-invariant here
        assert cat1 == cat2


class TestDimensionIndex:
    def test_buckets(self):
        cat, _ = build_catalog(
            [
                raw(url="https://x.test/1", material="Copper"),
                raw(url="https://x.test/2", material="Copper"),
                raw(url="https://x.test/3", material="Stone"),
            ],
            "T",
        )
        idx = dimension_index(cat, Dimension.MATERIAL)
        assert set(idx) == {"Copper", "Stone"}
        assert len(idx["Copper"]) == 2 and len(idx["Stone"]) == 1

    def test_empty_catalog(self):
        cat, _ = build_catalog([], "T")
        assert dimension_index(cat, Dimension.DYNASTY) == {}

    def test_fixture_dynasty_buckets_sum_to_30(self, fixture_catalog, ground_truth):
        idx = dimension_index(fixture_catalog, Dimension.DYNASTY)
        assert sum(len(ids) for ids in idx.values()) == 30
        # recount from the labeled fixture data
        expected_unknown = sum(1 for t in ground_truth.values() if not t["dynasty"])
        assert len(idx[UNKNOWN]) == expected_unknown

    @given(st.lists(raw_artifacts, max_size=30))
    def test_partition_property(self, raws):
        cat, _ = build_catalog(raws, "T")
        all_ids = sorted(r.id for r in cat.records)
        for d in Dimension:
            idx = dimension_index(cat, d)
            bucketed = sorted(i for ids in idx.values() for i in ids)
            assert bucketed == all_ids


class TestPersistence:
    def test_round_trip(self, fixture_catalog, tmp_path):
        path = tmp_path / "cat.json"
        save_catalog(fixture_catalog, path)
        assert load_catalog(path) == fixture_catalog

    def test_empty_round_trip(self, tmp_path):
        cat, _ = build_catalog([], "T")
        save_catalog(cat, tmp_path / "cat.json")
        assert load_catalog(tmp_path / "cat.json") == cat

    def test_schema_error_names_record(self, fixture_catalog, tmp_path):
        path = tmp_path / "cat.json"
        save_catalog(fixture_catalog, path)
        data = json.loads(path.read_text())
        del data["records"][3]["dims"]["material"]
        path.write_text(json.dumps(data))
        with pytest.raises(SchemaError) as exc:
            load_catalog(path)
        assert "record 3" in str(exc.value) and "material" in str(exc.value)

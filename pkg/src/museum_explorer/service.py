"""Read-only HTTP API over a prebuilt catalog.

All geometry is computed server-side; clients draw what they are
given. Responses are produced by pure payload builders over the
immutable catalog, serialized through one canonical JSON encoder, so
identical requests yield byte-identical bodies and `export_bundle`
output matches the live API exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles

from . import __version__
from .catalog import Catalog, Dimension, dimension_index
from .force_layout import force_layout
from .hierarchy import (
    DEFAULT_ORDER,
    build_hierarchy,
    polygon_series,
    sunburst_layout,
    treemap_layout,
)
from .network import GraphMode, NodeKind, build_network

DEFAULTS = {
    "width": 1200.0,
    "height": 800.0,
    "iterations": 100,
    "seed": 42,
    "r0": 80.0,
    "ring_width": 70.0,
    "top_k": 6,
    "mode": GraphMode.HUB,
    "dimension": Dimension.MATERIAL,
}


class BadRequest(ValueError):
    def __init__(self, detail):
        super().__init__(detail)
        self.detail = detail


class BadDimension(BadRequest):
    pass


def canonical_json(payload) -> bytes:
    """One encoder for API responses and exported files: compact,
    UTF-8, floats at full round-trip precision (repr)."""
    return (json.dumps(payload, ensure_ascii=False, separators=(",", ":")) + "\n").encode("utf-8")


def parse_dimension(name: str) -> Dimension:
    for d in Dimension:
        if d.value == name:
            return d
    raise BadDimension(f"unknown dimension {name!r}; expected one of "
                       f"{[d.value for d in Dimension]}")


def apply_filter(cat: Catalog, pairs) -> Catalog:
    """View of the catalog keeping records matching every (dimension,
    value) pair exactly. Ordering is preserved."""
    records = cat.records
    for d, value in pairs:
        if not isinstance(d, Dimension):
            d = parse_dimension(d)
        records = [r for r in records if r.dims[d] == value]
    return Catalog(portal_name=cat.portal_name, records=list(records), built_at=cat.built_at)


# --- payload builders --------------------------------------------------------


def network_payload(cat, dims=None, mode=None, width=None, height=None, iterations=None, seed=None):
    dims = list(dims) if dims else list(Dimension)
    mode = mode or DEFAULTS["mode"]
    width = width if width is not None else DEFAULTS["width"]
    height = height if height is not None else DEFAULTS["height"]
    iterations = iterations if iterations is not None else DEFAULTS["iterations"]
    seed = seed if seed is not None else DEFAULTS["seed"]

    g = build_network(cat, dims, mode)
    layout = force_layout(g, width, height, iterations, seed)
    nodes = []
    for node in g.nodes:
        x, y = layout.positions[node.id]
        entry = {"id": node.id, "kind": node.kind.value, "label": node.label,
                 "weight": node.weight, "x": x, "y": y}
        if node.dimension is not None:
            entry["dimension"] = node.dimension.value
        nodes.append(entry)
    return {
        "mode": mode.value,
        "nodes": nodes,
        "edges": [{"src": e.src, "dst": e.dst, "edge_type": e.edge_type.value} for e in g.edges],
        "params": {"width": width, "height": height, "iterations": iterations,
                   "seed": seed, "prng": layout.prng},
    }


def treemap_payload(cat, order=None, width=None, height=None):
    order = list(order) if order else list(DEFAULT_ORDER)
    width = width if width is not None else DEFAULTS["width"]
    height = height if height is not None else DEFAULTS["height"]
    root = build_hierarchy(cat, order)
    rects = treemap_layout(root, width, height)
    return {
        "frame": {"w": width, "h": height},
        "rects": [
            {"path": list(r.path), "x": r.x, "y": r.y, "w": r.w, "h": r.h,
             "depth": r.depth, "count": r.count}
            for r in rects
        ],
    }


def sunburst_payload(cat, order=None, r0=None, ring_width=None):
    order = list(order) if order else list(DEFAULT_ORDER)
    r0 = r0 if r0 is not None else DEFAULTS["r0"]
    ring_width = ring_width if ring_width is not None else DEFAULTS["ring_width"]
    root = build_hierarchy(cat, order)
    arcs = sunburst_layout(root, r0, ring_width)
    return {
        "arcs": [
            {"path": list(a.path), "start": a.start_angle, "end": a.end_angle,
             "inner_r": a.inner_r, "outer_r": a.outer_r, "count": a.count}
            for a in arcs
        ],
    }


def polygon_payload(cat, dimension=None, top_k=None):
    dimension = dimension or DEFAULTS["dimension"]
    top_k = top_k if top_k is not None else DEFAULTS["top_k"]
    series = polygon_series(cat, dimension, top_k)
    return {
        "dimension": series.dimension.value,
        "axes": series.axes,
        "values": series.values,
        "raw_counts": series.raw_counts,
    }


def catalog_payload(cat):
    return {
        "portal_name": cat.portal_name,
        "built_at": cat.built_at,
        "records": [r.to_json() for r in cat.records],
    }


def meta_payload(cat):
    return {
        "portal_name": cat.portal_name,
        "built_at": cat.built_at,
        "record_count": len(cat.records),
        "dimensions": {
            d.value: {value: len(ids) for value, ids in sorted(dimension_index(cat, d).items())}
            for d in Dimension
        },
    }


# --- request parsing ---------------------------------------------------------


def _parse_float(params, key, positive=False):
    if key not in params:
        return None
    try:
        value = float(params[key])
    except ValueError:
        raise BadRequest(f"query parameter {key!r} must be a number, got {params[key]!r}")
    if positive and value <= 0:
        raise BadRequest(f"query parameter {key!r} must be positive, got {params[key]!r}")
    return value


def _parse_int(params, key, minimum=None):
    if key not in params:
        return None
    try:
        value = int(params[key])
    except ValueError:
        raise BadRequest(f"query parameter {key!r} must be an integer, got {params[key]!r}")
    if minimum is not None and value < minimum:
        raise BadRequest(f"query parameter {key!r} must be >= {minimum}")
    return value


def _check_keys(params, allowed):
    allowed = set(allowed) | {d.value for d in Dimension}
    for key in params:
        if key not in allowed:
            raise BadRequest(f"unknown query parameter {key!r}; allowed: {sorted(allowed)}")


def _filter_pairs(params):
    return [(parse_dimension(d.value), params[d.value]) for d in Dimension if d.value in params]


def _parse_dim_list(params, key):
    if key not in params:
        return None
    names = [n for n in params[key].split(",") if n]
    if not names:
        raise BadRequest(f"query parameter {key!r} must list dimension names")
    return [parse_dimension(n) for n in names]


def build_viz_payload(cat: Catalog, viz: str, params: dict):
    """Dispatch one visualization request; raises BadRequest on any
    malformed or unknown parameter."""
    if viz == "network":
        _check_keys(params, {"dims", "mode", "width", "height", "iterations", "seed"})
        mode = None
        if "mode" in params:
            try:
                mode = GraphMode(params["mode"])
            except ValueError:
                raise BadRequest(f"unknown mode {params['mode']!r}; expected hub or pairwise")
        view = apply_filter(cat, _filter_pairs(params))
        return network_payload(
            view,
            dims=_parse_dim_list(params, "dims"),
            mode=mode,
            width=_parse_float(params, "width", positive=True),
            height=_parse_float(params, "height", positive=True),
            iterations=_parse_int(params, "iterations", minimum=1),
            seed=_parse_int(params, "seed", minimum=0),
        )
    if viz == "treemap":
        _check_keys(params, {"order", "width", "height"})
        view = apply_filter(cat, _filter_pairs(params))
        return treemap_payload(
            view,
            order=_parse_dim_list(params, "order"),
            width=_parse_float(params, "width", positive=True),
            height=_parse_float(params, "height", positive=True),
        )
    if viz == "sunburst":
        _check_keys(params, {"order", "r0", "ring_width"})
        view = apply_filter(cat, _filter_pairs(params))
        return sunburst_payload(
            view,
            order=_parse_dim_list(params, "order"),
            r0=_parse_float(params, "r0"),
            ring_width=_parse_float(params, "ring_width", positive=True),
        )
    if viz == "polygon":
        _check_keys(params, {"dimension", "top_k"})
        view = apply_filter(cat, _filter_pairs(params))
        dimension = parse_dimension(params["dimension"]) if "dimension" in params else None
        return polygon_payload(view, dimension=dimension, top_k=_parse_int(params, "top_k", minimum=3))
    raise BadRequest(f"unknown visualization {viz!r}")


# --- app ---------------------------------------------------------------------


def create_app(cat: Catalog, static_dir=None, cors_origin="*") -> FastAPI:
    app = FastAPI(title="museum-explorer", version=__version__, docs_url=None, redoc_url=None)

    def json_response(payload, status=200):
        headers = {"Access-Control-Allow-Origin": cors_origin} if cors_origin else {}
        return Response(content=canonical_json(payload), media_type="application/json",
                        status_code=status, headers=headers)

    def error_response(error, detail, status=400):
        return json_response({"error": error, "detail": detail}, status=status)

    @app.get("/api/health")
    def health():
        return json_response({"status": "ok", "records": len(cat.records)})

    @app.get("/api/catalog/meta")
    def catalog_meta():
        return json_response(meta_payload(cat))

    @app.get("/api/catalog")
    def catalog_full():
        return json_response(catalog_payload(cat))

    @app.get("/api/artifacts/{artifact_id}")
    def artifact(artifact_id: str):
        rec = cat.get(artifact_id)
        if rec is None:
            return error_response("not_found", f"no artifact with id {artifact_id!r}", status=404)
        return json_response(rec.to_json())

    @app.get("/api/viz/{viz}")
    def viz(viz: str, request: Request):
        params = dict(request.query_params)
        try:
            payload = build_viz_payload(cat, viz, params)
        except BadRequest as exc:
            return error_response("bad_request", exc.detail)
        except ValueError as exc:
            return error_response("bad_request", str(exc))
        return json_response(payload)

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")
    else:
        @app.get("/")
        def index():
            return Response(
                "<!doctype html><title>museum-explorer</title>"
                "<p>No UI bundle configured. API lives under /api/.</p>",
                media_type="text/html",
            )

    return app


def export_bundle(cat: Catalog, out_dir, params: dict | None = None):
    """Write the catalog plus all four default-parameter geometry
    payloads as static files, byte-identical to the live responses."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    params = params or {}
    files = {
        "catalog.json": catalog_payload(cat),
        "network.json": build_viz_payload(cat, "network", dict(params.get("network", {}))),
        "treemap.json": build_viz_payload(cat, "treemap", dict(params.get("treemap", {}))),
        "sunburst.json": build_viz_payload(cat, "sunburst", dict(params.get("sunburst", {}))),
        "polygon.json": build_viz_payload(cat, "polygon", dict(params.get("polygon", {}))),
    }
    for name, payload in files.items():
        (out / name).write_bytes(canonical_json(payload))
    return sorted(files)

"""Command-line pipeline: harvest -> build -> serve / export.

Each stage reads and writes plain JSON so intermediate results stay
inspectable. Exit codes: 0 success, 1 hard failure, 2 partial harvest
(--keep-going with recorded failures).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .blueprint import BlueprintError, load_blueprint
from .catalog import SchemaError, build_catalog, load_catalog, save_catalog
from .harvester import FetchError, harvest, load_raw_artifacts, save_raw_artifacts, save_report
from .service import create_app, export_bundle


def cmd_harvest(args) -> int:
    try:
        bp = load_blueprint(args.blueprint)
    except FileNotFoundError:
        print(f"error: blueprint file not found: {args.blueprint}", file=sys.stderr)
        return 1
    except BlueprintError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.fixtures:
        bp = type(bp)(**{**bp.__dict__, "fixture_dir": args.fixtures})
    try:
        records, report = harvest(bp, keep_going=args.keep_going, stamp=args.stamp)
    except FetchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    save_raw_artifacts(records, out / "raw_artifacts.json")
    save_report(report, out / "harvest_report.json")
    print(f"harvested {report.records_extracted} records "
          f"({len(report.suspects)} suspect, {len(report.failures)} failed)")
    return 2 if report.failures else 0


def cmd_build(args) -> int:
    try:
        raws = load_raw_artifacts(args.raw)
    except FileNotFoundError:
        print(f"error: raw artifacts file not found: {args.raw}", file=sys.stderr)
        return 1
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"error: malformed raw artifacts file: {exc}", file=sys.stderr)
        return 1
    cat, rejects = build_catalog(raws, args.portal, built_at=args.stamp or "")
    save_catalog(cat, args.out)
    print(f"built catalog with {len(cat.records)} records, {len(rejects)} rejects")
    for rej in rejects:
        print(f"  reject ({rej.reason}): {rej.source_url}")
    return 0


def _load_catalog_or_fail(path):
    try:
        return load_catalog(path)
    except FileNotFoundError:
        print(f"error: catalog file not found: {path}", file=sys.stderr)
        return None
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None


def cmd_serve(args) -> int:
    cat = _load_catalog_or_fail(args.catalog)
    if cat is None:
        return 1
    import uvicorn

    host, _, port = args.bind.rpartition(":")
    app = create_app(cat, static_dir=args.static, cors_origin=args.cors_origin)
    print(f"serving {len(cat.records)} records on {args.bind}")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
    return 0


def cmd_export(args) -> int:
    cat = _load_catalog_or_fail(args.catalog)
    if cat is None:
        return 1
    files = export_bundle(cat, args.out)
    print(f"wrote {len(files)} files to {args.out}: {', '.join(files)}")
    return 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog="museum-explorer",
        description="Harvest museum portal metadata and explore it through precomputed visualizations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("harvest", help="fetch portal pages per a blueprint")
    p.add_argument("--blueprint", required=True, help="blueprint JSON file")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--fixtures", help="override: read pages from this fixture directory")
    p.add_argument("--keep-going", action="store_true",
                   help="record fetch failures and continue instead of aborting")
    p.add_argument("--stamp", help="fixed ISO-8601 timestamp for reproducible output")
    p.set_defaults(func=cmd_harvest)

    p = sub.add_parser("build", help="normalize raw artifacts into a catalog")
    p.add_argument("--raw", required=True, help="raw_artifacts.json from harvest")
    p.add_argument("--out", required=True, help="catalog JSON output path")
    p.add_argument("--portal", required=True, help="portal display name")
    p.add_argument("--stamp", help="fixed built_at timestamp for reproducible output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("serve", help="serve the catalog and visualization API")
    p.add_argument("--catalog", required=True, help="catalog JSON file")
    p.add_argument("--bind", default="127.0.0.1:8000", help="host:port to listen on")
    p.add_argument("--static", help="directory of UI assets served at /")
    p.add_argument("--cors-origin", default="*", help="Access-Control-Allow-Origin value")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("export", help="write a static bundle of all default payloads")
    p.add_argument("--catalog", required=True, help="catalog JSON file")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface.

Subcommands: ``catalog`` (list/show named maps), ``radius`` (bisection radius
estimates), ``verify`` (the reproduction suite with a persisted JSON report),
``plot`` (SVG disk images), ``convolve`` and ``shear`` (map construction,
written as map-spec JSON files).

Exit codes: 0 success, 2 bad reference or argument, 3 bracket failure,
4 file I/O.  ``HARMAP_NTHETA`` overrides the angular resolution.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import figures
from .criteria import SamplingConfig
from .errors import BadBracket, HarmapError, UnknownCatalogName
from .exprs import ExprError, expand
from .harmonic import (
    ShearSpec,
    catalog_entry,
    catalog_names,
    map_from_spec,
    map_to_spec,
    shear,
)
from .radii import DEFAULT_T_GRID, convexity_radius, dcp_radius, local_univalence_radius
from .verify import report_to_json, run_suite

EXIT_OK = 0
EXIT_BAD_REFERENCE = 2
EXIT_BAD_BRACKET = 3
EXIT_IO = 4


def _sampling_config(args):
    n_theta = int(os.environ.get("HARMAP_NTHETA", "4096"))
    return SamplingConfig(n_theta=n_theta)


def _load_map(args):
    if getattr(args, "map_file", None):
        try:
            with open(args.map_file) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise UnknownCatalogName(f"cannot read map file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UnknownCatalogName(f"bad map file: {exc}") from exc
        f = map_from_spec(data)
    elif getattr(args, "map", None):
        f = catalog_entry(args.map, args.degree).map
    else:
        raise UnknownCatalogName("one of --map or --map-file is required")
    if getattr(args, "section", None):
        p, q = args.section
        f = f.section(p, q)
    return f


def _write_text(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def _cmd_catalog(args):
    if args.action == "list":
        for name in catalog_names():
            entry = catalog_entry(name, 8)
            print(f"{name}: {entry.provenance}")
        return EXIT_OK
    entry = catalog_entry(args.name, args.degree)
    if args.json:
        payload = {"name": entry.name, "provenance": entry.provenance}
        payload.update(map_to_spec(entry.map))
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"name: {entry.name}")
        print(f"provenance: {entry.provenance}")
        print(f"degree: {entry.map.degree}  class: {'H0' if entry.map.is_h0 else 'H'}")
        hc = entry.map.h.coeffs
        gc = entry.map.g.coeffs
        shown = min(entry.map.degree, 12)
        for k in range(shown + 1):
            print(f"  z^{k}: h={hc[k]:.12g}  g={gc[k]:.12g}")
        if entry.map.degree > shown:
            print(f"  ... up to degree {entry.map.degree}")
    return EXIT_OK


def _cmd_radius(args):
    cfg = _sampling_config(args)
    f = _load_map(args)
    if args.criterion == "convex":
        est = convexity_radius(f, cfg, args.tol)
    elif args.criterion == "localuniv":
        est = local_univalence_radius(f, cfg, args.tol)
    else:  # dcp probes an analytic series: require a vanishing antianalytic part
        if max(abs(c) for c in f.g.coeffs) > 0:
            raise UnknownCatalogName("--criterion dcp needs a map with zero g-part")
        est = dcp_radius(f.h, DEFAULT_T_GRID, cfg, args.tol)
    marker = " (criterion still passes at the top of the search range)" if est.saturated else ""
    print(
        f"criterion={est.criterion_id} lo={est.lo:.6f} hi={est.hi:.6f} "
        f"tol={est.tol:g} evals={est.evaluations}{marker}"
    )
    if args.json:
        try:
            _write_text(args.json, json.dumps(est.to_json_dict(), indent=2, sort_keys=True) + "\n")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def _cmd_verify(args):
    cfg = _sampling_config(args)
    report = run_suite(cfg, only=args.only)
    for check in report["checks"]:
        status = "PASS" if check["pass"] else "FAIL"
        print(
            f"{status} {check['id']}: observed={check['observed']:.12g} "
            f"expected={check['expected']:.12g} tol={check['tolerance']:g} "
            f"({check['wall_time']:.2f}s)"
        )
    out = args.out
    if out is None:
        os.makedirs("reports", exist_ok=True)
        stamp = time.strftime("%Y%m%d-%H%M%S")
        out = os.path.join("reports", f"verify-{stamp}.json")
    try:
        _write_text(out, report_to_json(report))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"report: {out}")
    print("overall:", "PASS" if report["pass"] else "FAIL")
    return EXIT_OK if report["pass"] else 1


def _cmd_plot(args):
    f = _load_map(args)
    bands = figures.parse_bands(args.bands)
    spec = figures.RenderSpec(
        map=f,
        bands=bands,
        n_circles=args.circles,
        n_rays=args.rays,
        samples_per_curve=args.samples,
    )
    svg = figures.render(spec)
    try:
        _write_text(args.out, svg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_convolve(args):
    fa = catalog_entry(args.a, args.degree).map if not os.path.exists(args.a) else None
    if fa is None:
        with open(args.a) as fh:
            fa = map_from_spec(json.load(fh))
    fb = catalog_entry(args.b, args.degree).map if not os.path.exists(args.b) else None
    if fb is None:
        with open(args.b) as fh:
            fb = map_from_spec(json.load(fh))
    result = fa.convolve(fb)
    try:
        _write_text(args.out, json.dumps(map_to_spec(result), sort_keys=True) + "\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.out} (degree {result.degree})")
    return EXIT_OK


def _cmd_shear(args):
    try:
        target = expand(args.target, args.degree)
        omega = expand(args.dilatation, args.degree)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_REFERENCE
    mode = "sum" if args.mode == "sum" else "diff"
    f = shear(ShearSpec(target, omega, mode))
    try:
        _write_text(args.out, json.dumps(map_to_spec(f), sort_keys=True) + "\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.out} (degree {f.degree})")
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(prog="harmap", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or show the named maps")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?", help="catalog name (for show)")
    p.add_argument("--degree", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("radius", help="bisection radius estimate for a criterion")
    p.add_argument("--map", help="catalog name")
    p.add_argument("--map-file", help="map-spec JSON file")
    p.add_argument("--section", nargs=2, type=int, metavar=("P", "Q"))
    p.add_argument("--criterion", choices=["convex", "localuniv", "dcp"], default="convex")
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--degree", type=int, default=64)
    p.add_argument("--json", help="write the estimate to this JSON file")
    p.set_defaults(fn=_cmd_radius)

    p = sub.add_parser("verify", help="run the reproduction suite")
    p.add_argument("--suite", choices=["paper"], default="paper")
    p.add_argument("--out", help="report path (default: reports/verify-<timestamp>.json)")
    p.add_argument("--only", help="run only checks whose id starts with this prefix")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("plot", help="render disk/annulus images to SVG")
    p.add_argument("--map", help="catalog name")
    p.add_argument("--map-file", help="map-spec JSON file")
    p.add_argument("--section", nargs=2, type=int, metavar=("P", "Q"))
    p.add_argument("--bands", default="0,0.25;0.25,0.3333;0.3333,0.5")
    p.add_argument("--circles", type=int, default=8)
    p.add_argument("--rays", type=int, default=24)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--degree", type=int, default=64)
    p.add_argument("--out", default="figure.svg")
    p.set_defaults(fn=_cmd_plot)

    p = sub.add_parser("convolve", help="harmonic convolution of two maps")
    p.add_argument("--a", required=True, help="catalog name or map-spec file")
    p.add_argument("--b", required=True, help="catalog name or map-spec file")
    p.add_argument("--degree", type=int, default=64)
    p.add_argument("--out", default="map.json")
    p.set_defaults(fn=_cmd_convolve)

    p = sub.add_parser("shear", help="shear construction from target and dilatation")
    p.add_argument("--target", required=True, help="rational expression, e.g. 'z/(1-z)'")
    p.add_argument("--dilatation", required=True, help="rational expression, e.g. '-z'")
    p.add_argument("--mode", choices=["sum", "diff"], default="sum")
    p.add_argument("--degree", type=int, default=64)
    p.add_argument("--out", default="map.json")
    p.set_defaults(fn=_cmd_shear)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BadBracket as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_BRACKET
    except (UnknownCatalogName, HarmapError, ExprError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_REFERENCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: `dist` (one distance query), `region` (construct the feasible
region and write the map JSON), `classify` (membership of one translation),
`sample` (pointwise truth raster as a PGM), `render` (SVG picture), and
`preset` (expand a named placement problem, build its region, and self-check
it against the pointwise raster before writing output).

Exit codes: 0 ok, 1 internal error, 2 constraint parse error, 3 scene error,
4 undefined distance, 5 backend/oracle mismatch.
"""

import argparse
import sys
from dataclasses import replace

import numpy as np

from . import distances
from .errors import (
    CspaceError,
    MixedSubjectsError,
    OracleMismatchError,
    ParseError,
    SceneError,
    UndefinedDistanceError,
    UnknownGroupError,
    UnknownObjectError,
)
from .geom import Point
from .oracle import flood_components, oracle_map
from .region import nr_classify, nr_classify_batch
from .scene import Scene, load_scene, save_map
from .svg import render_svg
from .tgs import (
    _atoms_of,
    _EvalContext,
    _KIND_TO_FAMILY,
    Cmp,
    configuration_window,
    eval_point,
    eval_region,
    multi_obstacle_expand,
    normalize,
    parse,
    preset_expression,
    PRESET_NAMES,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_SCENE = 3
EXIT_UNDEFINED = 4
EXIT_MISMATCH = 5


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cspacemap",
        description="Translational C-space maps for constraints on object distances.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, expr=True):
        p.add_argument("--scene", required=True, help="scene JSON path")
        if expr:
            p.add_argument("--expr", help="constraint expression")
            p.add_argument("--preset", choices=PRESET_NAMES,
                           help="named problem instead of --expr")
        p.add_argument("--lambda", dest="lambdas", action="append", default=[],
                       metavar="K=V", help="preset parameter (repeatable)")
        p.add_argument("--subject", default="B", help="moving object name")
        p.add_argument("--disk-segments", type=int, default=None)
        p.add_argument("--eps", type=float, default=None)

    p = sub.add_parser("dist", help="print one distance value and witness")
    p.add_argument("--scene", required=True)
    p.add_argument("--kind", required=True,
                   choices=[k.value for k in distances.DistanceKind])
    p.add_argument("--subject", required=True)
    p.add_argument("--reference", required=True)
    p.add_argument("--at", default="0,0", metavar="X,Y",
                   help="translation of the subject")
    p.add_argument("--disk-segments", type=int, default=None)
    p.add_argument("--eps", type=float, default=None)

    p = sub.add_parser("region", help="construct the feasible region")
    common(p)
    p.add_argument("--out", help="map JSON output path")
    p.add_argument("--svg", help="SVG output path")

    p = sub.add_parser("classify", help="membership of one translation")
    common(p)
    p.add_argument("--point", required=True, metavar="X,Y")

    p = sub.add_parser("sample", help="pointwise truth raster (PGM)")
    common(p)
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--out", required=True, help="PGM output path")

    p = sub.add_parser("render", help="SVG of scene, families, and region")
    common(p)
    p.add_argument("--svg", required=True)

    p = sub.add_parser("preset", help="expand a named problem, build and self-check")
    common(p, expr=False)
    p.add_argument("--preset", required=True, choices=PRESET_NAMES)
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--out", help="map JSON output path")
    p.add_argument("--svg", help="SVG output path")
    p.add_argument("--max-disagree", type=float, default=0.005,
                   help="allowed fraction of non-band cells disagreeing")
    return ap


def _parse_params(items: list[str]) -> dict[str, float]:
    params: dict[str, float] = {}
    for item in items:
        if "=" not in item:
            raise ValueError(f"--lambda wants K=V, got {item!r}")
        k, v = item.split("=", 1)
        params[k.strip()] = float(v)
    return params


def _load(args) -> Scene:
    scene = load_scene(args.scene)
    cfg = scene.config
    if getattr(args, "disk_segments", None):
        cfg = replace(cfg, disk_segments=args.disk_segments)
    if getattr(args, "eps", None):
        cfg = replace(cfg, eps=args.eps)
    return Scene(scene.objects, scene.groups, scene.container, cfg)


def _expression(args, scene: Scene) -> str:
    if getattr(args, "expr", None):
        return args.expr
    if getattr(args, "preset", None):
        params = _parse_params(args.lambdas)
        return preset_expression(args.preset, scene, params, args.subject)
    raise ValueError("need --expr or --preset")


def _point(text: str) -> Point:
    x, y = text.split(",")
    return Point(float(x), float(y))


def _family_boundaries(expr_text: str, scene: Scene):
    """Closed-slice outlines per atom, for rendering."""
    e = normalize(multi_obstacle_expand(parse(expr_text), scene))
    ctx = _EvalContext(scene)
    out = []
    for atom in _atoms_of(e):
        fam = _KIND_TO_FAMILY.get(atom.dist)
        if fam is None or atom.cmp == Cmp.TO_MIN:
            continue
        try:
            sl = ctx.cache_for(atom).slice(fam, atom.lam)
        except CspaceError:
            continue
        label = f"{atom.dist.value}({atom.subject},{atom.reference}) @ {atom.lam:g}"
        out.append((label, sl.region))
    return out


def backend_agreement(expr_text: str, scene: Scene, grid: int = 200):
    """Compare the region backend against the pointwise raster.

    Returns (region, bitmap, disagree_fraction, band_cells, comp_region,
    comp_oracle). Cells whose distance margin falls inside the construction
    error band are excluded from the disagreement count but kept for the
    component comparison.
    """
    e = parse(expr_text)
    window = configuration_window(e, scene)
    region = eval_region(e, scene, window=window)
    bitmap, margins, _diags = oracle_map(e, scene, grid=grid, window=window,
                                         with_margin=True)
    pts = bitmap.cell_centers()
    codes_region = nr_classify_batch(region, pts, eps=scene.config.eps)
    member = (codes_region == 1).reshape(bitmap.codes.shape)
    amb_region = (codes_region == 2).reshape(bitmap.codes.shape)

    n = scene.config.disk_segments
    slice_err = 0.0
    for atom in _atoms_of(normalize(multi_obstacle_expand(e, scene))):
        if atom.lam is not None:
            slice_err = max(slice_err, abs(atom.lam) * (1.0 / np.cos(np.pi / n) - 1.0))
    band = slice_err + 2 * scene.config.eps_cmp + 1e-6

    oracle_true = bitmap.codes == 1
    oracle_amb = bitmap.codes == 2
    in_band = (margins <= band) | oracle_amb | amb_region
    comparable = ~in_band
    disagree = comparable & (member != oracle_true)
    frac = float(np.sum(disagree)) / max(1, int(np.sum(comparable)))
    comp_region = flood_components(member)
    comp_oracle = flood_components(oracle_true)
    return region, bitmap, frac, int(np.sum(in_band)), comp_region, comp_oracle


# ---------------------------------------------------------------------------
# Commands


def _cmd_dist(args) -> int:
    scene = _load(args)
    kind = distances.DistanceKind(args.kind)
    for name in (args.subject, args.reference):
        if name not in scene.objects:
            raise UnknownObjectError(f"unknown object {name!r}")
    B = scene.objects[args.subject].translated(_point(args.at))
    A = scene.objects[args.reference]
    seg = scene.config.disk_segments
    witness = None
    if kind is distances.DistanceKind.D1:
        value = distances.d1(A, B)
    elif kind is distances.DistanceKind.D2:
        value = distances.d2(A, B)
    elif kind is distances.DistanceKind.GAMMA1:
        sd = distances.gamma1(B, A)
        value, witness = sd.value, sd.witness
    elif kind is distances.DistanceKind.GAMMA2:
        value = distances.gamma2(B, A)
    elif kind in (distances.DistanceKind.ETA1, distances.DistanceKind.ETA2):
        e1, e2 = distances.eta(B, A)
        value = e1.value if kind is distances.DistanceKind.ETA1 else e2
        witness = e1.witness
    elif kind in (distances.DistanceKind.DELTA1, distances.DistanceKind.DELTA2):
        d1v, d2v = distances.delta(B, A)
        value = d1v.value if kind is distances.DistanceKind.DELTA1 else d2v
        witness = d1v.witness
    elif kind is distances.DistanceKind.DSTAR:
        value = distances.dstar(A, B)
    elif kind is distances.DistanceKind.MU_BA:
        sd = distances.mu(B, A, seg)
        value, witness = sd.value, sd.witness
    elif kind is distances.DistanceKind.MU_AB:
        sd = distances.mu(A, B, seg)
        value, witness = sd.value, sd.witness
    else:
        value = distances.hausdorff(A, B, disk_segments=seg)
    print(f"{args.kind}({args.subject}+{args.at},{args.reference}) = {value:.9g}")
    if witness:
        a, b = witness
        print(f"witness: ({a.x:.9g},{a.y:.9g}) -> ({b.x:.9g},{b.y:.9g})")
    return EXIT_OK


def _cmd_region(args) -> int:
    scene = _load(args)
    text = _expression(args, scene)
    e = parse(text)
    region = eval_region(e, scene)
    print(f"region: area={region.area.area:.6g} "
          f"features={len(region.features)} cracks={len(region.cracks)} "
          f"pieces={len(region.pieces)}")
    for d in region.diagnostics:
        print(f"note: {d}")
    if args.out:
        save_map(region, args.out)
        print(f"map written to {args.out}")
    if args.svg:
        window = region.window or configuration_window(e, scene)
        svg = render_svg(window, dict(scene.objects),
                         _family_boundaries(text, scene), region)
        with open(args.svg, "w") as fh:
            fh.write(svg)
        print(f"svg written to {args.svg}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    scene = _load(args)
    text = _expression(args, scene)
    e = parse(text)
    p = _point(args.point)
    outcome = eval_point(e, scene, p)
    region = eval_region(e, scene)
    membership = nr_classify(region, p, scene.config.eps)
    print(f"point ({p.x:g},{p.y:g}): eval={outcome.verdict} "
          f"region={membership.value}")
    for d in outcome.diagnostics:
        print(f"note: {d}")
    return EXIT_OK


def _cmd_sample(args) -> int:
    scene = _load(args)
    text = _expression(args, scene)
    e = parse(text)
    bitmap = oracle_map(e, scene, grid=args.grid)
    bitmap.to_pgm(args.out)
    print(f"bitmap {args.grid}x{args.grid}: true={bitmap.true_fraction():.3%} "
          f"components={bitmap.component_count()}")
    print(f"pgm written to {args.out}")
    return EXIT_OK


def _cmd_render(args) -> int:
    scene = _load(args)
    text = _expression(args, scene)
    e = parse(text)
    region = eval_region(e, scene)
    window = region.window or configuration_window(e, scene)
    svg = render_svg(window, dict(scene.objects),
                     _family_boundaries(text, scene), region)
    with open(args.svg, "w") as fh:
        fh.write(svg)
    print(f"svg written to {args.svg}")
    return EXIT_OK


def _cmd_preset(args) -> int:
    scene = _load(args)
    params = _parse_params(args.lambdas)
    text = preset_expression(args.preset, scene, params, args.subject)
    print(f"expression: {text}")
    region, bitmap, frac, band_cells, comp_r, comp_o = backend_agreement(
        text, scene, grid=args.grid)
    print(f"backend agreement: disagree={frac:.4%} on non-band cells "
          f"(band cells: {band_cells})")
    print(f"components: region={comp_r} oracle={comp_o}")
    ok = frac <= args.max_disagree and comp_r == comp_o
    if args.out:
        save_map(region, args.out)
        print(f"map written to {args.out}")
    if args.svg:
        window = region.window
        svg = render_svg(window, dict(scene.objects),
                         _family_boundaries(text, scene), region)
        with open(args.svg, "w") as fh:
            fh.write(svg)
        print(f"svg written to {args.svg}")
    if not ok:
        print("backend disagreement beyond tolerance", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "dist": _cmd_dist,
        "region": _cmd_region,
        "classify": _cmd_classify,
        "sample": _cmd_sample,
        "render": _cmd_render,
        "preset": _cmd_preset,
    }
    try:
        return handlers[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SceneError as exc:
        print(f"scene error: {exc}", file=sys.stderr)
        return EXIT_SCENE
    except (UnknownObjectError, UnknownGroupError, MixedSubjectsError) as exc:
        print(f"scene error: {exc}", file=sys.stderr)
        return EXIT_SCENE
    except UndefinedDistanceError as exc:
        print(f"undefined distance: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except OracleMismatchError as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (CspaceError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

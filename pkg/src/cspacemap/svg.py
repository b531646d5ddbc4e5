"""Deterministic SVG 1.1 rendering of scenes, family boundaries, and regions.

Output is byte-stable for a fixed input: fixed coordinate formatting, fixed
style palette, elements emitted in argument order.
"""

from .geom import MultiPolygon
from .region import Flag, RegionNR

_STROKES = ("#1f6f8b", "#99582a", "#432818", "#6a994e", "#bc4749", "#545e75")


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def _path_of(mp: MultiPolygon) -> str:
    cmds = []
    for ring in mp.rings():
        pts = ring.coords()
        cmds.append("M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts) + " Z")
    return " ".join(cmds)


def render_svg(
    window: tuple[float, float, float, float],
    scene_objects: dict[str, MultiPolygon] | None = None,
    family_boundaries: list[tuple[str, MultiPolygon]] | None = None,
    region: RegionNR | None = None,
    width: int = 640,
) -> str:
    x0, y0, x1, y1 = window
    w = x1 - x0
    h = y1 - y0
    height = max(1, int(round(width * h / w)))
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(w)} {_fmt(h)}">'
    )
    # y flips so the plane reads north-up
    out.append(f'<g transform="scale(1,-1)">')
    out.append(f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" width="{_fmt(w)}" '
               f'height="{_fmt(h)}" fill="#fbfaf8" stroke="none"/>')

    for name in sorted(scene_objects or {}):
        mp = scene_objects[name]
        if mp.is_empty:
            continue
        out.append(
            f'<path d="{_path_of(mp)}" fill="#d8d4cb" fill-rule="evenodd" '
            f'stroke="#6b675f" stroke-width="{_fmt(w / 320)}"><title>{name}</title></path>'
        )

    for i, (label, boundary) in enumerate(family_boundaries or []):
        if boundary.is_empty:
            continue
        stroke = _STROKES[i % len(_STROKES)]
        dash = "" if i % 2 == 0 else f' stroke-dasharray="{_fmt(w / 80)} {_fmt(w / 160)}"'
        out.append(
            f'<path d="{_path_of(boundary)}" fill="none" stroke="{stroke}" '
            f'stroke-width="{_fmt(w / 400)}"{dash}><title>{label}</title></path>'
        )

    if region is not None:
        if not region.area.is_empty:
            out.append(
                f'<path d="{_path_of(region.area)}" fill="#2a9d8f" fill-opacity="0.35" '
                f'fill-rule="evenodd" stroke="none"/>'
            )
        for piece in region.pieces:
            style = "#14746f" if piece.flag is Flag.INCLUDED else "#e07a5f"
            if piece.flag is Flag.AMBIGUOUS:
                style = "#b5179e"
            if piece.synthetic:
                continue
            out.append(
                f'<line x1="{_fmt(piece.a[0])}" y1="{_fmt(piece.a[1])}" '
                f'x2="{_fmt(piece.b[0])}" y2="{_fmt(piece.b[1])}" '
                f'stroke="{style}" stroke-width="{_fmt(w / 300)}"/>'
            )
        for feat in region.features:
            if feat.kind == "POINT":
                x, y = feat.points[0]
                out.append(
                    f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(w / 150)}" '
                    f'fill="#14746f"/>'
                )
            else:
                d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in feat.points)
                out.append(
                    f'<path d="{d}" fill="none" stroke="#14746f" '
                    f'stroke-width="{_fmt(w / 200)}"/>'
                )
        for crack in region.cracks:
            if crack.kind == "POINT":
                x, y = crack.points[0]
                out.append(
                    f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(w / 150)}" '
                    f'fill="none" stroke="#e07a5f" stroke-width="{_fmt(w / 400)}"/>'
                )
            else:
                d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in crack.points)
                out.append(
                    f'<path d="{d}" fill="none" stroke="#e07a5f" '
                    f'stroke-width="{_fmt(w / 200)}" stroke-dasharray="'
                    f'{_fmt(w / 200)} {_fmt(w / 200)}"/>'
                )

    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

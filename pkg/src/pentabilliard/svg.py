"""Static SVG figures: the disc tiling and strip decompositions.

Output is deterministic: fixed float formatting, stable element order, no
timestamps, so rendering twice produces byte-identical files.
"""

from __future__ import annotations

from fractions import Fraction
from math import atan2, cos, hypot, pi, sin

from .golden import PentaReal
from .projline import ProjPoint
from .tiling import IdealPentagon, child_pentagon, root_pentagon
from .tracer import (SingularHit, SurfaceModel, TracePoint, _cross, _dot,
                     _exit_side, _vadd, _vscale, _vsub, build_surface,
                     coordinate_to_vector, trace)
from .words import cyclic_eq, least_rotation


def _fmt(v: float) -> str:
    return f"{v:.5f}"


# --- hyperbolic tiling ------------------------------------------------------

def _circle_point(p: ProjPoint) -> tuple[float, float]:
    """Boundary coordinate -> unit circle via the half-angle parametrization."""
    if p.is_infinity:
        return (-1.0, 0.0)
    t = float(p)
    d = 1 + t * t
    return ((1 - t * t) / d, 2 * t / d)


def _geodesic_points(a: ProjPoint, b: ProjPoint, steps: int = 32):
    """Polyline along the geodesic between two ideal points."""
    ux, uy = _circle_point(a)
    vx, vy = _circle_point(b)
    dot = ux * vx + uy * vy
    if abs(1 + dot) < 1e-12:  # diameter
        return [(ux, uy), (vx, vy)]
    cx, cy = (ux + vx) / (1 + dot), (uy + vy) / (1 + dot)
    r = hypot(cx - ux, cy - uy)
    a1 = atan2(uy - cy, ux - cx)
    a2 = atan2(vy - cy, vx - cx)
    span = a2 - a1
    while span > pi:
        span -= 2 * pi
    while span < -pi:
        span += 2 * pi
    return [(cx + r * cos(a1 + span * i / steps),
             cy + r * sin(a1 + span * i / steps)) for i in range(steps + 1)]


def _tiling_arcs(depth: int):
    """All distinct pentagon sides of generation <= depth, in draw order."""
    seen = set()
    arcs = []
    queue: list[tuple[IdealPentagon, int | None]] = [(root_pentagon(), None)]
    while queue:
        pent, back = queue.pop(0)
        for i in range(5):
            side = pent.side(i)
            key = frozenset(side)
            if key not in seen:
                seen.add(key)
                arcs.append(side)
        if pent.generation < depth:
            for i in range(5):
                if i == back:
                    continue
                child = child_pentagon(pent, i)
                # the shared side is (child[0], child[4]), i.e. side index 4
                queue.append((child, 4))
    return arcs


def render_tiling(depth: int) -> str:
    """SVG of the ideal-pentagon tiling to the given generation."""
    arcs = _tiling_arcs(depth)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.1 -1.1 2.2 2.2" '
        'width="640" height="640">',
        '<g transform="scale(1,-1)">',
        '<circle cx="0" cy="0" r="1" fill="none" stroke="#888" '
        'stroke-width="0.004"/>',
    ]
    for a, b in arcs:
        pts = _geodesic_points(a, b)
        path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        parts.append(f'<polyline points="{path}" fill="none" stroke="#003366" '
                     'stroke-width="0.006"/>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# --- strip decomposition ----------------------------------------------------

def _corner_enters(surface: SurfaceModel, sheet: int, k: int, d) -> bool:
    """Does a ray from vertex k of the sheet polygon in direction d enter it?"""
    verts = [surface.side(sheet, i)[0] for i in range(5)]
    v = verts[k]
    e1 = _vsub(verts[(k + 1) % 5], v)
    e2 = _vsub(verts[(k - 1) % 5], v)
    det = _cross(e1, e2)
    a = _cross(d, e2)
    b = _cross(e1, d)
    s = det.sign()
    return (a.sign() * s > 0) and (b.sign() * s > 0)


def _separatrix_segments(surface: SurfaceModel, d, max_steps: int):
    """Segments of all vertex-to-vertex trajectories, grouped per sheet."""
    segs: dict[int, list] = {0: [], 1: []}
    for sheet0 in (0, 1):
        for k in range(5):
            for dd in (d, (-d[0], -d[1])):
                if not _corner_enters(surface, sheet0, k, dd):
                    continue
                sheet = sheet0
                p = surface.side(sheet, k)[0]
                entry = None
                for _ in range(max_steps):
                    try:
                        side, q = _exit_side(surface, sheet, p, dd, entry)
                    except SingularHit as hit:
                        segs[sheet].append((p, hit.point))
                        break
                    segs[sheet].append((p, q))
                    t = surface.translations[side]
                    p = _vsub(q, t) if sheet == 0 else _vadd(q, t)
                    sheet = 1 - sheet
                    entry = side
    return segs


def _clip_halfplane(poly, values, keep_nonneg: bool):
    """Sutherland-Hodgman clip of a polygon against sign(value) >= 0 (or <=)."""
    out = []
    out_vals = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        fp, fq = values[i], values[(i + 1) % n]
        sp = fp.sign() if not keep_nonneg else -fp.sign()
        sq = fq.sign() if not keep_nonneg else -fq.sign()
        # normalized: keep where s <= 0
        if sp <= 0:
            out.append(p)
            out_vals.append(fp)
        if sp * sq < 0:
            t = fp / (fp - fq)
            out.append(_vadd(p, _vscale(t, _vsub(q, p))))
            out_vals.append(fp - fp)  # exact zero
    return out, out_vals


def _strip_regions(surface: SurfaceModel, x: ProjPoint, words: tuple[str, str],
                   max_steps: int):
    """Per sheet, the slab polygons between separatrix lines, classified.

    Returns {sheet: [(polygon, word_index), ...]} where word_index points
    into `words`.
    """
    d = coordinate_to_vector(x)
    segs = _separatrix_segments(surface, d, max_steps)
    canon = tuple(least_rotation(w) for w in words)
    regions: dict[int, list] = {0: [], 1: []}
    for sheet in (0, 1):
        poly = [surface.side(sheet, i)[0] for i in range(5)]
        offsets = {_cross(d, p) for seg in segs[sheet] for p in seg}
        offsets |= {_cross(d, p) for p in poly}
        cuts = sorted(offsets)
        for lo, hi in zip(cuts, cuts[1:]):
            vals_lo = [_cross(d, p) - lo for p in poly]
            clipped, vals = _clip_halfplane(poly, vals_lo, keep_nonneg=True)
            if len(clipped) < 3:
                continue
            vals_hi = [_cross(d, p) - hi for p in clipped]
            clipped, _ = _clip_halfplane(clipped, vals_hi, keep_nonneg=False)
            if len(clipped) < 3:
                continue
            n = len(clipped)
            cx = clipped[0]
            sx, sy = clipped[0]
            for p in clipped[1:]:
                sx = sx + p[0]
                sy = sy + p[1]
            inv = Fraction(1, n)
            centroid = (_vscale(PentaReal(1, 0, 0, 0, n), (sx, sy))[0],
                        _vscale(PentaReal(1, 0, 0, 0, n), (sx, sy))[1])
            result = trace(surface, TracePoint(sheet, centroid, d), max_steps)
            if not result.closed:
                raise RuntimeError("strip region classification trace failed")
            key = least_rotation(result.word)
            regions[sheet].append((clipped, canon.index(key)))
    return regions


def _strip_lengths(surface: SurfaceModel, x: ProjPoint, words, max_steps):
    """Euclidean lengths of one closed trajectory per strip (for shading)."""
    d = coordinate_to_vector(x)
    from .tracer import strips_for_direction
    report = strips_for_direction(surface, x, max_steps)
    lengths = {}
    for start in report.sample_points:
        sheet, p = start.sheet, start.position
        dd = start.direction
        entry = None
        total = 0.0
        state0 = (sheet, p)
        for _ in range(max_steps):
            side, q = _exit_side(surface, sheet, p, dd, entry)
            total += hypot(float(q[0]) - float(p[0]),
                           float(q[1]) - float(p[1]))
            t = surface.translations[side]
            p = _vsub(q, t) if sheet == 0 else _vadd(q, t)
            sheet = 1 - sheet
            entry = side
            if (sheet, p) == state0:
                break
        lengths[least_rotation(report.orbit_pair.short
                               if start is report.sample_points[0]
                               else report.orbit_pair.long)] = total
    return report, lengths


def render_strips(x: ProjPoint, max_steps: int = 20000) -> str:
    """SVG of the two parallel strips in the direction x, longer one shaded."""
    surface = build_surface()
    report, lengths = _strip_lengths(surface, x, None, max_steps)
    words = (report.orbit_pair.short, report.orbit_pair.long)
    if report.tie:
        shaded = max(lengths, key=lambda k: (lengths[k], k))
    else:
        shaded = least_rotation(report.orbit_pair.long)
    regions = _strip_regions(surface, x, words, max_steps)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.3 -1.3 4.9 2.6" '
        'width="960" height="512">',
        '<g transform="scale(1,-1)">',
    ]
    fills = {}
    for i, w in enumerate(words):
        fills[i] = "#b0c4de" if least_rotation(w) == shaded else "#ffffff"
    for sheet in (0, 1):
        dx = 0.0 if sheet == 0 else 2.3
        for poly, wi in regions[sheet]:
            pts = " ".join(
                f"{_fmt(float(p[0]) + dx)},{_fmt(float(p[1]))}" for p in poly)
            parts.append(f'<polygon points="{pts}" fill="{fills[wi]}" '
                         'stroke="#666" stroke-width="0.004"/>')
        outline = " ".join(
            f"{_fmt(float(surface.side(sheet, i)[0][0]) + dx)},"
            f"{_fmt(float(surface.side(sheet, i)[0][1]))}" for i in range(5))
        parts.append(f'<polygon points="{outline}" fill="none" stroke="#000" '
                     'stroke-width="0.01"/>')
    parts.append(
        f'<text x="-1.2" y="-1.15" font-size="0.12" transform="scale(1,-1)">'
        f'words {words[0]} / {words[1]}</text>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

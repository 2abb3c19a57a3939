"""Geometric layout of subdigons and SVG frames of the merge animation.

Layout convention: the roof is drawn horizontally at the bottom, its left
endpoint is vertex 0 and the remaining vertices follow around the polygon
away from the roof (up the left side first), ending at the roof's right
endpoint.  Child ``i`` of the central polygon sits on the side between
central vertices ``i-1`` and ``i``, so the first child is on the side that
meets the roof's left endpoint.  ``mirror=True`` reflects everything
left-to-right.

The animation has four stages:

1. the children of ``decompose(s)`` side by side under a ``∇k`` glyph,
2. the glyph morphs into the central ``(k+1)``-gon,
3. each child moves onto its side of the central polygon,
4. the merged vertices move to the regular-polygon layout of ``s``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .subdigon import NULL, Subdigon, decompose, leaf_count, nabla

__all__ = [
    "Layout", "Marker", "Frame", "DEFAULT_STAGE_FRAMES",
    "ROOF_COLOR", "BOUNDARY_COLOR", "DIAGONAL_COLOR",
    "layout_subdigon", "animate_merge", "interpolate", "interpolation_weights",
    "emit_svg", "emit_smil", "frames_view_box", "write_frames",
]

ROOF_COLOR = "#d62728"
BOUNDARY_COLOR = "#000000"
DIAGONAL_COLOR = "#7f7f7f"
FACE_FILL = "#e8eef7"
_STROKES = {"roof": ROOF_COLOR, "boundary": BOUNDARY_COLOR, "diagonal": DIAGONAL_COLOR}

# frames 0 / 1-20 / 21-50 / 51-75
DEFAULT_STAGE_FRAMES = (1, 20, 30, 25)

Point = tuple  # (x, y), y pointing up


@dataclass(frozen=True)
class Layout:
    vertices: tuple
    edges: tuple  # (i, j, style), style in {"roof", "boundary", "diagonal"}
    faces: tuple  # vertex-index cycles

    def with_vertices(self, vertices: Sequence[Point]) -> "Layout":
        if len(vertices) != len(self.vertices):
            raise ValueError("vertex count changed")
        return Layout(tuple(tuple(p) for p in vertices), self.edges, self.faces)

    def translated(self, dx: float, dy: float) -> "Layout":
        return self.with_vertices([(x + dx, y + dy) for x, y in self.vertices])

    def bounds(self) -> tuple[float, float, float, float]:
        xs = [x for x, _ in self.vertices]
        ys = [y for _, y in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def euler(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)


@dataclass(frozen=True)
class Marker:
    """A transient text label, e.g. the operator glyph's name."""

    text: str
    x: float
    y: float


@dataclass(frozen=True)
class Frame:
    index: int
    stage: int
    shapes: tuple = ()
    markers: tuple = ()
    # pairs ((shape_index, vertex_index), (shape_index, vertex_index)) that
    # denote the same vertex after merging
    glued: tuple = ()

    def vertex_count(self) -> int:
        """Distinct vertices once glued pairs are identified."""
        parent = {}

        def find(a):
            while parent.get(a, a) != a:
                a = parent[a]
            return a

        for a, b in self.glued:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        total = sum(len(s.vertices) for s in self.shapes)
        return total - sum(1 for a in parent if parent[a] != a)

    def points(self):
        for shape in self.shapes:
            yield from shape.vertices
        for m in self.markers:
            yield (m.x, m.y)


# ------------------------------------------------------------------- layout

def _regular_polygon(n: int, mirror: bool) -> list[Point]:
    # unit side length, roof from vertex 0 (left) to vertex n-1 (right) on y=0
    r = 0.5 / math.sin(math.pi / n)
    lift = r * math.cos(math.pi / n)
    pts = []
    for j in range(n):
        theta = -math.pi / 2 - math.pi / n - 2 * math.pi * j / n
        x, y = r * math.cos(theta), r * math.sin(theta) + lift
        pts.append((-x if mirror else x, y))
    return pts


def _topology(s: Subdigon):
    edges = []
    faces = []

    def walk(node, a):
        corners = [a]
        for child in node.children:
            corners.append(corners[-1] + leaf_count(child))
        faces.append(tuple(corners))
        for child, lo, hi in zip(node.children, corners, corners[1:]):
            if child.is_null:
                edges.append((lo, hi, "boundary"))
            else:
                edges.append((lo, hi, "diagonal"))
                walk(child, lo)

    n = leaf_count(s) + 1
    edges.append((0, n - 1, "roof"))
    if not s.is_null:
        walk(s, 0)
    return n, tuple(edges), tuple(faces)


def layout_subdigon(s: Subdigon, mirror: bool = False) -> Layout:
    """Place ``s`` on a regular polygon with unit sides and the roof at the bottom."""
    n, edges, faces = _topology(s)
    return Layout(tuple(_regular_polygon(n, mirror)), edges, faces)


# ------------------------------------------------------------ interpolation

def interpolation_weights(i: int, n: int) -> tuple[Fraction, Fraction]:
    """Exact ``(start, end)`` weights of frame ``i`` in an ``n``-frame move."""
    if n < 2:
        raise ValueError(f"need at least 2 frames, got {n}")
    if not 0 <= i <= n - 1:
        raise ValueError(f"frame index {i} outside 0..{n - 1}")
    w = Fraction(i, n - 1)
    return 1 - w, w


def interpolate(start: Sequence[Point], end: Sequence[Point], i: int, n: int) -> list[Point]:
    """Weighted average ``(1-w)*start + w*end`` with ``w = i/(n-1)``."""
    if len(start) != len(end):
        raise ValueError(f"start has {len(start)} points but end has {len(end)}")
    a, b = (float(w) for w in interpolation_weights(i, n))
    return [(a * sx + b * ex, a * sy + b * ey) for (sx, sy), (ex, ey) in zip(start, end)]


# ---------------------------------------------------------------- animation

def _glyph_points(k: int, center_x: float, base_y: float, depth: float = 0.8) -> list[Point]:
    # ∇: top bar from vertex 0 to vertex k, vertices 1..k-1 down the V
    pts = []
    for j in range(k + 1):
        u = j / k
        pts.append((center_x - 0.5 + u, base_y + depth * abs(2 * u - 1)))
    return pts


def _rigid_onto(points: Sequence[Point], a: Point, b: Point) -> list[Point]:
    """Move ``points`` rigidly so the first maps to ``a`` and the last to ``b``."""
    (x0, y0), (x1, y1) = points[0], points[-1]
    angle = math.atan2(b[1] - a[1], b[0] - a[0]) - math.atan2(y1 - y0, x1 - x0)
    c, s = math.cos(angle), math.sin(angle)
    out = []
    for x, y in points:
        dx, dy = x - x0, y - y0
        out.append((a[0] + c * dx - s * dy, a[1] + s * dx + c * dy))
    return out


def _stage_counts(frames_per_stage) -> tuple[int, int, int, int]:
    if isinstance(frames_per_stage, int):
        counts = (1, frames_per_stage, frames_per_stage, frames_per_stage)
    else:
        counts = tuple(frames_per_stage)
        if len(counts) != 4:
            raise ValueError("give one frame count per stage (4 values)")
    if counts[0] < 1 or min(counts[1:]) < 2:
        raise ValueError(f"stage 1 needs >= 1 frame and stages 2-4 need >= 2 frames; got {counts}")
    return counts


def animate_merge(s: Subdigon, frames_per_stage=DEFAULT_STAGE_FRAMES, mirror: bool = False) -> list[Frame]:
    """Frames showing ``s`` assembled from its decomposition.

    ``frames_per_stage`` is either four counts or one count ``n`` meaning
    ``(1, n, n, n)``.  Each moving stage runs ``interpolate`` over
    ``i = 0..n-1``, so its last frame sits exactly on the stage target.
    """
    if s.is_null:
        raise ValueError("the null subdigon has no merge to animate")
    n1, n2, n3, n4 = _stage_counts(frames_per_stage)
    k, children = decompose(s)

    # stage 1 row of children
    kids = [layout_subdigon(c, mirror) for c in children]
    gap = 0.6
    widths = [kid.bounds()[2] - kid.bounds()[0] for kid in kids]
    x = -(sum(widths) + gap * (k - 1)) / 2
    row = []
    for kid, w in zip(kids, widths):
        row.append(kid.translated(x - kid.bounds()[0], 0.0))
        x += w + gap
    top = max(kid.bounds()[3] for kid in row)
    base_y = top + 1.0

    central = layout_subdigon(nabla(k, [NULL] * k), mirror).translated(0.0, base_y)
    glyph = central.with_vertices(_glyph_points(k, 0.0, base_y))
    label = Marker(f"∇{k}", 0.0, base_y + 1.1)

    frames: list[Frame] = []

    def add(stage, shapes, markers=(), glued=()):
        frames.append(Frame(len(frames), stage, tuple(shapes), tuple(markers), tuple(glued)))

    for _ in range(n1):
        add(1, [glyph] + row, [label])

    for i in range(n2):
        morphed = glyph.with_vertices(interpolate(glyph.vertices, central.vertices, i, n2))
        add(2, [morphed] + row, [label])

    # stage 3: child i lands on the side (i-1, i) of the central polygon
    cv = central.vertices
    targets = [_rigid_onto(kid.vertices, cv[i], cv[i + 1]) for i, kid in enumerate(row)]
    glued = []
    for i, kid in enumerate(row):
        glued.append(((i + 1, 0), (0, i)))
        glued.append(((i + 1, len(kid.vertices) - 1), (0, i + 1)))
    for i in range(n3):
        moved = [kid.with_vertices(interpolate(kid.vertices, tgt, i, n3)) for kid, tgt in zip(row, targets)]
        add(3, [central] + moved, glued=glued)

    # stage 4: merged vertex set moves to the regular layout
    final = layout_subdigon(s, mirror)
    merged = [None] * len(final.vertices)
    offset = 0
    for i, tgt in enumerate(targets):
        for j, p in enumerate(tgt):
            merged[offset + j] = p
        offset += len(tgt) - 1
    for i, p in enumerate(cv):
        # central corners sit at the cumulative leaf offsets
        merged[sum(leaf_count(c) for c in children[:i])] = p
    for i in range(n4):
        add(4, [final.with_vertices(interpolate(merged, final.vertices, i, n4))])
    return frames


# --------------------------------------------------------------------- SVG

def _fmt(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def frames_view_box(frames: Sequence[Frame], pad: float = 0.4) -> tuple[float, float, float, float]:
    """A ``(min_x, min_y, width, height)`` box in SVG coordinates covering every frame."""
    pts = [p for fr in frames for p in fr.points()]
    if not pts:
        return (0.0, 0.0, 1.0, 1.0)
    xs = [x for x, _ in pts]
    ys = [-y for _, y in pts]
    return (min(xs) - pad, min(ys) - pad, max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad)


def _frame_body(frame: Frame, stroke: float) -> list[str]:
    lines = []
    for shape in frame.shapes:
        for face in shape.faces:
            pts = " ".join(f"{_fmt(shape.vertices[i][0])},{_fmt(-shape.vertices[i][1])}" for i in face)
            lines.append(f'<polygon points="{pts}" fill="{FACE_FILL}" stroke="none"/>')
    for shape in frame.shapes:
        # roof last so it is drawn on top
        for i, j, style in sorted(shape.edges, key=lambda e: e[2] == "roof"):
            (x1, y1), (x2, y2) = shape.vertices[i], shape.vertices[j]
            lines.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(-y1)}" x2="{_fmt(x2)}" y2="{_fmt(-y2)}" '
                f'stroke="{_STROKES[style]}" stroke-width="{_fmt(stroke)}" stroke-linecap="round"/>'
            )
    for m in frame.markers:
        lines.append(
            f'<text x="{_fmt(m.x)}" y="{_fmt(-m.y)}" font-size="0.5" text-anchor="middle" '
            f'font-family="serif">{m.text}</text>'
        )
    return lines


def _svg_open(view_box, width: int) -> str:
    mx, my, w, h = view_box
    height = max(1, round(width * h / w))
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{_fmt(mx)} {_fmt(my)} {_fmt(w)} {_fmt(h)}">'
    )


def emit_svg(frame: Frame, view_box=None, width: int = 480, stroke: float = 0.04) -> str:
    """Standalone SVG document for one frame (deterministic output)."""
    if view_box is None:
        view_box = frames_view_box([frame])
    body = _frame_body(frame, stroke)
    out = ['<?xml version="1.0" encoding="UTF-8"?>', _svg_open(view_box, width)]
    out += ["  " + line for line in body]
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_smil(frames: Sequence[Frame], fps: float = 20.0, width: int = 480, stroke: float = 0.04) -> str:
    """One SVG that flips through ``frames`` with SMIL discrete animation."""
    view_box = frames_view_box(frames)
    n = len(frames)
    total = n / fps
    out = ['<?xml version="1.0" encoding="UTF-8"?>', _svg_open(view_box, width)]
    for i, frame in enumerate(frames):
        start, stop = i / n, (i + 1) / n
        out.append('  <g display="none">')
        out.append(
            f'    <animate attributeName="display" values="none;inline;none" '
            f'keyTimes="0;{start:.6f};{stop:.6f}" dur="{total:.6f}s" calcMode="discrete" '
            f'repeatCount="indefinite"/>'
        )
        out += ["    " + line for line in _frame_body(frame, stroke)]
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_frames(frames: Sequence[Frame], out_dir, width: int = 480) -> list[Path]:
    """Write ``frame_0000.svg``, ``frame_0001.svg``, ... sharing one view box."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    box = frames_view_box(frames)
    paths = []
    for frame in frames:
        path = out / f"frame_{frame.index:04d}.svg"
        path.write_text(emit_svg(frame, box, width), encoding="utf-8")
        paths.append(path)
    return paths

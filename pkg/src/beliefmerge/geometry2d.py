"""Exact 2-D geometry of two-formula merging.

Each mu model becomes the point of its distance vector. Merging with
all positive weights selects the part of the point set's lower-left
convex chain that is visible from the origin; ties on a chain segment
survive, points reachable only along the axis-parallel closing
segments do not. Everything is integer or Fraction arithmetic, no
epsilons anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .distance import DistanceKind
from .errors import DegenerateLineError
from .formulae import Model
from .merge import Instance
from .weights import strictly_dominates

Point2 = tuple[int, int]


@dataclass(frozen=True)
class Line2:
    """a*x + b*y + c = 0 with (a, b) != (0, 0)."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __init__(self, a, b, c):
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if a == 0 and b == 0:
            raise DegenerateLineError("line needs (a, b) != (0, 0)")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def eval_at(self, p: Point2) -> Fraction:
        return self.a * p[0] + self.b * p[1] + self.c


def line_through(p: Point2, q: Point2) -> Line2:
    if p == q:
        raise DegenerateLineError(f"no unique line through coincident points {p}")
    a = q[1] - p[1]
    b = p[0] - q[0]
    return Line2(a, b, -(a * p[0] + b * p[1]))


def separates_from_origin(line: Line2, p: Point2) -> bool:
    """Strict sign test: points on the line are not separated, and a line
    through the origin separates nothing."""
    vp = line.eval_at(p)
    v0 = line.c
    if vp == 0 or v0 == 0:
        return False
    return (vp > 0) != (v0 > 0)


def _pareto_points(points: Iterable[Point2]) -> list[Point2]:
    pts = sorted(set(points))
    return [
        p for p in pts
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pts)
    ]


def _cross(o: Point2, a: Point2, b: Point2) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def visible_hull(points: Iterable[Point2]) -> set[Point2]:
    """Points on the origin-facing convex chain, including points interior
    to chain segments (they tie with the endpoints for the segment's
    normal weights).

    After discarding dominated points the survivors have strictly
    decreasing y for increasing x; a monotone-chain walk that pops only
    on strictly concave turns keeps exactly the on-chain points.
    """
    frontier = _pareto_points(points)
    if not frontier:
        raise ValueError("empty point set")
    chain: list[Point2] = []
    for p in frontier:
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) < 0:
            chain.pop()
        chain.append(p)
    return set(chain)


def _excludes(p: Point2, j: Point2, k: Point2) -> bool:
    """Whether the mutually undominated pair (j, k) leaves p minimal for
    no positive weights: p strictly inside the pair's band and strictly
    cut from the origin by the line through j and k."""
    if j[0] > k[0]:
        j, k = k, j
    if not (p[0] > j[0] and p[1] > k[1]):
        return False
    return separates_from_origin(line_through(j, k), p)


def algorithm1(inst: Instance, kind: DistanceKind) -> frozenset[Model]:
    """Two-formula merge by progressive exclusion.

    First removes strictly dominated models until stable, then removes
    every model excluded by some pair of the remaining ones, again to a
    fixpoint. The survivors are exactly the all-positive-weights merge
    (cross-checked against the LP route in the test suite).
    """
    if inst.m != 2:
        raise ValueError("the geometric algorithm applies to two-formula profiles only")
    entries = list(zip(inst.mu_models(), inst.vectors(kind)))

    changed = True
    while changed:
        changed = False
        for model, vec in list(entries):
            if any(strictly_dominates(other, vec) for _, other in entries if other != vec):
                entries.remove((model, vec))
                changed = True

    changed = True
    while changed:
        changed = False
        points = sorted({vec for _, vec in entries})
        for model, vec in list(entries):
            hit = False
            for a in range(len(points)):
                for b in range(a + 1, len(points)):
                    j, k = points[a], points[b]
                    if j == vec or k == vec:
                        continue
                    if _excludes(vec, j, k):
                        hit = True
                        break
                if hit:
                    break
            if hit:
                entries.remove((model, vec))
                changed = True
    return frozenset(model for model, _ in entries)


def critical_weight_set(points: Iterable[Point2]) -> list[tuple[int, ...]]:
    """A finite weight set whose merge equals the all-positive merge.

    One vector per mutually undominated pair (the normal of the line
    through the two points, reduced to coprime positive integers), plus
    the two near-axis vectors [1, K] and [K, 1] covering the extreme
    slopes. Argmin sets change only at pair normals, so sampling every
    normal plus the two extremes reaches every selectable point.
    """
    pts = sorted(set(points))
    if not pts:
        raise ValueError("empty point set")
    out: dict[tuple[int, ...], None] = {}
    big = 1 + 2 * max(max(x, y) for x, y in pts)
    out[(1, big)] = None
    out[(big, 1)] = None
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            p, q = pts[i], pts[j]
            w1 = q[1] - p[1]
            w2 = p[0] - q[0]
            if w1 == 0 or w2 == 0 or (w1 > 0) != (w2 > 0):
                continue  # one point dominates the other
            w1, w2 = abs(w1), abs(w2)
            g = gcd(w1, w2)
            out[(w1 // g, w2 // g)] = None
    return list(out)


def render_svg(
    points: Sequence[Point2],
    selected: Iterable[Point2],
    path: str,
) -> None:
    """Deterministic SVG snapshot: axes, visible chain, then one circle
    per point, selected points filled. Byte-identical for equal input."""
    pts = sorted(set(points))
    if not pts:
        raise ValueError("empty point set")
    chosen = set(selected)
    margin = 40
    span = 600 - 2 * margin
    top = max(1, max(max(x, y) for x, y in pts))
    unit = span // top if top <= span else 1

    def sx(x: int) -> int:
        return margin + x * unit

    def sy(y: int) -> int:
        return 600 - margin - y * unit

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 600 600">',
        f'<line x1="{margin}" y1="{600 - margin}" x2="{600 - margin}" y2="{600 - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{600 - margin}" x2="{margin}" y2="{margin}" stroke="black"/>',
    ]
    chain = sorted(visible_hull(pts))
    if len(chain) >= 2:
        coords = " ".join(f"{sx(x)},{sy(y)}" for x, y in chain)
        lines.append(f'<polyline points="{coords}" fill="none" stroke="gray"/>')
    for x, y in pts:
        fill = "black" if (x, y) in chosen else "white"
        lines.append(
            f'<circle cx="{sx(x)}" cy="{sy(y)}" r="8" fill="{fill}" stroke="black"/>'
        )
    lines.append("</svg>")
    with open(path, "w", encoding="ascii") as handle:
        handle.write("\n".join(lines) + "\n")

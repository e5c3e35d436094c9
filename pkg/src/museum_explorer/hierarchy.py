"""Dimension-ordered aggregation tree and its three layouts.

The hierarchy groups the catalog level by level along a chosen
dimension order. "Unknown" buckets are kept, so counts partition the
collection exactly at every level. Children are globally ordered by
(count desc, label asc) so treemap, sunburst and any UI agree.

Layouts are pure geometry: squarified treemap rectangles, sunburst
arcs, and a radar-style polygon series of normalized value frequencies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .catalog import UNKNOWN, Catalog, Dimension

DEFAULT_ORDER = (
    Dimension.OBJECT_TYPE,
    Dimension.MATERIAL,
    Dimension.DYNASTY,
    Dimension.ORIGIN_PLACE,
)


class EmptyOrder(ValueError):
    pass


class DuplicateDimension(ValueError):
    pass


class DegenerateFrame(ValueError):
    pass


class DegenerateRadii(ValueError):
    pass


class InsufficientCategories(ValueError):
    pass


@dataclass
class HierarchyNode:
    label: str
    depth: int
    count: int
    children: list = field(default_factory=list)
    member_ids: list = field(default_factory=list)


@dataclass(frozen=True)
class TreemapRect:
    path: tuple
    x: float
    y: float
    w: float
    h: float
    depth: int
    count: int


@dataclass(frozen=True)
class SunburstArc:
    path: tuple
    start_angle: float
    end_angle: float
    inner_r: float
    outer_r: float
    count: int


@dataclass
class PolygonSeries:
    dimension: Dimension
    axes: list
    values: list
    raw_counts: list


def build_hierarchy(cat: Catalog, order) -> HierarchyNode:
    """Group records level by level along `order`; leaves keep ids."""
    order = list(order)
    if not order:
        raise EmptyOrder("dimension order must be non-empty")
    if len(set(order)) != len(order):
        raise DuplicateDimension(f"repeated dimension in order {[d.value for d in order]}")

    def group(records, depth, label):
        node = HierarchyNode(label=label, depth=depth, count=len(records))
        if depth == len(order):
            node.member_ids = [r.id for r in records]
            return node
        d = order[depth]
        buckets = {}
        for r in records:
            buckets.setdefault(r.dims[d], []).append(r)
        children = [group(members, depth + 1, value) for value, members in buckets.items()]
        children.sort(key=lambda c: (-c.count, c.label))
        node.children = children
        return node

    return group(cat.records, 0, cat.portal_name)


# --- squarified treemap ------------------------------------------------------


def _row_worst_ratio(areas, side):
    """Worst tile aspect ratio if `areas` share one strip of length `side`."""
    total = sum(areas)
    if total <= 0 or side <= 0:
        return math.inf
    worst = 0.0
    for a in areas:
        ratio = max(side * side * a / (total * total), total * total / (side * side * a))
        worst = max(worst, ratio)
    return worst


def treemap_layout(root: HierarchyNode, width: float, height: float):
    """Squarified layout of the whole tree inside a width x height frame.

    Rows build greedily along the shorter side of the remaining
    sub-rectangle; a child joins the current row only while it does not
    worsen the row's worst aspect ratio. Each child's area is exactly
    proportional to its count. Zero-count nodes get zero-area rects at
    the parent origin so path addressing stays stable.
    """
    if width <= 0 or height <= 0:
        raise DegenerateFrame(f"frame must be positive, got {width}x{height}")
    rects = []

    def layout_node(node, path, x, y, w, h):
        rects.append(TreemapRect(path, x, y, w, h, node.depth, node.count))
        if not node.children:
            return
        if node.count == 0:
            for child in node.children:
                layout_node(child, path + (child.label,), x, y, 0.0, 0.0)
            return
        scale = (w * h) / node.count  # area per unit count
        placeable = [c for c in node.children if c.count > 0]
        for child in node.children:
            if child.count == 0:
                layout_node(child, path + (child.label,), x, y, 0.0, 0.0)
        rx, ry, rw, rh = x, y, w, h
        queue = list(placeable)
        while queue:
            side = min(rw, rh)
            row = [queue.pop(0)]
            while queue:
                current = _row_worst_ratio([c.count * scale for c in row], side)
                extended = _row_worst_ratio([c.count * scale for c in row + [queue[0]]], side)
                if extended <= current:
                    row.append(queue.pop(0))
                else:
                    break
            row_area = sum(c.count for c in row) * scale
            if rw >= rh:
                # vertical strip on the left, tiles stacked downward
                strip_w = row_area / rh if rh > 0 else 0.0
                cy = ry
                for c in row:
                    ch = (c.count * scale) / strip_w if strip_w > 0 else 0.0
                    layout_node(c, path + (c.label,), rx, cy, strip_w, ch)
                    cy += ch
                rx += strip_w
                rw = max(rw - strip_w, 0.0)
            else:
                # horizontal strip on top, tiles running rightward
                strip_h = row_area / rw if rw > 0 else 0.0
                cx = rx
                for c in row:
                    cw = (c.count * scale) / strip_h if strip_h > 0 else 0.0
                    layout_node(c, path + (c.label,), cx, ry, cw, strip_h)
                    cx += cw
                ry += strip_h
                rh = max(rh - strip_h, 0.0)

    layout_node(root, (root.label,), 0.0, 0.0, float(width), float(height))
    return rects


# --- sunburst ----------------------------------------------------------------


def sunburst_layout(root: HierarchyNode, inner_radius: float, ring_width: float):
    """Radial partition: depth-d nodes occupy ring d, angular span
    proportional to count. Root is the center disc spanning [0, 2*pi)."""
    if inner_radius < 0 or ring_width <= 0:
        raise DegenerateRadii(
            f"need inner_radius >= 0 and ring_width > 0, got {inner_radius}, {ring_width}"
        )
    arcs = []

    def layout_node(node, path, start, end):
        if node.depth == 0:
            inner, outer = 0.0, inner_radius
        else:
            inner = inner_radius + (node.depth - 1) * ring_width
            outer = inner + ring_width
        arcs.append(SunburstArc(path, start, end, inner, outer, node.count))
        span = end - start
        cursor = start
        for child in node.children:
            child_span = span * (child.count / node.count) if node.count > 0 else 0.0
            layout_node(child, path + (child.label,), cursor, cursor + child_span)
            cursor += child_span

    layout_node(root, (root.label,), 0.0, 2.0 * math.pi)
    return arcs


# --- polygon (radar) series --------------------------------------------------


def polygon_series(cat: Catalog, d: Dimension, top_k: int) -> PolygonSeries:
    """Frequency radar over the top_k values of one dimension.

    "Unknown" only participates when fewer than three named values
    exist; with fewer than three axes overall there is no polygon.
    """
    if top_k < 3:
        raise InsufficientCategories("top_k must be >= 3")
    if not cat.records:
        return PolygonSeries(dimension=d, axes=[], values=[], raw_counts=[])
    counts = {}
    for rec in cat.records:
        value = rec.dims[d]
        counts[value] = counts.get(value, 0) + 1
    named = {v: c for v, c in counts.items() if v != UNKNOWN}
    candidates = counts if len(named) < 3 else named
    ordered = sorted(candidates.items(), key=lambda item: (-item[1], item[0]))[:top_k]
    if len(ordered) < 3:
        raise InsufficientCategories(
            f"dimension {d.value!r} has only {len(ordered)} distinct values, need 3"
        )
    axes = [v for v, _ in ordered]
    raw_counts = [c for _, c in ordered]
    peak = max(raw_counts)
    values = [c / peak for c in raw_counts]
    return PolygonSeries(dimension=d, axes=axes, values=values, raw_counts=raw_counts)

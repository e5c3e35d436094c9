// SVG renderers for the four visualizations. Each takes a payload and
// returns a detached <svg>; every coordinate, size and angle comes
// verbatim from the payload (the data-* attributes make that testable).
// Rendering-only conversions (polar to cartesian for arc outlines,
// radar vertex placement) happen at draw time and are derived from the
// payload values they annotate.

import {
  NetworkPayload,
  PolygonPayload,
  SunburstPayload,
  TreemapPayload,
} from "./types.js";
import { DEPTH_COLORS, EDGE_COLORS, svgEl } from "./svg.js";

export interface RenderHooks {
  onArtifactHover?(id: string | null, event: MouseEvent): void;
  onValueNodeClick?(dimension: string, value: string): void;
  onPathClick?(path: string[]): void;
  onAxisHover?(axis: string, count: number, event: MouseEvent): void;
}

export function renderNetwork(payload: NetworkPayload, hooks: RenderHooks = {}): SVGSVGElement {
  const { width, height } = payload.params;
  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${height}`,
    class: "viz viz-network",
    "data-mode": payload.mode,
  });
  const byId = new Map(payload.nodes.map((n) => [n.id, n]));
  const edgeLayer = svgEl("g", { class: "edges" });
  for (const edge of payload.edges) {
    const a = byId.get(edge.src);
    const b = byId.get(edge.dst);
    if (!a || !b) continue;
    edgeLayer.appendChild(
      svgEl("line", {
        x1: a.x,
        y1: a.y,
        x2: b.x,
        y2: b.y,
        stroke: EDGE_COLORS[edge.edge_type] ?? "#999",
        "stroke-opacity": 0.35,
        "data-edge-type": edge.edge_type,
      }),
    );
  }
  svg.appendChild(edgeLayer);

  const nodeLayer = svgEl("g", { class: "nodes" });
  for (const node of payload.nodes) {
    const isHub = node.kind === "dimension_value";
    const circle = svgEl("circle", {
      cx: node.x,
      cy: node.y,
      r: isHub ? 6 + Math.sqrt(node.weight) * 2 : 5,
      fill: isHub ? EDGE_COLORS[node.dimension ?? ""] ?? "#666" : "#334",
      class: isHub ? "node hub-node" : "node artifact-node",
      "data-id": node.id,
      "data-kind": node.kind,
      "data-x": node.x,
      "data-y": node.y,
    });
    if (isHub && node.dimension) {
      circle.addEventListener("click", () =>
        hooks.onValueNodeClick?.(node.dimension as string, node.label),
      );
      circle.appendChild(svgEl("title")).textContent = `${node.dimension}: ${node.label}`;
    } else {
      circle.addEventListener("mouseenter", (e) => hooks.onArtifactHover?.(node.id, e));
      circle.addEventListener("mouseleave", (e) => hooks.onArtifactHover?.(null, e));
    }
    nodeLayer.appendChild(circle);
  }
  svg.appendChild(nodeLayer);
  svg.appendChild(renderEdgeLegend());
  return svg;
}

function renderEdgeLegend(): SVGGElement {
  const legend = svgEl("g", { class: "legend" });
  let i = 0;
  for (const [dim, color] of Object.entries(EDGE_COLORS)) {
    const y = 16 + i * 18;
    legend.appendChild(svgEl("line", { x1: 10, y1: y, x2: 34, y2: y, stroke: color, "stroke-width": 3 }));
    const label = svgEl("text", { x: 40, y: y + 4, class: "legend-label" });
    label.textContent = dim.replace("_", " ");
    legend.appendChild(label);
    i += 1;
  }
  return legend;
}

export function renderTreemap(payload: TreemapPayload, hooks: RenderHooks = {}): SVGSVGElement {
  const svg = svgEl("svg", {
    viewBox: `0 0 ${payload.frame.w} ${payload.frame.h}`,
    class: "viz viz-treemap",
  });
  const maxDepth = Math.max(0, ...payload.rects.map((r) => r.depth));
  for (const rect of payload.rects) {
    if (rect.w <= 0 || rect.h <= 0) continue;
    const isLeafLevel = rect.depth === maxDepth;
    const tile = svgEl("rect", {
      x: rect.x,
      y: rect.y,
      width: rect.w,
      height: rect.h,
      fill: rect.depth === 0 ? "none" : DEPTH_COLORS[(rect.depth - 1) % DEPTH_COLORS.length],
      "fill-opacity": isLeafLevel ? 0.9 : 0.15,
      stroke: "#fff",
      "stroke-width": Math.max(0.5, 2 - rect.depth * 0.5),
      class: "tile",
      "data-path": rect.path.join("/"),
      "data-depth": rect.depth,
      "data-count": rect.count,
    });
    if (rect.depth > 0) {
      tile.addEventListener("click", () => hooks.onPathClick?.(rect.path.slice(1)));
      tile.appendChild(svgEl("title")).textContent =
        `${rect.path.slice(1).join(" / ")} (${rect.count})`;
    }
    svg.appendChild(tile);
  }
  return svg;
}

function polar(cx: number, cy: number, r: number, angle: number): [number, number] {
  return [cx + r * Math.cos(angle), cy + r * Math.sin(angle)];
}

function arcPathD(cx: number, cy: number, arc: { start: number; end: number; inner_r: number; outer_r: number }): string {
  const span = arc.end - arc.start;
  const largeArc = span > Math.PI ? 1 : 0;
  const [x0, y0] = polar(cx, cy, arc.outer_r, arc.start);
  const [x1, y1] = polar(cx, cy, arc.outer_r, Math.min(arc.end, arc.start + span));
  const [x2, y2] = polar(cx, cy, arc.inner_r, arc.end);
  const [x3, y3] = polar(cx, cy, arc.inner_r, arc.start);
  return [
    `M ${x0} ${y0}`,
    `A ${arc.outer_r} ${arc.outer_r} 0 ${largeArc} 1 ${x1} ${y1}`,
    `L ${x2} ${y2}`,
    `A ${arc.inner_r} ${arc.inner_r} 0 ${largeArc} 0 ${x3} ${y3}`,
    "Z",
  ].join(" ");
}

export function renderSunburst(payload: SunburstPayload, hooks: RenderHooks = {}): SVGSVGElement {
  const maxR = Math.max(1, ...payload.arcs.map((a) => a.outer_r));
  const size = maxR * 2 + 4;
  const cx = size / 2;
  const cy = size / 2;
  const svg = svgEl("svg", { viewBox: `0 0 ${size} ${size}`, class: "viz viz-sunburst" });
  for (const arc of payload.arcs) {
    const depth = arc.path.length - 1;
    if (arc.end - arc.start <= 0) continue;
    const full = arc.end - arc.start >= Math.PI * 2 - 1e-9;
    const shape = full
      ? svgEl("circle", { cx, cy, r: arc.outer_r })
      : svgEl("path", { d: arcPathD(cx, cy, arc) });
    shape.setAttribute("fill", depth === 0 ? "#e8e8f0" : DEPTH_COLORS[(depth - 1) % DEPTH_COLORS.length]);
    shape.setAttribute("fill-opacity", full && depth === 0 ? "1" : "0.85");
    shape.setAttribute("stroke", "#fff");
    shape.setAttribute("class", "arc");
    shape.setAttribute("data-path", arc.path.join("/"));
    shape.setAttribute("data-start", String(arc.start));
    shape.setAttribute("data-end", String(arc.end));
    shape.setAttribute("data-count", String(arc.count));
    if (depth > 0) {
      shape.addEventListener("click", () => hooks.onPathClick?.(arc.path.slice(1)));
      shape.appendChild(svgEl("title")).textContent =
        `${arc.path.slice(1).join(" / ")} (${arc.count})`;
    }
    svg.appendChild(shape);
  }
  return svg;
}

export function renderPolygon(payload: PolygonPayload, hooks: RenderHooks = {}): SVGSVGElement {
  const size = 400;
  const cx = size / 2;
  const cy = size / 2;
  const radius = size / 2 - 60;
  const svg = svgEl("svg", { viewBox: `0 0 ${size} ${size}`, class: "viz viz-polygon" });
  const m = payload.axes.length;
  if (m === 0) {
    const note = svgEl("text", { x: cx, y: cy, "text-anchor": "middle", class: "no-data" });
    note.textContent = "no data";
    svg.appendChild(note);
    return svg;
  }
  const angle = (i: number) => -Math.PI / 2 + (2 * Math.PI * i) / m;

  // grid rings and spokes
  for (const level of [0.25, 0.5, 0.75, 1.0]) {
    const ring = payload.axes
      .map((_, i) => polar(cx, cy, radius * level, angle(i)))
      .map(([x, y]) => `${x},${y}`)
      .join(" ");
    svg.appendChild(svgEl("polygon", { points: ring, class: "grid-ring", fill: "none", stroke: "#ddd" }));
  }
  payload.axes.forEach((axis, i) => {
    const [x, y] = polar(cx, cy, radius, angle(i));
    svg.appendChild(svgEl("line", { x1: cx, y1: cy, x2: x, y2: y, stroke: "#eee" }));
    const [lx, ly] = polar(cx, cy, radius + 18, angle(i));
    const label = svgEl("text", {
      x: lx,
      y: ly,
      "text-anchor": "middle",
      class: "axis-label",
      "data-axis": axis,
      "data-count": payload.raw_counts[i],
    });
    label.textContent = axis;
    label.addEventListener("mouseenter", (e) =>
      hooks.onAxisHover?.(axis, payload.raw_counts[i], e),
    );
    svg.appendChild(label);
  });

  const points = payload.values
    .map((v, i) => polar(cx, cy, radius * v, angle(i)))
    .map(([x, y]) => `${x},${y}`)
    .join(" ");
  svg.appendChild(
    svgEl("polygon", {
      points,
      class: "series",
      fill: "#4c78a8",
      "fill-opacity": 0.35,
      stroke: "#4c78a8",
      "stroke-width": 2,
      "data-values": payload.values.join(","),
    }),
  );
  payload.values.forEach((v, i) => {
    const [x, y] = polar(cx, cy, radius * v, angle(i));
    const dot = svgEl("circle", { cx: x, cy: y, r: 3, fill: "#4c78a8", "data-value": v });
    dot.appendChild(svgEl("title")).textContent =
      `${payload.axes[i]}: ${payload.raw_counts[i]}`;
    svg.appendChild(dot);
  });
  return svg;
}

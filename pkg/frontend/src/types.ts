// Payload shapes served by the geometry API. The client never derives
// geometry itself; these are drawn as-is.

export const DIMENSIONS = ["origin_place", "object_type", "dynasty", "material"] as const;
export type Dimension = (typeof DIMENSIONS)[number];

export type VizName = "network" | "treemap" | "sunburst" | "polygon";
export type GraphMode = "hub" | "pairwise";

export interface NetworkNode {
  id: string;
  kind: "artifact" | "dimension_value";
  label: string;
  weight: number;
  x: number;
  y: number;
  dimension?: Dimension;
}

export interface NetworkEdge {
  src: string;
  dst: string;
  edge_type: Dimension;
}

export interface NetworkPayload {
  mode: GraphMode;
  nodes: NetworkNode[];
  edges: NetworkEdge[];
  params: { width: number; height: number; iterations: number; seed: number; prng: string };
}

export interface TreemapRect {
  path: string[];
  x: number;
  y: number;
  w: number;
  h: number;
  depth: number;
  count: number;
}

export interface TreemapPayload {
  frame: { w: number; h: number };
  rects: TreemapRect[];
}

export interface SunburstArc {
  path: string[];
  start: number;
  end: number;
  inner_r: number;
  outer_r: number;
  count: number;
}

export interface SunburstPayload {
  arcs: SunburstArc[];
}

export interface PolygonPayload {
  dimension: Dimension;
  axes: string[];
  values: number[];
  raw_counts: number[];
}

export interface ArtifactDetail {
  id: string;
  title: string;
  source_url: string;
  dims: Record<Dimension, string>;
  extras: Record<string, string>;
}

export type VizPayload = NetworkPayload | TreemapPayload | SunburstPayload | PolygonPayload;

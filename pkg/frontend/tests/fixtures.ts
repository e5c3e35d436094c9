// Hand-written API payloads used by the renderer and app tests.

import {
  ArtifactDetail,
  NetworkPayload,
  PolygonPayload,
  SunburstPayload,
  TreemapPayload,
} from "../src/types.js";

export const networkFixture: NetworkPayload = {
  mode: "hub",
  nodes: [
    { id: "rec-0001", kind: "artifact", label: "Hero Stone", weight: 1, x: 120.5, y: 300.25 },
    { id: "rec-0002", kind: "artifact", label: "Votive Lamp", weight: 1, x: 640.0, y: 88.125 },
    {
      id: "dim:material:Stone",
      kind: "dimension_value",
      label: "Stone",
      weight: 2,
      x: 400.75,
      y: 200.5,
      dimension: "material",
    },
  ],
  edges: [
    { src: "rec-0001", dst: "dim:material:Stone", edge_type: "material" },
    { src: "rec-0002", dst: "dim:material:Stone", edge_type: "material" },
  ],
  params: { width: 1200.0, height: 800.0, iterations: 100, seed: 42, prng: "mt19937" },
};

export const treemapFixture: TreemapPayload = {
  frame: { w: 6.0, h: 4.0 },
  rects: [
    { path: ["Portal"], x: 0, y: 0, w: 6.0, h: 4.0, depth: 0, count: 12 },
    { path: ["Portal", "Sculpture"], x: 0, y: 0, w: 3.5, h: 4.0, depth: 1, count: 7 },
    { path: ["Portal", "Coin"], x: 3.5, y: 0, w: 2.5, h: 4.0, depth: 1, count: 5 },
    { path: ["Portal", "Sculpture", "Stone"], x: 0, y: 0, w: 3.5, h: 4.0, depth: 2, count: 7 },
    { path: ["Portal", "Coin", "Unknown"], x: 3.5, y: 0, w: 0.0, h: 0.0, depth: 2, count: 0 },
  ],
};

const TAU = Math.PI * 2;

export const sunburstFixture: SunburstPayload = {
  arcs: [
    { path: ["Portal"], start: 0, end: TAU, inner_r: 0, outer_r: 80, count: 12 },
    { path: ["Portal", "Sculpture"], start: 0, end: Math.PI, inner_r: 80, outer_r: 150, count: 6 },
    { path: ["Portal", "Coin"], start: Math.PI, end: TAU, inner_r: 80, outer_r: 150, count: 6 },
  ],
};

export const polygonFixture: PolygonPayload = {
  dimension: "material",
  axes: ["Stone", "Wood", "Bronze"],
  values: [1.0, 0.6, 0.4],
  raw_counts: [5, 3, 2],
};

export const emptyPolygonFixture: PolygonPayload = {
  dimension: "material",
  axes: [],
  values: [],
  raw_counts: [],
};

export const artifactFixture: ArtifactDetail = {
  id: "rec-0001",
  title: "Hero Stone",
  source_url: "https://portal.example/artifact/1",
  dims: {
    origin_place: "Goa Velha",
    object_type: "Sculpture",
    dynasty: "Kadamba",
    material: "Stone",
  },
  extras: {},
};

// View state and its pure transitions. Every user action maps to one
// of these functions; the URL query string round-trips the whole state
// so explorations are shareable links.

import { DIMENSIONS, Dimension, GraphMode, VizName } from "./types.js";

export interface Filter {
  dimension: Dimension;
  value: string;
}

export interface ViewState {
  viz: VizName;
  order: Dimension[]; // hierarchy drill order (treemap / sunburst)
  dims: Dimension[]; // network dimensions
  mode: GraphMode;
  topK: number;
  polygonDim: Dimension;
  filters: Filter[];
  drillPath: string[]; // labels descended below the hierarchy root
  hoveredId: string | null;
}

export const DEFAULT_ORDER: Dimension[] = [
  "object_type",
  "material",
  "dynasty",
  "origin_place",
];

export function initialState(): ViewState {
  return {
    viz: "network",
    order: [...DEFAULT_ORDER],
    dims: [...DIMENSIONS],
    mode: "hub",
    topK: 6,
    polygonDim: "material",
    filters: [],
    drillPath: [],
    hoveredId: null,
  };
}

const HIERARCHY_VIZ: VizName[] = ["treemap", "sunburst"];

export function switchViz(state: ViewState, viz: VizName): ViewState {
  // filters persist across switches; the drill path only survives
  // between the two hierarchy views, which share the order
  const keepPath = HIERARCHY_VIZ.includes(state.viz) && HIERARCHY_VIZ.includes(viz);
  return { ...state, viz, drillPath: keepPath ? state.drillPath : [], hoveredId: null };
}

export function addFilter(state: ViewState, dimension: Dimension, value: string): ViewState {
  const others = state.filters.filter((f) => f.dimension !== dimension);
  return { ...state, filters: [...others, { dimension, value }] };
}

export function removeFilter(state: ViewState, dimension: Dimension): ViewState {
  return { ...state, filters: state.filters.filter((f) => f.dimension !== dimension) };
}

export function drillTo(state: ViewState, path: string[]): ViewState {
  if (path.length > state.order.length) {
    return state;
  }
  return { ...state, drillPath: [...path] };
}

export function drillUp(state: ViewState, depth: number): ViewState {
  return { ...state, drillPath: state.drillPath.slice(0, Math.max(depth, 0)) };
}

export function setHovered(state: ViewState, id: string | null): ViewState {
  return { ...state, hoveredId: id };
}

export function setMode(state: ViewState, mode: GraphMode): ViewState {
  return { ...state, mode };
}

export function setTopK(state: ViewState, topK: number): ViewState {
  return { ...state, topK: Math.max(3, Math.floor(topK)) };
}

export function setPolygonDim(state: ViewState, polygonDim: Dimension): ViewState {
  return { ...state, polygonDim };
}

// the drill path pins one hierarchy dimension per descended level
export function drillFilters(state: ViewState): Filter[] {
  return state.drillPath.map((value, i) => ({ dimension: state.order[i], value }));
}

export function encodeState(state: ViewState): string {
  const params = new URLSearchParams();
  params.set("viz", state.viz);
  params.set("order", state.order.join(","));
  params.set("dims", state.dims.join(","));
  params.set("mode", state.mode);
  params.set("top_k", String(state.topK));
  params.set("polygon_dim", state.polygonDim);
  for (const f of state.filters) {
    params.append("f", `${f.dimension}:${f.value}`);
  }
  if (state.drillPath.length > 0) {
    params.set("path", state.drillPath.join("/"));
  }
  return params.toString();
}

function asDimension(name: string | null): Dimension | null {
  return DIMENSIONS.includes(name as Dimension) ? (name as Dimension) : null;
}

export function decodeState(query: string): ViewState {
  const params = new URLSearchParams(query);
  const state = initialState();
  const viz = params.get("viz");
  if (viz === "network" || viz === "treemap" || viz === "sunburst" || viz === "polygon") {
    state.viz = viz;
  }
  const order = (params.get("order") ?? "").split(",").map(asDimension);
  if (order.length === 4 && order.every((d) => d !== null)) {
    state.order = order as Dimension[];
  }
  const dims = (params.get("dims") ?? "")
    .split(",")
    .map(asDimension)
    .filter((d): d is Dimension => d !== null);
  if (dims.length > 0) {
    state.dims = dims;
  }
  if (params.get("mode") === "pairwise") {
    state.mode = "pairwise";
  }
  const topK = Number(params.get("top_k"));
  if (Number.isInteger(topK) && topK >= 3) {
    state.topK = topK;
  }
  const polygonDim = asDimension(params.get("polygon_dim"));
  if (polygonDim) {
    state.polygonDim = polygonDim;
  }
  for (const raw of params.getAll("f")) {
    const sep = raw.indexOf(":");
    const dimension = asDimension(raw.slice(0, sep));
    if (dimension && sep >= 0) {
      state.filters = [
        ...state.filters.filter((f) => f.dimension !== dimension),
        { dimension, value: raw.slice(sep + 1) },
      ];
    }
  }
  const path = params.get("path");
  if (path) {
    state.drillPath = path.split("/").slice(0, state.order.length);
  }
  return state;
}

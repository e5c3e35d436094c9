// Thin fetch layer over the geometry API. At most one in-flight
// geometry request matters per view: responses arriving out of order
// are discarded by sequence number.

import { drillFilters, ViewState } from "./state.js";
import {
  ArtifactDetail,
  NetworkPayload,
  PolygonPayload,
  SunburstPayload,
  TreemapPayload,
  VizPayload,
} from "./types.js";

export type FetchLike = (url: string) => Promise<Response>;

export function vizRequestUrl(state: ViewState, base = "/api/viz"): string {
  const params = new URLSearchParams();
  if (state.viz === "network") {
    params.set("dims", state.dims.join(","));
    params.set("mode", state.mode);
  } else if (state.viz === "treemap" || state.viz === "sunburst") {
    params.set("order", state.order.join(","));
  } else {
    params.set("dimension", state.polygonDim);
    params.set("top_k", String(state.topK));
  }
  for (const f of [...state.filters, ...drillFilters(state)]) {
    params.set(f.dimension, f.value);
  }
  return `${base}/${state.viz}?${params.toString()}`;
}

export class GeometryClient {
  private seq = 0;
  constructor(private fetcher: FetchLike = (url) => fetch(url)) {}

  /** Resolves to null when a newer request has been issued meanwhile. */
  async fetchViz(state: ViewState): Promise<VizPayload | null> {
    const ticket = ++this.seq;
    const resp = await this.fetcher(vizRequestUrl(state));
    if (ticket !== this.seq) {
      return null; // stale
    }
    if (!resp.ok) {
      const body = await resp.json().catch(() => ({ detail: resp.statusText }));
      throw new Error(`geometry request failed: ${body.detail ?? resp.status}`);
    }
    return (await resp.json()) as VizPayload;
  }

  async fetchArtifact(id: string): Promise<ArtifactDetail> {
    const resp = await this.fetcher(`/api/artifacts/${encodeURIComponent(id)}`);
    if (!resp.ok) {
      throw new Error(`artifact ${id} not found`);
    }
    return (await resp.json()) as ArtifactDetail;
  }
}

export function isNetwork(p: VizPayload): p is NetworkPayload {
  return "nodes" in p;
}

export function isTreemap(p: VizPayload): p is TreemapPayload {
  return "rects" in p;
}

export function isSunburst(p: VizPayload): p is SunburstPayload {
  return "arcs" in p;
}

export function isPolygon(p: VizPayload): p is PolygonPayload {
  return "axes" in p;
}

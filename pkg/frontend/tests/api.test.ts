import { describe, expect, it } from "vitest";

import { GeometryClient, vizRequestUrl } from "../src/api.js";
import { addFilter, drillTo, initialState, setMode, switchViz } from "../src/state.js";
import { networkFixture, treemapFixture } from "./fixtures.js";

function queryOf(url: string): URLSearchParams {
  return new URL(url, "http://test").searchParams;
}

describe("vizRequestUrl", () => {
  it("asks for the network with its dimensions and mode", () => {
    const url = vizRequestUrl(setMode(initialState(), "pairwise"));
    expect(url.startsWith("/api/viz/network?")).toBe(true);
    const q = queryOf(url);
    expect(q.get("dims")).toBe("origin_place,object_type,dynasty,material");
    expect(q.get("mode")).toBe("pairwise");
  });

  it("asks for hierarchy views with the drill order", () => {
    for (const viz of ["treemap", "sunburst"] as const) {
      const q = queryOf(vizRequestUrl(switchViz(initialState(), viz)));
      expect(q.get("order")).toBe("object_type,material,dynasty,origin_place");
      expect(q.get("dims")).toBeNull();
    }
  });

  it("asks for the polygon with dimension and top_k", () => {
    const q = queryOf(vizRequestUrl(switchViz(initialState(), "polygon")));
    expect(q.get("dimension")).toBe("material");
    expect(q.get("top_k")).toBe("6");
  });

  it("passes filters as dimension-named parameters", () => {
    const s = addFilter(initialState(), "material", "Stone");
    expect(queryOf(vizRequestUrl(s)).get("material")).toBe("Stone");
  });

  it("turns the drill path into per-level dimension filters", () => {
    const s = drillTo(switchViz(initialState(), "treemap"), ["Sculpture", "Stone"]);
    const q = queryOf(vizRequestUrl(s));
    expect(q.get("object_type")).toBe("Sculpture");
    expect(q.get("material")).toBe("Stone");
  });
});

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("GeometryClient", () => {
  it("returns the payload of an up-to-date request", async () => {
    const client = new GeometryClient(async () => jsonResponse(networkFixture));
    expect(await client.fetchViz(initialState())).toEqual(networkFixture);
  });

  it("discards responses that arrive after a newer request", async () => {
    const resolvers: Array<(r: Response) => void> = [];
    const client = new GeometryClient(
      () => new Promise<Response>((resolve) => resolvers.push(resolve)),
    );
    const first = client.fetchViz(initialState());
    const second = client.fetchViz(switchViz(initialState(), "treemap"));
    // the older request completes last; its result must be dropped
    resolvers[1](jsonResponse(treemapFixture));
    resolvers[0](jsonResponse(networkFixture));
    expect(await first).toBeNull();
    expect(await second).toEqual(treemapFixture);
  });

  it("surfaces the server's error detail on a rejected request", async () => {
    const client = new GeometryClient(async () =>
      jsonResponse({ error: "bad_request", detail: "unknown query parameter 'color'" }, 400),
    );
    await expect(client.fetchViz(initialState())).rejects.toThrow(
      "unknown query parameter 'color'",
    );
  });

  it("fetches artifact details by id", async () => {
    const seen: string[] = [];
    const client = new GeometryClient(async (url) => {
      seen.push(url);
      return jsonResponse({ id: "rec 1" });
    });
    await client.fetchArtifact("rec 1");
    expect(seen).toEqual(["/api/artifacts/rec%201"]);
  });
});

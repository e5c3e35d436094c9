// App wiring: dropdown, filter chips, breadcrumb, tooltip, URL sync.

import { GeometryClient, isNetwork, isPolygon, isSunburst, isTreemap } from "./api.js";
import {
  addFilter,
  decodeState,
  drillTo,
  drillUp,
  encodeState,
  removeFilter,
  setPolygonDim,
  setTopK,
  switchViz,
  ViewState,
} from "./state.js";
import { renderNetwork, renderPolygon, renderSunburst, renderTreemap } from "./render.js";
import { clear } from "./svg.js";
import { Dimension, VizName } from "./types.js";

const client = new GeometryClient();
let state: ViewState = decodeState(window.location.search);

const vizSelect = document.getElementById("viz-select") as HTMLSelectElement;
const polygonControls = document.getElementById("polygon-controls") as HTMLElement;
const dimSelect = document.getElementById("polygon-dim") as HTMLSelectElement;
const topKInput = document.getElementById("top-k") as HTMLInputElement;
const chipBar = document.getElementById("filter-chips") as HTMLElement;
const breadcrumb = document.getElementById("breadcrumb") as HTMLElement;
const stage = document.getElementById("stage") as HTMLElement;
const tooltip = document.getElementById("tooltip") as HTMLElement;

function update(next: ViewState): void {
  state = next;
  history.replaceState(null, "", `?${encodeState(state)}`);
  renderControls();
  void refetch();
}

async function refetch(): Promise<void> {
  const payload = await client.fetchViz(state).catch((err) => {
    stage.textContent = String(err);
    return null;
  });
  if (payload === null) return; // stale or failed
  clear(stage);
  const hooks = {
    onArtifactHover: (id: string | null, event: MouseEvent) => void showTooltip(id, event),
    onValueNodeClick: (dimension: string, value: string) =>
      update(addFilter(state, dimension as Dimension, value)),
    onPathClick: (path: string[]) => update(drillTo(state, path)),
  };
  if (isNetwork(payload)) stage.appendChild(renderNetwork(payload, hooks));
  else if (isTreemap(payload)) stage.appendChild(renderTreemap(payload, hooks));
  else if (isSunburst(payload)) stage.appendChild(renderSunburst(payload, hooks));
  else if (isPolygon(payload)) stage.appendChild(renderPolygon(payload, hooks));
}

async function showTooltip(id: string | null, event: MouseEvent): Promise<void> {
  if (id === null) {
    tooltip.hidden = true;
    return;
  }
  const detail = await client.fetchArtifact(id).catch(() => null);
  if (!detail) return;
  tooltip.innerHTML = "";
  const title = document.createElement("strong");
  title.textContent = detail.title;
  tooltip.appendChild(title);
  for (const [dim, value] of Object.entries(detail.dims)) {
    const row = document.createElement("div");
    row.textContent = `${dim.replace("_", " ")}: ${value}`;
    tooltip.appendChild(row);
  }
  tooltip.style.left = `${event.pageX + 12}px`;
  tooltip.style.top = `${event.pageY + 12}px`;
  tooltip.hidden = false;
}

function renderControls(): void {
  vizSelect.value = state.viz;
  polygonControls.hidden = state.viz !== "polygon";
  dimSelect.value = state.polygonDim;
  topKInput.value = String(state.topK);

  chipBar.innerHTML = "";
  for (const f of state.filters) {
    const chip = document.createElement("button");
    chip.className = "chip";
    chip.textContent = `${f.dimension.replace("_", " ")} = ${f.value} ×`;
    chip.addEventListener("click", () => update(removeFilter(state, f.dimension)));
    chipBar.appendChild(chip);
  }

  breadcrumb.innerHTML = "";
  breadcrumb.hidden = state.viz !== "treemap" && state.viz !== "sunburst";
  if (!breadcrumb.hidden) {
    const crumbs = ["All", ...state.drillPath];
    crumbs.forEach((label, i) => {
      const link = document.createElement("button");
      link.className = "crumb";
      link.textContent = label;
      link.addEventListener("click", () => update(drillUp(state, i)));
      breadcrumb.appendChild(link);
      if (i < crumbs.length - 1) {
        breadcrumb.appendChild(document.createTextNode(" / "));
      }
    });
  }
}

vizSelect.addEventListener("change", () => update(switchViz(state, vizSelect.value as VizName)));
dimSelect.addEventListener("change", () =>
  update(setPolygonDim(state, dimSelect.value as Dimension)),
);
topKInput.addEventListener("change", () => update(setTopK(state, Number(topKInput.value))));
window.addEventListener("popstate", () => update(decodeState(window.location.search)));

renderControls();
void refetch();

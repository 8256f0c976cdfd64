/** Application wiring: hash state -> API calls -> rendered views.
 *
 * The location hash is the single source of truth; every interaction
 * produces a new state, writes it to the hash, and the hashchange
 * handler re-renders. In-flight responses superseded by a newer state
 * are discarded (latest-wins).
 */

import { ApiClient, ApiRequestError, LatestWins } from "./api";
import { cardNetworkLayout } from "./cards";
import { chordLayout } from "./chord";
import { addFacetValue, facetViewModel, type Chip } from "./facetview";
import { brushToYearRange, histogramLayout } from "./histogram";
import {
  renderActiveChips,
  renderBridges,
  renderCardNetworkSvg,
  renderChordSvg,
  renderError,
  renderGroupDetail,
  renderHistogramSvg,
  renderPaperList,
  renderSuggestions,
  renderYearRangeControls,
} from "./render";
import {
  apiCallsFor,
  hashToState,
  initialState,
  stateToHash,
  type ViewState,
} from "./state";
import type {
  BridgesResponse,
  CollocationResponse,
  EntityType,
  GroupDetailResponse,
  GroupsResponse,
  MetaEdges,
  PaperListResponse,
  PapersResponse,
} from "./types";

const ENTITY_TYPES: EntityType[] = ["protein", "gene", "cell", "drug", "disease"];

export class ExplorerApp {
  private state: ViewState = initialState();
  private latest = new LatestWins();
  private visibleTypes = new Set<EntityType>(ENTITY_TYPES);
  private showSocial = true;
  private showTopical = true;
  private zoom = 1;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
  ) {}

  start(): void {
    window.addEventListener("hashchange", () => {
      this.state = hashToState(location.hash);
      void this.refresh();
    });
    this.root.addEventListener("click", (event) => this.onClick(event));
    this.root.addEventListener("submit", (event) => {
      event.preventDefault();
      this.onSubmit(event.target as HTMLFormElement);
    });
    this.state = hashToState(location.hash);
    void this.refresh();
  }

  /** Write state to the hash; hashchange triggers the refresh. */
  private push(state: ViewState): void {
    this.state = state;
    const hash = "#" + stateToHash(state);
    if (location.hash === hash) {
      void this.refresh();
    } else {
      location.hash = hash;
    }
  }

  private async refresh(): Promise<void> {
    this.renderNav();
    const body = this.root.querySelector("#view")!;
    const calls = apiCallsFor(this.state);
    try {
      const responses = await this.latest.run(() =>
        Promise.all(calls.map((path) => this.api.get<unknown>(path))),
      );
      if (responses === undefined) return; // superseded
      this.renderView(calls, responses);
    } catch (error) {
      const message =
        error instanceof ApiRequestError ? error.message : `request failed: ${String(error)}`;
      body.innerHTML = renderError(message);
    }
  }

  private renderNav(): void {
    const nav = this.root.querySelector("#nav")!;
    const tab = (view: ViewState["view"], label: string) =>
      `<button class="tab${this.state.view === view ? " current" : ""}" data-view="${view}">${label}</button>`;
    nav.innerHTML =
      tab("collocation", "Collocations") + tab("facets", "Papers") + tab("groups", "Groups");
  }

  private renderView(calls: string[], responses: unknown[]): void {
    const body = this.root.querySelector("#view")!;
    if (this.state.view === "collocation") {
      body.innerHTML = this.collocationHtml(calls, responses);
    } else if (this.state.view === "facets") {
      body.innerHTML = this.facetsHtml(responses[0] as PapersResponse);
    } else {
      body.innerHTML = this.groupsHtml(calls, responses);
      void this.loadBridges();
    }
  }

  private collocationHtml(calls: string[], responses: unknown[]): string {
    const term = this.state.collocation.term;
    const search =
      `<form data-role="term-form" class="controls">` +
      `<input name="term" placeholder="search a protein, gene, cell, drug or disease" value="${term}">` +
      `<label>entities <input name="k" type="number" min="1" value="${this.state.collocation.k}"></label>` +
      `<button type="submit">explore</button>` +
      this.typeFilterHtml() +
      `</form>`;
    if (!term) return search + `<p class="empty">Search a term to see its collocation network.</p>`;
    const graph = responses[0] as CollocationResponse;
    const layout = chordLayout(graph, { visibleTypes: [...this.visibleTypes] });
    let panel = "";
    if (this.state.selection.kind === "edge" && calls.length > 1) {
      const papers = responses[1] as PaperListResponse;
      panel =
        `<aside class="panel"><h3>papers: ${this.state.selection.a} + ${this.state.selection.b}</h3>` +
        renderPaperList(papers.papers) +
        `</aside>`;
    }
    return search + `<div class="split">` + renderChordSvg(layout) + panel + `</div>`;
  }

  private typeFilterHtml(): string {
    return (
      `<span class="type-filter">` +
      ENTITY_TYPES.map(
        (type) =>
          `<label><input type="checkbox" data-type="${type}" ${this.visibleTypes.has(type) ? "checked" : ""}>${type}</label>`,
      ).join("") +
      `</span>`
    );
  }

  private facetsHtml(response: PapersResponse): string {
    const view = facetViewModel(this.state.facets, response);
    this.lastHistogram = response.histogram;
    const layout = histogramLayout(response.histogram);
    const range =
      this.state.facets.from !== undefined && this.state.facets.to !== undefined
        ? { from: this.state.facets.from, to: this.state.facets.to }
        : undefined;
    return (
      renderActiveChips(view) +
      renderYearRangeControls(this.state.facets) +
      renderHistogramSvg(layout, range) +
      renderSuggestions(response.suggestions, "refine with co-mentions") +
      `<h3>${view.count} papers</h3>` +
      renderPaperList(response.papers)
    );
  }

  private groupsHtml(calls: string[], responses: unknown[]): string {
    const groups = responses[0] as GroupsResponse;
    const layout = cardNetworkLayout(groups.groups, groups.edges as MetaEdges, {
      zoom: this.zoom,
      showSocial: this.showSocial,
      showTopical: this.showTopical,
    });
    const controls =
      `<form data-role="group-form" class="controls">` +
      `<input name="topic" placeholder="topic" value="">` +
      `<input name="author" placeholder="author" value="">` +
      `<input name="affiliation" placeholder="affiliation" value="">` +
      `<label>groups <input name="k" type="number" min="1" value="${this.state.groups.k}"></label>` +
      `<button type="submit">search</button>` +
      `<label><input type="checkbox" data-layer="social" ${this.showSocial ? "checked" : ""}>social</label>` +
      `<label><input type="checkbox" data-layer="topical" ${this.showTopical ? "checked" : ""}>topical</label>` +
      `<button type="button" data-role="zoom-in">zoom +</button>` +
      `<button type="button" data-role="zoom-out">zoom -</button>` +
      `</form>`;
    let detail = "";
    if (this.state.selection.kind === "group" && calls.length > 2) {
      detail = renderGroupDetail(responses[1] as GroupDetailResponse);
    }
    return (
      controls +
      renderSuggestions(groups.suggestions, "suggested facets") +
      `<div class="split">` +
      renderCardNetworkSvg(layout) +
      `<aside class="panel">${detail}<div id="bridges"></div></aside>` +
      `</div>`
    );
  }

  private async loadBridges(): Promise<void> {
    try {
      const bridges = await this.api.get<BridgesResponse>("/bridges");
      const slot = this.root.querySelector("#bridges");
      if (slot) slot.innerHTML = renderBridges(bridges);
    } catch {
      // bridges panel is optional decoration; leave it empty on failure
    }
  }

  private onClick(event: Event): void {
    const target = event.target as HTMLElement;
    const viewTab = target.closest<HTMLElement>("[data-view]");
    if (viewTab) {
      this.push({ ...this.state, view: viewTab.dataset.view as ViewState["view"], selection: { kind: "none" } });
      return;
    }
    if (target.closest("[data-role=retry]")) {
      void this.refresh();
      return;
    }
    const node = target.closest<HTMLElement>("[data-node-id]");
    if (node && this.state.view === "collocation") {
      // graph navigation: clicking an entity re-queries around it
      this.push({
        ...this.state,
        collocation: { ...this.state.collocation, term: node.dataset.nodeId! },
        selection: { kind: "node", id: node.dataset.nodeId! },
      });
      return;
    }
    const edge = target.closest<HTMLElement>("[data-edge-a]");
    if (edge && this.state.view === "collocation") {
      this.push({
        ...this.state,
        selection: { kind: "edge", a: edge.dataset.edgeA!, b: edge.dataset.edgeB! },
      });
      return;
    }
    const card = target.closest<HTMLElement>("[data-group-id]");
    if (card && this.state.view === "groups") {
      this.push({ ...this.state, selection: { kind: "group", id: Number(card.dataset.groupId) } });
      return;
    }
    const suggestion = target.closest<HTMLElement>("[data-suggest-kind]");
    if (suggestion) {
      this.applySuggestion(suggestion.dataset.suggestKind!, suggestion.dataset.suggestValue!);
      return;
    }
    const removal = target.closest<HTMLElement>("[data-remove-kind]");
    if (removal && this.state.view === "facets") {
      const facets = { ...this.state.facets };
      const kind = removal.dataset.removeKind! as Chip["kind"];
      facets[kind] = facets[kind].filter((v) => v !== removal.dataset.removeValue);
      this.push({ ...this.state, facets });
      return;
    }
    this.handleControls(target);
  }

  private applySuggestion(kind: string, value: string): void {
    if (this.state.view === "facets") {
      this.push({ ...this.state, facets: addFacetValue(this.state.facets, { kind: kind as Chip["kind"], value }) });
    } else if (this.state.view === "groups") {
      // group suggestion kinds arrive plural ("topics"); state keys are singular
      const key = kind.startsWith("topic") ? "topic" : kind.startsWith("author") ? "author" : "affiliation";
      const groups = { ...this.state.groups };
      if (!groups[key].includes(value)) groups[key] = [...groups[key], value];
      this.push({ ...this.state, groups, selection: { kind: "none" } });
    }
  }

  private handleControls(target: HTMLElement): void {
    if (target.matches("[data-role=zoom-in]") || target.matches("[data-role=zoom-out]")) {
      this.zoom = Math.max(0.4, Math.min(2.5, this.zoom * (target.matches("[data-role=zoom-in]") ? 1.2 : 1 / 1.2)));
      void this.refresh();
      return;
    }
    if (target.matches("[data-type]")) {
      const type = target.getAttribute("data-type") as EntityType;
      if (this.visibleTypes.has(type)) this.visibleTypes.delete(type);
      else this.visibleTypes.add(type);
      void this.refresh();
      return;
    }
    if (target.matches("[data-layer]")) {
      if (target.getAttribute("data-layer") === "social") this.showSocial = !this.showSocial;
      else this.showTopical = !this.showTopical;
      void this.refresh();
      return;
    }
    if (target.matches("[data-role=apply-years]")) {
      const from = this.numberInput("year-from");
      const to = this.numberInput("year-to");
      if (from !== null && to !== null && from <= to) {
        this.push({ ...this.state, facets: { ...this.state.facets, from, to } });
      }
      return;
    }
    if (target.matches("[data-role=clear-years]")) {
      const facets = { ...this.state.facets };
      delete facets.from;
      delete facets.to;
      this.push({ ...this.state, facets });
      return;
    }
  }

  private onSubmit(form: HTMLFormElement): void {
    const data = new FormData(form);
    if (form.matches("[data-role=term-form]")) {
      this.push({
        ...this.state,
        collocation: {
          term: String(data.get("term") ?? "").trim(),
          k: Math.max(1, Number(data.get("k")) || 10),
        },
        selection: { kind: "none" },
      });
    } else if (form.matches("[data-role=group-form]")) {
      const single = (value: FormDataEntryValue | null) =>
        String(value ?? "").trim() ? [String(value).trim()] : [];
      this.push({
        ...this.state,
        groups: {
          topic: single(data.get("topic")),
          author: single(data.get("author")),
          affiliation: single(data.get("affiliation")),
          k: Math.max(1, Number(data.get("k")) || 12),
        },
        selection: { kind: "none" },
      });
    }
  }

  private numberInput(role: string): number | null {
    const input = this.root.querySelector<HTMLInputElement>(`[data-role=${role}]`);
    if (!input || input.value.trim() === "") return null;
    const value = Number(input.value);
    return Number.isInteger(value) ? value : null;
  }

  /** Histogram brush: drag across bars to set the year range. */
  attachBrush(): void {
    let anchor: number | null = null;
    this.root.addEventListener("mousedown", (event) => {
      const svg = (event.target as HTMLElement).closest<SVGSVGElement>("[data-role=histogram]");
      if (!svg) return;
      anchor = event.clientX;
    });
    this.root.addEventListener("mouseup", (event) => {
      if (anchor === null || this.state.view !== "facets") {
        anchor = null;
        return;
      }
      const svg = this.root.querySelector<SVGSVGElement>("[data-role=histogram]");
      if (!svg) {
        anchor = null;
        return;
      }
      const rect = svg.getBoundingClientRect();
      const scale = svg.viewBox.baseVal.width / rect.width;
      const layout = histogramLayout(this.lastHistogram ?? {});
      const range = brushToYearRange(layout, (anchor - rect.left) * scale, (event.clientX - rect.left) * scale);
      anchor = null;
      if (range) this.push({ ...this.state, facets: { ...this.state.facets, ...range } });
    });
  }

  private lastHistogram: Record<string, number> | null = null;
}

export function mount(root: HTMLElement, baseUrl: string): ExplorerApp {
  const app = new ExplorerApp(root, new ApiClient(baseUrl));
  app.start();
  app.attachBrush();
  return app;
}

/** View state and its URL (hash) serialization.
 *
 * Every reachable UI state round-trips through the location hash, so any
 * view is shareable as a deep link and browser back/forward walks the
 * state history. `apiCallsFor` is the single source of truth for which
 * API requests a state needs; reloading a deep link therefore reissues
 * exactly the same calls.
 */

export type ViewName = "collocation" | "facets" | "groups";

export interface CollocationQuery {
  term: string;
  /** displayed-entity-count control */
  k: number;
}

export interface FacetFilters {
  population: string[];
  intervention: string[];
  outcome: string[];
  author: string[];
  affiliation: string[];
  journal: string[];
  from?: number;
  to?: number;
}

export interface GroupFilters {
  topic: string[];
  author: string[];
  affiliation: string[];
  k: number;
}

export type Selection =
  | { kind: "none" }
  | { kind: "node"; id: string }
  | { kind: "edge"; a: string; b: string }
  | { kind: "group"; id: number };

export interface ViewState {
  view: ViewName;
  collocation: CollocationQuery;
  facets: FacetFilters;
  groups: GroupFilters;
  selection: Selection;
}

export const FACET_KINDS = [
  "population",
  "intervention",
  "outcome",
  "author",
  "affiliation",
  "journal",
] as const;

export const GROUP_FACET_KINDS = ["topic", "author", "affiliation"] as const;

export function initialState(): ViewState {
  return {
    view: "collocation",
    collocation: { term: "", k: 10 },
    facets: { population: [], intervention: [], outcome: [], author: [], affiliation: [], journal: [] },
    groups: { topic: [], author: [], affiliation: [], k: 12 },
    selection: { kind: "none" },
  };
}

function encodeSelection(selection: Selection): string | null {
  switch (selection.kind) {
    case "none":
      return null;
    case "node":
      return `node:${selection.id}`;
    case "edge":
      return `edge:${selection.a}:${selection.b}`;
    case "group":
      return `group:${selection.id}`;
  }
}

function decodeSelection(raw: string | null): Selection {
  if (!raw) return { kind: "none" };
  const [kind, ...rest] = raw.split(":");
  if (kind === "node" && rest.length >= 1) return { kind: "node", id: rest.join(":") };
  if (kind === "edge" && rest.length >= 2) return { kind: "edge", a: rest[0], b: rest.slice(1).join(":") };
  if (kind === "group" && rest.length === 1 && /^\d+$/.test(rest[0])) {
    return { kind: "group", id: Number(rest[0]) };
  }
  return { kind: "none" };
}

/** Serialize a state into a hash fragment (without the leading '#'). */
export function stateToHash(state: ViewState): string {
  const params = new URLSearchParams();
  params.set("view", state.view);
  if (state.view === "collocation") {
    if (state.collocation.term) params.set("term", state.collocation.term);
    params.set("k", String(state.collocation.k));
  } else if (state.view === "facets") {
    for (const kind of FACET_KINDS) {
      for (const value of state.facets[kind]) params.append(kind, value);
    }
    if (state.facets.from !== undefined) params.set("from", String(state.facets.from));
    if (state.facets.to !== undefined) params.set("to", String(state.facets.to));
  } else {
    for (const kind of GROUP_FACET_KINDS) {
      for (const value of state.groups[kind]) params.append(kind, value);
    }
    params.set("k", String(state.groups.k));
  }
  const selection = encodeSelection(state.selection);
  if (selection) params.set("sel", selection);
  return params.toString();
}

function intOr(value: string | null, fallback: number): number {
  const parsed = value === null ? NaN : Number(value);
  return Number.isInteger(parsed) && parsed > 0 ? parsed : fallback;
}

/** Parse a hash fragment back into a full state; unknown or malformed
 * parts fall back to defaults, never throw. */
export function hashToState(hash: string): ViewState {
  const state = initialState();
  const raw = hash.startsWith("#") ? hash.slice(1) : hash;
  if (!raw) return state;
  const params = new URLSearchParams(raw);
  const view = params.get("view");
  if (view === "facets" || view === "groups" || view === "collocation") state.view = view;
  if (state.view === "collocation") {
    state.collocation.term = params.get("term") ?? "";
    state.collocation.k = intOr(params.get("k"), state.collocation.k);
  } else if (state.view === "facets") {
    for (const kind of FACET_KINDS) state.facets[kind] = params.getAll(kind);
    const from = params.get("from");
    const to = params.get("to");
    if (from !== null && to !== null && Number(from) <= Number(to)) {
      state.facets.from = Number(from);
      state.facets.to = Number(to);
    }
  } else {
    for (const kind of GROUP_FACET_KINDS) state.groups[kind] = params.getAll(kind);
    state.groups.k = intOr(params.get("k"), state.groups.k);
  }
  state.selection = decodeSelection(params.get("sel"));
  return state;
}

/** API paths (relative, in request order) that render this state. */
export function apiCallsFor(state: ViewState): string[] {
  const calls: string[] = [];
  if (state.view === "collocation") {
    if (state.collocation.term) {
      const params = new URLSearchParams();
      params.set("term", state.collocation.term);
      params.set("k", String(state.collocation.k));
      calls.push(`/collocations?${params}`);
    }
    if (state.selection.kind === "edge") {
      const params = new URLSearchParams();
      params.set("a", state.selection.a);
      params.set("b", state.selection.b);
      calls.push(`/collocations/papers?${params}`);
    }
  } else if (state.view === "facets") {
    const params = new URLSearchParams();
    for (const kind of FACET_KINDS) {
      for (const value of state.facets[kind]) params.append(kind, value);
    }
    if (state.facets.from !== undefined && state.facets.to !== undefined) {
      params.set("from", String(state.facets.from));
      params.set("to", String(state.facets.to));
    }
    const query = params.toString();
    calls.push(query ? `/papers?${query}` : "/papers");
  } else {
    const params = new URLSearchParams();
    for (const kind of GROUP_FACET_KINDS) {
      for (const value of state.groups[kind]) params.append(kind, value);
    }
    params.set("k", String(state.groups.k));
    calls.push(`/groups?${params}`);
    if (state.selection.kind === "group") {
      calls.push(`/groups/${state.selection.id}`);
      calls.push(`/groups/${state.selection.id}/links`);
    }
  }
  return calls;
}

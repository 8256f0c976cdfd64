/** Facet-view model: chips, suggestions, and pure filter transitions.
 *
 * The displayed paper count is the length of the API's result list,
 * verbatim. Query transitions are pure functions over FacetFilters, so
 * refinement behavior (adding a facet value, brushing the histogram) is
 * testable without a browser.
 */

import type { FacetFilters } from "./state";
import type { PapersResponse, SuggestionRow } from "./types";

export interface Chip {
  kind: keyof Omit<FacetFilters, "from" | "to">;
  value: string;
}

export interface SuggestionChip extends Chip {
  count: number;
}

export interface FacetViewModel {
  count: number;
  chips: Chip[];
  suggestions: SuggestionChip[];
}

const CHIP_KINDS = ["population", "intervention", "outcome", "author", "affiliation", "journal"] as const;

export function facetViewModel(filters: FacetFilters, response: PapersResponse): FacetViewModel {
  const chips: Chip[] = [];
  for (const kind of CHIP_KINDS) {
    for (const value of filters[kind]) chips.push({ kind, value });
  }
  const suggestions: SuggestionChip[] = [];
  for (const kind of CHIP_KINDS) {
    for (const row of response.suggestions[kind] ?? ([] as SuggestionRow[])) {
      suggestions.push({ kind, value: row.value, count: row.count });
    }
  }
  return { count: response.papers.length, chips, suggestions };
}

export function addFacetValue(filters: FacetFilters, chip: Chip): FacetFilters {
  if (filters[chip.kind].includes(chip.value)) return filters;
  return { ...filters, [chip.kind]: [...filters[chip.kind], chip.value] };
}

export function removeFacetValue(filters: FacetFilters, chip: Chip): FacetFilters {
  return { ...filters, [chip.kind]: filters[chip.kind].filter((v) => v !== chip.value) };
}

export function setYearRange(filters: FacetFilters, from: number, to: number): FacetFilters {
  return { ...filters, from, to };
}

export function clearFilters(filters: FacetFilters): FacetFilters {
  void filters;
  return { population: [], intervention: [], outcome: [], author: [], affiliation: [], journal: [] };
}

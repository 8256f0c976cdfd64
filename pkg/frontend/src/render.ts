/** HTML/SVG string rendering for the three views.
 *
 * Renderers are pure string builders over the layout modules; app.ts
 * injects the strings and attaches event handlers via data attributes.
 */

import type { ChordLayout } from "./chord";
import { TYPE_COLORS } from "./chord";
import type { CardNetworkLayout } from "./cards";
import type { HistogramLayout } from "./histogram";
import type {
  BridgesResponse,
  GroupDetailResponse,
  PaperSummary,
  Suggestions,
} from "./types";
import type { FacetFilters } from "./state";
import type { FacetViewModel } from "./facetview";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const esc = escapeHtml;

export function renderChordSvg(layout: ChordLayout): string {
  const half = layout.size / 2;
  const ribbons = layout.ribbons
    .map(
      (r) =>
        `<path class="ribbon${r.touchesQuery ? " query-ribbon" : ""}" d="${r.path}" ` +
        `fill="none" stroke="#9ecae1" stroke-opacity="0.65" stroke-width="${r.width.toFixed(2)}" ` +
        `data-edge-a="${esc(r.a)}" data-edge-b="${esc(r.b)}"><title>${esc(r.a)} &harr; ${esc(r.b)}: ${r.count}</title></path>`,
    )
    .join("");
  const nodes = layout.arcs
    .map((arc) => {
      const color = TYPE_COLORS[arc.type] ?? "#777";
      const anchorSide = Math.cos(arc.midAngle) >= 0 ? "start" : "end";
      return (
        `<circle class="term${arc.isQuery ? " query-term" : ""}" cx="${arc.x.toFixed(1)}" cy="${arc.y.toFixed(1)}" ` +
        `r="${arc.isQuery ? 9 : 6}" fill="${color}" data-node-id="${esc(arc.id)}">` +
        `<title>${esc(arc.id)} (${arc.type}, total ${arc.total})</title></circle>` +
        `<text class="term-label" x="${arc.labelX.toFixed(1)}" y="${arc.labelY.toFixed(1)}" ` +
        `text-anchor="${anchorSide}" dominant-baseline="middle" data-node-id="${esc(arc.id)}">${esc(arc.id)}</text>`
      );
    })
    .join("");
  return (
    `<svg viewBox="${-half} ${-half} ${layout.size} ${layout.size}" class="chord">` +
    `<g>${ribbons}</g><g>${nodes}</g></svg>`
  );
}

export function renderHistogramSvg(layout: HistogramLayout, range?: { from: number; to: number }): string {
  const bars = layout.bars
    .map((bar) => {
      const inRange = !range || (bar.year >= range.from && bar.year <= range.to);
      return (
        `<rect class="bar${inRange ? "" : " bar-out"}" x="${bar.x.toFixed(1)}" ` +
        `y="${(layout.height - bar.height).toFixed(1)}" width="${Math.max(bar.width - 1, 1).toFixed(1)}" ` +
        `height="${bar.height.toFixed(1)}" data-year="${bar.year}">` +
        `<title>${bar.year}: ${bar.count}</title></rect>`
      );
    })
    .join("");
  const labels = layout.bars
    .filter((_, i) => i === 0 || i === layout.bars.length - 1)
    .map(
      (bar) =>
        `<text class="axis" x="${(bar.x + bar.width / 2).toFixed(1)}" y="${layout.height + 14}" text-anchor="middle">${bar.year}</text>`,
    )
    .join("");
  return (
    `<svg viewBox="0 0 ${layout.width} ${layout.height + 18}" class="histogram" data-role="histogram">` +
    `${bars}${labels}</svg>`
  );
}

export function renderPaperList(papers: PaperSummary[]): string {
  if (papers.length === 0) return `<p class="empty">No papers match.</p>`;
  const rows = papers
    .map((paper) => {
      const title = paper.url
        ? `<a href="${esc(paper.url)}" target="_blank" rel="noopener">${esc(paper.title)}</a>`
        : esc(paper.title);
      const byline = [paper.authors.join(", "), paper.journal ?? ""].filter(Boolean).join(" · ");
      return `<li><span class="year">${paper.year}</span> <span class="title">${title}</span><br><small>${esc(byline)}</small></li>`;
    })
    .join("");
  return `<ol class="papers">${rows}</ol>`;
}

export function renderSuggestions(suggestions: Suggestions, heading: string): string {
  const blocks = Object.entries(suggestions)
    .filter(([, rows]) => rows.length > 0)
    .map(([kind, rows]) => {
      const chips = rows
        .map(
          (row) =>
            `<button class="chip" data-suggest-kind="${esc(kind)}" data-suggest-value="${esc(row.value)}">` +
            `${esc(row.value)} <span class="count">${row.count}</span></button>`,
        )
        .join("");
      return `<div class="suggestion-row"><span class="kind">${esc(kind)}</span>${chips}</div>`;
    })
    .join("");
  if (!blocks) return "";
  return `<section class="suggestions"><h3>${esc(heading)}</h3>${blocks}</section>`;
}

export function renderActiveChips(view: FacetViewModel): string {
  if (view.chips.length === 0) return "";
  const chips = view.chips
    .map(
      (chip) =>
        `<button class="chip active" data-remove-kind="${esc(chip.kind)}" data-remove-value="${esc(chip.value)}">` +
        `${esc(chip.kind)}: ${esc(chip.value)} ✕</button>`,
    )
    .join("");
  return `<div class="active-chips">${chips}</div>`;
}

export function renderYearRangeControls(filters: FacetFilters): string {
  const from = filters.from !== undefined ? String(filters.from) : "";
  const to = filters.to !== undefined ? String(filters.to) : "";
  return (
    `<div class="year-controls">` +
    `<label>from <input type="number" data-role="year-from" value="${from}"></label>` +
    `<label>to <input type="number" data-role="year-to" value="${to}"></label>` +
    `<button data-role="apply-years">apply</button>` +
    `<button data-role="clear-years">clear range</button>` +
    `</div>`
  );
}

export function renderCardNetworkSvg(layout: CardNetworkLayout): string {
  const edges = layout.edges
    .map(
      (edge) =>
        `<line class="meta-edge ${edge.layer}" x1="${edge.x1.toFixed(1)}" y1="${edge.y1.toFixed(1)}" ` +
        `x2="${edge.x2.toFixed(1)}" y2="${edge.y2.toFixed(1)}" stroke="${edge.color}">` +
        `<title>${edge.layer}: ${esc(edge.label)}</title></line>`,
    )
    .join("");
  const cards = layout.cards
    .map((card) => {
      const iconRow = (symbol: string, values: string[]) =>
        values.length
          ? `<tspan x="10" dy="1.25em">${symbol} ${esc(values.map((v) => shorten(v, 16)).join(" · "))}</tspan>`
          : "";
      const tooltipBlock = (label: string, values: string[]) =>
        values.length ? `${label}: ${values.join(", ")}` : "";
      const tooltip = [
        tooltipBlock("authors", card.tooltip.authors),
        tooltipBlock("topics", card.tooltip.topics),
        tooltipBlock("affiliations", card.tooltip.affiliations),
      ]
        .filter(Boolean)
        .join("\n");
      return (
        `<g class="card" transform="translate(${card.x.toFixed(1)}, ${card.y.toFixed(1)})" data-group-id="${card.groupId}">` +
        `<rect width="${card.width}" height="${card.height}" rx="8" fill="${card.fill}" stroke="#456"></rect>` +
        `<title>${esc(tooltip)}</title>` +
        `<text class="card-title" x="10" y="16">group ${card.groupId}${card.flagged ? " ⚑" : ""} (${card.memberCount})</text>` +
        `<text class="card-icons" x="10" y="22">` +
        iconRow("👤", card.icons.authors.slice(0, 1)) +
        iconRow("🏷", card.icons.topics.slice(0, 1)) +
        iconRow("🏛", card.icons.affiliations.slice(0, 1)) +
        `</text></g>`
      );
    })
    .join("");
  return (
    `<svg viewBox="0 0 ${layout.width} ${layout.height}" class="card-network">` +
    `<g>${edges}</g><g>${cards}</g></svg>`
  );
}

export function renderGroupDetail(detail: GroupDetailResponse): string {
  const list = (rows: [string, number][], digits: number) =>
    rows
      .map(([name, score]) => `<li>${esc(name)} <span class="count">${score.toFixed(digits)}</span></li>`)
      .join("");
  return (
    `<div class="group-detail">` +
    `<h3>group ${detail.group_id}: ${detail.member_count} members, ${detail.paper_count} papers` +
    `${detail.flagged ? " (kept oversized)" : ""}</h3>` +
    `<div class="ranked-lists">` +
    `<div><h4>topics</h4><ol>${list(detail.topics, 3)}</ol></div>` +
    `<div><h4>authors</h4><ol>${list(detail.authors, 2)}</ol></div>` +
    `<div><h4>affiliations</h4><ol>${list(detail.affiliations, 2)}</ol></div>` +
    `</div>` +
    `<h4>papers by recency</h4>${renderPaperList(detail.papers)}` +
    `</div>`
  );
}

export function renderBridges(bridges: BridgesResponse): string {
  if (bridges.bridges.length === 0) return "";
  const rows = bridges.bridges
    .map((row) => `<li>${esc(row.author)} <small>groups ${row.groups[0]} ↔ ${row.groups[1]}</small></li>`)
    .join("");
  return `<section class="bridges"><h3>bridge authors</h3><ul>${rows}</ul></section>`;
}

export function renderError(message: string): string {
  return (
    `<div class="error">` +
    `<p>${esc(message)}</p>` +
    `<button data-role="retry">retry</button>` +
    `</div>`
  );
}

function shorten(text: string, max: number): string {
  return text.length <= max ? text : text.slice(0, max - 1) + "…";
}

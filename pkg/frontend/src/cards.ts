/** Group-card view models and the card-network layout.
 *
 * Cards surface the API's ranked lists at three depths: three icon rows
 * on the card face, five rows in the hover tooltip, and the full lists in
 * the detail panel. Scores and components are copied verbatim from the
 * response; the card fill color is a monotone function of the final
 * score. Social edges render green, topical edges purple.
 */

import type { GroupSummary, MetaEdges, RankedRow } from "./types";

export const ICON_DEPTH = 3;
export const TOOLTIP_DEPTH = 5;

export const SOCIAL_EDGE_COLOR = "#2e8b57";
export const TOPICAL_EDGE_COLOR = "#7b3294";

export interface CardFace {
  groupId: number;
  /** exactly the top three names per category (fewer only if the card has fewer) */
  icons: { authors: string[]; topics: string[]; affiliations: string[] };
  tooltip: { authors: string[]; topics: string[]; affiliations: string[] };
  memberCount: number;
  paperCount: number;
  flagged: boolean;
  /** final score, verbatim from the API */
  score: number;
  components: GroupSummary["components"];
  fill: string;
}

function names(rows: RankedRow[], depth: number): string[] {
  return rows.slice(0, depth).map(([name]) => name);
}

/** Monotone white-to-blue fill for relevance; input clamped to [0, 1]. */
export function scoreFill(score: number): string {
  const t = Math.max(0, Math.min(1, score));
  const channel = Math.round(248 - t * 160); // 248 (near white) -> 88 (deep)
  const blue = Math.round(252 - t * 60);
  return `rgb(${channel}, ${Math.round(channel * 0.95) + 8}, ${blue})`;
}

export function cardFace(group: GroupSummary): CardFace {
  return {
    groupId: group.group_id,
    icons: {
      authors: names(group.authors, ICON_DEPTH),
      topics: names(group.topics, ICON_DEPTH),
      affiliations: names(group.affiliations, ICON_DEPTH),
    },
    tooltip: {
      authors: names(group.authors, TOOLTIP_DEPTH),
      topics: names(group.topics, TOOLTIP_DEPTH),
      affiliations: names(group.affiliations, TOOLTIP_DEPTH),
    },
    memberCount: group.member_count,
    paperCount: group.paper_count,
    flagged: group.flagged,
    score: group.score,
    components: group.components,
    fill: scoreFill(group.score),
  };
}

export interface PlacedCard extends CardFace {
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface PlacedEdge {
  layer: "topical" | "social";
  a: number;
  b: number;
  label: string;
  color: string;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface CardNetworkLayout {
  cards: PlacedCard[];
  edges: PlacedEdge[];
  width: number;
  height: number;
}

export interface CardNetworkOptions {
  width?: number;
  height?: number;
  cardWidth?: number;
  cardHeight?: number;
  /** zoom factor applied to the circle radius */
  zoom?: number;
  showSocial?: boolean;
  showTopical?: boolean;
}

/** Deterministic circular placement: ranked order clockwise from the top. */
export function cardNetworkLayout(
  groups: GroupSummary[],
  edges: MetaEdges,
  options: CardNetworkOptions = {},
): CardNetworkLayout {
  const width = options.width ?? 960;
  const height = options.height ?? 640;
  const cardWidth = options.cardWidth ?? 168;
  const cardHeight = options.cardHeight ?? 96;
  const zoom = options.zoom ?? 1;
  const radius = Math.min(width, height) * 0.36 * zoom;
  const centerX = width / 2;
  const centerY = height / 2;

  const cards: PlacedCard[] = groups.map((group, index) => {
    const angle = -Math.PI / 2 + (2 * Math.PI * index) / Math.max(groups.length, 1);
    return {
      ...cardFace(group),
      x: centerX + radius * Math.cos(angle) - cardWidth / 2,
      y: centerY + radius * Math.sin(angle) - cardHeight / 2,
      width: cardWidth,
      height: cardHeight,
    };
  });
  const position = new Map(cards.map((card) => [card.groupId, card]));

  const placed: PlacedEdge[] = [];
  const anchor = (card: PlacedCard) => ({
    x: card.x + card.width / 2,
    y: card.y + card.height / 2,
  });
  if (options.showTopical !== false) {
    for (const edge of edges.topical) {
      const from = position.get(edge.a);
      const to = position.get(edge.b);
      if (!from || !to) continue;
      placed.push({
        layer: "topical",
        a: edge.a,
        b: edge.b,
        label: edge.similarity.toFixed(2),
        color: TOPICAL_EDGE_COLOR,
        x1: anchor(from).x,
        y1: anchor(from).y,
        x2: anchor(to).x,
        y2: anchor(to).y,
      });
    }
  }
  if (options.showSocial !== false) {
    for (const edge of edges.social) {
      const from = position.get(edge.a);
      const to = position.get(edge.b);
      if (!from || !to) continue;
      placed.push({
        layer: "social",
        a: edge.a,
        b: edge.b,
        label: `${edge.shared_authors} shared`,
        color: SOCIAL_EDGE_COLOR,
        x1: anchor(from).x,
        y1: anchor(from).y,
        x2: anchor(to).x,
        y2: anchor(to).y,
      });
    }
  }
  return { cards, edges: placed, width, height };
}

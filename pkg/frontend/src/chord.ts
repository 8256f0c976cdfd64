/** Chord-diagram layout for a collocation neighborhood.
 *
 * Nodes sit on a circle grouped by entity type (alphabetical types, ids
 * sorted within a type, a gap between groups). Ribbons connect node
 * anchors through the center; ribbon width is linear in collocation
 * count, clamped to a readable range, so width rank order always equals
 * count rank order.
 */

import type { CollocationResponse, EntityType } from "./types";

export interface ChordArc {
  id: string;
  type: EntityType;
  total: number;
  startAngle: number;
  endAngle: number;
  /** anchor angle used by ribbons and the label */
  midAngle: number;
  x: number;
  y: number;
  labelX: number;
  labelY: number;
  isQuery: boolean;
}

export interface ChordRibbon {
  a: string;
  b: string;
  count: number;
  width: number;
  path: string;
  touchesQuery: boolean;
}

export interface ChordLayout {
  arcs: ChordArc[];
  ribbons: ChordRibbon[];
  radius: number;
  size: number;
}

export interface ChordOptions {
  size?: number;
  minWidth?: number;
  maxWidth?: number;
  /** presentation-time entity-type filter; undefined shows all */
  visibleTypes?: EntityType[];
}

export const TYPE_COLORS: Record<EntityType, string> = {
  protein: "#8c6bb1",
  gene: "#2b8cbe",
  cell: "#fdae61",
  drug: "#1a9850",
  disease: "#d73027",
};

const GROUP_GAP = 0.12; // radians between type groups

export function ribbonWidthScale(
  counts: number[],
  minWidth: number,
  maxWidth: number,
): (count: number) => number {
  if (counts.length === 0) return () => minWidth;
  const low = Math.min(...counts);
  const high = Math.max(...counts);
  if (high === low) {
    const mid = (minWidth + maxWidth) / 2;
    return () => mid;
  }
  return (count) => minWidth + ((count - low) / (high - low)) * (maxWidth - minWidth);
}

export function chordLayout(data: CollocationResponse, options: ChordOptions = {}): ChordLayout {
  const size = options.size ?? 640;
  const minWidth = options.minWidth ?? 1.5;
  const maxWidth = options.maxWidth ?? 14;
  const radius = size * 0.36;
  const labelRadius = size * 0.42;

  let nodes = data.nodes.slice();
  if (options.visibleTypes) {
    const visible = new Set<string>(options.visibleTypes);
    nodes = nodes.filter((n) => n.type === undefined || visible.has(n.type) || n.id === data.query);
  }
  const shown = new Set(nodes.map((n) => n.id));

  // Group by type, alphabetical; ids alphabetical inside each group.
  const byType = new Map<string, typeof nodes>();
  for (const node of nodes) {
    const list = byType.get(node.type) ?? [];
    list.push(node);
    byType.set(node.type, list);
  }
  const types = [...byType.keys()].sort();
  for (const type of types) byType.get(type)!.sort((p, q) => (p.id < q.id ? -1 : 1));

  const groupCount = types.length;
  const usable = 2 * Math.PI - GROUP_GAP * Math.max(groupCount, 1);
  const slice = nodes.length > 0 ? usable / nodes.length : 0;

  const arcs: ChordArc[] = [];
  let angle = -Math.PI / 2;
  for (const type of types) {
    for (const node of byType.get(type)!) {
      const start = angle;
      const end = angle + slice;
      const mid = (start + end) / 2;
      arcs.push({
        id: node.id,
        type: node.type,
        total: node.total,
        startAngle: start,
        endAngle: end,
        midAngle: mid,
        x: radius * Math.cos(mid),
        y: radius * Math.sin(mid),
        labelX: labelRadius * Math.cos(mid),
        labelY: labelRadius * Math.sin(mid),
        isQuery: node.id === data.query,
      });
      angle = end;
    }
    angle += GROUP_GAP;
  }
  const anchor = new Map(arcs.map((arc) => [arc.id, arc]));

  const edges = data.edges.filter((e) => shown.has(e.a) && shown.has(e.b));
  const widthOf = ribbonWidthScale(edges.map((e) => e.count), minWidth, maxWidth);
  const ribbons: ChordRibbon[] = edges.map((edge) => {
    const from = anchor.get(edge.a)!;
    const to = anchor.get(edge.b)!;
    return {
      a: edge.a,
      b: edge.b,
      count: edge.count,
      width: widthOf(edge.count),
      path: `M ${round(from.x)} ${round(from.y)} Q 0 0 ${round(to.x)} ${round(to.y)}`,
      touchesQuery: edge.a === data.query || edge.b === data.query,
    };
  });

  return { arcs, ribbons, radius, size };
}

function round(value: number): number {
  return Math.round(value * 100) / 100;
}

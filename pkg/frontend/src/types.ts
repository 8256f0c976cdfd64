/** Response shapes of the litnav HTTP API. Every number the UI displays
 * comes verbatim from these payloads; the frontend never recomputes a
 * score. */

export type EntityType = "protein" | "gene" | "cell" | "drug" | "disease";

export interface CollocationNode {
  id: string;
  type: EntityType;
  total: number;
}

export interface CollocationEdge {
  a: string;
  b: string;
  count: number;
}

export interface CollocationResponse {
  query: string;
  nodes: CollocationNode[];
  edges: CollocationEdge[];
}

export interface PaperSummary {
  paper_id: string;
  title: string;
  year: number;
  journal: string | null;
  authors: string[];
  url?: string;
}

export interface SuggestionRow {
  value: string;
  count: number;
}

export type Suggestions = Record<string, SuggestionRow[]>;

export interface PapersResponse {
  papers: PaperSummary[];
  histogram: Record<string, number>;
  suggestions: Suggestions;
}

export interface PaperListResponse {
  papers: PaperSummary[];
}

/** [name, score] rows, already ranked by the API. */
export type RankedRow = [string, number];

export interface ScoreComponents {
  overlap: number;
  pagerank_topical: number;
  pagerank_social: number;
}

export interface GroupSummary {
  group_id: number;
  topics: RankedRow[];
  authors: RankedRow[];
  affiliations: RankedRow[];
  paper_count: number;
  member_count: number;
  top_k: number;
  flagged: boolean;
  score: number;
  components: ScoreComponents;
  candidate: boolean;
}

export interface TopicalEdge {
  a: number;
  b: number;
  similarity: number;
}

export interface SocialEdge {
  a: number;
  b: number;
  shared_authors: number;
}

export interface MetaEdges {
  topical: TopicalEdge[];
  social: SocialEdge[];
}

export interface GroupsResponse {
  groups: GroupSummary[];
  edges: MetaEdges;
  suggestions: Suggestions;
}

export interface GroupDetailResponse {
  group_id: number;
  topics: RankedRow[];
  authors: RankedRow[];
  affiliations: RankedRow[];
  paper_count: number;
  member_count: number;
  top_k: number;
  flagged: boolean;
  members: string[];
  papers: PaperSummary[];
}

export interface BridgeRow {
  author: string;
  groups: [number, number];
}

export interface BridgesResponse {
  bridges: BridgeRow[];
}

export interface ApiError {
  error: string;
  field?: string;
  suggestions?: string[];
}

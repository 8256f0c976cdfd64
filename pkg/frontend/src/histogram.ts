/** Time-histogram layout and brush-to-year-range mapping.
 *
 * Bars are laid out left to right over the contiguous year span of the
 * API histogram (the API zero-fills inside a queried range); heights are
 * proportional to counts. A pixel brush maps back to an inclusive year
 * range for the next query.
 */

export interface HistogramBar {
  year: number;
  count: number;
  x: number;
  width: number;
  height: number;
}

export interface HistogramLayout {
  bars: HistogramBar[];
  width: number;
  height: number;
  maxCount: number;
}

export function histogramLayout(
  histogram: Record<string, number>,
  width = 560,
  height = 120,
): HistogramLayout {
  const years = Object.keys(histogram)
    .map(Number)
    .filter(Number.isInteger)
    .sort((a, b) => a - b);
  if (years.length === 0) return { bars: [], width, height, maxCount: 0 };
  const first = years[0];
  const last = years[years.length - 1];
  const span = last - first + 1;
  const barWidth = width / span;
  const counts = new Map(years.map((y) => [y, histogram[String(y)] ?? 0]));
  const maxCount = Math.max(1, ...counts.values());
  const bars: HistogramBar[] = [];
  for (let year = first; year <= last; year++) {
    const count = counts.get(year) ?? 0;
    bars.push({
      year,
      count,
      x: (year - first) * barWidth,
      width: barWidth,
      height: (count / maxCount) * height,
    });
  }
  return { bars, width, height, maxCount };
}

/** Map a pixel brush [x0, x1] to the inclusive year range it covers. */
export function brushToYearRange(
  layout: HistogramLayout,
  x0: number,
  x1: number,
): { from: number; to: number } | null {
  if (layout.bars.length === 0) return null;
  const [low, high] = x0 <= x1 ? [x0, x1] : [x1, x0];
  const hit = layout.bars.filter((bar) => bar.x + bar.width > low && bar.x < high);
  if (hit.length === 0) return null;
  return { from: hit[0].year, to: hit[hit.length - 1].year };
}

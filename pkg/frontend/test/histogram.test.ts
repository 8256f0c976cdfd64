import { describe, expect, it } from "vitest";

import { brushToYearRange, histogramLayout } from "../src/histogram";
import type { PapersResponse } from "../src/types";
import windowed from "./fixtures/papers_ribavirin_elderly_windowed.json";

const fixture = windowed as unknown as PapersResponse;

describe("histogramLayout", () => {
  it("renders one bar per year of the recorded histogram, in order", () => {
    const layout = histogramLayout(fixture.histogram);
    const years = Object.keys(fixture.histogram).map(Number).sort((a, b) => a - b);
    expect(layout.bars.map((b) => b.year)).toEqual(years);
  });

  it("bar heights are proportional to counts", () => {
    const layout = histogramLayout({ "2019": 2, "2020": 4 }, 100, 100);
    const [low, high] = layout.bars;
    expect(high.height).toBeCloseTo(2 * low.height, 10);
    expect(high.height).toBe(100);
  });

  it("zero-count years keep their slot", () => {
    const layout = histogramLayout({ "2018": 1, "2020": 1 });
    expect(layout.bars.map((b) => b.year)).toEqual([2018, 2019, 2020]);
    expect(layout.bars[1].height).toBe(0);
  });

  it("empty histogram yields no bars", () => {
    expect(histogramLayout({}).bars).toEqual([]);
  });
});

describe("brushToYearRange", () => {
  const layout = histogramLayout({ "2018": 1, "2019": 2, "2020": 3, "2021": 1 }, 400, 100);

  it("maps a pixel span to the inclusive year range it covers", () => {
    expect(brushToYearRange(layout, 0, 399)).toEqual({ from: 2018, to: 2021 });
    expect(brushToYearRange(layout, 110, 290)).toEqual({ from: 2019, to: 2020 });
  });

  it("is direction-insensitive", () => {
    expect(brushToYearRange(layout, 290, 110)).toEqual({ from: 2019, to: 2020 });
  });

  it("returns null when the brush misses all bars", () => {
    expect(brushToYearRange(layout, 500, 600)).toBeNull();
    expect(brushToYearRange(histogramLayout({}), 0, 10)).toBeNull();
  });
});

import { readFileSync } from "fs";
import { join } from "path";

import { describe, expect, it } from "vitest";

import { parseCsv } from "../src/csv.js";
import { renderEvolutionFigure, renderSeriesFigure } from "../src/figures.js";
import { loadSnapshots } from "../src/index.js";

const FIXTURES = join(__dirname, "fixtures");

function fixtureTable(name: string) {
  return parseCsv(readFileSync(join(FIXTURES, name), "utf8"));
}

function seriesNames(svg: string): string[] {
  return [...svg.matchAll(/data-series="([^"]+)"/g)].map((m) => m[1]);
}

describe("renderSeriesFigure on real sweep output", () => {
  const table = fixtureTable("soliton_convergence.csv");

  it("err-vs-dt draws one series per scheme on log-log axes", () => {
    const svg = renderSeriesFigure(table, { kind: "err-vs-dt" });
    const names = seriesNames(svg);
    expect(names).toHaveLength(8);
    expect(names[0]).toBe("lie-trotter");
    expect(names).toContain("affine6");
    // decade tick labels witness the log axes
    expect(svg).toMatch(/1e-3/);
    expect(svg).toMatch(/1e-9/);
    expect(svg.startsWith("<svg")).toBe(true);
  });

  it("efficiency swaps the x axis to the cost column", () => {
    const svg = renderSeriesFigure(table, { kind: "efficiency" });
    expect(svg).toContain("propagator evaluations");
    expect(seriesNames(svg)).toHaveLength(8);
  });

  it("invariant figure can select the hamiltonian column", () => {
    const svg = renderSeriesFigure(table, { kind: "invariant", yColumn: "eps_ham" });
    expect(svg).toContain("eps_ham");
  });

  it("is byte-stable across repeated renders", () => {
    const a = renderSeriesFigure(table, { kind: "err-vs-dt" });
    const b = renderSeriesFigure(table, { kind: "err-vs-dt" });
    expect(a).toBe(b);
  });
});

describe("blow-up handling", () => {
  const table = fixtureTable("cgle3_stability.csv");

  it("renders blow-up rows as top-boundary markers, not points", () => {
    const svg = renderSeriesFigure(table, { kind: "err-vs-dt" });
    const markers = [...svg.matchAll(/data-blowup="([^"]+)"/g)].map((m) => m[1]);
    expect(markers.length).toBeGreaterThan(0);
    expect(new Set(markers)).toContain("yoshida6");
    expect(svg).toContain("blow-up");
  });
});

describe("err-vs-n", () => {
  it("renders the basis-size sweep", () => {
    const svg = renderSeriesFigure(fixtureTable("spectral_fourier.csv"),
                                   { kind: "err-vs-n" });
    expect(svg).toContain("basis size N");
  });
});

describe("error reporting", () => {
  it("names missing columns", () => {
    const table = parseCsv("scheme,dt\nstrang,0.1\n");
    expect(() => renderSeriesFigure(table, { kind: "err-vs-dt" }))
      .toThrow(/err_inf/);
  });

  it("rejects tables that are empty after filtering", () => {
    const table = parseCsv(
      "scheme,dt,err_inf,eps_mass,eps_ham,cost,status\n" +
      "strang,0.1,nan,nan,nan,10,blowup@3\n");
    expect(() => renderSeriesFigure(table, { kind: "err-vs-dt" }))
      .toThrow(/no finite positive/);
  });
});

describe("renderEvolutionFigure on real snapshots", () => {
  it("draws the |u| heat map with axes and a color bar", () => {
    const snaps = loadSnapshots(join(FIXTURES, "snapshots"));
    expect(snaps.length).toBeGreaterThanOrEqual(3);
    const svg = renderEvolutionFigure(snaps, "evolution");
    expect(svg.startsWith("<svg")).toBe(true);
    expect((svg.match(/<rect /g) ?? []).length).toBeGreaterThan(200);
    expect(svg).toContain('>|u|<');
    const a = renderEvolutionFigure(snaps, "evolution");
    expect(a).toBe(svg);
  });

  it("rejects inconsistent grids", () => {
    expect(() => renderEvolutionFigure([
      { t: 0, x: [0, 1], abs: [1, 1] },
      { t: 1, x: [0, 1, 2], abs: [1, 1, 1] },
    ])).toThrow(/inconsistent/);
  });

  it("needs at least two snapshots", () => {
    expect(() => renderEvolutionFigure([{ t: 0, x: [0], abs: [1] }]))
      .toThrow(/two snapshots/);
  });
});

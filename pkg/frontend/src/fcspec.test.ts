import { describe, expect, it } from "vitest";

import {
  DEFAULT_FIELDS, FcFields, bannerText, buildFcString,
  supportsPercentSignificance, supportsPercentThreshold,
} from "./fcspec.js";

function fields(overrides: Partial<FcFields>): FcFields {
  return { ...DEFAULT_FIELDS, ...overrides };
}

describe("buildFcString", () => {
  it("serializes the defaults", () => {
    expect(buildFcString(DEFAULT_FIELDS)).toBe("FC;D;None;All;HDh;Mean");
  });

  it("emits a percent threshold for Wolfprune", () => {
    const s = buildFcString(fields({ pt: "Wolfprune", th: 5, thPercent: true }));
    expect(s).toBe("FC;D;Wolfprune 5 %;All;HDh;Mean");
  });

  it("emits a literal threshold when percent is off", () => {
    const s = buildFcString(fields({ pt: "Wolfprune", th: 0.2, thPercent: false }));
    expect(s).toBe("FC;D;Wolfprune 0.2;All;HDh;Mean");
  });

  it("ignores the percent flag for VolS and DevLength", () => {
    expect(buildFcString(fields({ pt: "VolS", th: 3, thPercent: true })))
      .toBe("FC;D;VolS 3;All;HDh;Mean");
    expect(buildFcString(fields({ pt: "DevLength", th: 3, thPercent: true })))
      .toBe("FC;D;DevLength 3;All;HDh;Mean");
  });

  it("emits opt and ignores the numeric threshold", () => {
    const s = buildFcString(fields({ pt: "Width", th: 99, thOpt: true }));
    expect(s).toBe("FC;D;Width opt;All;HDh;Mean");
  });

  it("keeps None pruning bare even with opt set", () => {
    expect(buildFcString(fields({ pt: "None", thOpt: true })))
      .toBe("FC;D;None;All;HDh;Mean");
  });

  it("serializes Top/Bot counts without percent", () => {
    const s = buildFcString(fields({ fsig: "Top", ni: 5, niPercent: true }));
    expect(s).toBe("FC;D;None;Top 5;HDh;Mean");
  });

  it("serializes Open/Closed with and without percent", () => {
    expect(buildFcString(fields({ fsig: "Closed", ni: 1.5 })))
      .toBe("FC;D;None;Closed 1.5;HDh;Mean");
    expect(buildFcString(fields({ fsig: "Open", ni: 40, niPercent: true })))
      .toBe("FC;D;None;Open 40 %;HDh;Mean");
  });

  it("adds the Perc limit value", () => {
    const s = buildFcString(fields({ astats: "Perc", vstats: 1.2 }));
    expect(s).toBe("FC;D;None;All;HDh;Perc 1.2");
  });

  it("covers all feature types", () => {
    for (const ft of ["D", "V", "H", "P"] as const) {
      expect(buildFcString(fields({ ft }))).toBe(`FC;${ft};None;All;HDh;Mean`);
    }
  });

  it("rejects non-finite numbers", () => {
    expect(() => buildFcString(fields({ pt: "Wolfprune", th: NaN })))
      .toThrow(/non-finite/);
  });

  it("always has exactly six semicolon-separated fields", () => {
    const samples: Partial<FcFields>[] = [
      {},
      { pt: "Wolfprune", thPercent: true },
      { pt: "Width", thOpt: true },
      { fsig: "Bot", ni: 3 },
      { astats: "Perc", vstats: 0.5 },
      { ft: "H", pt: "VolS", th: 1, fsig: "Open", ni: 0.1, at: "HDv", astats: "Hist" },
    ];
    for (const s of samples) {
      expect(buildFcString(fields(s)).split(";")).toHaveLength(6);
    }
  });
});

describe("capability helpers", () => {
  it("only Wolfprune and Width take percent thresholds", () => {
    expect(supportsPercentThreshold("Wolfprune")).toBe(true);
    expect(supportsPercentThreshold("Width")).toBe(true);
    expect(supportsPercentThreshold("VolS")).toBe(false);
    expect(supportsPercentThreshold("DevLength")).toBe(false);
    expect(supportsPercentThreshold("None")).toBe(false);
  });

  it("only Open and Closed take percent significance", () => {
    expect(supportsPercentSignificance("Open")).toBe(true);
    expect(supportsPercentSignificance("Closed")).toBe(true);
    expect(supportsPercentSignificance("Top")).toBe(false);
    expect(supportsPercentSignificance("All")).toBe(false);
  });
});

describe("bannerText", () => {
  it("returns null for no warnings", () => {
    expect(bannerText([])).toBeNull();
  });

  it("maps the degenerate-result codes to readable text", () => {
    expect(bannerText(["EMPTY_MOTIFS"])).toMatch(/No motifs/);
    expect(bannerText(["NO_SIGNIFICANT"])).toMatch(/No significant/);
    expect(bannerText(["FEW_MOTIFS"])).toMatch(/periodicity/);
  });

  it("joins multiple warnings and passes unknown codes through", () => {
    const text = bannerText(["EMPTY_MOTIFS", "SOMETHING_ELSE"]);
    expect(text).toMatch(/No motifs/);
    expect(text).toMatch(/SOMETHING_ELSE/);
  });
});

/** DOM wiring for the tuning workbench. */

import { ApiClient, CharacterizeResponse, ExampleProfile, HistogramJson } from "./api.js";
import { nearestMotifIndex, renderChart } from "./chart.js";
import { CsvError, parseCsv } from "./csv.js";
import {
  ATTR_TYPES, DEFAULT_FIELDS, FEATURE_TYPES, FcFields, PRUNE_TYPES, SIG_TYPES,
  STAT_TYPES, bannerText, buildFcString, supportsPercentSignificance,
  supportsPercentThreshold,
} from "./fcspec.js";
import { RequestScheduler } from "./scheduler.js";

interface LoadedProfile {
  label: string;
  z: number[];
  dx: number;
}

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function fillSelect(el: HTMLSelectElement, values: readonly string[], selected: string) {
  el.innerHTML = "";
  for (const v of values) {
    const opt = document.createElement("option");
    opt.value = v;
    opt.textContent = v;
    opt.selected = v === selected;
    el.appendChild(opt);
  }
}

function formatValue(value: number | HistogramJson | null): string {
  if (value === null) return "NaN";
  if (typeof value === "number") {
    return String(Number(value.toPrecision(9)));
  }
  const parts = value.counts.map((c, i) =>
    `[${short(value.edges[i])}, ${short(value.edges[i + 1])}): ${c}`);
  return parts.join("   ");
}

function short(v: number): string {
  return String(Number(v.toPrecision(4)));
}

export function startApp(): void {
  const api = new ApiClient();
  const fields: FcFields = { ...DEFAULT_FIELDS };
  let profile: LoadedProfile | null = null;
  let lastResponse: CharacterizeResponse | null = null;

  const ftSel = $("ft") as HTMLSelectElement;
  const ptSel = $("pt") as HTMLSelectElement;
  const thInput = $("th") as HTMLInputElement;
  const thPct = $("th-pct") as HTMLInputElement;
  const thOpt = $("th-opt") as HTMLInputElement;
  const sigSel = $("fsig") as HTMLSelectElement;
  const niInput = $("ni") as HTMLInputElement;
  const niPct = $("ni-pct") as HTMLInputElement;
  const atSel = $("at") as HTMLSelectElement;
  const statsSel = $("astats") as HTMLSelectElement;
  const vstatsInput = $("vstats") as HTMLInputElement;
  const profileSel = $("profile") as HTMLSelectElement;
  const fileInput = $("csv-file") as HTMLInputElement;
  const dxInput = $("csv-dx") as HTMLInputElement;
  const preview = $("fc-preview");
  const valueEl = $("value");
  const motifCountEl = $("motif-count");
  const resolvedThEl = $("resolved-th");
  const banner = $("banner");
  const errorEl = $("error");
  const hoverEl = $("hover");
  const canvas = $("chart") as HTMLCanvasElement;

  fillSelect(ftSel, FEATURE_TYPES, fields.ft);
  fillSelect(ptSel, PRUNE_TYPES, fields.pt);
  fillSelect(sigSel, SIG_TYPES, fields.fsig);
  fillSelect(atSel, ATTR_TYPES, fields.at);
  fillSelect(statsSel, STAT_TYPES, fields.astats);
  thInput.value = String(fields.th);
  thPct.checked = fields.thPercent;
  niInput.value = String(fields.ni);
  vstatsInput.value = String(fields.vstats);

  const scheduler = new RequestScheduler<{ z: number[]; dx: number; spec: string },
    CharacterizeResponse>(
    (args) => api.characterize(args.z, args.dx, args.spec),
    (res) => showResponse(res),
    (err) => showError(err),
  );

  function syncControlStates() {
    const pruning = fields.pt !== "None";
    thInput.disabled = !pruning || fields.thOpt;
    thPct.disabled = !pruning || fields.thOpt || !supportsPercentThreshold(fields.pt);
    thOpt.disabled = !pruning;
    const needsNi = fields.fsig !== "All";
    niInput.disabled = !needsNi;
    niPct.disabled = !needsNi || !supportsPercentSignificance(fields.fsig);
    vstatsInput.disabled = fields.astats !== "Perc";
  }

  function refresh(immediate = false) {
    syncControlStates();
    let spec: string;
    try {
      spec = buildFcString(fields);
    } catch (e) {
      errorEl.textContent = e instanceof Error ? e.message : String(e);
      errorEl.hidden = false;
      return;
    }
    preview.textContent = spec;
    if (!profile) return;
    const args = { z: profile.z, dx: profile.dx, spec };
    if (immediate) scheduler.fireNow(args);
    else scheduler.schedule(args);
  }

  function showResponse(res: CharacterizeResponse) {
    lastResponse = res;
    errorEl.hidden = true;
    valueEl.textContent = formatValue(res.value);
    motifCountEl.textContent =
      `${res.motifs.length} motifs, ${res.motifs.filter((m) => m.sig).length} significant`;
    resolvedThEl.textContent = fields.thOpt && res.meta.TH != null
      ? `resolved TH = ${short(res.meta.TH)}` : "";
    const text = bannerText(res.warnings);
    banner.textContent = text ?? "";
    banner.hidden = text === null;
    draw();
  }

  function showError(err: unknown) {
    const anyErr = err as { field?: string | null; message?: string };
    const where = anyErr?.field ? ` (field ${anyErr.field})` : "";
    errorEl.textContent = `${anyErr?.message ?? String(err)}${where}`;
    errorEl.hidden = false;
  }

  function draw() {
    if (!profile || !lastResponse) return;
    const sigLevel = supportsPercentSignificance(fields.fsig)
      ? lastResponse.meta.NIsig : null;
    const ctx = canvas.getContext("2d");
    if (!ctx) return;
    renderChart(ctx, profile.z, profile.dx, lastResponse.overlays,
      canvas.width, canvas.height, { significanceLevel: sigLevel });
  }

  canvas.addEventListener("mousemove", (ev) => {
    if (!profile || !lastResponse || lastResponse.overlays.length === 0) {
      hoverEl.textContent = "";
      return;
    }
    const rect = canvas.getBoundingClientRect();
    const fx = (ev.clientX - rect.left) / rect.width;
    const dataX = fx * (profile.z.length - 1) * profile.dx;
    const i = nearestMotifIndex(lastResponse.overlays, dataX);
    if (i < 0) return;
    const ov = lastResponse.overlays[i];
    // meta.attr holds values for significant motifs in order
    const sigIndex = lastResponse.overlays.slice(0, i + 1)
      .filter((o) => o.sig).length - 1;
    const attr = ov.sig ? lastResponse.meta.attr[sigIndex] : null;
    hoverEl.textContent =
      `motif ${i + 1}: pit x=${short(ov.pit[0])} z=${short(ov.pit[1])}` +
      (attr != null ? `, ${fields.at}=${short(attr)}` : ov.sig ? "" : " (not significant)");
  });

  ftSel.addEventListener("change", () => { fields.ft = ftSel.value as FcFields["ft"]; refresh(); });
  ptSel.addEventListener("change", () => { fields.pt = ptSel.value as FcFields["pt"]; refresh(); });
  thInput.addEventListener("input", () => { fields.th = Number(thInput.value); refresh(); });
  thPct.addEventListener("change", () => { fields.thPercent = thPct.checked; refresh(); });
  thOpt.addEventListener("change", () => { fields.thOpt = thOpt.checked; refresh(); });
  sigSel.addEventListener("change", () => { fields.fsig = sigSel.value as FcFields["fsig"]; refresh(); });
  niInput.addEventListener("input", () => { fields.ni = Number(niInput.value); refresh(); });
  niPct.addEventListener("change", () => { fields.niPercent = niPct.checked; refresh(); });
  atSel.addEventListener("change", () => { fields.at = atSel.value as FcFields["at"]; refresh(); });
  statsSel.addEventListener("change", () => { fields.astats = statsSel.value as FcFields["astats"]; refresh(); });
  vstatsInput.addEventListener("input", () => { fields.vstats = Number(vstatsInput.value); refresh(); });

  fileInput.addEventListener("change", async () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    try {
      const parsed = parseCsv(await file.text());
      const dx = parsed.dx ?? Number(dxInput.value);
      if (!(dx > 0)) {
        throw new CsvError("one-column file: enter a positive dx in µm");
      }
      profile = { label: file.name, z: parsed.z, dx };
      const opt = document.createElement("option");
      opt.value = "__upload__";
      opt.textContent = `upload: ${file.name}`;
      profileSel.appendChild(opt);
      profileSel.value = "__upload__";
      refresh(true);
    } catch (e) {
      showError({ message: e instanceof Error ? e.message : String(e) });
    }
  });

  api.examples().then((examples: ExampleProfile[]) => {
    profileSel.innerHTML = "";
    for (const ex of examples) {
      const opt = document.createElement("option");
      opt.value = ex.name;
      opt.textContent = `${ex.name} — ${ex.description}`;
      profileSel.appendChild(opt);
    }
    profileSel.addEventListener("change", () => {
      const ex = examples.find((e) => e.name === profileSel.value);
      if (ex) {
        profile = { label: ex.name, z: ex.z, dx: ex.dx };
        refresh(true);
      }
    });
    if (examples.length > 0) {
      profile = { label: examples[0].name, z: examples[0].z, dx: examples[0].dx };
      refresh(true);
    }
  }, (err: unknown) => showError(err));

  refresh();
}

if (typeof document !== "undefined" && document.getElementById("chart")) {
  startApp();
}

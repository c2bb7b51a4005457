/** Form state for the six FC fields and its serialization to FC text.
 *
 * The UI performs no numeric work of its own: this module only has to
 * produce a grammatically valid FC string for the server, for every state
 * the form can reach.
 */

export const FEATURE_TYPES = ["D", "V", "H", "P"] as const;
export const PRUNE_TYPES = ["None", "Wolfprune", "Width", "VolS", "DevLength"] as const;
export const SIG_TYPES = ["All", "Open", "Closed", "Top", "Bot"] as const;
export const ATTR_TYPES = ["HDh", "HDw", "HDv", "HDl", "PVh", "Curvature", "Count"] as const;
export const STAT_TYPES = ["Mean", "Max", "Min", "StdDev", "Perc", "Hist", "Sum", "Density"] as const;

export type FeatureType = (typeof FEATURE_TYPES)[number];
export type PruneType = (typeof PRUNE_TYPES)[number];
export type SigType = (typeof SIG_TYPES)[number];
export type AttrType = (typeof ATTR_TYPES)[number];
export type StatType = (typeof STAT_TYPES)[number];

export interface FcFields {
  ft: FeatureType;
  pt: PruneType;
  /** threshold value; ignored when pt is "None" or thOpt is set */
  th: number;
  /** interpret th as a percentage (Wolfprune/Width only) */
  thPercent: boolean;
  /** request the optimal-periodicity search instead of a numeric th */
  thOpt: boolean;
  fsig: SigType;
  /** count (Top/Bot) or height (Open/Closed); ignored for All */
  ni: number;
  /** interpret ni as a material-ratio percentage (Open/Closed only) */
  niPercent: boolean;
  at: AttrType;
  astats: StatType;
  /** limit value, required for Perc */
  vstats: number;
}

export const DEFAULT_FIELDS: FcFields = {
  ft: "D",
  pt: "None",
  th: 5,
  thPercent: true,
  thOpt: false,
  fsig: "All",
  ni: 5,
  niPercent: false,
  at: "HDh",
  astats: "Mean",
  vstats: 1,
};

/** Pruning types that accept a percentage threshold. */
export function supportsPercentThreshold(pt: PruneType): boolean {
  return pt === "Wolfprune" || pt === "Width";
}

/** Significance types that accept a percentage level. */
export function supportsPercentSignificance(fsig: SigType): boolean {
  return fsig === "Open" || fsig === "Closed";
}

function num(x: number): string {
  if (!Number.isFinite(x)) throw new Error(`non-finite numeric field: ${x}`);
  return String(x);
}

/** Serialize the form state to canonical FC text. */
export function buildFcString(f: FcFields): string {
  let pruning: string;
  if (f.pt === "None") {
    pruning = "None";
  } else if (f.thOpt) {
    pruning = `${f.pt} opt`;
  } else if (f.thPercent && supportsPercentThreshold(f.pt)) {
    pruning = `${f.pt} ${num(f.th)} %`;
  } else {
    pruning = `${f.pt} ${num(f.th)}`;
  }

  let sig: string;
  if (f.fsig === "All") {
    sig = "All";
  } else if (f.niPercent && supportsPercentSignificance(f.fsig)) {
    sig = `${f.fsig} ${num(f.ni)} %`;
  } else {
    sig = `${f.fsig} ${num(f.ni)}`;
  }

  const stats = f.astats === "Perc" ? `Perc ${num(f.vstats)}` : f.astats;
  return ["FC", f.ft, pruning, sig, f.at, stats].join(";");
}

/** Human-readable banner text for degenerate-result warning codes. */
export function bannerText(warnings: string[]): string | null {
  const messages: Record<string, string> = {
    EMPTY_MOTIFS: "No motifs: the profile has no complete dale/hill under these settings.",
    NO_SIGNIFICANT: "No significant features: every motif was filtered out by the significance selection.",
    CURVATURE_EDGE: "Some pits sit too close to the profile ends for the curvature window; their values are missing.",
    FEW_MOTIFS: "Too few motifs for the periodicity search; the default threshold was used.",
  };
  const texts = warnings.map((w) => messages[w] ?? w);
  return texts.length ? texts.join(" ") : null;
}

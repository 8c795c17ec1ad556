/** String-assembled SVG primitives (deterministic output, no DOM). */

export type Attrs = Record<string, string | number>;

export function el(tag: string, attrs: Attrs, children: string[] = []): string {
  const attrText = Object.entries(attrs)
    .map(([k, v]) => `${k}="${v}"`)
    .join(" ");
  if (children.length === 0) {
    return `<${tag} ${attrText}/>`;
  }
  return `<${tag} ${attrText}>${children.join("")}</${tag}>`;
}

export function text(x: string, y: string, content: string, extra: Attrs = {}): string {
  return el("text", { x, y, "font-size": 11, "font-family": "sans-serif", ...extra }, [
    escapeText(content),
  ]);
}

export function escapeText(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function document(width: number, height: number, body: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    `<rect x="0" y="0" width="${width}" height="${height}" fill="white"/>`,
    ...body,
    "</svg>",
    "",
  ].join("\n");
}

/** Stable qualitative palette, one entry per scheme in catalog order. */
export const SCHEME_ORDER = [
  "lie-trotter",
  "strang",
  "ruth",
  "neri",
  "yoshida6",
  "affine2",
  "affine4",
  "affine6",
];

const PALETTE = [
  "#4477aa",
  "#ee6677",
  "#228833",
  "#ccbb44",
  "#66ccee",
  "#aa3377",
  "#bbbbbb",
  "#222222",
];

export function seriesColor(name: string, index: number): string {
  const fixed = SCHEME_ORDER.indexOf(name);
  return PALETTE[(fixed >= 0 ? fixed : index) % PALETTE.length];
}

/** Five-stop blue->yellow ramp for heat maps, t in [0, 1]. */
export function heatColor(t: number): string {
  const stops: [number, number, number][] = [
    [13, 8, 135],
    [84, 2, 163],
    [156, 23, 158],
    [237, 121, 83],
    [240, 249, 33],
  ];
  const clamped = Math.min(1, Math.max(0, t));
  const pos = clamped * (stops.length - 1);
  const i = Math.min(stops.length - 2, Math.floor(pos));
  const f = pos - i;
  const mix = stops[i].map((c, k) => Math.round(c + f * (stops[i + 1][k] - c)));
  return `rgb(${mix[0]},${mix[1]},${mix[2]})`;
}

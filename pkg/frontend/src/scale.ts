/** Linear and logarithmic axis scales with deterministic tick placement. */

export interface Scale {
  (value: number): number;
  ticks(): number[];
  domain: [number, number];
  range: [number, number];
  log: boolean;
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const fn = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  fn.range = range;
  fn.log = false;
  fn.ticks = () => {
    const step = niceStep(span / 5);
    const first = Math.ceil(d0 / step) * step;
    const out: number[] = [];
    for (let v = first; v <= d1 + 1e-12 * Math.abs(span); v += step) {
      out.push(Number(v.toPrecision(12)));
    }
    return out;
  };
  return fn;
}

function niceStep(raw: number): number {
  const mag = Math.pow(10, Math.floor(Math.log10(Math.abs(raw) || 1)));
  const unit = raw / mag;
  const nice = unit < 1.5 ? 1 : unit < 3.5 ? 2 : unit < 7.5 ? 5 : 10;
  return nice * mag;
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  if (d0 <= 0 || d1 <= 0) {
    throw new Error(`log scale needs positive bounds, got [${d0}, ${d1}]`);
  }
  const l0 = Math.log10(d0);
  const l1 = Math.log10(d1);
  const span = l1 - l0 || 1;
  const [r0, r1] = range;
  const fn = ((v: number) => r0 + ((Math.log10(v) - l0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  fn.range = range;
  fn.log = true;
  fn.ticks = () => {
    const out: number[] = [];
    const lo = Math.ceil(l0 - 1e-9);
    const hi = Math.floor(l1 + 1e-9);
    const stride = Math.max(1, Math.ceil((hi - lo) / 9));
    for (let e = lo; e <= hi; e += stride) {
      out.push(Number(`1e${e}`)); // decimal parse: bit-identical to 1e<e> literals
    }
    return out;
  };
  return fn;
}

/** Domain padded multiplicatively (log) or additively (linear). */
export function padDomain(values: number[], log: boolean): [number, number] {
  const finite = values.filter((v) => Number.isFinite(v) && (!log || v > 0));
  if (finite.length === 0) {
    throw new Error("no plottable values after filtering");
  }
  let lo = Math.min(...finite);
  let hi = Math.max(...finite);
  if (log) {
    lo /= 1.5;
    hi *= 1.5;
  } else {
    const pad = 0.05 * (hi - lo || Math.abs(hi) || 1);
    lo -= pad;
    hi += pad;
  }
  return [lo, hi];
}

/** Fixed-precision deterministic number formatting for SVG attributes. */
export function fmt(v: number): string {
  if (!Number.isFinite(v)) return "0";
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

export function fmtTick(v: number, log: boolean): string {
  if (log) {
    const e = Math.round(Math.log10(v));
    return `1e${e}`;
  }
  return Math.abs(v) >= 1000 || (Math.abs(v) < 0.01 && v !== 0)
    ? v.toExponential(0)
    : String(Number(v.toPrecision(6)));
}

// Time-on-x SVG line charts with an optional shaded target band. Pure
// string builders so they render identically in the browser and in tests.

export interface ChartPoint {
  t: number; // epoch ms
  value: number;
}

export interface ChartSeries {
  label: string;
  color: string;
  points: ChartPoint[];
}

export interface ChartBand {
  low: number;
  high: number;
  label: string;
}

export interface ChartOptions {
  width?: number;
  height?: number;
  series: ChartSeries[];
  band?: ChartBand;
  unit?: string;
}

const MARGIN = { top: 12, right: 16, bottom: 24, left: 48 };

export function scaleLinear(
  [d0, d1]: [number, number],
  [r0, r1]: [number, number],
): (v: number) => number {
  const span = d1 - d0;
  if (span === 0) return () => (r0 + r1) / 2;
  return (v) => r0 + ((v - d0) / span) * (r1 - r0);
}

function extent(values: number[]): [number, number] {
  let lo = values[0] ?? 0;
  let hi = values[0] ?? 1;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return [lo, hi];
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function fmtTick(v: number): string {
  return String(Number(v.toFixed(1)));
}

function fmtDateTick(ms: number): string {
  return new Date(ms).toISOString().slice(5, 10); // MM-DD
}

/** Renders the chart as an <svg> string; empty series produce a frame only. */
export function lineChart(opts: ChartOptions): string {
  const width = opts.width ?? 640;
  const height = opts.height ?? 240;
  const innerW = width - MARGIN.left - MARGIN.right;
  const innerH = height - MARGIN.top - MARGIN.bottom;

  const allPoints = opts.series.flatMap((s) => s.points);
  const yValues = allPoints.map((p) => p.value);
  if (opts.band) yValues.push(opts.band.low, opts.band.high);
  let [yLo, yHi] = yValues.length ? extent(yValues) : [0, 1];
  const pad = (yHi - yLo || 1) * 0.1;
  yLo -= pad;
  yHi += pad;

  const [tLo, tHi] = allPoints.length
    ? extent(allPoints.map((p) => p.t))
    : [0, 1];
  const x = scaleLinear([tLo, tHi], [MARGIN.left, MARGIN.left + innerW]);
  const y = scaleLinear([yLo, yHi], [MARGIN.top + innerH, MARGIN.top]);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
    `class="chart" role="img">`,
  );
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${innerW}" height="${innerH}" ` +
    `class="chart-frame" fill="none" stroke="#ccc"/>`,
  );

  if (opts.band) {
    const top = y(opts.band.high);
    const bottom = y(opts.band.low);
    parts.push(
      `<rect class="chart-band" x="${MARGIN.left}" y="${top.toFixed(1)}" ` +
      `width="${innerW}" height="${(bottom - top).toFixed(1)}" ` +
      `fill="#8bc34a" opacity="0.18">` +
      `<title>${esc(opts.band.label)}: ${fmtTick(opts.band.low)}–${fmtTick(opts.band.high)}</title></rect>`,
    );
  }

  // four horizontal gridlines with y labels
  for (let i = 0; i <= 3; i++) {
    const v = yLo + ((yHi - yLo) * i) / 3;
    const yy = y(v);
    parts.push(
      `<line x1="${MARGIN.left}" x2="${MARGIN.left + innerW}" y1="${yy.toFixed(1)}" ` +
      `y2="${yy.toFixed(1)}" stroke="#eee"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 6}" y="${(yy + 4).toFixed(1)}" text-anchor="end" ` +
      `class="chart-tick">${fmtTick(v)}</text>`,
    );
  }
  if (allPoints.length > 0) {
    for (const tv of tLo === tHi ? [tLo] : [tLo, (tLo + tHi) / 2, tHi]) {
      parts.push(
        `<text x="${x(tv).toFixed(1)}" y="${height - 6}" text-anchor="middle" ` +
        `class="chart-tick">${fmtDateTick(tv)}</text>`,
      );
    }
  }

  for (const series of opts.series) {
    if (series.points.length === 0) continue;
    const coords = series.points
      .map((p) => `${x(p.t).toFixed(1)},${y(p.value).toFixed(1)}`)
      .join(" ");
    parts.push(
      `<polyline class="chart-line" data-series="${esc(series.label)}" ` +
      `points="${coords}" fill="none" stroke="${series.color}" stroke-width="1.5"/>`,
    );
    for (const p of series.points) {
      parts.push(
        `<circle class="chart-dot" cx="${x(p.t).toFixed(1)}" cy="${y(p.value).toFixed(1)}" ` +
        `r="2.5" fill="${series.color}"><title>${esc(series.label)} ` +
        `${fmtTick(p.value)}${opts.unit ? " " + esc(opts.unit) : ""}</title></circle>`,
      );
    }
  }

  parts.push("</svg>");
  return parts.join("");
}

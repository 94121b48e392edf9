/**
 * SVG renderers for the two region-figure modes.
 *
 * cube3d: isometric scatter of the CP rows of a fixed-t3 cube sweep, one
 *   circle per node, colored by which generation condition fired.
 * pc2d: shaded cell grid over the (lambda1, lambda3) plane of a
 *   phase-covariant sweep (lambda2 = lambda1).
 *
 * Colors derive solely from the CSV boolean columns; nothing here
 * reclassifies. Non-CP rows are not drawn. Every data element carries a
 * class attribute (ch1 / ch2 / cp-only) so colored-element counts are
 * checkable against the CSV flag counts. Output is a pure function of the
 * parsed rows: no timestamps, no randomness.
 */

import type { SweepRow } from "./csv.js";

export const MODES = ["cube3d", "pc2d"] as const;
export type Mode = (typeof MODES)[number];

export const COLORS = {
  ch1: "#4361ee",
  ch2: "#e63946",
  cpOnly: "#999999",
} as const;

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Short deterministic number label: "0", "0.5", "-1". */
function lbl(v: number): string {
  return Math.abs(v) < 1e-12 ? "0" : String(Number(v.toPrecision(4)));
}

function cssClass(row: SweepRow): string {
  return row.ch1 ? "ch1" : row.ch2 ? "ch2" : "cp-only";
}

function fillOf(row: SweepRow): string {
  return row.ch1 ? COLORS.ch1 : row.ch2 ? COLORS.ch2 : COLORS.cpOnly;
}

function sortedUnique(values: number[]): number[] {
  return Array.from(new Set(values)).sort((a, b) => a - b);
}

interface FlagCounts {
  cp: number;
  blue: number;
  red: number;
  gray: number;
}

function countFlags(rows: SweepRow[]): FlagCounts {
  let cp = 0, blue = 0, red = 0, gray = 0;
  for (const r of rows) {
    if (!r.cp) continue;
    cp++;
    if (r.ch1) blue++;
    else if (r.ch2) red++;
    else gray++;
  }
  return { cp, blue, red, gray };
}

function legend(x: number, y: number, counts: FlagCounts): string {
  const entries: Array<[string, string]> = [
    [COLORS.ch1, `CH1 (${counts.blue})`],
    [COLORS.ch2, `CH2 (${counts.red})`],
    [COLORS.cpOnly, `CP, neither (${counts.gray})`],
  ];
  let s = "";
  let cx = x;
  for (const [color, text] of entries) {
    s += `<rect x="${cx}" y="${y - 7}" width="9" height="9" fill="${color}"/>\n`;
    s += `<text x="${cx + 13}" y="${y + 1}" font-size="10" fill="#444">${esc(text)}</text>\n`;
    cx += 13 + text.length * 5.4 + 18;
  }
  return s;
}

function svgOpen(w: number, h: number): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${w} ${h}" ` +
    `font-family="Helvetica, Arial, sans-serif">\n<rect width="${w}" height="${h}" fill="#fff"/>\n`
  );
}

// ---------------------------------------------------------------------------
// cube3d: isometric scatter
// ---------------------------------------------------------------------------

const COS30 = Math.sqrt(3) / 2;
const SIN30 = 0.5;

/** Isometric projection of a lambda triple onto the drawing plane. */
export function projectCube(l1: number, l2: number, l3: number): [number, number] {
  return [(l1 - l2) * COS30, (l1 + l2) * SIN30 - l3];
}

const CUBE_W = 560;
const CUBE_H = 600;
const CUBE_SCALE = 120;
const CUBE_CX = CUBE_W / 2;
const CUBE_CY = 290;

/** Projected lambda triple in final pixel coordinates. */
export function cubePoint(l1: number, l2: number, l3: number): [number, number] {
  const [px, py] = projectCube(l1, l2, l3);
  return [CUBE_CX + px * CUBE_SCALE, CUBE_CY - py * CUBE_SCALE];
}

function cubeWireframe(): string {
  const verts: Array<[number, number, number]> = [];
  for (const a of [-1, 1]) for (const b of [-1, 1]) for (const c of [-1, 1]) verts.push([a, b, c]);
  let s = "";
  for (let i = 0; i < verts.length; i++) {
    for (let j = i + 1; j < verts.length; j++) {
      const [a1, b1, c1] = verts[i]!;
      const [a2, b2, c2] = verts[j]!;
      const diff = (a1 !== a2 ? 1 : 0) + (b1 !== b2 ? 1 : 0) + (c1 !== c2 ? 1 : 0);
      if (diff !== 1) continue;
      const [x1, y1] = cubePoint(a1, b1, c1);
      const [x2, y2] = cubePoint(a2, b2, c2);
      s += `<line x1="${x1.toFixed(2)}" y1="${y1.toFixed(2)}" x2="${x2.toFixed(2)}" y2="${y2.toFixed(2)}" stroke="#ccc" stroke-width="0.8"/>\n`;
    }
  }
  // Axis labels sit just beyond the vertex (-1,-1,-1) along each axis.
  const axes: Array<[string, [number, number, number]]> = [
    ["λ₁", [1.22, -1, -1]],
    ["λ₂", [-1, 1.22, -1]],
    ["λ₃", [-1, -1, 1.18]],
  ];
  for (const [name, [a, b, c]] of axes) {
    const [x, y] = cubePoint(a, b, c);
    s += `<text x="${x.toFixed(2)}" y="${y.toFixed(2)}" text-anchor="middle" font-size="12" fill="#555">${name}</text>\n`;
  }
  return s;
}

export function renderCube3d(rows: SweepRow[]): string {
  const counts = countFlags(rows);
  const t3 = rows[0]!.t3;
  const n = sortedUnique(rows.map((r) => r.lambda1)).length;
  const spacing = n > 1 ? 2 / (n - 1) : 2;
  const r = Math.min(6, Math.max(1, CUBE_SCALE * spacing * 0.18));

  let s = svgOpen(CUBE_W, CUBE_H);
  s += `<text x="${CUBE_CX}" y="24" text-anchor="middle" font-size="14" font-weight="600" fill="#222">Nonlocality-generating region, t₃ = ${esc(lbl(t3))}</text>\n`;
  s += `<text x="${CUBE_CX}" y="40" text-anchor="middle" font-size="10" fill="#888">${counts.cp} CP nodes of ${rows.length} on a ${n}³ grid</text>\n`;
  s += cubeWireframe();

  for (const row of rows) {
    if (!row.cp) continue;
    const [x, y] = cubePoint(row.lambda1, row.lambda2, row.lambda3);
    s += `<circle class="${cssClass(row)}" cx="${x.toFixed(2)}" cy="${y.toFixed(2)}" r="${r.toFixed(2)}" fill="${fillOf(row)}" fill-opacity="0.85"/>\n`;
  }

  s += legend(CUBE_CX - 190, CUBE_H - 22, counts);
  s += `</svg>\n`;
  return s;
}

// ---------------------------------------------------------------------------
// pc2d: shaded cell grid
// ---------------------------------------------------------------------------

const PC_W = 520;
const PC_H = 560;
const PC_ML = 70;
const PC_MR = 30;
const PC_MT = 56;
const PC_MB = 60;

export function renderPc2d(rows: SweepRow[]): string {
  const counts = countFlags(rows);
  const t3 = rows[0]!.t3;
  const xs = sortedUnique(rows.map((r) => r.lambda1));
  const ys = sortedUnique(rows.map((r) => r.lambda3));
  const pw = PC_W - PC_ML - PC_MR;
  const ph = PC_H - PC_MT - PC_MB;
  const x0 = xs[0]!, x1 = xs[xs.length - 1]!;
  const y0 = ys[0]!, y1 = ys[ys.length - 1]!;
  const X = (v: number) => PC_ML + ((v - x0) / (x1 - x0 || 1)) * pw;
  const Y = (v: number) => PC_MT + ph - ((v - y0) / (y1 - y0 || 1)) * ph;
  const cw = xs.length > 1 ? pw / (xs.length - 1) : pw;
  const chh = ys.length > 1 ? ph / (ys.length - 1) : ph;

  let s = svgOpen(PC_W, PC_H);
  s += `<text x="${PC_ML + pw / 2}" y="24" text-anchor="middle" font-size="14" font-weight="600" fill="#222">Phase-covariant plane (λ₂ = λ₁), t₃ = ${esc(lbl(t3))}</text>\n`;
  s += `<text x="${PC_ML + pw / 2}" y="40" text-anchor="middle" font-size="10" fill="#888">${counts.cp} CP nodes of ${rows.length} on a ${xs.length}×${ys.length} grid</text>\n`;

  for (const row of rows) {
    if (!row.cp) continue;
    const x = X(row.lambda1) - cw / 2;
    const y = Y(row.lambda3) - chh / 2;
    s += `<rect class="${cssClass(row)}" x="${x.toFixed(2)}" y="${y.toFixed(2)}" width="${cw.toFixed(2)}" height="${chh.toFixed(2)}" fill="${fillOf(row)}" fill-opacity="0.9"/>\n`;
  }

  // Axes frame and min/mid/max ticks on each axis.
  s += `<line x1="${PC_ML}" y1="${PC_MT}" x2="${PC_ML}" y2="${PC_MT + ph}" stroke="#333" stroke-width="0.8"/>\n`;
  s += `<line x1="${PC_ML}" y1="${PC_MT + ph}" x2="${PC_ML + pw}" y2="${PC_MT + ph}" stroke="#333" stroke-width="0.8"/>\n`;
  for (const v of [x0, (x0 + x1) / 2, x1]) {
    const x = X(v);
    s += `<line x1="${x.toFixed(2)}" y1="${PC_MT + ph}" x2="${x.toFixed(2)}" y2="${PC_MT + ph + 4}" stroke="#333" stroke-width="0.6"/>\n`;
    s += `<text x="${x.toFixed(2)}" y="${PC_MT + ph + 16}" text-anchor="middle" font-size="10" fill="#555">${esc(lbl(v))}</text>\n`;
  }
  for (const v of [y0, (y0 + y1) / 2, y1]) {
    const y = Y(v);
    s += `<line x1="${PC_ML - 4}" y1="${y.toFixed(2)}" x2="${PC_ML}" y2="${y.toFixed(2)}" stroke="#333" stroke-width="0.6"/>\n`;
    s += `<text x="${PC_ML - 8}" y="${(y + 3.5).toFixed(2)}" text-anchor="end" font-size="10" fill="#555">${esc(lbl(v))}</text>\n`;
  }
  s += `<text x="${PC_ML + pw / 2}" y="${PC_H - 26}" text-anchor="middle" font-size="12" fill="#444">λ₁ = λ₂</text>\n`;
  s += `<text x="20" y="${PC_MT + ph / 2}" text-anchor="middle" font-size="12" fill="#444" transform="rotate(-90,20,${PC_MT + ph / 2})">λ₃</text>\n`;

  s += legend(PC_ML, PC_H - 8, counts);
  s += `</svg>\n`;
  return s;
}

// ---------------------------------------------------------------------------

export function render(mode: string, rows: SweepRow[]): string {
  if (mode === "cube3d") return renderCube3d(rows);
  if (mode === "pc2d") return renderPc2d(rows);
  throw new Error(`unknown mode: ${JSON.stringify(mode)} (expected cube3d or pc2d)`);
}

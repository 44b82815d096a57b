/**
 * Year-gap color scale: blue for reuse republished immediately, red for
 * half a century or more later, linear in between.
 */

export const GAP_BLUE = "#2563eb"; // gap 0
export const GAP_RED = "#d92626"; // gap >= GAP_SPAN
export const GAP_SPAN = 50;

function channels(hex: string): [number, number, number] {
  return [
    parseInt(hex.slice(1, 3), 16),
    parseInt(hex.slice(3, 5), 16),
    parseInt(hex.slice(5, 7), 16),
  ];
}

const BLUE = channels(GAP_BLUE);
const RED = channels(GAP_RED);

function hex2(n: number): string {
  return n.toString(16).padStart(2, "0");
}

export function gapColor(yearGap: number): string {
  const t = Math.min(Math.max(yearGap / GAP_SPAN, 0), 1);
  const r = Math.round(BLUE[0] + (RED[0] - BLUE[0]) * t);
  const g = Math.round(BLUE[1] + (RED[1] - BLUE[1]) * t);
  const b = Math.round(BLUE[2] + (RED[2] - BLUE[2]) * t);
  return `#${hex2(r)}${hex2(g)}${hex2(b)}`;
}

/** Stops for a compact legend strip. */
export function legendStops(count = 5): { gap: number; color: string }[] {
  const stops: { gap: number; color: string }[] = [];
  for (let i = 0; i < count; i++) {
    const gap = Math.round((GAP_SPAN * i) / (count - 1));
    stops.push({ gap, color: gapColor(gap) });
  }
  return stops;
}

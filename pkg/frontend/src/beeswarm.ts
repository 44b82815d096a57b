/**
 * Deterministic beeswarm layout.
 *
 * Dots arrive anchored at data positions on two quantitative axes (year
 * and text offset mapped to px). The layout nudges them apart so no two
 * centers end up closer than one diameter, keeping each dot as close to
 * its anchor as it can. Two phases:
 *
 *  1. a fixed number of relaxation rounds: overlapping pairs push each
 *     other apart symmetrically, half the overlap each, which spreads
 *     clusters organically around their anchors;
 *  2. an exact sweep: dots are re-placed in anchor order, and any dot
 *     still colliding walks a sunflower spiral out from its relaxed
 *     position until it finds a free spot.
 *
 * Phase 2 guarantees zero overlaps for any input; phase 1 keeps the
 * result looking like a swarm instead of a spiral. Everything is
 * ordered and seed-free, so the same input always yields the same
 * layout (testability over organic motion).
 */

export interface Anchor {
  x: number;
  y: number;
}

export interface PlacedDot<T> {
  x: number;
  y: number;
  anchor: Anchor;
  datum: T;
}

const GOLDEN_ANGLE = Math.PI * (3 - Math.sqrt(5));

// padding keeps "exactly touching" clear of float noise
const PAD = 1e-3;

/** Uniform grid over dot centers; cells are one diameter wide. */
class Grid {
  private cells = new Map<string, number[]>();

  constructor(private cell: number) {}

  private key(x: number, y: number): string {
    return `${Math.floor(x / this.cell)},${Math.floor(y / this.cell)}`;
  }

  add(x: number, y: number, idx: number): void {
    const k = this.key(x, y);
    const bucket = this.cells.get(k);
    if (bucket) bucket.push(idx);
    else this.cells.set(k, [idx]);
  }

  /** Indices in the 3x3 cell block around (x, y). */
  near(x: number, y: number): number[] {
    const cx = Math.floor(x / this.cell);
    const cy = Math.floor(y / this.cell);
    const out: number[] = [];
    for (let dx = -1; dx <= 1; dx++) {
      for (let dy = -1; dy <= 1; dy++) {
        const bucket = this.cells.get(`${cx + dx},${cy + dy}`);
        if (bucket) out.push(...bucket);
      }
    }
    return out;
  }
}

function relax(xs: number[], ys: number[], radius: number, rounds: number): void {
  const n = xs.length;
  const d = 2 * radius;
  const d2 = d * d;
  for (let round = 0; round < rounds; round++) {
    const grid = new Grid(d);
    for (let i = 0; i < n; i++) grid.add(xs[i], ys[i], i);
    let moved = false;
    for (let i = 0; i < n; i++) {
      for (const j of grid.near(xs[i], ys[i])) {
        if (j <= i) continue;
        let ddx = xs[j] - xs[i];
        let ddy = ys[j] - ys[i];
        let dist2 = ddx * ddx + ddy * ddy;
        if (dist2 >= d2) continue;
        if (dist2 === 0) {
          // coincident centers: pick a deterministic direction from the
          // pair's indices so repeated runs split them identically
          const angle = ((i * 31 + j) % 64) * GOLDEN_ANGLE;
          ddx = Math.cos(angle);
          ddy = Math.sin(angle);
          dist2 = 1;
        }
        const dist = Math.sqrt(dist2);
        const push = (d + PAD - dist) / 2;
        const ux = ddx / dist;
        const uy = ddy / dist;
        xs[i] -= ux * push;
        ys[i] -= uy * push;
        xs[j] += ux * push;
        ys[j] += uy * push;
        moved = true;
      }
    }
    if (!moved) break;
  }
}

/**
 * Re-place dots one by one (stable anchor order) and spiral any dot that
 * still overlaps an already-placed one out to the nearest free position.
 */
function exactify(
  order: number[],
  xs: number[],
  ys: number[],
  radius: number,
): void {
  const d = 2 * radius;
  const d2min = (d + PAD) * (d + PAD);
  const grid = new Grid(d + PAD);
  const px: number[] = [];
  const py: number[] = [];

  const free = (x: number, y: number): boolean => {
    for (const j of grid.near(x, y)) {
      const ddx = px[j] - x;
      const ddy = py[j] - y;
      if (ddx * ddx + ddy * ddy < d2min) return false;
    }
    return true;
  };

  for (const i of order) {
    let x = xs[i];
    let y = ys[i];
    if (!free(x, y)) {
      // sunflower spiral: radius grows with sqrt(k), angle with the
      // golden angle, so candidates tile the plane around the start
      const step = radius * 0.4;
      let k = 1;
      for (;;) {
        const r = step * Math.sqrt(k);
        const a = k * GOLDEN_ANGLE;
        const cx = xs[i] + r * Math.cos(a);
        const cy = ys[i] + r * Math.sin(a);
        if (free(cx, cy)) {
          x = cx;
          y = cy;
          break;
        }
        k++;
        if (k > 1_000_000) throw new Error("beeswarm spiral failed to place dot");
      }
    }
    xs[i] = x;
    ys[i] = y;
    const slot = px.length;
    px.push(x);
    py.push(y);
    grid.add(x, y, slot);
  }
}

export interface SwarmOptions {
  /** relaxation rounds before the exact sweep */
  rounds?: number;
}

export function layoutSwarm<T>(
  items: readonly T[],
  anchorOf: (item: T) => Anchor,
  radius: number,
  opts: SwarmOptions = {},
): PlacedDot<T>[] {
  const rounds = opts.rounds ?? 24;
  const anchors = items.map(anchorOf);
  const xs = anchors.map((a) => a.x);
  const ys = anchors.map((a) => a.y);

  if (items.length > 1) {
    relax(xs, ys, radius, rounds);
    const order = anchors
      .map((a, i) => i)
      .sort((i, j) => anchors[i].x - anchors[j].x || anchors[i].y - anchors[j].y || i - j);
    exactify(order, xs, ys, radius);
  }

  return items.map((datum, i) => ({
    x: xs[i],
    y: ys[i],
    anchor: anchors[i],
    datum,
  }));
}

/** Post-layout scan used by tests: index pairs closer than one diameter. */
export function overlappingPairs(
  dots: readonly { x: number; y: number }[],
  radius: number,
): [number, number][] {
  const d = 2 * radius;
  const d2 = d * d;
  const grid = new Grid(d);
  dots.forEach((p, i) => grid.add(p.x, p.y, i));
  const bad: [number, number][] = [];
  for (let i = 0; i < dots.length; i++) {
    for (const j of grid.near(dots[i].x, dots[i].y)) {
      if (j <= i) continue;
      const dx = dots[j].x - dots[i].x;
      const dy = dots[j].y - dots[i].y;
      if (dx * dx + dy * dy < d2) bad.push([i, j]);
    }
  }
  return bad;
}

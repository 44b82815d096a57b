/**
 * Column sorting shared by the search and edge tables.
 *
 * Re-sorting is always applied to the rows in their current displayed
 * order with a stable sort, so the previous ordering carries over as the
 * tie-breaker: sort by year, then by author, and same-author rows stay
 * year-ordered.
 */

export type SortOrder = "asc" | "desc";

export interface SortState {
  column: string;
  order: SortOrder;
}

/** Clicking the active column flips it; a new column starts ascending. */
export function toggleSort(prev: SortState | null, column: string): SortState {
  if (prev && prev.column === column) {
    return { column, order: prev.order === "asc" ? "desc" : "asc" };
  }
  return { column, order: "asc" };
}

/** Stable single-key sort returning a new array. */
export function sortBy<T>(
  rows: readonly T[],
  key: (row: T) => string | number,
  order: SortOrder,
): T[] {
  const sign = order === "desc" ? -1 : 1;
  // decorate with the original index; Array.sort is stable, but the
  // explicit index keeps that guarantee independent of the runtime
  const decorated = rows.map((row, i) => ({ row, i, k: key(row) }));
  decorated.sort((a, b) => {
    if (a.k < b.k) return -sign;
    if (a.k > b.k) return sign;
    return a.i - b.i;
  });
  return decorated.map((d) => d.row);
}

export function sortIndicator(sort: SortState | null, column: string): string {
  if (!sort || sort.column !== column) return "";
  return sort.order === "asc" ? " ▲" : " ▼";
}

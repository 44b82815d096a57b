// tiny helpers for the string-template renderers

export function esc(text: string | number): string {
  return String(text)
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function attr(name: string, value: string | number): string {
  return `${name}="${esc(value)}"`;
}

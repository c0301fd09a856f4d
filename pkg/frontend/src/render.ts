import { infoFields } from "./stageinfo.js";
import type { StageView } from "./types.js";

// DOM rendering of the per-stage numeric panel and the codeword table.
// Values land in the DOM exactly as the API sent them (String(number) is the
// round-trip decimal form), so the page never shows a recomputed figure.

export function renderInfo(panel: HTMLElement, view: StageView): void {
  panel.innerHTML = "";
  for (const field of infoFields(view)) {
    const dt = panel.ownerDocument.createElement("dt");
    dt.textContent = field.label;
    const dd = panel.ownerDocument.createElement("dd");
    dd.dataset.key = field.key;
    dd.textContent = field.value;
    panel.append(dt, dd);
  }
}

export function renderWords(box: HTMLElement, view: StageView): void {
  box.innerHTML = "";
  if (view.name !== "encoded") return;
  const doc = box.ownerDocument;
  const table = doc.createElement("table");
  const head = table.insertRow();
  for (const h of ["n", "codeword"]) {
    const th = doc.createElement("th");
    th.textContent = h;
    head.append(th);
  }
  view.codewords.forEach((word, n) => {
    const row = table.insertRow();
    row.insertCell().textContent = String(n);
    const cell = row.insertCell();
    cell.className = "word";
    cell.textContent = word;
  });
  box.append(table);
}

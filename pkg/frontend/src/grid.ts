import type { EditorClient } from "./api.js";
import { buildGlyphSvg } from "./glyph.js";
import type { DisplayMode, RangeView } from "./types.js";

export interface GridViewState {
  sessionId: string | null;
  length: number;
  viewportOffset: number;
  columns: number;
  selection: number | null;
  pendingInput: string;
  mode: DisplayMode;
}

const ROW_HEIGHT = 48; // px, keep in sync with style.css
const OVERSCAN_ROWS = 3;
const FALLBACK_VISIBLE_ROWS = 16; // when layout gives no viewport height

function printable(byte: number): string {
  return byte >= 0x20 && byte <= 0x7e ? String.fromCharCode(byte) : ".";
}

/** Virtualized byte grid: renders only the rows in view, fetching each
 * window from the service on demand.  Every glyph is built from the
 * segment arrays the service returned, never recomputed locally. */
export class ByteGrid {
  readonly state: GridViewState;
  readonly viewport: HTMLElement;
  private readonly spacer: HTMLElement;
  private readonly layer: HTMLElement;

  onSelect: (offset: number | null) => void = () => {};
  onError: (message: string) => void = () => {};

  constructor(
    private readonly client: EditorClient,
    container: HTMLElement,
    columns = 16,
  ) {
    this.state = {
      sessionId: null,
      length: 0,
      viewportOffset: 0,
      columns,
      selection: null,
      pendingInput: "",
      mode: "glyph",
    };
    this.viewport = document.createElement("div");
    this.viewport.className = "grid-viewport";
    this.spacer = document.createElement("div");
    this.spacer.className = "grid-spacer";
    this.layer = document.createElement("div");
    this.layer.className = "grid-layer";
    this.spacer.appendChild(this.layer);
    this.viewport.appendChild(this.spacer);
    container.appendChild(this.viewport);
    this.viewport.addEventListener("scroll", () => {
      void this.refresh();
    });
  }

  async attach(sessionId: string, length: number): Promise<void> {
    this.state.sessionId = sessionId;
    this.state.length = length;
    this.state.selection = null;
    this.state.viewportOffset = 0;
    this.viewport.scrollTop = 0;
    this.spacer.style.height = `${Math.max(1, this.rowCount()) * ROW_HEIGHT}px`;
    await this.refresh();
  }

  rowCount(): number {
    return Math.ceil(this.state.length / this.state.columns);
  }

  setMode(mode: DisplayMode): Promise<void> {
    this.state.mode = mode;
    return this.refresh();
  }

  /** First row and row count worth fetching for the current scroll. */
  visibleWindow(): { firstRow: number; rows: number } {
    const total = this.rowCount();
    if (total === 0) return { firstRow: 0, rows: 0 };
    const height = this.viewport.clientHeight;
    const visible =
      height > 0 ? Math.ceil(height / ROW_HEIGHT) : FALLBACK_VISIBLE_ROWS;
    let firstRow = Math.floor(this.viewport.scrollTop / ROW_HEIGHT) - OVERSCAN_ROWS;
    firstRow = Math.max(0, Math.min(firstRow, total - 1));
    const rows = Math.min(visible + 2 * OVERSCAN_ROWS, total - firstRow);
    return { firstRow, rows };
  }

  async refresh(): Promise<void> {
    const { sessionId, columns } = this.state;
    if (sessionId === null) return;
    if (this.state.length === 0) {
      this.renderEmpty();
      return;
    }
    const { firstRow, rows } = this.visibleWindow();
    const offset = firstRow * columns;
    this.state.viewportOffset = offset;
    try {
      const view = await this.client.readRange(sessionId, offset, rows * columns);
      this.render(view, firstRow);
    } catch (error) {
      this.onError(String(error));
    }
  }

  private renderEmpty(): void {
    this.layer.textContent = "";
    const row = document.createElement("div");
    row.className = "grid-row grid-placeholder";
    row.textContent = "empty file";
    this.layer.appendChild(row);
  }

  private render(view: RangeView, firstRow: number): void {
    const { columns } = this.state;
    this.layer.textContent = "";
    for (let base = 0; base < view.length; base += columns) {
      const rowIndex = firstRow + base / columns;
      const row = document.createElement("div");
      row.className = "grid-row";
      row.style.top = `${rowIndex * ROW_HEIGHT}px`;

      const gutter = document.createElement("span");
      gutter.className = "offset-gutter";
      gutter.textContent = (view.offset + base).toString(16).padStart(8, "0");
      row.appendChild(gutter);

      const cells = document.createElement("span");
      cells.className = "cells";
      let ascii = "";
      for (let i = base; i < Math.min(base + columns, view.length); i++) {
        cells.appendChild(this.buildCell(view, i));
        ascii += printable(view.bytes[i]);
      }
      row.appendChild(cells);

      const text = document.createElement("span");
      text.className = "ascii-gutter";
      text.textContent = `|${ascii}|`;
      row.appendChild(text);

      this.layer.appendChild(row);
    }
  }

  private buildCell(view: RangeView, index: number): HTMLElement {
    const offset = view.offset + index;
    const cell = document.createElement("button");
    cell.type = "button";
    cell.className = "cell";
    cell.dataset.offset = String(offset);
    cell.title = view.names[index];
    if (offset === this.state.selection) cell.classList.add("selected");
    this.fillCell(cell, view, index);
    cell.addEventListener("click", () => this.select(offset));
    return cell;
  }

  private fillCell(cell: HTMLElement, view: RangeView, index: number): void {
    cell.textContent = "";
    cell.title = view.names[index];
    const { mode } = this.state;
    if (mode === "glyph" || mode === "both") {
      cell.appendChild(buildGlyphSvg(view.segments[index]));
    }
    if (mode === "names" || mode === "both") {
      const name = document.createElement("span");
      name.className = "byte-name";
      name.textContent = view.names[index];
      cell.appendChild(name);
    }
  }

  cellAt(offset: number): HTMLElement | null {
    return this.layer.querySelector(`[data-offset="${offset}"]`);
  }

  select(offset: number | null): void {
    if (offset !== null && (offset < 0 || offset >= this.state.length)) return;
    const previous = this.state.selection;
    this.state.selection = offset;
    if (previous !== null) this.cellAt(previous)?.classList.remove("selected");
    if (offset !== null) this.cellAt(offset)?.classList.add("selected");
    this.onSelect(offset);
  }

  /** Overwrite one byte, then repaint its cell from a fresh service
   * read so the display is always the service's view. */
  async applyEdit(offset: number, value: number): Promise<void> {
    const { sessionId } = this.state;
    if (sessionId === null) throw new Error("no open session");
    await this.client.patchByte(sessionId, offset, value);
    const view = await this.client.readRange(sessionId, offset, 1);
    const cell = this.cellAt(offset);
    if (cell !== null && view.length === 1) {
      this.fillCell(cell, view, 0);
      const row = cell.closest(".grid-row");
      const ascii = row?.querySelector(".ascii-gutter");
      if (ascii && row) {
        const start = this.rowOffsetOf(row as HTMLElement);
        const chars = [...(ascii.textContent ?? "")];
        const slot = offset - start + 1; // skip leading '|'
        if (slot >= 1 && slot < chars.length - 1) {
          chars[slot] = printable(view.bytes[0]);
          ascii.textContent = chars.join("");
        }
      }
    }
  }

  private rowOffsetOf(row: HTMLElement): number {
    const gutter = row.querySelector(".offset-gutter");
    return parseInt(gutter?.textContent ?? "0", 16);
  }
}

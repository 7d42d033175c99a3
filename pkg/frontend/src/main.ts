import { ApiError, EditorClient } from "./api.js";
import { ByteGrid } from "./grid.js";
import { parseByteInput } from "./input.js";
import type { DisplayMode } from "./types.js";

export interface AppElements {
  pathInput: HTMLInputElement;
  openButton: HTMLButtonElement;
  saveButton: HTMLButtonElement;
  modeSelect: HTMLSelectElement;
  editInput: HTMLInputElement;
  validation: HTMLElement;
  status: HTMLElement;
  banner: HTMLElement;
}

export interface App {
  client: EditorClient;
  grid: ByteGrid;
  elements: AppElements;
  open(path: string): Promise<void>;
  commitEdit(): Promise<boolean>;
  save(): Promise<void>;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className: string,
  parent: HTMLElement,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  node.className = className;
  parent.appendChild(node);
  return node;
}

export function createApp(root: HTMLElement, baseUrl = ""): App {
  const client = new EditorClient(baseUrl);
  root.classList.add("editor");

  const toolbar = el("header", "toolbar", root);
  const pathInput = el("input", "path-input", toolbar);
  pathInput.placeholder = "/path/to/file";
  const openButton = el("button", "open-button", toolbar);
  openButton.textContent = "Open";
  const modeSelect = el("select", "mode-select", toolbar);
  for (const mode of ["glyph", "names", "both"]) {
    const option = document.createElement("option");
    option.value = mode;
    option.textContent = mode;
    modeSelect.appendChild(option);
  }
  const editInput = el("input", "edit-input", toolbar);
  editInput.placeholder = 'edit: "ff" or "Keki"';
  editInput.disabled = true;
  const validation = el("span", "validation", toolbar);
  const saveButton = el("button", "save-button", toolbar);
  saveButton.textContent = "Save";
  saveButton.disabled = true;
  const status = el("span", "status", toolbar);

  const banner = el("div", "banner hidden", root);
  banner.addEventListener("click", () => banner.classList.add("hidden"));

  const gridHost = el("div", "grid-host", root);
  const grid = new ByteGrid(client, gridHost);

  const showError = (message: string) => {
    banner.textContent = message;
    banner.classList.remove("hidden");
  };
  grid.onError = showError;
  grid.onSelect = (offset) => {
    validation.textContent = "";
    if (offset === null) {
      editInput.disabled = true;
      editInput.value = "";
      return;
    }
    editInput.disabled = false;
    status.textContent = `offset 0x${offset.toString(16)}`;
    editInput.focus();
  };

  let editInFlight = false;

  const app: App = {
    client,
    grid,
    elements: {
      pathInput,
      openButton,
      saveButton,
      modeSelect,
      editInput,
      validation,
      status,
      banner,
    },

    async open(path: string): Promise<void> {
      banner.classList.add("hidden");
      try {
        const session = await client.openSession(path);
        await grid.attach(session.id, session.length);
        saveButton.disabled = false;
        status.textContent = `${path} (${session.length} bytes)`;
      } catch (error) {
        showError(error instanceof ApiError ? error.message : String(error));
        throw error;
      }
    },

    /** Validate the edit box and send the patch; false means the input
     * was rejected locally and no request went out. */
    async commitEdit(): Promise<boolean> {
      const offset = grid.state.selection;
      if (offset === null || editInFlight) return false;
      const parsed = parseByteInput(editInput.value);
      if (!parsed.ok) {
        validation.textContent = parsed.reason;
        return false;
      }
      validation.textContent = "";
      editInFlight = true;
      editInput.disabled = true;
      try {
        await grid.applyEdit(offset, parsed.value);
        editInput.value = "";
        status.textContent = `offset 0x${offset.toString(16)} = 0x${parsed.value
          .toString(16)
          .padStart(2, "0")}`;
        return true;
      } catch (error) {
        showError(error instanceof ApiError ? error.message : String(error));
        return false;
      } finally {
        editInFlight = false;
        editInput.disabled = grid.state.selection === null;
      }
    },

    async save(): Promise<void> {
      const sessionId = grid.state.sessionId;
      if (sessionId === null) return;
      try {
        await client.save(sessionId);
        status.textContent = "saved";
      } catch (error) {
        showError(error instanceof ApiError ? error.message : String(error));
        throw error;
      }
    },
  };

  openButton.addEventListener("click", () => {
    void app.open(pathInput.value).catch(() => {});
  });
  saveButton.addEventListener("click", () => {
    void app.save().catch(() => {});
  });
  editInput.addEventListener("keydown", (event) => {
    if (event.key === "Enter") void app.commitEdit();
    if (event.key === "Escape") grid.select(null);
  });
  modeSelect.addEventListener("change", () => {
    void grid.setMode(modeSelect.value as DisplayMode);
  });

  return app;
}

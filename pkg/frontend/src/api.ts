import type { RangeView, SessionInfo } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly kind: string,
    readonly detail: string,
  ) {
    super(`${kind}: ${detail}`);
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    throw new ApiError(
      response.status,
      body.error ?? "Error",
      body.detail ?? response.statusText,
    );
  }
  return body as T;
}

/** Thin client for the editor service; one instance per base URL. */
export class EditorClient {
  constructor(readonly baseUrl: string = "") {}

  openSession(path: string): Promise<SessionInfo> {
    return this.request("POST", "/api/sessions", { path });
  }

  readRange(id: string, offset: number, length: number): Promise<RangeView> {
    return this.request(
      "GET",
      `/api/sessions/${id}/range?offset=${offset}&length=${length}`,
    );
  }

  patchByte(id: string, offset: number, value: number): Promise<{ dirty: boolean }> {
    return this.request("PATCH", `/api/sessions/${id}`, { offset, value });
  }

  save(id: string): Promise<{ dirty: boolean }> {
    return this.request("POST", `/api/sessions/${id}/save`);
  }

  private async request<T>(method: string, route: string, body?: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + route, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    return unwrap<T>(response);
  }
}

export interface SessionInfo {
  id: string;
  length: number;
}

/** One window of session bytes as the service reports it. */
export interface RangeView {
  offset: number;
  length: number;
  bytes: number[];
  names: string[];
  /** Per byte: [high-half labels, low-half labels], subsets of A..G. */
  segments: [string[], string[]][];
}

export type DisplayMode = "glyph" | "names" | "both";

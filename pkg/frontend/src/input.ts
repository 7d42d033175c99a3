/** Edit-box grammar: a byte is typed either as two hex digits ("a9")
 * or as a two-syllable name ("Keki"), detected by shape.  A two
 * character entry is read as hex first, so "ba" is 0xBA, not Bo+?.
 */

export const SYLLABLES = [
  "ho", "ha", "he", "hi",
  "bo", "ba", "be", "bi",
  "ko", "ka", "ke", "ki",
  "do", "da", "de", "di",
] as const;

const SYLLABLE_VALUE = new Map<string, number>(
  SYLLABLES.map((syllable, value) => [syllable, value]),
);

export type ParsedInput =
  | { ok: true; value: number }
  | { ok: false; reason: string };

export function parseByteInput(raw: string): ParsedInput {
  const text = raw.trim();
  if (/^[0-9a-f]{2}$/i.test(text)) {
    return { ok: true, value: parseInt(text, 16) };
  }
  if (/^[a-z]{4}$/i.test(text)) {
    const high = SYLLABLE_VALUE.get(text.slice(0, 2).toLowerCase());
    const low = SYLLABLE_VALUE.get(text.slice(2).toLowerCase());
    if (high !== undefined && low !== undefined) {
      return { ok: true, value: high * 16 + low };
    }
    return { ok: false, reason: `not a syllable name: "${text}"` };
  }
  return {
    ok: false,
    reason: 'type two hex digits ("ff") or a syllable name ("Keki")',
  };
}

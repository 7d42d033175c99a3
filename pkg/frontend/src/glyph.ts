/** Inline-SVG glyph building from the service's segment label arrays.
 *
 * The service is the single source of truth for which segments a byte
 * lights; this module only knows where the seven display segments sit
 * on the digit box (1 unit wide, 2 tall, low half offset by 1.25).
 */

const SVG_NS = "http://www.w3.org/2000/svg";

/** Endpoints per label on the digit box, y pointing down. */
const SEGMENT_LINES: Record<string, [number, number, number, number]> = {
  A: [0, 0, 1, 0],
  B: [1, 0, 1, 1],
  C: [1, 1, 1, 2],
  D: [0, 2, 1, 2],
  E: [0, 1, 0, 2],
  F: [0, 0, 0, 1],
  G: [0, 1, 1, 1],
};

const HALF_OFFSETS = [0, 1.25];
const MARGIN = 0.15;
const STROKE = 0.12;

export function buildGlyphSvg(
  segments: [string[], string[]],
  heightPx = 36,
): SVGSVGElement {
  const widthUnits = 2.25 + 2 * MARGIN;
  const heightUnits = 2 + 2 * MARGIN;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${widthUnits} ${heightUnits}`);
  svg.setAttribute("width", String((heightPx * widthUnits) / heightUnits));
  svg.setAttribute("height", String(heightPx));
  svg.classList.add("glyph");
  segments.forEach((labels, half) => {
    const group = document.createElementNS(SVG_NS, "g");
    group.dataset.half = half === 0 ? "high" : "low";
    for (const label of [...labels].sort()) {
      const coords = SEGMENT_LINES[label];
      if (!coords) continue; // unknown labels are ignored, not drawn
      const [x1, y1, x2, y2] = coords;
      const dx = HALF_OFFSETS[half] + MARGIN;
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(x1 + dx));
      line.setAttribute("y1", String(y1 + MARGIN));
      line.setAttribute("x2", String(x2 + dx));
      line.setAttribute("y2", String(y2 + MARGIN));
      line.setAttribute("stroke", "currentColor");
      line.setAttribute("stroke-width", String(STROKE));
      line.setAttribute("stroke-linecap", "square");
      group.appendChild(line);
    }
    svg.appendChild(group);
  });
  return svg;
}

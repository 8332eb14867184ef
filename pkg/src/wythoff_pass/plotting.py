"""SVG scatter plots of P-positions.

The board's origin is the upper-left corner with y growing downward, so
the SVG y-axis runs downward too and the plots read like the board.
"""

from __future__ import annotations

from .characterization import p_positions
from .engine import GrundyTable


def beam_slopes(points: list[tuple[int, int]], min_x: int = 50) -> tuple[float, float]:
    """Least-squares through-origin slopes of the two point beams.

    Returns (upper, lower): the slope fitted over points above the main
    diagonal (y > x) and below it, ignoring x <= min_x where the beams
    have not separated cleanly yet.
    """
    def fit(pts):
        sxy = sum(x * y for x, y in pts)
        sxx = sum(x * x for x, y in pts)
        if sxx == 0:
            raise ValueError("no points to fit")
        return sxy / sxx

    upper = [(x, y) for x, y in points if x > min_x and y > x]
    lower = [(x, y) for x, y in points if x > min_x and y < x]
    return fit(upper), fit(lower)


def scatter_svg(
    points: list[tuple[int, int]],
    window: int,
    title: str,
    overlay: list[tuple[int, int]] | None = None,
    size: int = 640,
) -> str:
    """Render points (and an optional second set) as an SVG scatter."""
    scale = (size - 40) / window
    margin = 20

    def circle(x, y, color):
        cx = margin + x * scale
        cy = margin + y * scale
        return f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="1.6" fill="{color}"/>'

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<text x="{margin}" y="14" font-size="12" font-family="sans-serif">'
        f"{title}</text>",
    ]
    if overlay:
        parts += [circle(x, y, "#bbbbbb") for x, y in overlay]
    parts += [circle(x, y, "#1f4e9c") for x, y in points]
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def plot_p_positions(
    window: int,
    layer: str,
    table: GrundyTable,
    with_overlay: bool = False,
) -> str:
    """SVG for one layer's P-positions; `pass` may overlay the classic set."""
    pts = [(r["x"], r["y"]) for r in p_positions(window, layer, table)]
    overlay = None
    if layer == "pass" and with_overlay:
        overlay = [(r["x"], r["y"]) for r in p_positions(window, "classic", table)]
    name = "classical game" if layer == "classic" else "pass variant (pass unused)"
    return scatter_svg(pts, window, f"P-positions, {name}, window {window}", overlay)

#!/usr/bin/env python3
"""Regenerate the P-position scatter plots for both game variants."""

import sys
from pathlib import Path

from wythoff_pass.engine import build_grundy_table
from wythoff_pass.plotting import beam_slopes, plot_p_positions
from wythoff_pass.characterization import p_positions

WINDOW = 400
OUT_DIR = Path("figures")


def main() -> int:
    OUT_DIR.mkdir(exist_ok=True)
    table = build_grundy_table(WINDOW)
    for layer, name in [("classic", "p_positions_classic.svg"),
                        ("pass", "p_positions_pass.svg")]:
        svg = plot_p_positions(WINDOW, layer, table,
                               with_overlay=(layer == "pass"))
        (OUT_DIR / name).write_text(svg)
        print(f"wrote {OUT_DIR / name}")
    pts = [(r["x"], r["y"]) for r in p_positions(WINDOW, "classic", table)]
    upper, lower = beam_slopes(pts)
    print(f"classic beam slopes: upper {upper:.5f}, lower {lower:.5f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

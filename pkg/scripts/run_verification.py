#!/usr/bin/env python3
"""Run the full claim-verification suite on the standard windows."""

import sys
import time

from wythoff_pass.engine import build_grundy_table
from wythoff_pass.verifier import verify_all

WINDOWS = [8, 50, 200]


def main() -> int:
    overall = True
    for window in WINDOWS:
        t0 = time.time()
        table = build_grundy_table(window)
        report = verify_all(window, table)
        elapsed = time.time() - t0
        print(f"== window {window} ({elapsed:.1f}s) ==")
        print(report.to_text())
        print()
        overall = overall and report.overall
    return 0 if overall else 1


if __name__ == "__main__":
    sys.exit(main())

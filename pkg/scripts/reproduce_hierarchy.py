#!/usr/bin/env python3
"""Reproduce the eight-point hierarchy over GF(4) and write DOT/JSON to out/.

Equivalent to:  sparse-duals hierarchy --q 2 --min-size 2 --dot ... --json ...
"""

import sys
from pathlib import Path

from sparse_duals.cli import main

OUT = Path(__file__).resolve().parent.parent / "out"

if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    code = main(
        [
            "hierarchy",
            "--q", "2",
            "--min-size", "2",
            "--dot", str(OUT / "hierarchy_q2.dot"),
            "--json", str(OUT / "hierarchy_q2.json"),
        ]
    )
    sys.exit(code)

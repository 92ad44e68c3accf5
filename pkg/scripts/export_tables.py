#!/usr/bin/env python3
"""Export the fusion table, S/T matrices and ribbon data as JSON files.

Usage: python scripts/export_tables.py P_PLUS P_MINUS OUTDIR [--precision BITS]
"""

import os
import sys

from qpm.cli import main as cli_main


def main(argv):
    if len(argv) < 4:
        print(__doc__)
        return 2
    p_plus, p_minus, outdir = argv[1], argv[2], argv[3]
    precision = "53"
    if "--precision" in argv:
        precision = argv[argv.index("--precision") + 1]
    os.makedirs(outdir, exist_ok=True)
    base = ["--p-plus", p_plus, "--p-minus", p_minus, "--precision", precision]
    jobs = {
        "info.json": ["info"],
        "fusion.json": ["fusion"],
        "center.json": ["center"],
        "smatrix.json": ["smatrix"],
        "tmatrix.json": ["tmatrix"],
        "ribbon.json": ["ribbon"],
    }
    for fname, cmd in jobs.items():
        path = os.path.join(outdir, fname)
        code = cli_main(base + ["--output", path] + cmd)
        if code:
            return code
        print("wrote", path)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))

#!/usr/bin/env python3
"""Run the full verification ledger for a parameter pair.

Usage: python scripts/run_verify.py P_PLUS P_MINUS [suite ...]
"""

import sys
import time

from qpm.verify import available_suites, run_suites


def main(argv):
    if len(argv) < 3:
        print(__doc__)
        print("available suites:", " ".join(available_suites()))
        return 2
    p_plus, p_minus = int(argv[1]), int(argv[2])
    selection = set(argv[3:]) or None
    t0 = time.time()
    ok, results = run_suites(p_plus, p_minus, selection=selection)
    passed = sum(1 for r in results if r[2])
    print(f"\n{passed}/{len(results)} checks passed in {time.time() - t0:.1f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv))

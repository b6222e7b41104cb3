#!/usr/bin/env python3
"""Re-derive the equality-case families and diff them against fixtures/."""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from bielliptic.oracle import enumerate_equality_cases

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def main() -> None:
    clean = True
    for m in (2, 3, 4, 6):
        for target in (0, 1):
            path = FIXTURES / f"equality_cases_m{m}_t{target}.json"
            with open(path) as fh:
                want = {
                    (c["l1"], c["l2"], c["q"], c["b1"], c["b2"])
                    for c in json.load(fh)["cases"]
                }
            got = {
                (c.l1, c.l2, c.q, c.b1, c.b2)
                for c in enumerate_equality_cases(m, target, bound=8)
            }
            extra, missing = sorted(got - want), sorted(want - got)
            status = "ok" if not extra and not missing else "DIFF"
            print(f"m={m} target={target}: {len(got)} cases [{status}]")
            if extra:
                print(f"  scan-only: {extra}")
                clean = False
            if missing:
                print(f"  fixture-only: {missing}")
                clean = False
    raise SystemExit(0 if clean else 1)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Sweep a small box of Mukai vectors on every surface type and classify the
wall each one spans with the point class; writes atlas CSVs under out/."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from bielliptic.cli import run_command


def main() -> None:
    out_dir = pathlib.Path(__file__).resolve().parent.parent / "out"
    out_dir.mkdir(exist_ok=True)
    for t in range(1, 8):
        out = out_dir / f"atlas_type{t}.csv"
        code = run_command(
            [
                "atlas",
                "--type", str(t),
                "--bounds", "3,2,2,3",
                "--w", "0,0,0,1",
                "--w", "1,0,0,0",
                "--out", str(out),
            ]
        )
        if code != 0:
            raise SystemExit(code)
        print(f"type {t}: wrote {out}")


if __name__ == "__main__":
    main()

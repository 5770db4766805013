#!/usr/bin/env python3
"""Run every bundled config into results/, one subdirectory per config."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from mimolab.cli import BUNDLED_CONFIGS, main  # noqa: E402

if __name__ == "__main__":
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "results")
    failures = 0
    for name in BUNDLED_CONFIGS:
        out = root / name / f"{name}.out"
        print(f"== {name} ==")
        code = main(["--config", name, "--output", str(out)])
        failures += code != 0
    sys.exit(1 if failures else 0)

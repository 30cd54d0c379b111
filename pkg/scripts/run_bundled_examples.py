#!/usr/bin/env python3
"""Run every checker on the bundled example inputs and print compact summaries.

Usage: python scripts/run_bundled_examples.py [--json]
"""

import argparse
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from cyhopf.cli import main as cli_main  # noqa: E402

CASES = [
    ("check-cy", "datum_a2_z2z2.json"),
    ("check-cy", "datum_a1a1_z3z3.json"),
    ("hdet", "datum_a1a1_z3z3.json"),
    ("roots", "cartan_a2.json"),
    ("verify-hopf", "presentation_a2_z2z2.json"),
    ("verify-hopf", "presentation_a1a1_z3z3.json"),
    ("verify-s2", "presentation_a2_z2z2.json"),
    ("nakayama", "presentation_a1a1_z3z3.json"),
    ("confluence", "presentation_nonconfluent.json"),
    ("lie-check", "lie_sl2_sign.json"),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit JSON reports")
    args = parser.parse_args()
    worst = 0
    for verb, filename in CASES:
        print(f"==== {verb} {filename} " + "=" * max(0, 40 - len(verb) - len(filename)))
        argv = [verb, str(REPO / "data" / filename)]
        if args.json:
            argv.append("--json")
        worst = max(worst, cli_main(argv))
        print()
    return worst


if __name__ == "__main__":
    sys.exit(main())

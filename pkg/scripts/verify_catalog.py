#!/usr/bin/env python3
"""Run every catalogue entry through its pinned checks and print a table.

Exit code 0 when every live verdict matches the catalogue's expectation.

    python3 scripts/verify_catalog.py
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from homstruct.catalog import entries, run_expected_checks  # noqa: E402


def main() -> int:
    start = time.monotonic()
    mismatches = 0
    name_width = max(len(e.name) for e in entries())
    for entry in entries():
        live = run_expected_checks(entry)
        ok = live == entry.expected_verdicts
        mismatches += not ok
        verdicts = "  ".join(
            f"{axiom}={'pass' if value else 'fail'}" for axiom, value in live.items()
        )
        marker = "ok " if ok else "!! "
        print(f"{marker}{entry.name:<{name_width}}  {verdicts}")
    elapsed = time.monotonic() - start
    print(f"\n{len(entries())} entries checked in {elapsed:.2f}s, {mismatches} mismatches")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())

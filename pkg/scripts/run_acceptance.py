"""Run the acceptance suite and print one PASS/FAIL line per criterion."""
from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    return pytest.main(["-q", "-p", "no:cacheprovider", str(ROOT / "tests" / "test_acceptance.py"), *sys.argv[1:]])


if __name__ == "__main__":
    sys.exit(main())

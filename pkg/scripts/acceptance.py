"""Run acceptance criteria by number: python3 scripts/acceptance.py [N ...] (default: all)."""
import argparse
import sys
from pathlib import Path

import pytest

SUITE = Path(__file__).resolve().parent.parent / "tests" / "test_acceptance.py"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("criteria", nargs="*", type=int, choices=range(1, 11), metavar="N")
    args = parser.parse_args()
    selected = args.criteria or list(range(1, 11))
    expression = " or ".join(f"criterion_{n:02d}" for n in selected)
    return pytest.main([str(SUITE), "-v", "-p", "no:cacheprovider", "-k", expression])


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Regenerate the golden CLI outputs in tests/golden/ from golden_cases.py.

Run from the repository root after an intentional output-format change,
then review the diff before committing.
"""

import io
import pathlib
import sys
from contextlib import redirect_stdout

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from polydyn import cli
from golden_cases import CASES


def main():
    out_dir = ROOT / "tests" / "golden"
    out_dir.mkdir(exist_ok=True)
    for name, argv in CASES:
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.run(argv)
        if code != 0:
            raise SystemExit("golden case %s exited with %d" % (name, code))
        (out_dir / ("%s.out" % name)).write_bytes(buf.getvalue().encode())
        print("wrote", name)


if __name__ == "__main__":
    main()

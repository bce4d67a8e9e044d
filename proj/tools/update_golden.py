"""Rewrites tests/golden/<name>.json from the CLI binary for every case in cases.json."""
import argparse
import json
import pathlib
import subprocess
import sys


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--binary", default="build/galcoh")
    ap.add_argument("--dir", default="tests/golden")
    args = ap.parse_args()
    golden = pathlib.Path(args.dir)
    cases = json.loads((golden / "cases.json").read_text())
    for case in cases:
        proc = subprocess.run([args.binary, *case["args"]], capture_output=True, text=True)
        if proc.returncode != case["exit"]:
            print(f"{case['name']}: exit {proc.returncode}, expected {case['exit']}", file=sys.stderr)
            return 1
        (golden / f"{case['name']}.json").write_text(proc.stdout)
    print(f"wrote {len(cases)} golden files")
    return 0


if __name__ == "__main__":
    sys.exit(main())

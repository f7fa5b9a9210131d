"""Command line entry point: ``burniat verify | dump-fan | tables``."""

from __future__ import annotations

import argparse
import sys

from . import degenerations as Dg
from . import report

CASES = ("3", "4a", "4b", "5")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="burniat", description="Exact checks of the Burniat fan and group data.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--case", choices=CASES)
    v.add_argument("--format", choices=("json", "md", "markdown"), default="json")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--tables", help="alternative tables JSON file")

    d = sub.add_parser("dump-fan", help="write a case fan as canonical JSON")
    d.add_argument("--case", choices=CASES, required=True)
    d.add_argument("--out", required=True)

    t = sub.add_parser("tables", help="check the component tables")
    t.add_argument("--validate", action="store_true", required=True)
    t.add_argument("--tables", help="alternative tables JSON file")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "verify":
        fmt = "json" if args.format == "json" else "markdown"
        return report.run_verify(args.case, fmt, args.out, args.tables)
    if args.command == "dump-fan":
        try:
            path = report.dump_fan(args.case, args.out)
        except OSError as exc:
            print(exc, file=sys.stderr)
            return 2
        print(path)
        return 0
    try:
        result = Dg.validate_tables(args.tables)
    except (OSError, ValueError, KeyError) as exc:
        print(f"cannot read tables: {exc}", file=sys.stderr)
        return 2
    for row in result.rows:
        status = "pass" if row.passed else "FAIL"
        notes = f"  [{'; '.join(row.notes)}]" if row.notes else ""
        print(f"{status}  {row.table:6} {row.case:7} {' + '.join(row.components)} = {row.volume_sum}{notes}")
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(main())

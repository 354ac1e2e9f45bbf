# Run the bundled worked examples and print a status table.  Exits nonzero
# if any case fails, so the script doubles as a smoke test:
#     python3 scripts/examples_report.py

import sys

from gitkit.examples import run_all


def main():
    rows, all_ok = run_all()
    width = max(len(name) for name, _, _ in rows)
    for name, status, detail in rows:
        print(f"{name:<{width}}  {status:<4}  {detail}")
    print(f"total {len(rows)} cases, "
          + ("all passed" if all_ok else "FAILURES above"))
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())

"""Assemble the bound table for all families and print it as CSV."""
from curvedrift.lift import REPORT_FAMILIES, build_report, to_csv

params = {f: range(4, 13) for f in REPORT_FAMILIES}
rows = build_report(REPORT_FAMILIES, params)
print(to_csv(rows), end="")
for r in rows:
    if "note" in r and r["param"] == 4:
        print("#", r["note"])

"""Tour: run the verification harness over a slice of the shipped catalog.

Run:  python3 demos/tour_verification.py
"""

from grouplab import load_catalog, run_suite, select_theorems
from grouplab.catalog import Catalog, core_catalog_path
from grouplab.harness import format_summary

cat = load_catalog(core_catalog_path())
print(f"shipped catalog: {len(cat)} groups, orders "
      f"{min(e.group.order for e in cat.entries)}.."
      f"{max(e.group.order for e in cat.entries)}")

slice_ = Catalog(tuple(e for e in cat.entries if e.group.order <= 30))
ids = select_theorems("L3.1,T3.2,T4.4,L2.12.1")
report = run_suite(slice_, ids, jobs=4)
print(f"\nsuite over {report['group_count']} groups x {len(ids)} theorems:")
print(format_summary(report))
print("\nper-theorem non-vacuity ratios:")
for tid, agg in report["theorems"].items():
    print(f"  {tid}: pass={agg['pass']} vacuous={agg['vacuous']} "
          f"ratio={agg['non_vacuous_ratio']}")

"""
Table regeneration and the cross-verification corpus
====================================================

The classification tables ship as committed snapshots; the engines recompute
every row and the corpus cross-checks the tables against one another.  The
same machinery backs `lspin table --diff` and `lspin verify all`.
"""

from lspin.corpus import diff_table, regenerate, run_verification

# Regenerate the subregular table and show two rows.
rows = dict(regenerate("sreg"))
print(rows["IIIb"])
print(rows["IVc"])

# Diff all three tables against the committed snapshots.
for table in ("sreg", "zeta", "total"):
    _, mismatches = diff_table(table)
    print(f"table {table}: {'clean' if not mismatches else mismatches}")

# Run the six verification suites over the whole corpus.
text, checks, failures = run_verification("all", workers=4)
print()
print(text)

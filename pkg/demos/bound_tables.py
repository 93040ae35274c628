"""Recompute the Hermitian and Suzuki bound tables from semigroup data.

Every value is derived from the Weierstrass semigroup and the gonality
sequence; the frozen reference values are only used for comparison.
"""
from agtrellis.report import render_table_text, table_document
from agtrellis.tables import SUZUKI_ALTERNATE_SEMIGROUP, bound_table

print(render_table_text(table_document(bound_table("hermitian"))))

# Prop3.3 depends on l((2m - n)Q), i.e. on which semigroup is used.
suzuki = bound_table("suzuki")
print(render_table_text(table_document(suzuki)))
print(render_table_text(table_document(bound_table("suzuki", SUZUKI_ALTERNATE_SEMIGROUP))))

for row in suzuki.rows:
    if row.discrepancies():
        print(f"m={row.m}: computed {row.computed[2]}, printed {row.printed[2]}")

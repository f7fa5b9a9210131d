"""
Components and volumes
======================

Components are written #m_n(v). Blowing up lowers the volume by one; the
table rows must add up to the degree.
"""

# %%
from burniat import degenerations as D

c = D.ComponentType(8)
for k in (1, 2):
    child = D.child(c, k)
    print(child, child.marker)
print("#2 blown up once:", D.child(D.ComponentType(2), 1))

# %%
report = D.validate_tables()
for row in report.rows:
    print(f"{row.table:6} {row.case:7} {' + '.join(row.components)} = {row.volume_sum}")
print("all rows pass:", report.passed)

"""Hodge numbers of a hyperplane section of Gr(3,10) and of the varieties
obtained from it through class relations.

Run:  python demos/hodge_table.py
"""

from grasshodge.motive import RELATIONS, solve_relation
from grasshodge.sections import lefschetz_rows, section_diamond, vanishing_part


def show(label, poly):
    print(f"{label}  (dim {poly.dim}, Euler number {poly.euler()})")
    for w, row in lefschetz_rows(poly).items():
        print(f"  weight {w:2d}: {' '.join(map(str, row))}")


y = section_diamond(3, 10)
show("Y = Gr(3,10) cut by one hyperplane", y)

van = vanishing_part(3, 10)
print("  vanishing part of H^20:", {pq: h for pq, h in van.items()})
print()

for name in ("T2_10", "P1_10", "Y1", "Y2"):
    print("relation:", RELATIONS[name].text)
    show(RELATIONS[name].unknown, solve_relation(name).poly)
    print()

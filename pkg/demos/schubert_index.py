"""Degrees and the Fano index of the congruence of lines T(2,n).

Run:  python demos/schubert_index.py
"""

from grasshodge.schubert import closed_form_report, degree_by_tableaux, degree_T2, fundamental_class_T2, index_check

print(" n  degree  tableaux  class")
for n in range(5, 12):
    cls = fundamental_class_T2(n)
    print(f"{n:2d}  {degree_T2(n):6d}  {degree_by_tableaux(n):8d}  {cls}")

print()
for n in (6, 10):
    print(f"closed forms against the Pieri computation at n = {n}:")
    for name, row in closed_form_report(n).items():
        print(f"   {name:20s} closed {row['closed']:>5s}  oracle {row['oracle']:>5s}  delta {row['delta']}")

print()
for n in (7, 8, 9):
    res = index_check(n)
    print(f"T(2,{n}) index 3: {res.index_is_3}")
    for m, why in res.witnesses.items():
        print(f"   m = {m}: {why[0]}")

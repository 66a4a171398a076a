"""
Two-step flag varieties of C^5
==============================

The three flag varieties Flag(a, b, C^5) correspond to type A4 with
I = {a, b}.  We print the staircase of nontrivial H^l_m and the pair (nu, mu).
"""

from ipr_cohomology import cohomology_table, mu, nu, root_system, ParabolicSpec
from ipr_cohomology.render import render_grid

rs = root_system("A", 4)

for I in [(1, 2), (1, 3), (2, 3)]:
    t = cohomology_table(ParabolicSpec(rs, I))
    print(f"Flag({I[0]},{I[1]},C^5):  nu = {nu(t)}, mu = {mu(t)}, dim = {t.dim_flag}")
    print(render_grid(t))

# the dimensions of the cells, for Flag(1,2)
t = cohomology_table(ParabolicSpec(rs, (1, 2)))
for (l, m), d in t.cell_dims().items():
    print(f"  H^{l}_{m}: {d}")

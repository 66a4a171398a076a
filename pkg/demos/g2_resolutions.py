"""
G2 compact duals and their predicted resolutions
================================================

For G2/P1 and G2/B every cohomological degree has eigenvalues strictly above the
previous degree, so the resolution of the constant sheaf can be read off; the
operator orders are the eigenvalue gaps.
"""

from ipr_cohomology import ParabolicSpec, cohomology_table, resolution_shape, root_system
from ipr_cohomology.render import render_grid, resolution_text

rs = root_system("G", 2)

for I in [(1,), (1, 2), (2,)]:
    t = cohomology_table(ParabolicSpec(rs, I))
    print(render_grid(t))
    print(resolution_text(t, resolution_shape(t)))

# G2/P2 is the adjoint variety: dim g_2 = 1 and the single order-2 step sits at c
t = cohomology_table(ParabolicSpec(rs, (2,)))
c = t.dim_g_ell[1] // 2
print("c =", c, "orders:", resolution_shape(t).orders)

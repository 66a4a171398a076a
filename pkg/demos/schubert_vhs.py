"""
Schubert VHS and characteristic cohomology
==========================================

A Schubert class x_w is carried by a variation of Hodge structure exactly when
rho_w(E) = |w|.  The duals of those classes span the characteristic cohomology.
"""

from ipr_cohomology import HomologyClass, ParabolicSpec, cc_dual_report, cohomology_table, root_system, vhs_representable, vhs_set

t = cohomology_table(ParabolicSpec(root_system("A", 4), (2, 3)))
rep = cc_dual_report(t)
print("betti   ", list(rep.betti.values()))
print("cc dims ", list(rep.cc_dims().values()))
print("ker p_I ", len(rep.ker_pI_basis))

vhs = vhs_set(t)
for w in vhs:
    print(f"  {w.word_str:<6} length {w.length}  rho_w {w.rho_w}")

# nonnegative combinations of VHS classes are representable, anything touching
# a non-VHS class is not
good = HomologyClass({vhs[1]: 2, vhs[3]: 1})
bad = HomologyClass({rep.ker_pI_basis[0]: 1})
print(vhs_representable(good, t), vhs_representable(bad, t))

"""Bigraded Ext tables from the bar complex.

The three-index Fomin-Kirillov algebra is quadratic but not Koszul: an
entry off the diagonal shows up in internal degree 6.  The table of its
dual shows the matching entry, and the alternating sums invert the
Hilbert series in every degree.
"""

from fkdual import complete
from fkdual.invariants import hilbert_truncation
from fkdual.koszul import euler_check, ext_table, p_koszul_bound, pairing_dim_check
from fkdual.quadratic import fk_dual, fomin_kirillov


def main():
    J = 6
    tables = {}
    for pres in (fomin_kirillov(3), fk_dual(3)):
        sys = complete(pres, None, J)
        t = ext_table(sys, J, J, name=pres.name)
        tables[pres.name] = t
        print(f"{pres.name}  (rows i, columns j)")
        print(t.grid())
        print("off-diagonal entries:", t.off_diagonal())
        print("p-Koszul bound:", p_koszul_bound(t))
        sums = [(j, a, b) for j, a, b in euler_check(t, hilbert_truncation(sys, J))]
        print("alternating sums vs 1/H:", sums, "\n")

    bound = p_koszul_bound(tables["E_3"])
    p = bound.violation[1]
    rep = pairing_dim_check(tables["E_3"], tables["E_dual_3"], p)
    print(f"pairing at p = {p}: (i, dim for E_3, dim for the dual) = {rep.comparisons}, agree: {rep.passed}")


if __name__ == "__main__":
    main()

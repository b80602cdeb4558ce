"""The commutative algebra on a_ij counted through set partitions.

A monomial is determined by its graph type, so dimensions come from a sum
over set partitions.  The sum is compared with Groebner-basis counts, and a
few monomials are sent to their canonical representatives.
"""

from collections import Counter

from fkdual.invariants import gk_estimate, hilbert_series
from fkdual.partitions import dn_canonical_form, dn_hilbert_closed_form, monomial_graph, stats_census, type_compare
from fkdual.quadratic import dn_algebra


def main():
    for n in range(2, 6):
        closed = dn_hilbert_closed_form(n, 10)
        rewriting = hilbert_series(dn_algebra(n), 10)
        print(f"n = {n}: {closed}   matches rewriting: {closed == rewriting}   {gk_estimate(closed)}")

    census = stats_census(5)
    print("\npartitions of 5 by (rank, blocks of size >= 2):")
    for (rank, big), count in sorted(census.items()):
        print(f"  rank {rank}, {big} big blocks: {count}")
    print("total", sum(census.values()))

    print("\ncanonical forms:")
    for word in ([(2, 3), (1, 3)], [(1, 3), (2, 3), (1, 2)], [(3, 4), (1, 2), (1, 2)]):
        t = monomial_graph(word, 4)
        print(f"  {word} -> {dn_canonical_form(word, 4)}  components {t.nontrivial}")
    t1, t2 = monomial_graph([(1, 2), (1, 2)], 4), monomial_graph([(1, 2), (2, 3)], 4)
    print("  type of a12^2 vs a12 a23:", type_compare(t1, t2))


if __name__ == "__main__":
    main()

"""A normal sequence in the n = 3 dual and its twelve-dimensional quotient.

The dual is rewritten in the coordinates a = y13 + y23, b = y13 - y23,
c = y12.  An auxiliary algebra with a known series is cut down by three
normal elements to the dual, and a central fourth element leaves a finite
quotient with an explicit basis.
"""

from fkdual import complete
from fkdual.invariants import centrality_check, hilbert_series, normal_sequence_check, total_dimension
from fkdual.ncpoly import MonomialOrder
from fkdual.quadratic import c_double_prime, e3_dual_abc, dual3_sequence, quotient_by


def main():
    A = e3_dual_abc()
    print("dual in a, b, c coordinates:")
    for r in A.relations:
        print("   ", r)

    C = c_double_prime()
    print("\nauxiliary algebra series:", hilbert_series(C, 10))
    om = dual3_sequence(C)
    rep = normal_sequence_check(C, om[:3], 8)
    for step in rep.steps:
        print(f"\nstep {step.index}: {step.element}")
        print("  normal:", step.passed, " series after:", step.series_after)
        for row in step.certificate.table()[:3]:
            print("   ", row)

    order = MonomialOrder.from_labels(A.gens, ["a", "b", "c"])
    z = dual3_sequence(A)[3]
    print("\nlast element", z, "is central:", centrality_check(z, complete(A, order, 6)).passed)
    sys = complete(quotient_by(A, [z]), order, 8)
    print("quotient rules:")
    for line in sys.rule_table():
        print("   ", line)
    print("quotient series:", hilbert_series(quotient_by(A, [z]), 6, order))
    print("total dimension:", total_dimension(sys))


if __name__ == "__main__":
    main()

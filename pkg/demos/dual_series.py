"""The quadratic dual of the Fomin-Kirillov algebra for small n.

Builds the dual presentation mechanically, completes it, and compares
the dimension counts with a closed form and with a growth estimate.
"""

from fkdual import complete, dual_presentation
from fkdual.invariants import gk_estimate, hilbert_truncation, poly_product, series_from_rational
from fkdual.quadratic import fk_dual, fomin_kirillov, relation_span_equal


def main():
    E3 = fomin_kirillov(3)
    dual = dual_presentation(E3)
    print("relations of E_3:")
    for r in E3.relations:
        print("   ", r)
    print("computed dual relations agree with the listed ones:", relation_span_equal(dual, fk_dual(3)))

    sys = complete(fk_dual(3), None, 12)
    print(f"\nrewrite rules for n = 3 ({len(sys.rules)}, terminated={sys.terminated}):")
    for line in sys.rule_table():
        print("   ", line)
    words = [sys.gens.format_word(w) for w in sys.normal_basis(3)]
    print("normal words of degree 3:", ", ".join(words))

    h = hilbert_truncation(sys, 12)
    closed = series_from_rational(poly_product([1, 1], [1, 1, 1]), [1], 12)
    print("\ndimensions :", h)
    print("closed form:", closed)

    print("\ngrowth of the dual for n = 2..5 (degree 14):")
    for n in range(2, 6):
        s = complete(fk_dual(n), None, 14)
        series = hilbert_truncation(s, 14)
        print(f"  n = {n}: {series}")
        print(f"         {gk_estimate(series)}")


if __name__ == "__main__":
    main()

"""Why the quotient algebra can be strictly smaller than the projection.

For finite types the projected ambient cluster variables coincide with
the quotient cluster variables.  In affine rank 2 that equality fails:
folding the 4-leaf star (affine D4) by a cyclic leaf symmetry gives the
valued quotient [[0, -1], [4, 0]], and the ambient variable with
denominator vector (1, 0, 0, 1, 1) projects to denominator (1, 2) —
but an exhaustive walk over the quotient's rank-2 variables shows no
variable with denominator below (1, 2) other than the five roots listed.
The projected set is strictly larger than the quotient set.

Run:  python3 demos/strict_inclusion.py
"""

from clusterfold import catalog, explorer
from clusterfold.folding import project_vector, quotient_matrix


def main():
    pair = catalog.folding_pair("D4t-A1t2-c4").pair
    print("ambient orbits:", pair.orbits)

    poly, word = explorer.find_variable_by_denominator(pair.matrix, (1, 0, 0, 1, 1))
    print("found ambient variable via mutation word", tuple(k + 1 for k in word))
    print("   ", poly.render())
    delta = project_vector(poly.denominator_vector(), pair.orbits)
    print("projected denominator vector:", delta)

    box = explorer.rank2_denominators_below(quotient_matrix(pair), delta)
    print("quotient denominators componentwise below", delta, ":")
    for v in sorted(box):
        print("   ", v)
    print("projected denominator present in the quotient:", delta in box)


if __name__ == "__main__":
    main()

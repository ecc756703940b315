"""Root systems of generalized Cartan matrices and the folding lemmas.

Roots are integer coordinate vectors over the simple roots.  The simple
reflection s_i sends a vector v to v - (sum_j c_ij v_j) alpha_i, so only
coordinate i changes.  For finite type the positive roots are obtained
by saturating the simple roots under all reflections.
"""

from __future__ import annotations

from itertools import permutations

from .exchange import cartan_counterpart, classify
from .folding import FoldingPair, project_vector, quotient_matrix

POSITIVE_ROOT_CAP = 240  # the largest finite root system we accept (E8-sized)


class NotFiniteTypeError(ValueError):
    """The Cartan matrix is not of finite type."""


def reflect(cartan, i: int, v) -> tuple[int, ...]:
    """Simple reflection s_i in coordinates."""
    n = len(cartan)
    coeff = sum(cartan[i][j] * v[j] for j in range(n))
    out = list(v)
    out[i] -= coeff
    return tuple(out)


def simple_roots(n: int) -> list[tuple[int, ...]]:
    return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]


def positive_roots(cartan) -> frozenset[tuple[int, ...]]:
    """All positive roots of a finite-type Cartan matrix, by reflection closure."""
    if classify(cartan, name_diagram=False).tag != "Finite":
        raise NotFiniteTypeError("positive roots require a finite-type Cartan matrix")
    n = len(cartan)
    roots = set(simple_roots(n))
    frontier = list(roots)
    while frontier:
        next_frontier = []
        for v in frontier:
            for i in range(n):
                w = reflect(cartan, i, v)
                if all(x >= 0 for x in w) and w not in roots:
                    roots.add(w)
                    next_frontier.append(w)
                    if len(roots) > POSITIVE_ROOT_CAP:
                        raise AssertionError(
                            "reflection closure exceeded the finite-type cap"
                        )
        frontier = next_frontier
    return frozenset(roots)


def almost_positive_roots(cartan) -> frozenset[tuple[int, ...]]:
    """Positive roots together with the negatives of the simple roots."""
    n = len(cartan)
    negatives = {tuple(-1 if j == i else 0 for j in range(n)) for i in range(n)}
    return positive_roots(cartan) | negatives


def orbit_reflection(cartan, orbit, v) -> tuple[int, ...]:
    """Product of the (commuting) simple reflections of one orbit.

    Requires the orbit members to be pairwise non-adjacent in the Cartan
    matrix, which is what admissibility guarantees.
    """
    orbit = tuple(orbit)
    for i in orbit:
        for j in orbit:
            if i != j and cartan[i][j] != 0:
                raise ValueError("orbit members must be pairwise non-adjacent")
    reference = None
    for ordering in permutations(orbit) if len(orbit) <= 4 else [orbit]:
        w = v
        for i in ordering:
            w = reflect(cartan, i, w)
        if reference is None:
            reference = w
        elif w != reference:
            raise AssertionError("orbit reflection is order-dependent")
    return reference


def _permute_root(g, v) -> tuple[int, ...]:
    """Action alpha_i -> alpha_{g i} in coordinates."""
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[g[i]] = x
    return tuple(out)


def verify_root_projection(pair: FoldingPair):
    """Check pi(almost positive roots of B) == almost positive roots of B/G.

    Returns (ok, witness) where the witness is a vector present on only
    one side.
    """
    ambient = almost_positive_roots(cartan_counterpart(pair.matrix))
    quotient = almost_positive_roots(cartan_counterpart(quotient_matrix(pair)))
    projected = {project_vector(v, pair.orbits) for v in ambient}
    if projected == quotient:
        return True, None
    for v in sorted(projected - quotient) + sorted(quotient - projected):
        return False, v
    return False, None


def verify_fiber_orbits(pair: FoldingPair):
    """Check that equal-projection roots lie in one G-orbit.

    Returns (ok, witness) with witness a pair of roots violating the
    claim.  Exhaustive over the almost positive roots.
    """
    roots = sorted(almost_positive_roots(cartan_counterpart(pair.matrix)))
    elements = pair.group.elements()
    fibers: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for v in roots:
        fibers.setdefault(project_vector(v, pair.orbits), []).append(v)
    for members in fibers.values():
        base = members[0]
        orbit = {_permute_root(g, base) for g in elements}
        for other in members[1:]:
            if other not in orbit:
                return False, (base, other)
    return True, None


def verify_denominator_bijection(matrix, max_seeds: int = 100_000):
    """Check that denominator vectors biject the cluster variables of a
    finite-type matrix onto its almost positive roots.

    Returns (ok, detail) where detail reports the first discrepancy.
    """
    from .seeds import enumerate_cluster_variables

    cartan = cartan_counterpart(matrix)
    roots = almost_positive_roots(cartan)
    result = enumerate_cluster_variables(matrix, max_seeds=max_seeds)
    if not result.complete:
        return False, "enumeration did not close within the limit"
    deltas = {}
    for poly in result.variables:
        delta = poly.denominator_vector()
        if delta in deltas:
            return False, f"denominator vector {delta} is hit twice"
        deltas[delta] = poly
    if set(deltas) != roots:
        missing = sorted(roots - set(deltas))
        extra = sorted(set(deltas) - roots)
        return False, f"mismatch: missing {missing[:3]}, extra {extra[:3]}"
    return True, None

"""Seeds, the exchange relation, permutation actions, and enumeration.

A seed pairs an exchange matrix with a cluster of Laurent polynomials in
the fixed initial variables u_1..u_n.  Every division performed during
mutation must be exact (the Laurent phenomenon); a failed division is a
library bug and raises LaurentPhenomenonError.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .exchange import ExchangeMatrix
from .laurent import LaurentPolynomial, NotDivisibleError, divide_exact


class LaurentPhenomenonError(RuntimeError):
    """A seed mutation produced a non-exact division (internal inconsistency)."""


class LimitExceededError(RuntimeError):
    """An enumeration hit its seed or depth limit before closing."""

    def __init__(self, message: str, partial=None, frontier: int = 0):
        super().__init__(message)
        self.partial = partial
        self.frontier = frontier


class Seed:
    """A pair (matrix, cluster); immutable."""

    __slots__ = ("matrix", "cluster")

    def __init__(self, matrix: ExchangeMatrix, cluster: tuple[LaurentPolynomial, ...]):
        cluster = tuple(cluster)
        if len(cluster) != matrix.n:
            raise ValueError("cluster length must match matrix size")
        for x in cluster:
            if x.n != matrix.n:
                raise ValueError("cluster entries must live in the ambient Laurent ring")
            if x.is_zero():
                raise ValueError("cluster entries must be nonzero")
        self.matrix = matrix
        self.cluster = cluster

    def __eq__(self, other) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return self.matrix == other.matrix and self.cluster == other.cluster

    def __hash__(self) -> int:
        return hash((self.matrix, self.cluster))

    def key(self):
        """Deduplication identity: the cluster as an unordered set.

        A cluster determines its seed up to simultaneous relabeling, so
        this is the exchange-graph vertex identity.
        """
        return frozenset(self.cluster)

    def __repr__(self) -> str:
        entries = ", ".join(x.render() for x in self.cluster)
        return f"Seed({self.matrix!r}, [{entries}])"


def initial_seed(matrix: ExchangeMatrix) -> Seed:
    n = matrix.n
    return Seed(matrix, tuple(LaurentPolynomial.variable(i, n) for i in range(n)))


def exchange_binomial(seed: Seed, k: int) -> LaurentPolynomial:
    """The right-hand side of the exchange relation at vertex k."""
    n = seed.matrix.n
    b = seed.matrix.entries
    plus = LaurentPolynomial.one(n)
    minus = LaurentPolynomial.one(n)
    for i in range(n):
        if b[i][k] > 0:
            plus = plus * seed.cluster[i] ** b[i][k]
        elif b[i][k] < 0:
            minus = minus * seed.cluster[i] ** (-b[i][k])
    return plus + minus


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Seed mutation in direction k: u_k' = (binomial at k) / u_k, exactly."""
    if not 0 <= k < seed.matrix.n:
        raise IndexError(f"mutation vertex {k} out of range")
    try:
        new_var = divide_exact(exchange_binomial(seed, k), seed.cluster[k])
    except NotDivisibleError as exc:
        raise LaurentPhenomenonError(
            f"exchange at vertex {k + 1} produced a non-Laurent quotient: {exc}"
        ) from exc
    cluster = list(seed.cluster)
    cluster[k] = new_var
    return Seed(seed.matrix.mutate(k), tuple(cluster))


def apply_mutation_word(seed: Seed, word) -> Seed:
    """Left-to-right composition of seed mutations."""
    for k in word:
        seed = mutate_seed(seed, k)
    return seed


def permute_seed(g, seed: Seed) -> Seed:
    """Action of a vertex permutation g (0-based mapping) on a seed.

    The matrix entry at (i, j) becomes the old entry at (g^-1 i, g^-1 j);
    cluster entry i becomes the old entry g^-1 i with variables relabeled
    u_j -> u_{g j}.
    """
    g = tuple(g)
    n = seed.matrix.n
    if sorted(g) != list(range(n)):
        raise ValueError("g must be a permutation of the vertices")
    inv = [0] * n
    for i, gi in enumerate(g):
        inv[gi] = i
    b = seed.matrix.entries
    entries = tuple(tuple(b[inv[i]][inv[j]] for j in range(n)) for i in range(n))
    cluster = tuple(seed.cluster[inv[i]].permute_variables(g) for i in range(n))
    return Seed(ExchangeMatrix(entries, seed.matrix.labels), cluster)


def is_invariant_seed(seed: Seed, generators) -> bool:
    """True iff every generator fixes the seed (matrix and cluster entrywise)."""
    return all(permute_seed(g, seed) == seed for g in generators)


@dataclass
class EnumerationResult:
    """Outcome of a cluster-variable BFS."""

    variables: dict  # LaurentPolynomial -> shortest provenance word (tuple of 0-based vertices)
    cluster_count: int
    seeds_visited: int
    complete: bool
    frontier: int = 0
    dot_edges: list = field(default_factory=list)

    @property
    def variable_count(self) -> int:
        return len(self.variables)


def enumerate_cluster_variables(
    matrix: ExchangeMatrix,
    max_seeds: int = 100_000,
    max_depth: int = 64,
    strict: bool = False,
) -> EnumerationResult:
    """BFS over seeds from the initial seed, deduplicated by cluster-as-set.

    Returns every distinct cluster variable with a shortest mutation word
    producing it.  ``complete`` is True when the BFS closed before the
    limits; with ``strict`` the limits raise LimitExceededError instead.
    """
    start = initial_seed(matrix)
    n = matrix.n
    visited = {start.key(): 0}
    variables: dict[LaurentPolynomial, tuple[int, ...]] = {
        x: () for x in start.cluster
    }
    queue = deque([(start, ())])
    edge_set = set()
    complete = True
    blocked = 0
    while queue:
        seed, word = queue.popleft()
        if len(word) >= max_depth:
            complete = False
            blocked += 1
            continue
        source = visited[seed.key()]
        for k in range(n):
            neighbor = mutate_seed(seed, k)
            new_word = word + (k,)
            var = neighbor.cluster[k]
            if var not in variables:
                variables[var] = new_word
            key = neighbor.key()
            if key in visited:
                target = visited[key]
                if source != target:
                    edge_set.add((min(source, target), max(source, target)))
                continue
            if len(visited) >= max_seeds:
                complete = False
                blocked += 1
                continue
            index = len(visited)
            visited[key] = index
            edge_set.add((source, index))
            queue.append((neighbor, new_word))
    dot_edges = sorted(edge_set)
    if not complete and strict:
        raise LimitExceededError(
            f"enumeration exceeded limits after {len(visited)} seeds",
            partial=variables,
            frontier=blocked,
        )
    return EnumerationResult(
        variables=variables,
        cluster_count=len(visited),
        seeds_visited=len(visited),
        complete=complete,
        frontier=blocked,
        dot_edges=dot_edges,
    )

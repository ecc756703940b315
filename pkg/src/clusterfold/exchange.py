"""Skew-symmetrizable integer matrices, mutation and Cartan classification.

Entries are kept within signed 64-bit range with checked arithmetic:
mutation of indefinite-type matrices can blow entries up, and explorers
must see a clean error instead of silent wraparound.

Vertices are 0-based throughout the library; labels (default "1".."n")
carry the 1-based external numbering used in files and reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

INT64_MAX = 2**63 - 1


class EntryOverflowError(OverflowError):
    """An exchange-matrix entry left the signed 64-bit range."""


class NotSkewSymmetrizableError(ValueError):
    """No positive diagonal D makes D*B skew-symmetric.

    ``witness`` is a pair (i, j), 0-based, at which every candidate
    symmetrizer fails.
    """

    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(f"matrix is not skew-symmetrizable, witness entry pair {witness}")


def _check_entry(value: int) -> int:
    if abs(value) > INT64_MAX:
        raise EntryOverflowError(f"entry {value} exceeds 64-bit range")
    return value


def find_symmetrizer(entries) -> tuple[int, ...]:
    """Minimal positive integer diagonal d with d_i*b_ij == -d_j*b_ji.

    Works by ratio propagation over the graph of nonzero entries; the
    result is normalized so the gcd of each connected component is 1.
    Raises :class:`NotSkewSymmetrizableError` with a witness pair.
    """
    n = len(entries)
    for i in range(n):
        if entries[i][i] != 0:
            raise NotSkewSymmetrizableError((i, i))
        for j in range(n):
            if (entries[i][j] == 0) != (entries[j][i] == 0):
                raise NotSkewSymmetrizableError((i, j))
            if entries[i][j] != 0 and entries[i][j] * entries[j][i] > 0:
                raise NotSkewSymmetrizableError((i, j))
    d: list[Fraction | None] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        component = [root]
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if entries[i][j] == 0:
                    continue
                ratio = Fraction(-entries[i][j], entries[j][i])
                implied = d[i] * ratio
                if d[j] is None:
                    d[j] = implied
                    component.append(j)
                    stack.append(j)
                elif d[j] != implied:
                    raise NotSkewSymmetrizableError((i, j))
        scale = 1
        for i in component:
            scale = scale * d[i].denominator // gcd(scale, d[i].denominator)
        values = [int(d[i] * scale) for i in component]
        common = 0
        for v in values:
            common = gcd(common, v)
        for i, v in zip(component, values):
            d[i] = Fraction(v // common)
    return tuple(int(x) for x in d)


class ExchangeMatrix:
    """A skew-symmetrizable square integer matrix.

    Immutable; construction verifies zero diagonal, sign coherence and
    the existence of a (minimal, cached) symmetrizer.
    """

    __slots__ = ("n", "entries", "labels", "_symmetrizer")

    def __init__(self, entries, labels: tuple[str, ...] | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        for row in rows:
            for x in row:
                _check_entry(x)
        self._symmetrizer = find_symmetrizer(rows)
        self.n = n
        self.entries = rows
        if labels is None:
            labels = tuple(str(i + 1) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("label count mismatch")
        self.labels = labels

    @property
    def symmetrizer(self) -> tuple[int, ...]:
        return self._symmetrizer

    def is_skew_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.n)
            for j in range(self.n)
        )

    def mutate(self, k: int) -> "ExchangeMatrix":
        """Matrix mutation in direction k (0-based).

        b'_ij = -b_ij if i == k or j == k, else
        b_ij + (b_ik*|b_kj| + |b_ik|*b_kj)/2; the input is unmodified.
        """
        n = self.n
        if not 0 <= k < n:
            raise IndexError(f"mutation vertex {k} out of range")
        b = self.entries
        new = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == k or j == k:
                    row.append(-b[i][j])
                else:
                    row.append(
                        _check_entry(
                            b[i][j] + (b[i][k] * abs(b[k][j]) + abs(b[i][k]) * b[k][j]) // 2
                        )
                    )
            new.append(tuple(row))
        return ExchangeMatrix(tuple(new), self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExchangeMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"ExchangeMatrix([{rows}])"


def mutate_matrix(matrix: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Functional alias for :meth:`ExchangeMatrix.mutate`."""
    return matrix.mutate(k)


def cartan_counterpart(matrix: ExchangeMatrix) -> tuple[tuple[int, ...], ...]:
    """The generalized Cartan matrix with 2 on the diagonal and -|b_ij| off it."""
    b = matrix.entries
    n = matrix.n
    return tuple(
        tuple(2 if i == j else -abs(b[i][j]) for j in range(n)) for i in range(n)
    )


# ---------------------------------------------------------------------------
# valued graphs


@dataclass(frozen=True)
class ValuedEdge:
    source: int
    target: int
    value: tuple[int, int]  # (|b_st|, |b_ts|)


@dataclass(frozen=True)
class ValuedGraph:
    n: int
    edges: tuple[ValuedEdge, ...]
    labels: tuple[str, ...]


def to_valued_graph(matrix: ExchangeMatrix) -> ValuedGraph:
    """Edges {i,j} with orientation i -> j iff b_ij > 0, valued (|b_ij|, |b_ji|)."""
    edges = []
    b = matrix.entries
    for i in range(matrix.n):
        for j in range(i + 1, matrix.n):
            if b[i][j] > 0:
                edges.append(ValuedEdge(i, j, (b[i][j], -b[j][i])))
            elif b[i][j] < 0:
                edges.append(ValuedEdge(j, i, (b[j][i], -b[i][j])))
    return ValuedGraph(matrix.n, tuple(edges), matrix.labels)


def from_valued_graph(graph: ValuedGraph) -> ExchangeMatrix:
    """Rebuild the exchange matrix; inverse of :func:`to_valued_graph`."""
    entries = [[0] * graph.n for _ in range(graph.n)]
    for edge in graph.edges:
        i, j = edge.source, edge.target
        a, b = edge.value
        if a <= 0 or b <= 0:
            raise ValueError(f"edge values must be positive, got {edge.value}")
        if entries[i][j] or entries[j][i]:
            raise ValueError(f"duplicate edge between {i} and {j}")
        entries[i][j] = a
        entries[j][i] = -b
    return ExchangeMatrix(entries, graph.labels)


def to_dot(graph: ValuedGraph, name: str = "Q") -> str:
    """DOT rendering with edge labels "(a,b)" and arrowheads per orientation."""
    lines = [f"digraph {name} {{"]
    for i, label in enumerate(graph.labels):
        lines.append(f'  v{i} [label="{label}"];')
    for edge in graph.edges:
        a, b = edge.value
        lines.append(f'  v{edge.source} -> v{edge.target} [label="({a},{b})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Cartan classification


@dataclass(frozen=True)
class CartanType:
    tag: str  # "Finite" | "Affine" | "Indefinite"
    name: str | None = None


def _symmetrize(cartan) -> tuple[tuple[Fraction, ...], ...]:
    n = len(cartan)
    # d_i c_ij = d_j c_ji is the same constraint as skew-symmetrizing the
    # signed pattern s_ij = |c_ij| for i < j, s_ij = -|c_ij| for i > j.
    skew = [
        [
            0 if i == j else (abs(cartan[i][j]) if i < j else -abs(cartan[i][j]))
            for j in range(n)
        ]
        for i in range(n)
    ]
    try:
        d = find_symmetrizer(skew)
    except NotSkewSymmetrizableError:
        raise ValueError("Cartan matrix is not symmetrizable") from None
    # verify on the original (sign pattern must also be symmetric and non-positive)
    for i in range(n):
        if cartan[i][i] != 2:
            raise ValueError("Cartan matrix must have 2 on the diagonal")
        for j in range(n):
            if i != j:
                if cartan[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                    raise ValueError("Cartan matrix is not symmetrizable")
    return tuple(
        tuple(Fraction(d[i] * cartan[i][j]) for j in range(n)) for i in range(n)
    )


def _definiteness(sym) -> tuple[bool, bool, int]:
    """(positive definite, positive semidefinite, corank) of a symmetric matrix.

    Symmetric Gaussian elimination over exact rationals: a negative pivot
    refutes semidefiniteness, as does a zero diagonal with a nonzero row.
    """
    n = len(sym)
    a = [list(row) for row in sym]
    corank = 0
    definite = True
    semidefinite = True
    for k in range(n):
        pivot = a[k][k]
        if pivot < 0:
            return False, False, 0
        if pivot == 0:
            definite = False
            if any(a[k][j] != 0 for j in range(k, n)):
                return False, False, 0
            corank += 1
            continue
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            factor = a[i][k] / pivot
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    return definite and semidefinite, semidefinite, corank


def classify(cartan, name_diagram: bool = True) -> CartanType:
    """Classify a symmetrizable generalized Cartan matrix.

    Finite iff the symmetrized form is positive definite; Affine iff it
    is positive semidefinite of corank 1; Indefinite otherwise.  Named
    diagrams are matched by valued-graph isomorphism for rank <= 12.
    """
    sym = _symmetrize(cartan)
    definite, semidefinite, corank = _definiteness(sym)
    if definite:
        tag = "Finite"
    elif semidefinite and corank == 1:
        tag = "Affine"
    else:
        tag = "Indefinite"
    name = None
    if name_diagram and len(cartan) <= 12 and tag in ("Finite", "Affine"):
        name = _match_named_diagram(tuple(tuple(row) for row in cartan), tag)
    return CartanType(tag, name)


def _cartan_digraph(cartan):
    import networkx as nx

    g = nx.DiGraph()
    n = len(cartan)
    g.add_nodes_from(range(n))
    for i in range(n):
        for j in range(n):
            if i != j and cartan[i][j] != 0:
                g.add_edge(i, j, w=-cartan[i][j])
    return g


@lru_cache(maxsize=None)
def _named_catalog(tag: str):
    """(name, cartan) reference diagrams of the given tag, ranks <= 12."""
    from . import catalog

    return catalog.named_cartan_matrices(tag)


def _match_named_diagram(cartan, tag: str) -> str | None:
    import networkx as nx

    target = _cartan_digraph(cartan)
    for name, reference in _named_catalog(tag):
        if len(reference) != len(cartan):
            continue
        ref = _cartan_digraph(reference)
        if nx.is_isomorphic(target, ref, edge_match=lambda a, b: a["w"] == b["w"]):
            return name
    return None

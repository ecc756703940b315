"""Exact multivariate Laurent polynomial arithmetic over the integers.

A Laurent polynomial in n variables is a finitely supported map from
integer exponent vectors (length n, entries may be negative) to nonzero
integer coefficients.  Coefficients are plain Python ints, so there is
no overflow; all operations are exact.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class NotDivisibleError(ArithmeticError):
    """Raised by :func:`divide_exact` when the quotient is not a Laurent polynomial."""


class LaurentPolynomial:
    """An immutable Laurent polynomial with integer coefficients.

    Terms are stored in a dict mapping exponent tuples to coefficients;
    zero coefficients are never stored, so equality of the term maps is
    equality of polynomials.  The canonical term order used for printing
    and hashing is lexicographic on exponent vectors, largest first.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if n < 0:
            raise ValueError("variable count must be non-negative")
        self.n = n
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != n:
                    raise ValueError(f"exponent vector {exps} has wrong length (expected {n})")
                if coeff != 0:
                    clean[tuple(exps)] = coeff
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "LaurentPolynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "LaurentPolynomial":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def constant(cls, n: int, c: int) -> "LaurentPolynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, i: int, n: int) -> "LaurentPolynomial":
        """The i-th variable (0-based) as a polynomial in n variables."""
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for {n} variables")
        exps = [0] * n
        exps[i] = 1
        return cls(n, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "LaurentPolynomial":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    # -- basic queries -----------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_positive(self) -> bool:
        """True iff every stored coefficient is positive (vacuously true for 0)."""
        return all(c > 0 for c in self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(sorted(self._terms.items()))))
        return self._hash

    # -- ring operations ---------------------------------------------

    def _check_compatible(self, other: "LaurentPolynomial") -> None:
        if self.n != other.n:
            raise ValueError(f"mismatched variable counts: {self.n} vs {other.n}")

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check_compatible(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            new = terms.get(exps, 0) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return LaurentPolynomial(self.n, terms)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check_compatible(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(e, 0) + c1 * c2
                if new:
                    terms[e] = new
                else:
                    terms.pop(e, None)
        return LaurentPolynomial(self.n, terms)

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = LaurentPolynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- structural operations ---------------------------------------

    def denominator_vector(self) -> tuple[int, ...]:
        """The negatives of the per-variable minimal exponents.

        For the initial variable u_i this is -1 in coordinate i (the
        almost-positive-root convention).  Undefined for zero.
        """
        if not self._terms:
            raise ValueError("denominator vector of the zero polynomial is undefined")
        mins = [min(e[i] for e in self._terms) for i in range(self.n)]
        return tuple(-m for m in mins)

    def permute_variables(self, g: tuple[int, ...]) -> "LaurentPolynomial":
        """Relabel variables u_j -> u_{g[j]} for a permutation g of 0..n-1."""
        if len(g) != self.n:
            raise ValueError("permutation length mismatch")
        terms = {}
        for exps, coeff in self._terms.items():
            new = [0] * self.n
            for j, e in enumerate(exps):
                new[g[j]] = e
            terms[tuple(new)] = coeff
        return LaurentPolynomial(self.n, terms)

    def project(self, orbits: Iterable[Iterable[int]]) -> "LaurentPolynomial":
        """Apply the orbit projection u_i -> v_{orbit of i}.

        This is the ring homomorphism sending each variable to the
        variable of its orbit; the image exponent of an orbit is the sum
        of the exponents of its members.  Colliding monomials add.
        """
        orbit_list = [tuple(o) for o in orbits]
        covered = sorted(i for o in orbit_list for i in o)
        if covered != list(range(self.n)):
            raise ValueError("orbits must partition the variable indices")
        m = len(orbit_list)
        terms: dict[tuple[int, ...], int] = {}
        for exps, coeff in self._terms.items():
            e = tuple(sum(exps[i] for i in orbit) for orbit in orbit_list)
            new = terms.get(e, 0) + coeff
            if new:
                terms[e] = new
            else:
                terms.pop(e, None)
        return LaurentPolynomial(m, terms)

    # -- rendering and parsing ---------------------------------------

    def render(self, names: list[str] | None = None) -> str:
        """Canonical human-readable form, terms in decreasing lex order."""
        if not self._terms:
            return "0"
        if names is None:
            names = [f"u{i + 1}" for i in range(self.n)]
        pieces = []
        for exps in sorted(self._terms, reverse=True):
            coeff = self._terms[exps]
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e != 0
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.render()!r})"


_FACTOR_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_polynomial(text: str, names: list[str]) -> LaurentPolynomial:
    """Parse the grammar produced by :meth:`LaurentPolynomial.render`.

    Accepts an optional leading sign, terms separated by ``+``/``-``,
    factors separated by ``*``, and ``name^exp`` powers.  A ``(num)/mono``
    form is not accepted; golden files use the flat rendering.
    """
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    text = text.strip()
    if not text:
        raise ValueError("cannot parse an empty polynomial")
    if text == "0":
        return LaurentPolynomial.zero(n)
    # normalize to a list of signed terms
    chunks = re.split(r"(?<![\^*])\s*([+-])\s*", "+" + text if text[0] not in "+-" else text)
    chunks = [c for c in chunks if c.strip()]
    if len(chunks) % 2 != 0:
        raise ValueError(f"cannot parse polynomial: {text!r}")
    terms: dict[tuple[int, ...], int] = {}
    for sign, body in zip(chunks[::2], chunks[1::2]):
        coeff = 1 if sign == "+" else -1
        exps = [0] * n
        for factor in body.split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m or m.group(1) not in index:
                raise ValueError(f"unknown factor {factor!r} in {text!r}")
            exps[index[m.group(1)]] += int(m.group(2) or 1)
        e = tuple(exps)
        new = terms.get(e, 0) + coeff
        if new:
            terms[e] = new
        else:
            terms.pop(e, None)
    return LaurentPolynomial(n, terms)


def divide_exact(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Return r with r*q == p exactly, or raise :class:`NotDivisibleError`.

    Uses leading-term elimination in lexicographic order.  When the
    quotient exists, its support lies in the coordinatewise box
    [min(p)-min(q), max(p)-max(q)] because extreme terms of a product
    cannot cancel; any candidate term outside that box proves
    non-divisibility, which bounds the loop.
    """
    p._check_compatible(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPolynomial.zero(p.n)
    n = p.n
    lo = tuple(
        min(e[i] for e in p._terms) - min(e[i] for e in q._terms) for i in range(n)
    )
    hi = tuple(
        max(e[i] for e in p._terms) - max(e[i] for e in q._terms) for i in range(n)
    )
    if any(l > h for l, h in zip(lo, hi)):
        raise NotDivisibleError(f"{p.render()} is not divisible by {q.render()}")
    lead_q = max(q._terms)
    cq = q._terms[lead_q]
    remainder = dict(p._terms)
    quotient: dict[tuple[int, ...], int] = {}
    while remainder:
        lead_p = max(remainder)
        cp = remainder[lead_p]
        if cp % cq != 0:
            raise NotDivisibleError(f"{p.render()} is not divisible by {q.render()}")
        t = tuple(a - b for a, b in zip(lead_p, lead_q))
        if any(e < l or e > h for e, l, h in zip(t, lo, hi)):
            raise NotDivisibleError(f"{p.render()} is not divisible by {q.render()}")
        c = cp // cq
        quotient[t] = c
        for eq, coeff_q in q._terms.items():
            e = tuple(a + b for a, b in zip(t, eq))
            new = remainder.get(e, 0) - c * coeff_q
            if new:
                remainder[e] = new
            else:
                remainder.pop(e, None)
    return LaurentPolynomial(n, quotient)

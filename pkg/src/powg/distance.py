"""Exact distance-based invariants: distance distribution, reciprocal status,
and their generating polynomials.

Convention: the distance-0 count equals the number of vertices (self pairs
are counted), so the coefficient total is n + C(n, 2) for a connected graph.
Pairs at infinite distance are kept out of the polynomial and reported
separately so the total is always conserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph


def bfs_distances(graph: Graph, src: int) -> list[int]:
    """Shortest-path distances from src; -1 marks unreachable vertices."""
    dist = [-1] * graph.n
    dist[src] = 0
    seen = 1 << src
    frontier = 1 << src
    d = 0
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= graph.adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        m = frontier
        while m:
            low = m & -m
            dist[low.bit_length() - 1] = d
            m ^= low
    return dist


def all_pairs_distances(graph: Graph) -> tuple[tuple[int, ...], ...]:
    """Exact all-pairs distance table via BFS from every vertex."""
    return tuple(tuple(bfs_distances(graph, v)) for v in range(graph.n))


@dataclass(frozen=True)
class DistanceDistribution:
    """Counts of vertex pairs per distance; counts[0] is the vertex count."""

    counts: tuple[int, ...]
    unreachable_pairs: int

    @property
    def n(self) -> int:
        return self.counts[0]

    @property
    def diameter(self) -> int:
        return len(self.counts) - 1

    @property
    def wiener(self) -> int:
        return sum(i * c for i, c in enumerate(self.counts))

    def polynomial_string(self) -> str:
        parts = []
        for i, c in enumerate(self.counts):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}x")
            else:
                parts.append(f"{c}x^{i}")
        return " + ".join(parts) if parts else "0"


def hosoya_polynomial(graph: Graph) -> DistanceDistribution:
    """Distance distribution of the graph (unordered pairs for distance >= 1)."""
    table = all_pairs_distances(graph)
    counts: dict[int, int] = {0: graph.n}
    unreachable = 0
    for v in range(graph.n):
        row = table[v]
        for w in range(v + 1, graph.n):
            d = row[w]
            if d < 0:
                unreachable += 1
            else:
                counts[d] = counts.get(d, 0) + 1
    diam = max(counts)
    return DistanceDistribution(
        counts=tuple(counts.get(i, 0) for i in range(diam + 1)),
        unreachable_pairs=unreachable,
    )


def reciprocal_status(graph: Graph, v: int) -> Fraction:
    """rs(v) = sum over w != v of 1/d(v, w), as an exact rational."""
    dist = bfs_distances(graph, v)
    total = Fraction(0)
    for w in range(graph.n):
        if w == v:
            continue
        if dist[w] < 0:
            raise ValueError(f"graph is disconnected: no path from {v} to {w}")
        total += Fraction(1, dist[w])
    return total


class RationalExponentPolynomial:
    """Polynomial with exact rational exponents and positive integer
    coefficients, used for the reciprocal-status edge polynomial."""

    def __init__(self, terms: dict[Fraction, int]):
        clean: dict[Fraction, int] = {}
        for e, c in terms.items():
            if c <= 0:
                raise ValueError(f"coefficient {c} at exponent {e} is not positive")
            clean[Fraction(e)] = int(c)
        self.terms = dict(sorted(clean.items(), key=lambda t: t[0], reverse=True))

    def coefficient_total(self) -> int:
        return sum(self.terms.values())

    @staticmethod
    def exponent_string(e: Fraction) -> str:
        return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"

    def term_strings(self) -> dict[str, int]:
        return {self.exponent_string(e): c for e, c in self.terms.items()}

    def render(self) -> str:
        """Descending exponents, terms as "c·x^e", halves rendered "a/2"."""
        parts = [f"{c}·x^{self.exponent_string(e)}" for e, c in self.terms.items()]
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalExponentPolynomial) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"RationalExponentPolynomial({self.terms!r})"


def rs_hosoya_polynomial(graph: Graph) -> RationalExponentPolynomial:
    """Sum of x^(rs(v) + rs(w)) over all edges vw; graph must be connected."""
    rs = [reciprocal_status(graph, v) for v in range(graph.n)]
    terms: dict[Fraction, int] = {}
    for u, v in graph.edges():
        e = rs[u] + rs[v]
        terms[e] = terms.get(e, 0) + 1
    return RationalExponentPolynomial(terms)


def wiener_index(graph: Graph) -> int:
    """Sum of distances over unordered reachable pairs: sum i * dis(i), i >= 1."""
    return hosoya_polynomial(graph).wiener


def diameter(graph: Graph):
    """Largest eccentricity; math.inf when the graph is disconnected."""
    import math

    if graph.n <= 1:
        return 0
    dd = hosoya_polynomial(graph)
    if dd.unreachable_pairs:
        return math.inf
    return dd.diameter

"""Finite groups as explicit multiplication tables.

Elements are indices 0..order-1 with the identity fixed at index 0.
The built-in two-generator family is

    <r, s | r^(2^k p) = s^2 = e,  s r s^-1 = r^(2^(k-1) p - 1)>

of order 2^(k+1) p for k >= 2 and p an odd prime, realized on pairs
(a, b) with a in Z_(2^k p), b in {0, 1}, encoded as index a + b * 2^k p.
With that encoding <r> occupies the contiguous index prefix 0..2^k p - 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

# Explicit n x n tables only; keeps memory at desk scale.
MAX_ORDER = 1024
# Full O(n^3) associativity check up to here, random sampling beyond.
FULL_ASSOC_LIMIT = 128
ASSOC_SAMPLES_PER_N2 = 10


class GroupError(ValueError):
    """Input does not define a group; the message names the broken axiom."""


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (k, p) of the built-in family: k >= 2, p an odd prime."""

    k: int
    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"k must be an integer >= 2, got {self.k!r}")
        if not isinstance(self.p, int) or not _is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p!r}")
        if self.order > MAX_ORDER:
            raise ValueError(
                f"group order 2^(k+1)*p = {self.order} exceeds the supported "
                f"exact-table size ({MAX_ORDER})"
            )

    @property
    def n_r(self) -> int:
        """Order 2^k p of the cyclic part <r>."""
        return (1 << self.k) * self.p

    @property
    def order(self) -> int:
        return 2 * self.n_r

    @property
    def half(self) -> int:
        """2^(k-1) p, the exponent of the central involution u = r^half."""
        return self.n_r // 2

    @property
    def quarter(self) -> int:
        """2^(k-2) p, the number of partner pairs."""
        return self.n_r // 4

    @property
    def twist(self) -> int:
        """Conjugation exponent m = 2^(k-1) p - 1 (s r s^-1 = r^m)."""
        return self.half - 1


@dataclass(frozen=True)
class FiniteGroup:
    """Immutable finite group given by a total multiplication table.

    identity is always element 0; labels are unique display strings.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    family: FamilyParams | None = None
    assoc_check: str = "by construction"

    identity = 0

    def __post_init__(self) -> None:
        if len(set(self.labels)) != self.order:
            raise GroupError("labels are not unique")

    def mult(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(0)

    def power(self, x: int, t: int) -> int:
        if t < 0:
            x, t = self.inverse(x), -t
        acc = 0
        while t:
            if t & 1:
                acc = self.table[acc][x]
            x = self.table[x][x]
            t >>= 1
        return acc

    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class GroupPartition:
    """The four-block partition of the family group, plus derived views.

    H0 = {e, u}, H1 = <r> \\ H0, H2 = reflections with even r-exponent,
    H3 = reflections with odd r-exponent.  partner_pairs lists the
    (y, z) pairs of H3 with z = y^3 and y^2 = u.
    """

    h0: frozenset[int]
    h1: frozenset[int]
    h2: frozenset[int]
    h3: frozenset[int]
    u: int
    partner_pairs: tuple[tuple[int, int], ...]
    n_r: int

    @property
    def omega(self) -> frozenset[int]:
        return self.h0

    @property
    def a1(self) -> frozenset[int]:
        """The cyclic part <r> (index prefix)."""
        return frozenset(range(self.n_r))

    @property
    def a2(self) -> frozenset[int]:
        return self.h2

    @property
    def a3(self) -> frozenset[int]:
        return self.a1 - {0}

    @property
    def a4(self) -> frozenset[int]:
        return self.a1 - {self.u}

    @property
    def a5(self) -> frozenset[int]:
        return self.a1 - self.h0

    @property
    def a6(self) -> frozenset[int]:
        return self.h3

    def sizes(self) -> tuple[int, int, int, int]:
        return (len(self.h0), len(self.h1), len(self.h2), len(self.h3))


def build_family(params: FamilyParams) -> FiniteGroup:
    """Construct the family group for (k, p).

    Product rule on pairs: (a1, b1) * (a2, b2) = (a1 + a2 * m^b1 mod 2^k p,
    b1 xor b2) with m = 2^(k-1) p - 1.  The defining relations are verified
    after construction.
    """
    n = params.n_r
    m = params.twist
    order = params.order

    table = []
    for idx1 in range(order):
        a1, b1 = idx1 % n, idx1 // n
        fac = m if b1 else 1
        row = []
        for idx2 in range(order):
            a2, b2 = idx2 % n, idx2 // n
            row.append((a1 + a2 * fac) % n + (b1 ^ b2) * n)
        table.append(tuple(row))
    table = tuple(table)

    labels = []
    for idx in range(order):
        a, b = idx % n, idx // n
        if b == 0:
            labels.append("e" if a == 0 else ("r" if a == 1 else f"r^{a}"))
        else:
            # (a, 1) is r^a s = s r^(a*m mod n)
            j = a * m % n
            labels.append("s" if j == 0 else ("s·r" if j == 1 else f"s·r^{j}"))

    g = FiniteGroup(order, table, tuple(labels), family=params)

    # defining relations, checked constructively
    r, s = 1, n
    if g.power(r, n) != 0 or g.mult(s, s) != 0:
        raise GroupError("family construction violates r^(2^k p) = s^2 = e")
    if g.mult(g.mult(s, r), g.inverse(s)) != g.power(r, m):
        raise GroupError("family construction violates s r s^-1 = r^m")
    if (m * m) % n != 1:
        raise GroupError("twist exponent is not an involution mod 2^k p")
    return g


def build_cyclic(n: int) -> FiniteGroup:
    """Z_n under addition, identity 0, labels the residues in decimal."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclic order must be a positive integer, got {n!r}")
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds the supported exact-table size ({MAX_ORDER})")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(n, table, tuple(str(a) for a in range(n)))


def element_order(g: FiniteGroup, x: int) -> int:
    """Least t >= 1 with x^t = e."""
    t, y = 1, x
    while y != 0:
        y = g.mult(y, x)
        t += 1
    return t


def cyclic_subgroup(g: FiniteGroup, x: int) -> frozenset[int]:
    """The subgroup <x> = {x^t : t >= 0}."""
    out = {0}
    y = x
    while y != 0:
        out.add(y)
        y = g.mult(y, x)
    return frozenset(out)


def partition(g: FiniteGroup, params: FamilyParams) -> GroupPartition:
    """Partition a family group into H0..H3 and list the H3 partner pairs.

    The even-exponent reflection set is taken at set level (2^(k-1) p
    distinct elements, exponents reduced mod 2^k p), so it contains s.
    """
    if g.family != params:
        raise ValueError("group was not built by build_family with these parameters")
    n = params.n_r
    m = params.twist
    u = params.half  # index of r^(2^(k-1) p)

    h0 = frozenset({0, u})
    h1 = frozenset(range(n)) - h0
    h2 = frozenset(n + a for a in range(0, n, 2))
    h3 = frozenset(n + a for a in range(1, n, 2))

    pairs = []
    for j in range(params.quarter):
        c = 2 * j + 1
        y = n + c * m % n
        z = n + (c + params.half) * m % n
        pairs.append((y, z))

    return GroupPartition(h0, h1, h2, h3, u, tuple(pairs), n)


def _validate_table(table: list[list[int]]) -> str:
    """Check the group axioms; returns a note describing the associativity
    check mode.  Raises GroupError naming the first witness found."""
    n = len(table)
    ident = list(range(n))
    if table[0] != ident or [row[0] for row in table] != ident:
        # locate a genuine identity elsewhere to give the sharper error
        for e in range(1, n):
            if [row[e] for row in table] == ident and table[e] == ident:
                raise GroupError(f"identity element is at index {e}, not 0")
        raise GroupError("element 0 is not an identity (row or column broken)")

    for x in range(n):
        if 0 not in table[x]:
            raise GroupError(f"element {x} has no right inverse")
        if not any(table[y][x] == 0 for y in range(n)):
            raise GroupError(f"element {x} has no left inverse")

    if n <= FULL_ASSOC_LIMIT:
        for a in range(n):
            ta = table[a]
            for b in range(n):
                tab = table[ta[b]]
                tb = table[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise GroupError(
                            f"associativity fails at triple ({a}, {b}, {c}): "
                            f"({a}·{b})·{c} = {tab[c]} but {a}·({b}·{c}) = {ta[tb[c]]}"
                        )
        return "full"

    rng = random.Random(0)
    samples = ASSOC_SAMPLES_PER_N2 * n * n
    for _ in range(samples):
        a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupError(
                f"associativity fails at triple ({a}, {b}, {c}): "
                f"({a}·{b})·{c} = {table[table[a][b]][c]} "
                f"but {a}·({b}·{c}) = {table[a][table[b][c]]}"
            )
    return f"sampled({samples} triples)"


def load_cayley_table(text: str) -> FiniteGroup:
    """Parse and validate a Cayley-table file.

    Format: line 1 is the order n; lines 2..n+1 hold n whitespace-separated
    0-based indices each (row g, column h gives g·h); index 0 must be the
    identity.  Optional trailing lines "label <index> <string>" attach
    display labels.  LF or CRLF both accepted.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GroupError("empty Cayley table input")
    try:
        n = int(lines[0])
    except ValueError:
        raise GroupError(f"line 1: expected the order, got {lines[0]!r}") from None
    if n < 1:
        raise GroupError(f"line 1: order must be positive, got {n}")
    if n > MAX_ORDER:
        raise GroupError(f"order {n} exceeds the supported exact-table size ({MAX_ORDER})")
    if len(lines) < n + 1:
        raise GroupError(f"expected {n} table rows, found {len(lines) - 1}")

    table = []
    for i in range(n):
        parts = lines[1 + i].split()
        if len(parts) != n:
            raise GroupError(f"line {i + 2}: expected {n} entries, got {len(parts)}")
        try:
            row = [int(v) for v in parts]
        except ValueError:
            raise GroupError(f"line {i + 2}: non-integer entry") from None
        for v in row:
            if not 0 <= v < n:
                raise GroupError(f"line {i + 2}: entry {v} out of range 0..{n - 1}")
        table.append(row)

    labels = [str(i) for i in range(n)]
    for extra_no, ln in enumerate(lines[n + 1:], start=n + 2):
        parts = ln.split(maxsplit=2)
        if parts[0] != "label" or len(parts) != 3:
            raise GroupError(f"line {extra_no}: expected 'label <index> <string>'")
        try:
            idx = int(parts[1])
        except ValueError:
            raise GroupError(f"line {extra_no}: bad label index {parts[1]!r}") from None
        if not 0 <= idx < n:
            raise GroupError(f"line {extra_no}: label index {idx} out of range")
        labels[idx] = parts[2]

    note = _validate_table(table)
    return FiniteGroup(n, tuple(tuple(row) for row in table), tuple(labels),
                       assoc_check=note)

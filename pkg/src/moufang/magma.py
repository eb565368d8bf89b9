"""Finite magmas given by Cayley tables, identity checks, translations and powers.

Elements of a magma of order ``n`` are the integers ``0..n-1``.  All
functions here are pure; a :class:`Magma` is immutable once built.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .caps import get_cap
from .errors import CapExceeded, EntryOutOfRange, InputError, NotClosed, SizeMismatch


@dataclass(frozen=True)
class Magma:
    order: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.order < 1:
            raise InputError("order must be at least 1")
        if len(self.table) != self.order or any(len(r) != self.order for r in self.table):
            raise SizeMismatch(self.order * self.order, sum(len(r) for r in self.table))
        for i, row in enumerate(self.table):
            for j, v in enumerate(row):
                if not 0 <= v < self.order:
                    raise EntryOutOfRange(i, j, v, self.order)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Magma":
        return cls(len(rows), tuple(tuple(int(v) for v in r) for r in rows))

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def elements(self) -> range:
        return range(self.order)

    def entries(self) -> tuple[int, ...]:
        """Row-major flattening of the table."""
        return tuple(v for row in self.table for v in row)

    def idempotents(self) -> list[int]:
        return [a for a in self.elements if self.table[a][a] == a]

    def __repr__(self):
        return f"Magma({self.order}, {[list(r) for r in self.table]})"


def make_magma(order: int, entries: Sequence[int]) -> Magma:
    """Build a magma from a row-major list of ``order**2`` entries."""
    if order < 1:
        raise InputError("order must be at least 1")
    if len(entries) != order * order:
        raise SizeMismatch(order * order, len(entries))
    rows = tuple(tuple(int(v) for v in entries[i * order:(i + 1) * order]) for i in range(order))
    return Magma(order, rows)


def mul(M: Magma, a: int, b: int) -> int:
    return M.table[a][b]


# -- identities -------------------------------------------------------------


class IdentityKind(enum.Enum):
    COMMUTATIVE = "commutative"
    IDEMPOTENT = "idempotent"
    ASSOCIATIVE = "associative"
    CENTRAL_MOUFANG = "central-moufang"
    LEFT_MOUFANG = "left-moufang"
    RIGHT_MOUFANG = "right-moufang"
    EQ2 = "eq2"
    EQ3 = "eq3"

    @property
    def arity(self) -> int:
        return _IDENTITIES[self][0]

    def sides(self, M: Magma, *args: int) -> tuple[int, int]:
        """Evaluate (lhs, rhs) of the identity at the given variable values."""
        return _IDENTITIES[self][1](M.table, *args)

    @classmethod
    def parse(cls, name: str) -> "IdentityKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(k.value for k in cls)
            raise InputError(f"unknown identity {name!r}; expected one of {valid}") from None


# Variables are always ordered (x, y, z); counterexamples follow that order.
_IDENTITIES = {
    IdentityKind.COMMUTATIVE: (2, lambda t, x, y: (t[x][y], t[y][x])),
    IdentityKind.IDEMPOTENT: (1, lambda t, x: (t[x][x], x)),
    IdentityKind.ASSOCIATIVE: (3, lambda t, x, y, z: (t[t[x][y]][z], t[x][t[y][z]])),
    # (xy)(zx) = (x(yz))x
    IdentityKind.CENTRAL_MOUFANG: (
        3, lambda t, x, y, z: (t[t[x][y]][t[z][x]], t[t[x][t[y][z]]][x])),
    # x(y(xz)) = ((xy)x)z
    IdentityKind.LEFT_MOUFANG: (
        3, lambda t, x, y, z: (t[x][t[y][t[x][z]]], t[t[t[x][y]][x]][z])),
    # ((zx)y)x = z(x(yx))
    IdentityKind.RIGHT_MOUFANG: (
        3, lambda t, x, y, z: (t[t[t[z][x]][y]][x], t[z][t[x][t[y][x]]])),
    # (xy)x = xy
    IdentityKind.EQ2: (2, lambda t, x, y: (t[t[x][y]][x], t[x][y])),
    # x(yz) = (xy)(xz)
    IdentityKind.EQ3: (3, lambda t, x, y, z: (t[x][t[y][z]], t[t[x][y]][t[x][z]])),
}


@dataclass(frozen=True)
class IdentityReport:
    kind: IdentityKind
    holds: bool
    counterexample: tuple[int, ...] | None = None


def check_identity(M: Magma, kind: IdentityKind) -> IdentityReport:
    """Exhaustively test ``kind`` on ``M``.

    The reported counterexample is the lexicographically smallest failing
    assignment of (x, y, z).
    """
    evaluate = _IDENTITIES[kind][1]
    t = M.table
    for args in itertools.product(range(M.order), repeat=kind.arity):
        lhs, rhs = evaluate(t, *args)
        if lhs != rhs:
            return IdentityReport(kind, False, args)
    return IdentityReport(kind, True)


def is_commutative_moufang(M: Magma) -> bool:
    return (check_identity(M, IdentityKind.COMMUTATIVE).holds
            and check_identity(M, IdentityKind.CENTRAL_MOUFANG).holds)


# -- translations and powers -------------------------------------------------


def apply_translation_word(M: Magma, word: Sequence[int], a: int) -> int:
    """Return L_{x1} L_{x2} ... L_{xk} a = x1(x2(...(xk a)))."""
    t = M.table
    for x in reversed(word):
        a = t[x][a]
    return a


def translate(M: Magma, x: int, times: int, a: int) -> int:
    """Apply L_x to ``a`` the given number of times.

    Uses cycle detection, so huge exponents such as ``2**40`` are cheap.
    """
    row = M.table[x]
    seen: dict[int, int] = {}
    seq: list[int] = []
    step = 0
    while step < times:
        if a in seen:
            start = seen[a]
            return seq[start + (times - step) % (step - start)]
        seen[a] = step
        seq.append(a)
        a = row[a]
        step += 1
    return a


@dataclass(frozen=True)
class PowerOrbit:
    """The powers a, a^2, a^3, ... where a^(k+1) = a * a^k.

    ``sequence[k]`` holds a^(k+1); after ``preperiod`` terms the sequence
    repeats with the given period.
    """

    element: int
    sequence: tuple[int, ...]
    preperiod: int
    period: int

    def power(self, k: int) -> int:
        """Return a^k for any k >= 1."""
        if k < 1:
            raise ValueError("powers start at 1")
        i = k - 1
        if i >= self.preperiod:
            i = self.preperiod + (i - self.preperiod) % self.period
        return self.sequence[i]

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.sequence)


def power_orbit(M: Magma, a: int) -> PowerOrbit:
    row = M.table[a]
    index = {a: 0}
    seq = [a]
    b = row[a]
    while b not in index:
        index[b] = len(seq)
        seq.append(b)
        b = row[b]
    pre = index[b]
    return PowerOrbit(a, tuple(seq), pre, len(seq) - pre)


def power(M: Magma, a: int, k: int) -> int:
    return power_orbit(M, a).power(k)


# -- power associativity -----------------------------------------------------


@lru_cache(maxsize=None)
def bracketings(length: int) -> tuple:
    """All full bracketings of a word of ``length`` equal letters.

    A leaf is ``None``; an inner node is a pair ``(left, right)``.  Shapes
    are ordered by the size of their left factor.
    """
    if length == 1:
        return (None,)
    return tuple(
        (left, right)
        for k in range(1, length)
        for left in bracketings(k)
        for right in bracketings(length - k)
    )


def evaluate_shape(M: Magma, shape, a: int) -> int:
    if shape is None:
        return a
    return M.table[evaluate_shape(M, shape[0], a)][evaluate_shape(M, shape[1], a)]


def render_shape(shape, letter: str = "a") -> str:
    """Render a bracketing like ``(aa)(aa)``; outermost product is unbracketed."""

    def go(s, top):
        if s is None:
            return letter
        inner = go(s[0], False) + go(s[1], False)
        return inner if top else f"({inner})"

    return go(shape, True)


@dataclass(frozen=True)
class BracketingReport:
    element: int
    holds: bool
    length: int | None = None
    term: str | None = None
    value: int | None = None
    expected: int | None = None


def bracketings_agree(M: Magma, a: int, maxlen: int = 6, cap: int | None = None) -> BracketingReport:
    """Check that every bracketing of a^k equals a(a(...a)) for 3 <= k <= maxlen.

    On failure, reports the first disagreeing shape at the shortest length,
    its value, and the value of the left-iterated power.
    """
    cap = get_cap("bracket") if cap is None else cap
    if maxlen > cap:
        raise CapExceeded("bracketing length", maxlen, cap)
    orbit = power_orbit(M, a)
    for k in range(3, maxlen + 1):
        expected = orbit.power(k)
        for shape in bracketings(k):
            value = evaluate_shape(M, shape, a)
            if value != expected:
                return BracketingReport(a, False, k, render_shape(shape), value, expected)
    return BracketingReport(a, True)


# -- translation identities --------------------------------------------------


def lemma3_check(M: Magma, a: int, b: int, nmax: int) -> bool:
    """(ab)^(2^n) == L_a^(2^n) b^(2^n) for all 0 <= n <= nmax."""
    ab = power_orbit(M, M.table[a][b])
    bo = power_orbit(M, b)
    for n in range(nmax + 1):
        e = 2 ** n
        if ab.power(e) != translate(M, a, e, bo.power(e)):
            return False
    return True


def corollary4_check(M: Magma, word: Sequence[int], a: int, nmax: int) -> bool:
    """(L_{w1}...L_{wk} a)^(2^n) == L_{w1}^(2^n) ... L_{wk}^(2^n) a^(2^n)."""
    lhs_orbit = power_orbit(M, apply_translation_word(M, word, a))
    a_orbit = power_orbit(M, a)
    for n in range(nmax + 1):
        e = 2 ** n
        rhs = a_orbit.power(e)
        for x in reversed(word):
            rhs = translate(M, x, e, rhs)
        if lhs_orbit.power(e) != rhs:
            return False
    return True


def lemma5_check(M: Magma, a: int, b: int, nmax: int) -> bool:
    """L_a^(2n) L_b == L_{L_a^n b} L_a^n pointwise, for 1 <= n <= nmax."""
    t = M.table
    for n in range(1, nmax + 1):
        u = translate(M, a, n, b)
        for c in M.elements:
            if translate(M, a, 2 * n, t[b][c]) != t[u][translate(M, a, n, c)]:
                return False
    return True


# -- constructions -----------------------------------------------------------


def direct_product(M1: Magma, M2: Magma) -> Magma:
    """Componentwise product; the pair (i, j) is encoded as i * |M2| + j."""
    n2 = M2.order
    rows = []
    for i1, j1 in itertools.product(M1.elements, M2.elements):
        rows.append(tuple(
            M1.table[i1][i2] * n2 + M2.table[j1][j2]
            for i2, j2 in itertools.product(M1.elements, M2.elements)
        ))
    return Magma(M1.order * n2, tuple(rows))


def submagma(M: Magma, subset: Iterable[int]) -> tuple[Magma, tuple[int, ...]]:
    """Induced magma on a closed subset.

    Returns the sub-magma and the tuple mapping new indices to original
    ones (increasing).  Raises :class:`NotClosed` with the first escaping
    pair in scan order.
    """
    members = tuple(sorted(set(subset)))
    if not members:
        raise InputError("subset must be nonempty")
    position = {x: i for i, x in enumerate(members)}
    rows = []
    for a in members:
        row = []
        for b in members:
            c = M.table[a][b]
            if c not in position:
                raise NotClosed(a, b, c)
            row.append(position[c])
        rows.append(tuple(row))
    return Magma(len(members), tuple(rows)), members

"""Divisibility relations, congruences and the semilattice decomposition.

For a commutative central-Moufang magma the mutual-divisibility relation
``sigma`` is a congruence, the quotient by it is a semilattice, and each
class is Archimedean on its own.  The functions here compute all of that
on finite tables and certify each step instead of assuming it.
"""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    HypothesisViolation,
    InputError,
    NotACongruence,
    NotAnEquivalence,
    NotClosed,
    NotCommutative,
    NotIdempotent,
    OrderAxiomFailure,
)
from .magma import IdentityKind, IdentityReport, Magma, check_identity, power_orbit, submagma


@dataclass(frozen=True)
class Ideal:
    generator: int
    members: frozenset[int]

    def __contains__(self, x):
        return x in self.members


def principal_ideal(M: Magma, a: int) -> Ideal:
    """Smallest two-sided ideal containing ``a`` (breadth-first closure)."""
    t = M.table
    seen = {a}
    queue = deque([a])
    while queue:
        m = queue.popleft()
        for x in M.elements:
            for y in (t[x][m], t[m][x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return Ideal(a, frozenset(seen))


def rho_matrix(M: Magma, workers: int = 1) -> tuple[tuple[bool, ...], ...]:
    """rho[a][b] is true iff some power of ``a`` lies in the ideal of ``b``.

    Ideals and power orbits are computed once per element.
    """
    elements = list(M.elements)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            ideals = list(pool.map(lambda a: principal_ideal(M, a).members, elements))
            powers = list(pool.map(lambda a: power_orbit(M, a).members, elements))
    else:
        ideals = [principal_ideal(M, a).members for a in elements]
        powers = [power_orbit(M, a).members for a in elements]
    return tuple(
        tuple(not powers[a].isdisjoint(ideals[b]) for b in elements) for a in elements
    )


def rho(M: Magma, a: int, b: int) -> bool:
    return not power_orbit(M, a).members.isdisjoint(principal_ideal(M, b).members)


@dataclass(frozen=True)
class Partition:
    """Classes are numbered 0..k-1 in increasing order of their least member."""

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], order: int | None = None) -> "Partition":
        blocks = sorted((tuple(sorted(set(c))) for c in classes), key=lambda c: c[0] if c else -1)
        if any(not c for c in blocks):
            raise InputError("partition classes must be nonempty")
        n = sum(len(c) for c in blocks) if order is None else order
        class_of = [-1] * n
        for k, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < n or class_of[x] != -1:
                    raise InputError(f"element {x} is out of range or in two classes")
                class_of[x] = k
        if -1 in class_of:
            raise InputError(f"element {class_of.index(-1)} is in no class")
        return cls(tuple(class_of), tuple(blocks))

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        """Group elements by equal label."""
        groups: dict = {}
        for x, lab in enumerate(labels):
            groups.setdefault(lab, []).append(x)
        return cls.from_classes(groups.values(), len(labels))

    @classmethod
    def identity(cls, order: int) -> "Partition":
        return cls.from_classes([[x] for x in range(order)], order)

    @classmethod
    def universal(cls, order: int) -> "Partition":
        return cls.from_classes([range(order)], order)

    @property
    def order(self) -> int:
        return len(self.class_of)

    def __len__(self):
        return len(self.classes)


def _sigma_labels(rho_m) -> tuple[list[int], tuple[int, int, int] | None]:
    """Label each element by the least element it is sigma-related to.

    Also returns the first transitivity failure of sigma in (a, b, c) scan
    order, or None.
    """
    n = len(rho_m)
    sig = [[rho_m[a][b] and rho_m[b][a] for b in range(n)] for a in range(n)]
    witness = None
    for a, b in itertools.product(range(n), repeat=2):
        if not sig[a][b] or a == b:
            continue
        for c in range(n):
            if sig[b][c] and not sig[a][c]:
                witness = (a, b, c)
                break
        if witness:
            break
    labels = [min(b for b in range(n) if sig[a][b]) for a in range(n)]
    return labels, witness


def sigma_partition(M: Magma, workers: int = 1) -> Partition:
    """Classes of mutual divisibility; raises if sigma is not transitive."""
    labels, witness = _sigma_labels(rho_matrix(M, workers))
    if witness is not None:
        raise NotAnEquivalence(witness)
    return Partition.from_labels(labels)


def _closure_partition(rho_m) -> Partition:
    """Partition generated by sigma (its transitive closure)."""
    n = len(rho_m)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in itertools.product(range(n), repeat=2):
        if rho_m[a][b] and rho_m[b][a]:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return Partition.from_labels([find(x) for x in range(n)])


@dataclass(frozen=True)
class CongruenceReport:
    """``violation`` is (c, a, b): a, b share a class but c*a, c*b (or a*c,
    b*c when ``side`` is "right") do not.  For a failed equivalence it is
    the transitivity witness instead."""

    is_equivalence: bool
    is_congruence: bool
    violation: tuple[int, int, int] | None = None
    side: str | None = None


def verify_congruence(M: Magma, P: Partition) -> CongruenceReport:
    if P.order != M.order:
        raise InputError(f"partition covers {P.order} elements, magma has {M.order}")
    t, cls = M.table, P.class_of
    for block in P.classes:
        for a, b in itertools.combinations(block, 2):
            for c in M.elements:
                if cls[t[c][a]] != cls[t[c][b]]:
                    return CongruenceReport(True, False, (c, a, b), "left")
                if cls[t[a][c]] != cls[t[b][c]]:
                    return CongruenceReport(True, False, (c, a, b), "right")
    return CongruenceReport(True, True)


def quotient(M: Magma, P: Partition) -> Magma:
    """Magma on class indices with [a][b] = [ab]."""
    k = len(P.classes)
    rows = [[-1] * k for _ in range(k)]
    cls = P.class_of
    for a, b in itertools.product(M.elements, repeat=2):
        i, j, v = cls[a], cls[b], cls[M.table[a][b]]
        if rows[i][j] == -1:
            rows[i][j] = v
        elif rows[i][j] != v:
            raise NotACongruence((a, b, v))
    return Magma.from_rows(rows)


@dataclass(frozen=True)
class SemilatticeOrder:
    """``leq[a][b]`` iff a*b == a."""

    leq: tuple[tuple[bool, ...], ...]
    meet: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.leq)

    def pairs(self) -> list[tuple[int, int]]:
        n = self.order
        return [(a, b) for a in range(n) for b in range(n) if self.leq[a][b]]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (lower, upper), sorted."""
        n = self.order
        edges = []
        for a, b in itertools.product(range(n), repeat=2):
            if a == b or not self.leq[a][b]:
                continue
            if not any(c not in (a, b) and self.leq[a][c] and self.leq[c][b] for c in range(n)):
                edges.append((a, b))
        return edges


def natural_order(M: Magma) -> SemilatticeOrder:
    """Order a <= b iff ab = a, verified to be a partial order with ab the meet."""
    t, n = M.table, M.order
    for a in M.elements:
        if t[a][a] != a:
            raise NotIdempotent(a)
    comm = check_identity(M, IdentityKind.COMMUTATIVE)
    if not comm.holds:
        raise NotCommutative(*comm.counterexample)
    leq = tuple(tuple(t[a][b] == a for b in range(n)) for a in range(n))
    for a, b in itertools.product(range(n), repeat=2):
        if a != b and leq[a][b] and leq[b][a]:
            raise OrderAxiomFailure("antisymmetry", (a, b))
    for a, b, c in itertools.product(range(n), repeat=3):
        if leq[a][b] and leq[b][c] and not leq[a][c]:
            raise OrderAxiomFailure("transitivity", (a, b, c))
    for a, b in itertools.product(range(n), repeat=2):
        m = t[a][b]
        if not (leq[m][a] and leq[m][b]):
            raise OrderAxiomFailure("lower bound", (a, b))
        for x in range(n):
            if leq[x][a] and leq[x][b] and not leq[x][m]:
                raise OrderAxiomFailure("greatest lower bound", (a, b, x))
    return SemilatticeOrder(leq, t)


def is_semilattice(M: Magma) -> bool:
    return all(
        check_identity(M, kind).holds
        for kind in (IdentityKind.COMMUTATIVE, IdentityKind.IDEMPOTENT, IdentityKind.ASSOCIATIVE)
    )


def is_archimedean(M: Magma) -> bool:
    return len(sigma_partition(M)) == 1


@dataclass(frozen=True)
class Component:
    members: tuple[int, ...]
    magma: Magma | None  # None when the class is not closed
    idempotents: tuple[int, ...]
    archimedean: bool


@dataclass(frozen=True)
class Flags:
    input_commutative: bool
    input_moufang: bool
    sigma_is_congruence: bool
    quotient_is_semilattice: bool
    components_archimedean: bool

    def all(self) -> bool:
        return all(vars(self).values())

    def structural(self) -> bool:
        """The three flags that do not restate the input hypotheses."""
        return self.sigma_is_congruence and self.quotient_is_semilattice and self.components_archimedean


@dataclass(frozen=True)
class Decomposition:
    sigma: Partition
    quotient: Magma | None
    components: tuple[Component, ...]
    certified: Flags
    congruence: CongruenceReport
    hypotheses: tuple[IdentityReport, ...] = field(default=())


def decompose(M: Magma, require_hypotheses: bool = True, workers: int = 1) -> Decomposition:
    """Split ``M`` into a semilattice of Archimedean components.

    With ``require_hypotheses`` the input must be commutative and
    central-Moufang, else :class:`HypothesisViolation` is raised.  Without
    it the same pipeline runs on anything and the flags record which steps
    actually hold; when sigma is not transitive its transitive closure is
    used as the partition and ``sigma_is_congruence`` is false.
    """
    comm = check_identity(M, IdentityKind.COMMUTATIVE)
    mouf = check_identity(M, IdentityKind.CENTRAL_MOUFANG)
    if require_hypotheses:
        for report in (comm, mouf):
            if not report.holds:
                raise HypothesisViolation(report)

    rho_m = rho_matrix(M, workers)
    labels, witness = _sigma_labels(rho_m)
    if witness is None:
        sigma = Partition.from_labels(labels)
        cong = verify_congruence(M, sigma)
    else:
        sigma = _closure_partition(rho_m)
        cong = CongruenceReport(False, False, witness)

    quot = quotient(M, sigma) if cong.is_congruence else None
    quot_ok = quot is not None and is_semilattice(quot)

    components = []
    for block in sigma.classes:
        idem = tuple(a for a in block if M.table[a][a] == a)
        try:
            sub, _ = submagma(M, block)
        except NotClosed:
            components.append(Component(block, None, idem, False))
            continue
        try:
            arch = is_archimedean(sub)
        except NotAnEquivalence:
            arch = False
        components.append(Component(block, sub, idem, arch))

    flags = Flags(
        input_commutative=comm.holds,
        input_moufang=mouf.holds,
        sigma_is_congruence=cong.is_congruence,
        quotient_is_semilattice=quot_ok,
        components_archimedean=all(c.archimedean for c in components),
    )
    return Decomposition(sigma, quot, tuple(components), flags, cong, (comm, mouf))

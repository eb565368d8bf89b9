"""Exhaustive enumeration of small magmas satisfying chosen identities."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .caps import get_cap
from .decomp import decompose, is_archimedean
from .errors import CapExceeded, InputError, NotAnEquivalence
from .magma import _IDENTITIES, IdentityKind, Magma, check_identity, make_magma

C = IdentityKind


@dataclass(frozen=True)
class EnumerationTask:
    order: int
    constraints: frozenset[IdentityKind]
    iso_reduce: bool = False
    limit: int | None = None

    def __post_init__(self):
        if self.order < 1:
            raise InputError("order must be at least 1")
        if not self.constraints:
            raise InputError("at least one constraint is required")
        object.__setattr__(self, "constraints", frozenset(self.constraints))


# -- canonical forms ---------------------------------------------------------


def relabel(entries: tuple[int, ...], n: int, perm: tuple[int, ...]) -> tuple[int, ...]:
    """Table of the isomorphic copy where element i is renamed perm[i]."""
    out = [0] * (n * n)
    for i in range(n):
        pi = perm[i] * n
        for j in range(n):
            out[pi + perm[j]] = perm[entries[i * n + j]]
    return tuple(out)


def canonical_form(M: Magma, cap: int | None = None) -> tuple[int, ...]:
    """Lexicographically least row-major table over all relabelings."""
    cap = get_cap("canonical") if cap is None else cap
    if M.order > cap:
        raise CapExceeded("canonical-form order", M.order, cap)
    entries = M.entries()
    n = M.order
    return min(relabel(entries, n, perm) for perm in itertools.permutations(range(n)))


# -- backtracking search -----------------------------------------------------


def _free_cells(n: int, constraints: frozenset) -> list[tuple[int, int]]:
    comm = C.COMMUTATIVE in constraints
    idem = C.IDEMPOTENT in constraints
    return [
        (i, j)
        for i in range(n)
        for j in range(i if comm else 0, n)
        if not (idem and i == j)
    ]


def _search(n: int, constraints: frozenset, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield row-major tables in lexicographic order.

    The working table has an extra row and column of -1, so an undetermined
    cell (-1) propagates through the identity evaluators as -1 and an
    instance is only tested once both of its sides are determined.
    """
    comm = C.COMMUTATIVE in constraints
    table = [[-1] * (n + 1) for _ in range(n + 1)]
    if C.IDEMPOTENT in constraints:
        for i in range(n):
            table[i][i] = i
    cells = _free_cells(n, constraints)
    checks = [
        (_IDENTITIES[k][1], list(itertools.product(range(n), repeat=k.arity)))
        for k in sorted(constraints, key=lambda k: k.value)
        if k not in (C.COMMUTATIVE, C.IDEMPOTENT)
    ]

    def consistent() -> bool:
        for evaluate, tuples in checks:
            for args in tuples:
                lhs, rhs = evaluate(table, *args)
                if lhs != rhs and lhs >= 0 and rhs >= 0:
                    return False
        return True

    def assign(i, j, v):
        table[i][j] = v
        if comm:
            table[j][i] = v

    def go(depth):
        if depth == len(cells):
            entries = tuple(table[i][j] for i in range(n) for j in range(n))
            M = make_magma(n, entries)
            if all(check_identity(M, k).holds for k in constraints):
                yield entries
            return
        i, j = cells[depth]
        values = range(n) if depth or first is None else (first,)
        for v in values:
            assign(i, j, v)
            if consistent():
                yield from go(depth + 1)
        assign(i, j, -1)

    yield from go(0)


def _collect(n: int, names: tuple[str, ...], first: int) -> list[tuple[int, ...]]:
    return list(_search(n, frozenset(IdentityKind(k) for k in names), first))


def enumerate_magmas(task: EnumerationTask, cap: int | None = None, workers: int = 1) -> Iterator[Magma]:
    """Yield every table of the given order satisfying all constraints.

    Output is in lexicographic order of the row-major table.  With
    ``iso_reduce`` only canonical tables are yielded, one per isomorphism
    class.  With ``workers > 1`` the search tree is split by the value of
    the first free cell and searched in separate processes.
    """
    cap = get_cap("enumerate") if cap is None else cap
    if task.order > cap:
        raise CapExceeded("enumeration order", task.order, cap)
    n = task.order
    if task.iso_reduce:
        canonical_form(make_magma(n, [0] * (n * n)))  # fail early on the canonical cap

    if workers > 1 and _free_cells(n, task.constraints):
        names = tuple(sorted(k.value for k in task.constraints))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_collect, [n] * n, [names] * n, range(n))
            tables: Iterable = sorted(itertools.chain.from_iterable(parts))
    else:
        tables = _search(n, task.constraints)

    count = 0
    for entries in tables:
        if task.limit is not None and count >= task.limit:
            return
        M = make_magma(n, entries)
        if task.iso_reduce and canonical_form(M) != entries:
            continue
        count += 1
        yield M


def naive_enumerate(order: int, constraints: Iterable[IdentityKind]) -> list[Magma]:
    """Generate-then-filter oracle with no pruning.

    Candidates are all tables, or all symmetric tables when commutativity
    is required.
    """
    constraints = frozenset(constraints)
    n = order
    upper = [(i, j) for i in range(n) for j in range(i, n)]
    found = []
    if C.COMMUTATIVE in constraints:
        candidates = (
            _symmetric(n, upper, values)
            for values in itertools.product(range(n), repeat=len(upper))
        )
    else:
        candidates = itertools.product(range(n), repeat=n * n)
    for entries in candidates:
        M = make_magma(n, entries)
        if all(check_identity(M, k).holds for k in constraints):
            found.append(M)
    return found


def _symmetric(n, upper, values):
    out = [0] * (n * n)
    for (i, j), v in zip(upper, values):
        out[i * n + j] = v
        out[j * n + i] = v
    return out


# -- open-problem probes -----------------------------------------------------


def _idempotent_count(M: Magma) -> int:
    return len(M.idempotents())


def _multi_idempotent_archimedean(M: Magma) -> bool:
    try:
        return is_archimedean(M) and _idempotent_count(M) >= 2
    except NotAnEquivalence:
        return False


def _decomposition_fails(M: Magma) -> bool:
    return not decompose(M, require_hypotheses=False).certified.structural()


# name -> (identities a candidate must satisfy, predicate on the candidate)
PREDICATES: dict[str, tuple[frozenset, Callable[[Magma], bool]]] = {
    "archimedean-multi-idempotent": (frozenset(), _multi_idempotent_archimedean),
    "decomposition-fails-left-moufang": (
        frozenset({C.COMMUTATIVE, C.LEFT_MOUFANG}), _decomposition_fails),
    "decomposition-fails-right-moufang": (
        frozenset({C.COMMUTATIVE, C.RIGHT_MOUFANG}), _decomposition_fails),
    "decomposition-fails-noncommutative": (
        frozenset({C.CENTRAL_MOUFANG}), _decomposition_fails),
}


@dataclass(frozen=True)
class SearchResult:
    predicate: str
    magma: Magma | None
    examined: int

    @property
    def found(self) -> bool:
        return self.magma is not None


def search(task: EnumerationTask, predicate: str, cap: int | None = None) -> SearchResult:
    """Return the first enumerated magma satisfying a named predicate.

    The identities the predicate is about are added to the task's
    constraints.  The decomposition predicates only look at the structural
    flags (congruence, semilattice quotient, Archimedean components), since
    the hypothesis flags fail by construction on these inputs.
    """
    if predicate not in PREDICATES:
        raise InputError(f"unknown predicate {predicate!r}; expected one of {sorted(PREDICATES)}")
    required, test = PREDICATES[predicate]
    task = EnumerationTask(task.order, task.constraints | required, task.iso_reduce, task.limit)
    examined = 0
    for M in enumerate_magmas(task, cap=cap):
        examined += 1
        if test(M):
            return SearchResult(predicate, M, examined)
    return SearchResult(predicate, None, examined)

"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that is printed in the terminal
summary (see conftest.py).
"""

import contextlib
import itertools
import subprocess
import sys
import time
from pathlib import Path

import pytest

from moufang.decomp import (
    Partition,
    decompose,
    is_archimedean,
    is_semilattice,
    natural_order,
    quotient,
    sigma_partition,
    verify_congruence,
)
from moufang.enumerator import EnumerationTask, canonical_form, enumerate_magmas, naive_enumerate
from moufang.errors import HypothesisViolation
from moufang.generators import cyclic_group, jordan_left_zero, radical, weight, witness_t
from moufang.magma import (
    IdentityKind,
    Magma,
    bracketings_agree,
    check_identity,
    corollary4_check,
    lemma3_check,
    lemma5_check,
    power,
    submagma,
)
from moufang.tablefile import read_table, write_table

from conftest import CM, cm_corpus

RESULTS: dict[str, str] = {}


@contextlib.contextmanager
def criterion(name):
    try:
        yield
    except BaseException as exc:
        RESULTS[name] = f"FAIL  {name}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        raise
    RESULTS[name] = f"PASS  {name}"


DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="module")
def corpus():
    """(label, magma) pairs: the order <= 3 enumeration plus three Jordan groupoids."""
    ms = [(f"enumerated order {M.order} {M.entries()}", M) for M in cm_corpus(3)]
    ms += [(f"jordan({p},{m})", jordan_left_zero(p, m)[0]) for p, m in ((3, 1), (3, 2), (5, 1))]
    return ms


def test_ac1_jordan_decomposition():
    with criterion("AC1 jordan(3,2) -> {3,6}, jordan(5,2) -> {5,20}, 2-chain quotient, all flags"):
        for p, sizes in ((3, [3, 6]), (5, [5, 20])):
            M, enc = jordan_left_zero(p, 2)
            start = time.perf_counter()
            d = decompose(M)
            elapsed = time.perf_counter() - start
            assert sorted(len(c.members) for c in d.components) == sizes
            assert set(d.components[0].members) == radical(enc)
            assert d.quotient.table == ((0, 0), (0, 1))
            assert d.certified.all(), d.certified
            assert elapsed < 1.0


def _decomposition_violations(M):
    found = []
    P = sigma_partition(M)
    cong = verify_congruence(M, P)
    if not cong.is_congruence:
        found.append(("congruence", cong.violation))
        return found
    if not is_semilattice(quotient(M, P)):
        found.append(("quotient", None))
    for block in P.classes:
        sub, _ = submagma(M, block)
        if not is_archimedean(sub):
            found.append(("archimedean", block))
    return found


def test_ac2_decomposition_suite(corpus):
    with criterion("AC2 sigma congruence, semilattice quotient, Archimedean components"):
        start = time.perf_counter()
        violations = [(label, v) for label, M in corpus for v in _decomposition_violations(M)]
        assert violations == []
        assert time.perf_counter() - start < 60


def _lemma_violations(M):
    found = []
    elems = list(M.elements)
    for a in elems:
        if not bracketings_agree(M, a, 6).holds:
            found.append(("brackets", a))
    for a, b in itertools.product(elems, repeat=2):
        if not lemma3_check(M, a, b, 3):
            found.append(("lemma3", a, b))
        if not lemma5_check(M, a, b, 3):
            found.append(("lemma5", a, b))
    for k in (1, 2, 3):
        for word in itertools.product(elems, repeat=k):
            for a in elems:
                if not corollary4_check(M, word, a, 3):
                    found.append(("corollary4", word, a))
    cls = sigma_partition(M).class_of
    found.extend(("square", a) for a in elems if cls[a] != cls[M(a, a)])
    return found


def test_ac3_lemma_suites(corpus):
    with criterion("AC3 power associativity, translation identities, a ~ a^2"):
        bad = {}
        for label, M in corpus:
            v = _lemma_violations(M)
            if v:
                bad[label] = f"{len(v)} violations, first {v[0]}"
        assert bad == {}


def test_ac4_idempotent_semilattices():
    with criterion("AC4 idempotent commutative Moufang magmas of order <= 4 are semilattices"):
        checked = 0
        for M in cm_corpus(4):
            if not check_identity(M, IdentityKind.IDEMPOTENT).holds:
                continue
            checked += 1
            assert is_semilattice(M)
            order = natural_order(M)  # raises on any axiom failure
            for a, b in itertools.product(M.elements, repeat=2):
                m = M(a, b)
                lower = [x for x in M.elements if order.leq[x][a] and order.leq[x][b]]
                assert m in lower and all(order.leq[x][m] for x in lower)
        assert checked > 0


def test_ac5_oracle_equivalence():
    with criterion("AC5 pruned enumeration equals naive filter; iso classes"):
        for n in (2, 3):
            pruned = [M.entries() for M in enumerate_magmas(EnumerationTask(n, CM))]
            naive = sorted(M.entries() for M in naive_enumerate(n, CM))
            assert pruned == naive
            if n == 2:
                assert len(pruned) == 6
            reduced = [M.entries() for M in enumerate_magmas(EnumerationTask(n, CM, iso_reduce=True))]
            assert sorted(reduced) == sorted({canonical_form(Magma(n, _rows(t, n))) for t in naive})
            assert len(reduced) == len(set(reduced))


def _rows(entries, n):
    return tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))


def test_ac6_jordan_closed_forms():
    with criterion("AC6 weight multiplicative, x^n = |x|^(n-1) x, x*t = y"):
        for p in (3, 5):
            M, enc = jordan_left_zero(p, 2)
            for x, y in itertools.product(M.elements, repeat=2):
                assert weight(enc, M(x, y)) == weight(enc, x) * weight(enc, y) % p
            for x in M.elements:
                w, v = weight(enc, x), enc.to_vector(x)
                for n in range(1, 11):
                    assert power(M, x, n) == enc.from_vector([pow(w, n - 1, p) * c for c in v])
            rad = radical(enc)
            outside = [x for x in M.elements if x not in rad]
            for x, y in itertools.product(outside, repeat=2):
                assert M(x, witness_t(enc, x, y)) == y


def _run_decompose(path, out_dir, workers, tag, force):
    json_out, dot_out = out_dir / f"{tag}.json", out_dir / f"{tag}.dot"
    cmd = [sys.executable, "-m", "moufang", "decompose", str(path),
           "--json", str(json_out), "--dot", str(dot_out), "--workers", str(workers)]
    if force:
        cmd.append("--force")
    subprocess.run(cmd, check=True)
    return json_out.read_bytes(), dot_out.read_bytes()


def test_ac7_determinism(tmp_path):
    with criterion("AC7 decompose JSON/DOT byte-identical across runs and workers"):
        jordan = tmp_path / "jordan32.txt"
        write_table(jordan, jordan_left_zero(3, 2)[0])
        fixture = DATA / "order3.txt"
        assert read_table(fixture) in list(enumerate_magmas(EnumerationTask(3, CM)))
        fixtures = [(jordan, True), (fixture, False)]
        for path, force in fixtures:
            runs = [
                _run_decompose(path, tmp_path, w, f"{k}-{w}", force)
                for k in range(2) for w in (1, 4)
            ]
            assert all(r == runs[0] for r in runs)


def test_ac8_negative_paths():
    with criterion("AC8 non-Moufang witness (0,0,0), bracketing failure, Z3 congruence witness"):
        bad = Magma.from_rows([[1, 1], [1, 0]])
        with pytest.raises(HypothesisViolation) as exc:
            decompose(bad)
        assert exc.value.report.kind is IdentityKind.CENTRAL_MOUFANG
        assert exc.value.report.counterexample == (0, 0, 0)
        r = bracketings_agree(bad, 0, 4)
        assert not r.holds and r.length == 4
        report = verify_congruence(cyclic_group(3), Partition.from_classes([[0, 1], [2]]))
        assert not report.is_congruence and report.violation == (1, 0, 1)

"""Deterministic JSON reports, DOT Hasse diagrams and the lemma suite."""

from __future__ import annotations

import hashlib
import itertools
import json

from . import __version__
from .decomp import Decomposition, natural_order
from .magma import (
    IdentityReport,
    Magma,
    bracketings_agree,
    corollary4_check,
    lemma3_check,
    lemma5_check,
)
from .tablefile import format_table

SCHEMA_VERSION = 1


def digest(M: Magma) -> str:
    return "sha256:" + hashlib.sha256(format_table(M).encode()).hexdigest()


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def base_report(M: Magma) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "input_digest": digest(M),
        "order": M.order,
    }


def identity_json(reports) -> dict:
    return {
        r.kind.value: {
            "holds": r.holds,
            "counterexample": list(r.counterexample) if r.counterexample else None,
        }
        for r in reports
    }


def decomposition_json(d: Decomposition) -> dict:
    return {
        "sigma_classes": [list(c) for c in d.sigma.classes],
        "component_sizes": [len(c.members) for c in d.components],
        "components": [
            {
                "index": k,
                "members": list(c.members),
                "size": len(c.members),
                "min": c.members[0],
                "idempotents": list(c.idempotents),
                "closed": c.magma is not None,
                "archimedean": c.archimedean,
            }
            for k, c in enumerate(d.components)
        ],
        "quotient": [list(r) for r in d.quotient.table] if d.quotient else None,
        "congruence": {
            "is_equivalence": d.congruence.is_equivalence,
            "is_congruence": d.congruence.is_congruence,
            "violation": list(d.congruence.violation) if d.congruence.violation else None,
            "side": d.congruence.side,
        },
        "flags": dict(vars(d.certified)),
    }


def decomposition_report(M: Magma, d: Decomposition, explorative: bool) -> dict:
    report = base_report(M)
    report["identities"] = identity_json(d.hypotheses)
    report["decomposition"] = decomposition_json(d)
    report["explorative"] = explorative
    return report


def hasse_dot(d: Decomposition) -> str:
    """Hasse diagram of the quotient's natural order, bottom to top."""
    lines = ["digraph quotient {", "  rankdir=BT;", "  node [shape=box];"]
    for k, c in enumerate(d.components):
        lines.append(f'  C{k} [label="C{k} (size {len(c.members)}, min {c.members[0]})"];')
    edges = []
    if d.quotient is not None and d.certified.quotient_is_semilattice:
        edges = natural_order(d.quotient).covers()
    else:
        lines.append("  // quotient is not a semilattice: no order edges")
    for lo, hi in edges:
        lines.append(f"  C{lo} -> C{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- lemma suite -------------------------------------------------------------


def _result(checked: int, failures: list) -> dict:
    return {
        "passed": not failures,
        "checked": checked,
        "violations": len(failures),
        "first_violation": failures[0] if failures else None,
    }


def property_suite(M: Magma, d: Decomposition, nmax: int = 3, max_word: int = 3,
                   max_bracket: int = 6) -> dict:
    """Run every finite consequence of the decomposition theory on ``M``.

    Each entry reports how many instances were checked, how many failed
    and the first failure in scan order.
    """
    elems = list(M.elements)
    pairs = list(itertools.product(elems, repeat=2))
    out = {}

    fails = []
    for a in elems:
        r = bracketings_agree(M, a, max_bracket)
        if not r.holds:
            fails.append({"element": a, "length": r.length, "term": r.term,
                          "value": r.value, "expected": r.expected})
    out["power_associative"] = _result(len(elems), fails)

    out["lemma3"] = _result(len(pairs), [[a, b] for a, b in pairs if not lemma3_check(M, a, b, nmax)])
    out["lemma5"] = _result(len(pairs), [[a, b] for a, b in pairs if not lemma5_check(M, a, b, max(nmax, 1))])

    fails, checked = [], 0
    for k in range(1, max_word + 1):
        for word in itertools.product(elems, repeat=k):
            for a in elems:
                checked += 1
                if not corollary4_check(M, word, a, nmax):
                    fails.append({"word": list(word), "element": a})
    out["corollary4"] = _result(checked, fails)

    cls = d.sigma.class_of
    out["square_in_class"] = _result(
        len(elems), [a for a in elems if cls[a] != cls[M.table[a][a]]])

    flags = d.certified
    for name in ("sigma_is_congruence", "quotient_is_semilattice", "components_archimedean"):
        ok = getattr(flags, name)
        out[name] = {"passed": ok}
    return out


def suite_passed(suite: dict) -> bool:
    return all(v["passed"] for v in suite.values())


def props_report(M: Magma, d: Decomposition, suite: dict, nmax: int) -> dict:
    report = base_report(M)
    report["identities"] = identity_json(d.hypotheses)
    report["nmax"] = nmax
    report["properties"] = suite
    report["all_passed"] = suite_passed(suite)
    return report


def identities_report(M: Magma, reports: list[IdentityReport]) -> dict:
    report = base_report(M)
    report["identities"] = identity_json(reports)
    return report


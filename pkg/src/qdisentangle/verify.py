"""Verification suites: golden formulas, q-series identities and the matrix oracle.

Every suite returns a list of entries
``{"suite", "check", "range", "verdict", "note"}`` in a fixed order.  Verdicts
are ``pass``, ``fail``, ``expected-fail`` or ``info`` (statistics only).
Nothing time-dependent goes into a report, so reruns are byte-identical.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, List, Tuple

from .catalog import catalog_formula, intermediate_block
from .disentangle import (
    bch_terms,
    classical_limit,
    default_alphas,
    q_zassenhaus_terms,
    reconstruct,
    zassenhaus_terms,
)
from .freealgebra import A, B, expand_comm_expr, jackson_qexp_trunc, qplane_normal_form
from .matrixoracle import eval_ncpoly, factorization_check, qplane_pair, random_pair
from .qseries import verify_appendix

__all__ = ["SUITES", "run_suites", "suite_passed", "render_report", "sample_schedules"]

SUITES = ("golden", "appendix", "matrix")
GRID = (1, 2, 3)
QVALS = (Fraction(1, 2), Fraction(5, 3), Fraction(2))
RECONSTRUCTION_DEGREE = 8
CATALOG_ORDER = 6


def _entry(suite, check, rng, ok, note=""):
    verdict = ok if isinstance(ok, str) else ("pass" if ok else "fail")
    return {"suite": suite, "check": check, "range": rng, "verdict": verdict, "note": note}


def _tail(n, kind):
    # base exponents alpha_4..alpha_n
    return tuple(i if kind == "index" else kind for i in range(4, n + 1))


TAILS = ("index", 1, 2, -1)


def q_schedule(a, b, n, tail="index"):
    return (1, 1, a, b) + _tail(n, tail)


def sample_schedules(n: int, seed: int, extra: int = 3) -> List[Tuple[int, ...]]:
    """Grid schedules with tails alpha_i = i and alpha_i = 1, plus seeded irregular ones."""
    out = [q_schedule(a, b, n, t) for a in GRID for b in GRID for t in ("index", 1)]
    rng = random.Random(seed)
    for _ in range(extra):
        out.append(tuple(rng.randint(-2, 4) for _ in range(n + 1)))
    return out


def _catalog_q(i, a, b):
    params = {4: {"a": a}, 6: {"a": a, "b": b}}.get(i, {})
    return expand_comm_expr(catalog_formula(f"qC{i}", **params))


def _mismatches(got, want):
    return [k for k in sorted(want) if got.get(k) != want[k]]


def golden_suite(order: int, seed: int) -> List[dict]:
    s = "golden"
    report = []
    top = min(order, CATALOG_ORDER)

    bch = bch_terms(top).terms
    bad = _mismatches(bch, {i: expand_comm_expr(catalog_formula(f"Z{i}")) for i in range(2, top + 1)})
    report.append(_entry(s, "bch-terms", f"2<=i<={top}", not bad and bch[1] == A + B,
                         f"mismatch at i = {bad}" if bad else ""))

    zas = zassenhaus_terms(top).terms
    classical = {i: expand_comm_expr(catalog_formula(f"C{i}")) for i in range(2, top + 1)}
    bad = _mismatches(zas, classical)
    report.append(_entry(s, "zassenhaus-terms", f"2<=i<={top}", not bad and zas[1] == B,
                         f"mismatch at i = {bad}" if bad else ""))

    bad = []
    c5 = set()
    for a in GRID:
        for b in GRID:
            want = {i: _catalog_q(i, a, b) for i in range(2, top + 1)}
            for tail in TAILS:
                got = q_zassenhaus_terms(top, q_schedule(a, b, top, tail)).terms
                if got[1] != B:
                    bad.append((a, b, tail, 1))
                bad += [(a, b, tail, i) for i in _mismatches(got, want)]
                if top >= 5:
                    c5.add(got[5])
    report.append(_entry(s, "q-zassenhaus-terms", f"2<=i<={top}, a,b in 1..3, tails {list(TAILS)}",
                         not bad, f"mismatch (a, b, tail, i): {bad}" if bad else ""))
    if top >= 5:
        report.append(_entry(s, "q-zassenhaus-c5-independent", "a,b in 1..3", len(c5) == 1,
                             f"{len(c5)} distinct C_5 over the grid"))

    pairs = [("qC4_SJ", ("qC4", {"a": 2})), ("qC6_SJ", ("qC6", {"a": 2, "b": 3})),
             ("qC4_K", ("qC4", {"a": 1})), ("qC6_K", ("qC6", {"a": 1, "b": 1}))]
    bad = [sp for sp, (gen, kw) in pairs
           if expand_comm_expr(catalog_formula(sp)) != expand_comm_expr(catalog_formula(gen, **kw))]
    report.append(_entry(s, "specializations", "(a, b) = (2, 3) and (1, 1)", not bad,
                         f"mismatch: {bad}" if bad else ""))

    inter = q_zassenhaus_terms(3, (1, 1, 2, 3), intermediates=True).intermediates
    bad = [k for k, v in sorted(intermediate_block().items()) if inter.get(k) != v]
    report.append(_entry(s, "residual-components", "order 3, alpha_0 = alpha_1 = 1", not bad,
                         f"mismatch at (j, k): {bad}" if bad else ""))

    schedules = [default_alphas(top), (1,) * (top + 1)]
    bad = []
    for sched in schedules:
        got = q_zassenhaus_terms(top, sched).terms
        bad += [(sched, i) for i in range(2, top + 1) if classical_limit(got[i]) != zas[i]]
    report.append(_entry(s, "classical-limit", f"2<=i<={top}, schedules 1,1,2,3.. and all ones",
                         not bad, f"mismatch: {bad}" if bad else ""))

    got = q_zassenhaus_terms(top).terms
    impure = [i for i in range(2, top + 1)
              if any(w in got[i].terms for w in ("A" * i, "B" * i))]
    report.append(_entry(s, "purity", f"2<=i<={top}", not impure,
                         f"pure powers in C_i for i = {impure}" if impure else ""))
    bad = [i for i in range(2, top + 1) if qplane_normal_form(got[i])]
    report.append(_entry(s, "q-plane-collapse", f"2<=i<={top}", not bad,
                         f"nonzero normal form for i = {bad}" if bad else ""))

    deg = max(order, RECONSTRUCTION_DEGREE)
    target = jackson_qexp_trunc(A + B, 1, deg)
    bad = [sched for sched in sample_schedules(deg, seed)
           if reconstruct(q_zassenhaus_terms(deg, sched)) != target]
    report.append(_entry(s, "reconstruction", f"degree {deg}, {len(sample_schedules(deg, seed))} schedules "
                         f"(seed {seed})", not bad, f"failing schedules: {bad}" if bad else ""))

    for i, c in q_zassenhaus_terms(order).terms.items():
        nums = [f.degrees()[0] for f in c.terms.values()]
        dens = [f.degrees()[1] for f in c.terms.values()]
        if i >= 2:
            report.append(_entry(s, "q-degree-stats", f"C_{i}, schedule 1,1,2,3..", "info",
                                 f"{len(c)} words, max numerator degree {max(nums)}, "
                                 f"max denominator degree {max(dens)}"))
    return report


def appendix_suite(order: int, seed: int) -> List[dict]:
    n = max(order, 12)
    return [_entry("appendix", e["identity"], e["range"], e["verdict"], e["note"])
            for e in verify_appendix(n, 12)]


def matrix_suite(order: int, seed: int) -> List[dict]:
    s = "matrix"
    report = []
    seeds = (seed, seed + 1, seed + 2)
    for dim in range(2, order + 2):
        n = dim - 1
        for name, sched in (("1,1,2,3..", default_alphas(n)), ("all ones", (1,) * (n + 1))):
            terms = q_zassenhaus_terms(n, sched).terms
            for sd in seeds:
                for e in factorization_check(n, dim, sd, sched, QVALS, terms=terms):
                    report.append(_entry(s, "factorization", f"dim={dim}, N={n}, seed={sd}, "
                                         f"q={e['q']}, schedule {name}", e["verdict"]))

    top = min(order, CATALOG_ORDER)
    got = q_zassenhaus_terms(top).terms
    bad = []
    for q0 in QVALS:
        ma, mb = qplane_pair(top + 1, q0)
        bad += [(str(q0), i) for i in range(2, top + 1) if not eval_ncpoly(got[i], ma, mb, q0).is_zero()]
    report.append(_entry(s, "q-plane-images", f"2<=i<={top}, dim {top + 1}, q in 1/2, 5/3, 2",
                         not bad, f"nonzero image (q, i): {bad}" if bad else ""))

    bad = []
    for a in GRID:
        for b in GRID:
            got = q_zassenhaus_terms(top, q_schedule(a, b, top)).terms
            for sd in seeds:
                ma, mb = random_pair(top + 1, sd)
                for q0 in QVALS:
                    bad += [(a, b, sd, str(q0), i) for i in range(2, top + 1)
                            if eval_ncpoly(got[i], ma, mb, q0)
                            != eval_ncpoly(_catalog_q(i, a, b), ma, mb, q0)]
    report.append(_entry(s, "catalog-images", f"2<=i<={top}, a,b in 1..3, seeds {list(seeds)}",
                         not bad, f"mismatch (a, b, seed, q, i): {bad}" if bad else ""))
    return report


_RUNNERS = {"golden": golden_suite, "appendix": appendix_suite, "matrix": matrix_suite}


def run_suites(suite: str = "all", order: int = 6, seed: int = 1) -> List[dict]:
    if suite != "all" and suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}")
    if order < 2:
        raise ValueError("verify needs order >= 2")
    names = SUITES if suite == "all" else (suite,)
    report = []
    for name in names:
        report += _RUNNERS[name](order, seed)
    return report


def suite_passed(report: List[dict]) -> bool:
    return all(e["verdict"] in ("pass", "expected-fail", "info") for e in report)


def render_report(report: List[dict]) -> str:
    lines = []
    for e in report:
        line = f"[{e['verdict'].upper()}] {e['suite']}/{e['check']} ({e['range']})"
        if e["note"]:
            line += f": {e['note']}"
        lines.append(line)
    counts: Dict[str, int] = {}
    for e in report:
        counts[e["verdict"]] = counts.get(e["verdict"], 0) + 1
    lines.append("summary: " + ", ".join(f"{k} {counts[k]}" for k in sorted(counts)))
    return "\n".join(lines)

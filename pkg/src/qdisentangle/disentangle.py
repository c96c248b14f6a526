"""BCH terms, Zassenhaus terms and the q-Zassenhaus peeling procedure.

The q-Zassenhaus generator factorizes

    E_q(A + B) = E_{q^a0}(A) E_{q^a1}(C_1) E_{q^a2}(C_2) ...

by repeatedly dividing the residual factor G by the q-exponential of the
lowest homogeneous component of log G.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Optional, Sequence, Tuple

from .coeffield import limit_q1, QRationalFunction
from .freealgebra import (
    A,
    B,
    NCPolynomial,
    exp_trunc,
    homogeneous_part,
    inv_trunc,
    jackson_qexp_trunc,
    log_trunc,
    nc_mul,
)

__all__ = [
    "DisentangleResult",
    "bch_terms",
    "zassenhaus_terms",
    "q_zassenhaus_terms",
    "default_alphas",
    "reconstruct",
    "classical_limit",
]


@dataclass(frozen=True)
class DisentangleResult:
    """Generated terms keyed by order (``terms[i]`` is homogeneous of degree i)."""

    terms: Dict[int, NCPolynomial]
    order: int
    alphas: Optional[Tuple[int, ...]] = None
    intermediates: Dict[Tuple[int, int], NCPolynomial] = field(default_factory=dict)

    def to_json(self, label: str = "C") -> dict:
        meta = {"order": self.order, "alphas": list(self.alphas) if self.alphas else None}
        results = [{"name": f"{label}_{i}", **self.terms[i].to_json()} for i in sorted(self.terms)]
        return {"meta": meta, "results": results}


def default_alphas(n: int) -> Tuple[int, ...]:
    """1, 1, 2, 3, ..., n -- base exponents alpha_i = i beyond the first two."""
    return (1, 1) + tuple(range(2, n + 1))


def bch_terms(n: int) -> DisentangleResult:
    """Z_1..Z_n with exp(A) exp(B) = exp(Z_1 + Z_2 + ...)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    log = log_trunc(nc_mul(exp_trunc(A, n), exp_trunc(B, n), n), n)
    return DisentangleResult({i: homogeneous_part(log, i) for i in range(1, n + 1)}, n)


def _peel(n, residual, factor: Callable[[NCPolynomial, int], NCPolynomial], keep):
    terms = {}
    inter = {}
    g = residual
    for j in range(n):
        # G = 1 + (degree >= j+1), so log G agrees with G - 1 through degree
        # 2j+1; truncating at j+1 is exact for C_{j+1}
        if keep:
            log = log_trunc(g, n)
            for k in range(j + 1, n + 1):
                inter[(j, k)] = homogeneous_part(log, k)
        else:
            log = log_trunc(g, j + 1)
        c = homogeneous_part(log, j + 1).with_truncation(n)
        terms[j + 1] = c
        if j + 1 < n:
            g = nc_mul(inv_trunc(factor(c, j + 1), n), g, n)
    return terms, inter


def zassenhaus_terms(n: int) -> DisentangleResult:
    """C_1..C_n with exp(A + B) = exp(A) exp(C_1) exp(C_2) ..., C_1 = B."""
    if n < 1:
        raise ValueError("order must be >= 1")
    g = nc_mul(inv_trunc(exp_trunc(A, n), n), exp_trunc(A + B, n), n)
    terms, _ = _peel(n, g, lambda c, i: exp_trunc(c, n), keep=False)
    return DisentangleResult(terms, n)


@lru_cache(maxsize=64)
def _initial_residual(n: int, alpha0: int) -> NCPolynomial:
    return nc_mul(inv_trunc(jackson_qexp_trunc(A, alpha0, n), n),
                  jackson_qexp_trunc(A + B, 1, n), n)


def q_zassenhaus_terms(n: int, alphas: Optional[Sequence[int]] = None,
                       intermediates: bool = False) -> DisentangleResult:
    """C_1..C_n for the base exponents alpha_0..alpha_n.

    ``intermediates`` keeps every homogeneous component G^(j)_k of
    log G^(j), keyed by (j, k).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    alphas = tuple(default_alphas(n) if alphas is None else alphas)
    if len(alphas) < n + 1:
        raise ValueError(f"need {n + 1} base exponents for order {n}, got {len(alphas)}")
    if not all(isinstance(a, int) for a in alphas):
        raise TypeError("base exponents must be integers")
    g = _initial_residual(n, alphas[0])
    terms, inter = _peel(n, g, lambda c, i: jackson_qexp_trunc(c, alphas[i], n), intermediates)
    return DisentangleResult(terms, n, alphas[: n + 1], inter)


def reconstruct(result: DisentangleResult, n: Optional[int] = None) -> NCPolynomial:
    """E_{q^a0}(A) * prod_i E_{q^ai}(C_i), truncated at degree n."""
    n = result.order if n is None else n
    alphas = result.alphas
    prod = jackson_qexp_trunc(A, alphas[0], n)
    for i in sorted(result.terms):
        if i > n:
            break
        prod = nc_mul(prod, jackson_qexp_trunc(result.terms[i], alphas[i], n), n)
    return prod


def classical_limit(p: NCPolynomial) -> NCPolynomial:
    """Coefficient-wise q -> 1 limit."""
    return p.map_coefficients(lambda c: QRationalFunction.from_rational(limit_q1(c)))

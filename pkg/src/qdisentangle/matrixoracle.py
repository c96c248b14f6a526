"""Exact rational matrices as an independent check of the disentangling identities.

Strictly upper triangular matrices are nilpotent, so every q-exponential is a
finite sum and the factorization can be compared with plain equality.

Random matrices: ``random.Random(seed)`` fills the entries strictly above the
diagonal in row-major order with ``randint(-bound, bound)``.  The pair used by
``factorization_check`` takes A from seed ``2*seed`` and B from ``2*seed + 1``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence

from .coeffield import PoleError, eval_at, q_factorial
from .freealgebra import NCPolynomial

__all__ = [
    "RationalMatrix",
    "random_nilpotent",
    "random_pair",
    "mat_qexp",
    "eval_ncpoly",
    "factorization_check",
    "qplane_pair",
]


class RationalMatrix:
    """Square matrix with Fraction entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square and non-empty")
        self.rows = rows

    @classmethod
    def _raw(cls, rows) -> "RationalMatrix":
        # rows already tuples of Fractions
        m = cls.__new__(cls)
        m.rows = rows
        return m

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def zero(cls, dim: int) -> "RationalMatrix":
        return cls([[0] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(dim)] for i in range(dim)])

    @classmethod
    def unit(cls, dim: int, i: int, j: int) -> "RationalMatrix":
        """E_ij with 1-based indices."""
        return cls([[int((r, c) == (i - 1, j - 1)) for c in range(dim)] for r in range(dim)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"RationalMatrix([{body}])"

    def _check(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return RationalMatrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                         for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        return RationalMatrix._raw(tuple(tuple(-a for a in r) for r in self.rows))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix._raw(tuple(tuple(c * a for a in r) for r in self.rows))

    def __mul__(self, other):
        if not isinstance(other, RationalMatrix):
            return self.scale(other)
        self._check(other)
        cols = list(zip(*other.rows))
        zero = Fraction(0)
        return RationalMatrix._raw(tuple(tuple(sum((a * b for a, b in zip(r, c) if a and b), zero)
                                               for c in cols) for r in self.rows))

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = RationalMatrix.identity(self.dim)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_strictly_upper(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.dim) for j in range(i + 1))

    def is_nilpotent(self) -> bool:
        return (self ** self.dim).is_zero()


def random_nilpotent(dim: int, seed: int, bound: int = 3) -> RationalMatrix:
    if dim < 2:
        raise ValueError("dim must be >= 2")
    rng = random.Random(seed)
    rows = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            rows[i][j] = rng.randint(-bound, bound)
    return RationalMatrix(rows)


def random_pair(dim: int, seed: int, bound: int = 3):
    return random_nilpotent(dim, 2 * seed, bound), random_nilpotent(dim, 2 * seed + 1, bound)


def mat_qexp(m: RationalMatrix, alpha: int, q0) -> RationalMatrix:
    """sum_n M^n / [n]_{q0^alpha}!, finite because M is nilpotent."""
    if not m.is_nilpotent():
        raise ValueError("mat_qexp needs a nilpotent matrix")
    q0 = Fraction(q0)
    out = RationalMatrix.identity(m.dim)
    power = out
    for n in range(1, m.dim):
        power = power * m
        if power.is_zero():
            break
        try:
            fact = eval_at(q_factorial(n, alpha), q0)
        except PoleError:
            fact = 0
        if not fact:
            raise ZeroDivisionError(f"[{n}]! vanishes or is undefined at q = {q0}, alpha = {alpha}")
        out = out + power.scale(1 / fact)
    return out


def eval_ncpoly(p: NCPolynomial, ma: RationalMatrix, mb: RationalMatrix, q0) -> RationalMatrix:
    """Image of p under A -> ma, B -> mb, q -> q0.  Raises PoleError at a pole."""
    if ma.dim != mb.dim:
        raise ValueError(f"dimension mismatch: {ma.dim} vs {mb.dim}")
    q0 = Fraction(q0)
    images = _word_images(ma, mb)
    dim = ma.dim
    acc = [[Fraction(0)] * dim for _ in range(dim)]
    for w, c in sorted(p.terms.items()):
        c = eval_at(c, q0)
        for i, j, x in images.get(w):
            acc[i][j] += c * x
    return RationalMatrix._raw(tuple(tuple(r) for r in acc))


class _WordImages:
    """Sparse images of words under A -> ma, B -> mb, built on demand."""

    def __init__(self, ma, mb):
        self.letters = {"A": ma, "B": mb}
        self.dense: Dict[str, RationalMatrix] = {"": RationalMatrix.identity(ma.dim)}
        self.sparse: Dict[str, tuple] = {}

    def matrix(self, w):
        if w not in self.dense:
            self.dense[w] = self.matrix(w[:-1]) * self.letters[w[-1]]
        return self.dense[w]

    def get(self, w):
        if w not in self.sparse:
            m = self.matrix(w)
            self.sparse[w] = tuple((i, j, x) for i, r in enumerate(m.rows)
                                   for j, x in enumerate(r) if x)
        return self.sparse[w]


@lru_cache(maxsize=32)
def _word_images(ma, mb) -> _WordImages:
    return _WordImages(ma, mb)


def qplane_pair(dim: int, q0):
    """A = sum E_{i,i+1}, B = diag(q0^-k): then B A = q0 A B."""
    q0 = Fraction(q0)
    shift = RationalMatrix([[int(j == i + 1) for j in range(dim)] for i in range(dim)])
    diag = RationalMatrix([[q0 ** -i if i == j else 0 for j in range(dim)] for i in range(dim)])
    return shift, diag


def factorization_check(order: int, dim: int, seed: int, alphas: Optional[Sequence[int]] = None,
                        qvals: Iterable = (2, Fraction(1, 2), Fraction(5, 3)),
                        bound: int = 3, terms: Optional[Dict[int, NCPolynomial]] = None) -> List[dict]:
    """Compare E_q(A + B) with E_{q^a0}(A) prod E_{q^ai}(C_i) on a random nilpotent pair.

    ``terms`` may supply precomputed C_i; otherwise they are generated.
    """
    from .disentangle import default_alphas, q_zassenhaus_terms

    if dim > order + 1:
        raise ValueError(f"dim {dim} > order + 1 = {order + 1}: words of length {order + 1} "
                         "survive and the truncated product is not exact")
    alphas = tuple(default_alphas(order) if alphas is None else alphas)
    if terms is None:
        terms = q_zassenhaus_terms(order, alphas).terms
    ma, mb = random_pair(dim, seed, bound)
    report = []
    for q0 in sorted(Fraction(q) for q in qvals):
        lhs = mat_qexp(ma + mb, 1, q0)
        rhs = mat_qexp(ma, alphas[0], q0)
        for i in range(1, order + 1):
            rhs = rhs * mat_qexp(eval_ncpoly(terms[i], ma, mb, q0), alphas[i], q0)
        report.append({"dim": dim, "seed": seed, "q": str(q0),
                       "verdict": "pass" if lhs == rhs else "fail"})
    return report

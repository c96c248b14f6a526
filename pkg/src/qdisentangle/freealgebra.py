"""The free associative algebra on A, B over Q(q), truncated by word length.

Words are plain strings over the alphabet ``"AB"``; the empty string is the
unit.  Every product-like operation takes an explicit truncation degree and
drops words longer than it.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .coeffield import (
    ONE,
    ZERO,
    QRationalFunction,
    as_qrf,
    q_factorial,
    q_power,
)

ALPHABET = "AB"

__all__ = [
    "ALPHABET",
    "NCPolynomial",
    "A",
    "B",
    "nc_mul",
    "nc_pow",
    "q_commutator",
    "exp_trunc",
    "log_trunc",
    "inv_trunc",
    "jackson_qexp_trunc",
    "homogeneous_part",
    "qplane_normal_form",
    "inversions",
    "CommutatorExpr",
    "Leaf",
    "Bracket",
    "Combination",
    "bracket",
    "expand_comm_expr",
    "canonical_key",
    "display_key",
]


def canonical_key(word: str):
    """Canonical term order: by degree, then lexicographic with A < B."""
    return (len(word), word)


def display_key(word: str):
    """Order used for text rendering: by degree, then comparing words right to left."""
    return (len(word), word[::-1])


def _min(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class NCPolynomial:
    """Finite sum of words with Q(q) coefficients.

    ``truncation`` is the largest word length kept (``None`` for no bound).
    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("terms", "truncation", "_graded")

    def __init__(self, terms=None, truncation: Optional[int] = None):
        clean = {}
        if terms:
            for w, c in dict(terms).items():
                if any(ch not in ALPHABET for ch in w):
                    raise ValueError(f"word {w!r} uses letters outside {ALPHABET!r}")
                if truncation is not None and len(w) > truncation:
                    continue
                c = as_qrf(c)
                if c:
                    clean[w] = c
        self.terms: Dict[str, QRationalFunction] = clean
        self.truncation = truncation
        self._graded = None

    @classmethod
    def _wrap(cls, terms, truncation):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.truncation = truncation
        obj._graded = None
        return obj

    @classmethod
    def scalar(cls, c, truncation: Optional[int] = None) -> "NCPolynomial":
        return cls({"": c}, truncation)

    @classmethod
    def word(cls, w: str, c=1, truncation: Optional[int] = None) -> "NCPolynomial":
        return cls({w: c}, truncation)

    def graded(self) -> Dict[int, Dict[str, QRationalFunction]]:
        """Terms grouped by degree (cached)."""
        if self._graded is None:
            g = defaultdict(dict)
            for w, c in self.terms.items():
                g[len(w)][w] = c
            self._graded = dict(g)
        return self._graded

    # -- basic queries

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda t: canonical_key(t[0])))

    def coeff(self, word: str) -> QRationalFunction:
        return self.terms.get(word, ZERO)

    def constant_term(self) -> QRationalFunction:
        return self.terms.get("", ZERO)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def min_degree(self) -> Optional[int]:
        return min((len(w) for w in self.terms), default=None)

    def is_homogeneous(self, k: int) -> bool:
        return all(len(w) == k for w in self.terms)

    def __eq__(self, other):
        if isinstance(other, NCPolynomial):
            return self.terms == other.terms
        if isinstance(other, (int, QRationalFunction)):
            return self.terms == NCPolynomial.scalar(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def truncate(self, n: Optional[int]) -> "NCPolynomial":
        if n is None:
            return NCPolynomial._wrap(dict(self.terms), self.truncation)
        return NCPolynomial._wrap({w: c for w, c in self.terms.items() if len(w) <= n},
                                  _min(n, self.truncation))

    def with_truncation(self, n: Optional[int]) -> "NCPolynomial":
        if n is not None and self.degree() > n:
            raise ValueError(f"terms exceed truncation degree {n}")
        return NCPolynomial._wrap(dict(self.terms), n)

    def map_coefficients(self, fn) -> "NCPolynomial":
        return NCPolynomial({w: fn(c) for w, c in self.terms.items()}, self.truncation)

    # -- linear structure

    def _coerce(self, other) -> "NCPolynomial":
        if isinstance(other, NCPolynomial):
            return other
        return NCPolynomial.scalar(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = _min(self.truncation, other.truncation)
        out = dict(self.terms)
        for w, c in other.terms.items():
            if n is not None and len(w) > n:
                continue
            v = out.get(w)
            if v is None:
                out[w] = c
            else:
                v = v + c
                if v:
                    out[w] = v
                else:
                    del out[w]
        if n is not None and self.truncation != n:
            out = {w: c for w, c in out.items() if len(w) <= n}
        return NCPolynomial._wrap(out, n)

    __radd__ = __add__

    def __neg__(self):
        return NCPolynomial._wrap({w: -c for w, c in self.terms.items()}, self.truncation)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "NCPolynomial":
        c = as_qrf(c)
        if not c:
            return NCPolynomial._wrap({}, self.truncation)
        return NCPolynomial._wrap({w: c * v for w, v in self.terms.items()}, self.truncation)

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            return nc_mul(self, other, _min(self.truncation, other.truncation))
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(as_qrf(other).inv())

    # -- rendering and export

    def render(self, order=display_key) -> str:
        """Plain text such as ``(1/(1+q))*BA - (q/(1+q))*AB``."""
        if not self.terms:
            return "0"
        out = []
        for w in sorted(self.terms, key=order):
            c = self.terms[w]
            negative = next(x for x in c.num if x) < 0
            if negative:
                c = -c
            if not w:
                body = c.render(compact=True)
                if sum(1 for x in c.num if x) > 1 or c.den != (1,):
                    body = f"({body})" if out else body
            elif c == ONE:
                body = w
            else:
                coef = c.render(compact=True)
                simple = c.den == (1,) and sum(1 for x in c.num if x) == 1
                body = f"{coef}*{w}" if simple else f"({coef})*{w}"
            if not out:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"NCPolynomial({self.render()!r}, truncation={self.truncation})"

    def latex(self, order=display_key) -> str:
        if not self.terms:
            return "0"
        out = []
        for w in sorted(self.terms, key=order):
            c = self.terms[w]
            negative = next(x for x in c.num if x) < 0
            if negative:
                c = -c
            sign = ("-" if negative else "") if not out else (" - " if negative else " + ")
            if not w:
                out.append(sign + c.latex())
                continue
            coef = "" if c == ONE else c.latex()
            if coef and sum(1 for x in c.num if x) > 1 and c.den == (1,):
                coef = f"({coef})"
            out.append(sign + (coef + " " if coef else "") + _word_latex(w))
        return "".join(out)

    def to_json(self) -> dict:
        return {
            "truncation": self.truncation,
            "terms": [{"word": w, "coeff": c.to_json()} for w, c in self],
        }

    @classmethod
    def from_json(cls, data) -> "NCPolynomial":
        return cls({t["word"]: QRationalFunction.from_json(t["coeff"]) for t in data["terms"]},
                   data.get("truncation"))


def _word_latex(w: str) -> str:
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        n = j - i
        out.append(w[i] if n == 1 else f"{w[i]}^{{{n}}}")
        i = j
    return "".join(out)


A = NCPolynomial.word("A")
B = NCPolynomial.word("B")


# ---------------------------------------------------------------------------
# products and series


def nc_mul(p: NCPolynomial, r: NCPolynomial, n: Optional[int]) -> NCPolynomial:
    """Concatenation product keeping words of length <= n."""
    gp, gr = p.graded(), r.graded()
    acc = {}
    for dp, tp in gp.items():
        for dr, tr in gr.items():
            if n is not None and dp + dr > n:
                continue
            for w1, c1 in tp.items():
                for w2, c2 in tr.items():
                    w = w1 + w2
                    v = acc.get(w)
                    acc[w] = c1 * c2 if v is None else v + c1 * c2
    return NCPolynomial._wrap({w: c for w, c in acc.items() if c}, n)


def nc_pow(p: NCPolynomial, k: int, n: Optional[int]) -> NCPolynomial:
    out = NCPolynomial.scalar(1, n)
    for _ in range(k):
        out = nc_mul(out, p, n)
    return out


def q_commutator(p: NCPolynomial, r: NCPolynomial, e: int, n: Optional[int]) -> NCPolynomial:
    """p r - q^e r p; e = 0 is the ordinary commutator."""
    return nc_mul(p, r, n) - nc_mul(r, p, n).scale(q_power(e) if e else ONE)


def homogeneous_part(p: NCPolynomial, k: int) -> NCPolynomial:
    return NCPolynomial._wrap(dict(p.graded().get(k, {})), p.truncation)


def _series_length(x: NCPolynomial, n: int) -> int:
    # number of nonvanishing powers of x below degree n
    d = x.min_degree()
    if d is None:
        return 0
    return n // d


def _horner(x: NCPolynomial, weights, n: int) -> NCPolynomial:
    """sum_{k=0}^{K} w_k x^k, with w_k = prod_{i<=k} weights[i], via nested products."""
    k_max = _series_length(x, n)
    acc = NCPolynomial.scalar(1, n)
    for k in range(k_max, 0, -1):
        acc = NCPolynomial.scalar(1, n) + nc_mul(x, acc, n).scale(weights(k))
    return acc


def exp_trunc(p: NCPolynomial, n: int) -> NCPolynomial:
    """sum_k p^k / k! truncated at degree n."""
    if p.constant_term():
        raise ValueError("exp_trunc needs a zero constant term")
    return _horner(p, lambda k: QRationalFunction.from_rational(Fraction(1, k)), n)


def jackson_qexp_trunc(p: NCPolynomial, alpha: int, n: int) -> NCPolynomial:
    """Jackson q-exponential in base q^alpha: sum_k p^k / [k]_{q^alpha}!."""
    if p.constant_term():
        raise ValueError("jackson_qexp_trunc needs a zero constant term")
    return _horner(p, lambda k: q_factorial(k - 1, alpha) / q_factorial(k, alpha), n)


def log_trunc(p: NCPolynomial, n: int) -> NCPolynomial:
    """sum_k (-1)^(k-1) (p - 1)^k / k truncated at degree n."""
    if p.constant_term() != ONE:
        raise ValueError("log_trunc needs constant term 1")
    x = p - NCPolynomial.scalar(1)
    x = x.truncate(n)
    k_max = _series_length(x, n)
    if not k_max:
        return NCPolynomial._wrap({}, n)
    # x (1 - x (1/2 - x (1/3 - ...)))
    acc = NCPolynomial.scalar(QRationalFunction.from_rational(Fraction(1, k_max)), n)
    for k in range(k_max - 1, 0, -1):
        acc = NCPolynomial.scalar(QRationalFunction.from_rational(Fraction(1, k)), n) - nc_mul(x, acc, n)
    return nc_mul(x, acc, n)


def inv_trunc(p: NCPolynomial, n: int) -> NCPolynomial:
    """Two-sided inverse modulo words longer than n."""
    c = p.constant_term()
    if not c:
        raise ValueError("inv_trunc needs a nonzero constant term")
    cinv = c.inv()
    x = (p.scale(cinv) - NCPolynomial.scalar(1)).truncate(n)
    k_max = _series_length(x, n)
    acc = NCPolynomial.scalar(1, n)
    for _ in range(k_max):
        acc = NCPolynomial.scalar(1, n) - nc_mul(x, acc, n)
    return acc.scale(cinv)


# ---------------------------------------------------------------------------
# q-plane relation BA = q AB


def inversions(word: str) -> int:
    """Number of pairs with a B somewhere left of an A."""
    count = 0
    seen_b = 0
    for ch in word:
        if ch == "B":
            seen_b += 1
        else:
            count += seen_b
    return count


def qplane_normal_form(p: NCPolynomial) -> NCPolynomial:
    """Rewrite every word to A^m B^n using BA -> q AB.

    Sorting a word costs one factor q per adjacent swap, and the number of
    swaps is the number of inversions, so each word maps to
    q^inversions * A^m B^n.
    """
    out = {}
    for w, c in p.terms.items():
        m = w.count("A")
        target = "A" * m + "B" * (len(w) - m)
        inv = inversions(w)
        term = c * q_power(inv) if inv else c
        v = out.get(target)
        out[target] = term if v is None else v + term
    return NCPolynomial._wrap({w: c for w, c in out.items() if c}, p.truncation)


# ---------------------------------------------------------------------------
# nested q-commutator expressions


class CommutatorExpr:
    """Base for bracket expressions; supports +, -, and scalar weights."""

    def __add__(self, other):
        if not isinstance(other, CommutatorExpr):
            return NotImplemented
        return Combination(_terms_of(self) + _terms_of(other))

    def __neg__(self):
        return Combination(tuple((-w, e) for w, e in _terms_of(self)))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, weight):
        weight = as_qrf(weight)
        return Combination(tuple((weight * w, e) for w, e in _terms_of(self)))

    def latex(self) -> str:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class Leaf(CommutatorExpr):
    symbol: str

    def __post_init__(self):
        if self.symbol not in ALPHABET:
            raise ValueError(f"unknown generator {self.symbol!r}")

    def latex(self):
        return self.symbol

    def render(self):
        return self.symbol


def _subscript(e: int, latex: bool) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "_q"
    return f"_{{q^{{{e}}}}}" if latex else f"_q^{e}"


@dataclass(frozen=True)
class Bracket(CommutatorExpr):
    """[left, right]_{q^exponent} = left right - q^exponent right left."""

    left: CommutatorExpr
    right: CommutatorExpr
    exponent: int = 0

    def latex(self):
        return f"[{self.left.latex()}, {self.right.latex()}]{_subscript(self.exponent, True)}"

    def render(self):
        return f"[{self.left.render()}, {self.right.render()}]{_subscript(self.exponent, False)}"


@dataclass(frozen=True)
class Combination(CommutatorExpr):
    """Linear combination sum_i weight_i * expr_i."""

    terms: Tuple[Tuple[QRationalFunction, CommutatorExpr], ...]

    def latex(self):
        parts = []
        for w, e in self.terms:
            neg = bool(w.num) and next(x for x in w.num if x) < 0
            if neg:
                w = -w
            coef = "" if w == ONE else w.latex() + " "
            sign = ("-" if neg else "") if not parts else (" - " if neg else " + ")
            parts.append(f"{sign}{coef}{e.latex()}")
        return "".join(parts) or "0"

    def render(self):
        parts = []
        for w, e in self.terms:
            neg = bool(w.num) and next(x for x in w.num if x) < 0
            if neg:
                w = -w
            coef = "" if w == ONE else f"({w.render(compact=True)})*"
            sign = ("-" if neg else "") if not parts else (" - " if neg else " + ")
            parts.append(f"{sign}{coef}{e.render()}")
        return "".join(parts) or "0"


def _terms_of(e: CommutatorExpr):
    if isinstance(e, Combination):
        return e.terms
    return ((ONE, e),)


def bracket(left, right, exponent: int = 0) -> Bracket:
    """Shorthand accepting generator names for leaves."""
    if isinstance(left, str):
        left = Leaf(left)
    if isinstance(right, str):
        right = Leaf(right)
    return Bracket(left, right, exponent)


def expand_comm_expr(expr: CommutatorExpr, n: Optional[int] = None) -> NCPolynomial:
    """Expand brackets into words, truncating at degree n."""
    memo = {}

    def go(e):
        key = id(e)
        hit = memo.get(key)
        if hit is not None:
            return hit[1]
        if isinstance(e, Leaf):
            out = NCPolynomial.word(e.symbol, truncation=n)
        elif isinstance(e, Bracket):
            out = q_commutator(go(e.left), go(e.right), e.exponent, n)
        elif isinstance(e, Combination):
            out = NCPolynomial({}, n)
            for w, sub in e.terms:
                out = out + go(sub).scale(w)
        else:
            raise TypeError(f"not a commutator expression: {e!r}")
        memo[key] = (e, out)
        return out

    return go(expr)

"""Words and rational combinations of words: the ambient model of the free
vertex algebra.

A word a1(n1)...ak(nk) stands for the right-normed monomial
a1 [n1] (a2 [n2] ( ... (ak [nk] vac))).  Words whose last mode is >= 0 are
identically zero (the vacuum is annihilated by nonnegative modes) and are
dropped on element construction.

Products of arbitrary elements are computed recursively from the
associativity identity.  Both infinite sums appearing there are truncated by
the degree floor: a homogeneous component of weight mu with doubled degree
below (mu|mu) vanishes, which gives explicit finite windows for the inner
summation index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .signature import (
    Signature,
    Weight,
    min_deg2,
    weight_add,
)

# A word is a tuple of letters (generator index, mode).
Letter = tuple
Word = tuple

VACUUM_WORD: Word = ()


def binomial(n: int, k: int) -> int:
    """Binomial coefficient n(n-1)...(n-k+1)/k! for arbitrary integer n."""
    if k < 0:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _ceildiv(a: int, b: int) -> int:
    return -((-a) // b)


class FreeElement:
    """Finite rational linear combination of words.

    Immutable by convention: all operations return fresh elements.  Words
    ending in a nonnegative mode are dropped at construction since they
    represent zero.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for w, c in terms.items():
                if c and (not w or w[-1][1] < 0):
                    data[w] = c
        self.terms = data

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FreeElement") -> "FreeElement":
        data = dict(self.terms)
        for w, c in other.terms.items():
            data[w] = data.get(w, 0) + c
        return FreeElement(data)

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        data = dict(self.terms)
        for w, c in other.terms.items():
            data[w] = data.get(w, 0) - c
        return FreeElement(data)

    def __neg__(self) -> "FreeElement":
        return FreeElement({w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "FreeElement":
        if not c:
            return ZERO
        return FreeElement({w: c * x for w, x in self.terms.items()})

    def support(self):
        return set(self.terms)

    def __repr__(self):
        return f"FreeElement({self.terms!r})"


ZERO = FreeElement()
VACUUM = FreeElement({VACUUM_WORD: 1})


def word_element(w: Word) -> FreeElement:
    return FreeElement({w: 1})


def gen_element(i: int) -> FreeElement:
    return FreeElement({((i, -1),): 1})


def word_weight(sig: Signature, w: Word) -> Weight:
    counts = [0] * sig.size
    for g, _ in w:
        counts[g] += 1
    return tuple(counts)


def word_deg2(sig: Signature, w: Word) -> int:
    return sum(sig.gen_deg2(g) - 2 * n - 2 for g, n in w)


def word_parity(sig: Signature, w: Word) -> int:
    return sum(sig.parity(g) for g, _ in w) & 1


def word_grade(sig: Signature, w: Word):
    """Weight, doubled degree and parity of a word."""
    return word_weight(sig, w), word_deg2(sig, w), word_parity(sig, w)


def sort_key(sig: Signature, w: Word):
    """Canonical total order: by weight, then doubled degree, then letters."""
    return (word_weight(sig, w), word_deg2(sig, w), w)


def is_homogeneous(sig: Signature, x: FreeElement) -> bool:
    grades = {(word_weight(sig, w), word_deg2(sig, w)) for w in x.terms}
    return len(grades) <= 1


def translate(x: FreeElement, k: int = 1) -> FreeElement:
    """Divided power D^(k) of the translation operator.

    D acts on a word as the sum over letters of -n * (n -> n-1); the divided
    power iterates D and divides by k!.
    """
    if k < 0:
        raise ValueError("negative divided power")
    cur = x
    for _ in range(k):
        data = {}
        for w, c in cur.terms.items():
            for i, (g, n) in enumerate(w):
                if n == 0:
                    continue
                w2 = w[:i] + ((g, n - 1),) + w[i + 1 :]
                data[w2] = data.get(w2, 0) - n * c
        cur = FreeElement(data)
    if k > 1:
        cur = cur.scale(Fraction(1, factorial(k)))
    return cur


def _prepend(a: int, k: int, x: FreeElement) -> FreeElement:
    """Left-multiply every word of x by the letter a(k)."""
    data = {}
    for w, c in x.terms.items():
        if not w and k >= 0:
            continue
        data[((a, k),) + w] = c
    return FreeElement(data)


@cache
def _word_product(sig: Signature, wu: Word, m: int, wv: Word) -> FreeElement:
    """Product (word wu) [m] (word wv), as an element.

    Recursion on the left word: the vacuum acts as the unit at m = -1, a
    single letter a(n) is D^(-n-1) a and shifts the product mode, and a
    longer word splits off its first letter through the associativity
    identity.  Components below the degree floor are zero.
    """
    mu = weight_add(word_weight(sig, wu), word_weight(sig, wv))
    d2 = word_deg2(sig, wu) + word_deg2(sig, wv) - 2 * m - 2
    if d2 < min_deg2(sig, mu):
        return ZERO
    if not wu:
        return word_element(wv) if m == -1 else ZERO
    a, n = wu[0]
    if len(wu) == 1:
        if n >= 0:
            return ZERO
        j = -n - 1
        c = binomial(m, j)
        if not c:
            return ZERO
        if j & 1:
            c = -c
        return _prepend(a, m - j, word_element(wv)).scale(c)

    tail = wu[1:]
    koszul = -1 if sig.parity(a) and word_parity(sig, tail) else 1
    data = {}

    # first sum: a [n-s] (tail [m+s] wv) for s >= 0, truncated where the
    # inner product falls below its degree floor
    mu1 = weight_add(word_weight(sig, tail), word_weight(sig, wv))
    d2t = word_deg2(sig, tail) + word_deg2(sig, wv)
    s_hi = (d2t - 2 * m - 2 - min_deg2(sig, mu1)) // 2
    if n >= 0:
        s_hi = min(s_hi, n)
    for s in range(0, s_hi + 1):
        b = binomial(n, s)
        if not b:
            continue
        inner = _word_product(sig, tail, m + s, wv)
        if inner.is_zero():
            continue
        coeff = -b if s & 1 else b
        for w, c in _prepend(a, n - s, inner).terms.items():
            data[w] = data.get(w, 0) + coeff * c

    # second sum: tail [m+s] (a(n-s) wv) for s <= n, truncated where the
    # inner word falls below its degree floor; empty when wv is the vacuum
    if wv:
        mu2 = weight_add(sig.unit_weight(a), word_weight(sig, wv))
        d2a = sig.gen_deg2(a) + word_deg2(sig, wv)
        s_lo = _ceildiv(min_deg2(sig, mu2) - d2a + 2 * n + 2, 2)
        if n >= 0:
            s_lo = max(s_lo, 0)
        for s in range(s_lo, n + 1):
            b = binomial(n, n - s)
            if not b:
                continue
            inner = _word_product(sig, tail, m + s, ((a, n - s),) + wv)
            if inner.is_zero():
                continue
            coeff = -koszul * b if not s & 1 else koszul * b
            for w, c in inner.terms.items():
                data[w] = data.get(w, 0) + coeff * c

    return FreeElement(data)


def product(sig: Signature, u: FreeElement, m: int, v: FreeElement) -> FreeElement:
    """General product u [m] v, extended bilinearly over words."""
    data = {}
    for wu, cu in u.terms.items():
        for wv, cv in v.terms.items():
            part = _word_product(sig, wu, m, wv)
            if part.is_zero():
                continue
            cc = cu * cv
            for w, c in part.terms.items():
                data[w] = data.get(w, 0) + cc * c
    return FreeElement(data)


# --- expression trees -------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Vac:
    pass


@dataclass(frozen=True)
class Prod:
    left: "VertexExpr"
    mode: int
    right: "VertexExpr"


VertexExpr = object  # Gen | Vac | Prod


def evaluate(sig: Signature, expr) -> FreeElement:
    """Evaluate an expression tree; arbitrary parenthesization is allowed."""
    if isinstance(expr, Vac):
        return VACUUM
    if isinstance(expr, Gen):
        return gen_element(expr.index)
    if isinstance(expr, Prod):
        return product(sig, evaluate(sig, expr.left), expr.mode, evaluate(sig, expr.right))
    raise TypeError(f"not a vertex expression: {expr!r}")


# --- printing ---------------------------------------------------------------


def format_word(sig: Signature, w: Word) -> str:
    return "".join(f"{sig.generators[g]}({n})" for g, n in w) + "vac"


def format_element(sig: Signature, x: FreeElement) -> str:
    """Canonical printer: words in canonical order, `c * word` terms."""
    if x.is_zero():
        return "0"
    parts = []
    for w in sorted(x.terms, key=lambda w: sort_key(sig, w)):
        c = x.terms[w]
        body = format_word(sig, w)
        parts.append(body if c == 1 else f"{c} * {body}")
    return " + ".join(parts)

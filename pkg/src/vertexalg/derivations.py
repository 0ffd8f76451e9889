"""Conformal derivations of the free algebra, given by their action on
generators.

A derivation is stored as its finite list of generator actions (mode s >= 0,
value).  Application to a word recurses through the Leibniz-type identity

    alpha(m)(a [n] b) = a [n] (alpha(m) b)
                        + sum_{s>=0} C(m,s) (alpha(s) a) [m+n-s] b.

All derivations here are even and weight-homogeneous of weight zero, so no
Koszul signs appear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .signature import Signature
from .words import FreeElement, ZERO, binomial, product, word_element


@dataclass(frozen=True)
class DerivationSpec:
    """Finite generator actions: actions[g] lists (mode, value) pairs."""

    actions: tuple  # tuple over generators of tuple[(mode, FreeElement), ...]
    locality: int   # uniform bound: alpha(s) B = 0 for s >= locality
    diagonal: tuple = None  # scalars f(b) when the spec is alpha_f-shaped

    def action(self, g: int, s: int) -> FreeElement:
        for mode, value in self.actions[g]:
            if mode == s:
                return value
        return ZERO


def heisenberg_derivation(sig: Signature, f) -> DerivationSpec:
    """The degree-one derivation with alpha(0) b = f(b) b, nothing else."""
    f = tuple(f)
    actions = []
    for g in range(sig.size):
        if f[g]:
            actions.append(((0, word_element(((g, -1),)).scale(f[g])),))
        else:
            actions.append(())
    return DerivationSpec(tuple(actions), 1, f)


def virasoro_derivation(sig: Signature, f) -> DerivationSpec:
    """The degree-two derivation with omega(0) b = Db, omega(1) b = f(b) b."""
    f = tuple(f)
    actions = []
    for g in range(sig.size):
        acts = [(0, word_element(((g, -2),)))]
        if f[g]:
            acts.append((1, word_element(((g, -1),)).scale(f[g])))
        actions.append(tuple(acts))
    return DerivationSpec(tuple(actions), 2)


def _apply_word(sig: Signature, spec: DerivationSpec, m: int, w) -> FreeElement:
    if not w:
        return ZERO
    if spec.diagonal is not None:
        # alpha_f acts letterwise: a(n) -> f(a) a(n+m)
        data = {}
        for i, (g, n) in enumerate(w):
            c = spec.diagonal[g]
            if not c:
                continue
            w2 = w[:i] + ((g, n + m),) + w[i + 1 :]
            if not w2 or w2[-1][1] < 0:
                data[w2] = data.get(w2, 0) + c
        return FreeElement(data)
    (a, n), tail = w[0], w[1:]
    tail_elem = FreeElement({tail: 1})
    out = ZERO
    # a [n] (alpha(m) tail): prepend the letter to each word of the inner value
    inner = _apply_word(sig, spec, m, tail)
    if not inner.is_zero():
        data = {}
        for w2, c in inner.terms.items():
            if not w2 and n >= 0:
                continue
            data[((a, n),) + w2] = c
        out = out + FreeElement(data)
    for s in range(0, min(m, spec.locality - 1) + 1):
        b = binomial(m, s)
        if not b:
            continue
        value = spec.action(a, s)
        if value.is_zero():
            continue
        out = out + product(sig, value, m + n - s, tail_elem).scale(b)
    return out


def apply_derivation(sig: Signature, spec: DerivationSpec, m: int, x: FreeElement) -> FreeElement:
    """Apply the mode-m coefficient of the derivation, m >= 0."""
    if m < 0:
        raise ValueError("conformal derivations have nonnegative modes only")
    out = ZERO
    for w, c in x.terms.items():
        out = out + _apply_word(sig, spec, m, w).scale(c)
    return out

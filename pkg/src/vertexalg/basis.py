"""Basis of the free vertex algebra via colored partitions.

Basic words of weight lam and doubled degree d2 are in bijection with
partitions of (d2 - floor)/2 colored by the generators, with at most s_a
parts of each color a.  The bijection reads off, letter by letter, how far
each mode sits above the minimal-word mode.
"""

from __future__ import annotations

from dataclasses import dataclass

from .signature import Signature, Weight, min_deg2
from .words import Word
from .rewrite import is_basic


@dataclass(frozen=True)
class ColoredPartition:
    """Nonincreasing positive parts, each carrying a generator color.

    Equal parts appear in nondecreasing color order.
    """

    parts: tuple  # tuple of (part, color) pairs

    def __post_init__(self):
        prev = None
        for part, color in self.parts:
            if part <= 0:
                raise ValueError("partition parts must be positive")
            key = (-part, color)
            if prev is not None and key < prev:
                raise ValueError("parts must be sorted by size, ties by color")
            prev = key

    @property
    def total(self) -> int:
        return sum(p for p, _ in self.parts)


def _sorted_pairs(pairs):
    # descending part, ascending color
    return tuple(sorted(pairs, key=lambda pc: (-pc[0], pc[1])))


def minimal_word(sig: Signature, lam: Weight) -> Word:
    """The unique basic word of weight lam at the degree floor."""
    letters = [g for g in range(sig.size) for _ in range(lam[g])]
    return _word_for(sig, letters, [0] * len(letters))


def _word_for(sig: Signature, letters, excess) -> Word:
    """Word with given letter sequence whose modes sit `excess` above minimal."""
    k = len(letters)
    out = []
    for i in range(k):
        row = sig.locality[letters[i]]
        m = sum(row[letters[j]] for j in range(i + 1, k)) - 1 - excess[i]
        out.append((letters[i], m))
    return tuple(out)


def word_to_partition(sig: Signature, w: Word) -> ColoredPartition:
    """Colored partition of a basic word: per-letter excess over the minimal mode."""
    if not is_basic(sig, w):
        raise ValueError("word is not basic")
    k = len(w)
    pairs = []
    for i, (g, m) in enumerate(w):
        row = sig.locality[g]
        n = sum(row[w[j][0]] for j in range(i + 1, k)) - 1 - m
        if n:
            pairs.append((n, g))
    return ColoredPartition(tuple(pairs))


def word_from_partition(sig: Signature, lam: Weight, pi: ColoredPartition) -> Word:
    """Unique basic word of weight lam whose partition is pi."""
    remaining = list(lam)
    pairs = list(pi.parts)
    for _part, color in pairs:
        remaining[color] -= 1
        if remaining[color] < 0:
            raise ValueError("partition uses a color more often than the weight allows")
    pairs.extend((0, g) for g in range(sig.size) for _ in range(remaining[g]))
    ordered = _sorted_pairs(pairs)
    return _word_for(sig, [c for _, c in ordered], [p for p, _ in ordered])


def colored_partitions(total: int, caps):
    """All colored partitions of `total` with at most caps[c] parts of color c.

    Yields tuples of (part, color) pairs sorted descending by part, ties by
    ascending color.
    """
    ncolors = len(caps)

    def rec(remaining, max_part, min_color_at_max, caps_left):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, max_part), 0, -1):
            start = min_color_at_max if part == max_part else 0
            for color in range(start, ncolors):
                if caps_left[color] == 0:
                    continue
                caps_left[color] -= 1
                for rest in rec(remaining - part, part, color, caps_left):
                    yield ((part, color),) + rest
                caps_left[color] += 1

    yield from rec(total, total, 0, list(caps))


def basis_words(sig: Signature, lam: Weight, deg2: int):
    """All basic words of the given weight and doubled degree, sorted."""
    floor = min_deg2(sig, lam)
    if deg2 < floor or (deg2 - floor) & 1:
        return []
    excess = (deg2 - floor) // 2
    out = [
        word_from_partition(sig, lam, ColoredPartition(pairs))
        for pairs in colored_partitions(excess, lam)
    ]
    out.sort()
    return out


def dim_component(sig: Signature, lam: Weight, deg2: int) -> int:
    """Dimension of the homogeneous component of weight lam and doubled degree deg2."""
    if any(c < 0 for c in lam):
        return 0
    return len(basis_words(sig, lam, deg2))

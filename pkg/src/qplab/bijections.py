"""Pair-extraction maps on Ferrers diagrams.

``rho`` removes pairs of equal rows until the remaining parts are distinct.
``rho_star`` removes pairs of equal odd-height columns until no odd column
height repeats. Both keep the extracted material as a partition so that the
input can be rebuilt by merging rows (resp. columns) back in.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .partitions import Partition, conjugate, stats
from .qpoly import LaurentPoly, mono

ROW = "rho"
COLUMN = "rho_star"


class ImageError(ValueError):
    """A pair (reduced, extracted) that no partition maps to."""


@dataclass(frozen=True)
class BijectionImage:
    reduced: Partition
    extracted: Partition
    kind: str

    def __iter__(self):
        return iter((self.reduced, self.extracted))


def _extract_pairs(values, keep, order: str):
    # Removes pairs of equal values one at a time, largest first or smallest first.
    # The result does not depend on the order; tests compare both.
    counts = Counter(values)
    extracted = []
    while True:
        cands = sorted((v for v, m in counts.items() if m >= 2 and keep(v)),
                       reverse=(order == "largest"))
        if not cands:
            break
        v = cands[0]
        counts[v] -= 2
        extracted += [v, v]
    remaining = sorted(counts.elements(), reverse=True)
    return remaining, sorted(extracted, reverse=True)


def rho(pi: Partition, order: str = "largest") -> BijectionImage:
    reduced, extracted = _extract_pairs(pi.parts, lambda v: True, order)
    return BijectionImage(Partition(reduced), Partition(extracted), ROW)


def rho_star(pi: Partition, order: str = "largest") -> BijectionImage:
    heights = conjugate(pi).parts
    kept, taken = _extract_pairs(heights, lambda h: h % 2 == 1, order)
    return BijectionImage(conjugate(Partition(kept)), conjugate(Partition(taken)), COLUMN)


def in_d_tilde(pi: Partition) -> bool:
    """Each odd-indexed part exceeds the next nonzero part by at most one."""
    p = pi.parts
    return all(p[k] - p[k + 1] <= 1 for k in range(0, len(p) - 1, 2))


def check_image(img: BijectionImage) -> None:
    """Raise :class:`ImageError` unless ``img`` satisfies the invariants of its kind."""
    if img.kind == ROW:
        if len(set(img.reduced.parts)) != len(img.reduced.parts):
            raise ImageError("reduced partition must have distinct parts")
        if any(m % 2 for m in Counter(img.extracted.parts).values()):
            raise ImageError("extracted parts must occur an even number of times")
    elif img.kind == COLUMN:
        cols = conjugate(img.extracted).parts
        if any(h % 2 == 0 for h in cols):
            raise ImageError("extracted columns must have odd height")
        if any(m % 2 for m in Counter(cols).values()):
            raise ImageError("extracted column heights must repeat an even number of times")
        kept = conjugate(img.reduced).parts
        if any(m > 1 for h, m in Counter(kept).items() if h % 2):
            raise ImageError("reduced partition repeats an odd column height")
    else:
        raise ImageError(f"unknown kind {img.kind!r}")


def invert(img: BijectionImage) -> Partition:
    check_image(img)
    if img.kind == ROW:
        return Partition(tuple(sorted(img.reduced.parts + img.extracted.parts, reverse=True)))
    cols = conjugate(img.reduced).parts + conjugate(img.extracted).parts
    return conjugate(Partition(tuple(sorted(cols, reverse=True))))


def boulet_monomial(pi: Partition) -> LaurentPoly:
    na, nb, nc, nd = stats(pi).boulet
    return mono(1, a=na, b=nb, c=nc, d=nd)


def row_pair_factor(extracted: Partition) -> LaurentPoly:
    """Product over extracted equal-row pairs: ac Q^((l-1)/2) for odd l, Q^(l/2) for even l."""
    out = mono(1)
    parts = extracted.parts
    for k in range(0, len(parts), 2):
        ell = parts[k]
        if ell % 2:
            h = (ell - 1) // 2
            out = out * mono(1, a=h + 1, b=h, c=h + 1, d=h)
        else:
            h = ell // 2
            out = out * mono(1, a=h, b=h, c=h, d=h)
    return out


def column_pair_factor(extracted: Partition) -> LaurentPoly:
    """Product over extracted column pairs of height 2h+1: ab Q^h."""
    out = mono(1)
    cols = conjugate(extracted).parts
    for k in range(0, len(cols), 2):
        h = (cols[k] - 1) // 2
        out = out * mono(1, a=h + 1, b=h + 1, c=h, d=h)
    return out

"""Partitions, their statistics and constrained brute-force enumeration.

Enumeration is the ground truth every closed form is checked against, so it
is kept deliberately simple: generate candidates part by part, apply the
structural constraints while generating, and filter statistics afterwards.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, fields
from typing import Iterator, Mapping, Sequence

from .qpoly import INDEX, NVARS, Grading, LaurentPoly, TruncatedSeries


class InfiniteUniverseError(ValueError):
    """The constraints do not describe a finite set of partitions."""


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for k, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive: {parts}")
            if k and parts[k - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def norm(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __repr__(self):
        return f"Partition{self}"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the strict text form ``(7,5,2)``; ``()`` is the empty partition."""
        m = re.fullmatch(r"\((\d+(?:,\d+)*)?\)", text.strip())
        if not m:
            raise ValueError(f"malformed partition {text!r}")
        body = m.group(1)
        return cls(tuple(int(p) for p in body.split(","))) if body else cls()

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def stats(self) -> "PartitionStats":
        return stats(self)


@dataclass(frozen=True)
class PartitionStats:
    norm: int
    num_parts: int
    i_odd_indexed_odd: int
    j_even_indexed_odd: int
    m_even_parts: int
    bg_rank: int
    alt_sum: int
    c1mod4: int
    c3mod4: int
    r0: int
    r1: int
    boulet: tuple
    odd_parts: int


STAT_FIELDS = tuple(f.name for f in fields(PartitionStats))

# short names accepted by filters and the command line
STAT_ALIASES = {
    "i": "i_odd_indexed_odd",
    "j": "j_even_indexed_odd",
    "m": "m_even_parts",
    "bg": "bg_rank",
    "alt": "alt_sum",
    "c1mod4": "c1mod4",
    "c3mod4": "c3mod4",
    "odd": "odd_parts",
    "parts": "num_parts",
    "norm": "norm",
}


def resolve_stat(name: str) -> str:
    name = STAT_ALIASES.get(name, name)
    if name not in STAT_FIELDS or name == "boulet":
        raise KeyError(f"unknown statistic {name!r}")
    return name


def stats(pi: Partition) -> PartitionStats:
    i = j = m = alt = c1 = c3 = 0
    na = nb = nc = nd = 0
    for k, p in enumerate(pi.parts):
        odd_row = k % 2 == 0
        hi, lo = (p + 1) // 2, p // 2
        if odd_row:
            na += hi
            nb += lo
            alt += p
        else:
            nc += hi
            nd += lo
            alt -= p
        if p % 2:
            if odd_row:
                i += 1
            else:
                j += 1
            if p % 4 == 1:
                c1 += 1
            else:
                c3 += 1
        else:
            m += 1
    return PartitionStats(
        norm=pi.norm,
        num_parts=len(pi.parts),
        i_odd_indexed_odd=i,
        j_even_indexed_odd=j,
        m_even_parts=m,
        bg_rank=i - j,
        alt_sum=alt,
        c1mod4=c1,
        c3mod4=c3,
        r0=na + nd,
        r1=nb + nc,
        boulet=(na, nb, nc, nd),
        odd_parts=i + j,
    )


def conjugate(pi: Partition) -> Partition:
    parts = pi.parts
    if not parts:
        return Partition()
    return Partition(tuple(sum(1 for p in parts if p > col) for col in range(parts[0])))


@dataclass(frozen=True)
class PartitionConstraints:
    """Declarative description of a finite set of partitions.

    ``gollnitz_gap`` asks for parts greater than 1 that differ by at least 2
    with no two odd parts differing by exactly 2; ``allow_ones`` keeps the
    difference conditions but admits the part 1. ``part_residues`` is an
    optional ``(modulus, residues)`` restriction on every part.
    """

    max_part: int | None = None
    max_parts: int | None = None
    distinct: bool = False
    gollnitz_gap: bool = False
    fixed_norm: int | None = None
    max_norm: int | None = None
    stat_filters: tuple = ()
    allow_ones: bool = False
    part_residues: tuple | None = None

    def __post_init__(self):
        filters = self.stat_filters
        if isinstance(filters, Mapping):
            filters = tuple(filters.items())
        filters = tuple(sorted((resolve_stat(k), int(v)) for k, v in filters))
        object.__setattr__(self, "stat_filters", filters)
        if self.part_residues is not None:
            mod, res = self.part_residues
            object.__setattr__(self, "part_residues", (int(mod), frozenset(r % mod for r in res)))

    def is_finite(self) -> bool:
        return (self.fixed_norm is not None or self.max_norm is not None
                or (self.max_part is not None and self.max_parts is not None)
                or (self.max_part is not None and (self.distinct or self.gollnitz_gap)))

    def norm_bound(self) -> int:
        if not self.is_finite():
            raise InfiniteUniverseError("set max_norm, fixed_norm, or both max_part and max_parts")
        bounds = [v for v in (self.fixed_norm, self.max_norm) if v is not None]
        if self.max_part is not None:
            n = self.max_part
            if self.distinct or self.gollnitz_gap:
                k = n if self.max_parts is None else min(n, self.max_parts)
                bounds.append(k * n - k * (k - 1) // 2)
            elif self.max_parts is not None:
                bounds.append(n * self.max_parts)
        return min(bounds)

    def with_(self, **changes) -> "PartitionConstraints":
        kw = {f.name: getattr(self, f.name) for f in fields(self)}
        kw.update(changes)
        return PartitionConstraints(**kw)

    def accepts(self, pi: Partition) -> bool:
        """Membership test, independent of the generator."""
        parts = pi.parts
        n = pi.norm
        if self.fixed_norm is not None and n != self.fixed_norm:
            return False
        if self.max_norm is not None and n > self.max_norm:
            return False
        if self.max_part is not None and parts and parts[0] > self.max_part:
            return False
        if self.max_parts is not None and len(parts) > self.max_parts:
            return False
        if self.distinct and len(set(parts)) != len(parts):
            return False
        if self.part_residues is not None:
            mod, res = self.part_residues
            if any(p % mod not in res for p in parts):
                return False
        if self.gollnitz_gap:
            if not self.allow_ones and parts and parts[-1] < 2:
                return False
            for u, v in zip(parts, parts[1:]):
                if u - v < 2 or (u % 2 and v % 2 and u - v == 2):
                    return False
        if self.stat_filters:
            st = stats(pi)
            return all(getattr(st, k) == v for k, v in self.stat_filters)
        return True


def _tails(remaining: int, cap: int, slots: int | None, c: PartitionConstraints,
           exact: bool, prev: int | None) -> Iterator[tuple]:
    # yields tails in decreasing lexicographic order; the empty tail comes last
    if slots is None or slots > 0:
        top = min(cap, remaining)
        mod_res = c.part_residues
        lowest = 2 if (c.gollnitz_gap and not c.allow_ones) else 1
        for p in range(top, lowest - 1, -1):
            if mod_res is not None and p % mod_res[0] not in mod_res[1]:
                continue
            if prev is not None and c.gollnitz_gap:
                if prev - p < 2 or (prev % 2 and p % 2 and prev - p == 2):
                    continue
            rest = remaining - p
            next_slots = None if slots is None else slots - 1
            if exact and rest:
                # prune: the rest must fit below p
                width = p - 1 if (c.distinct or c.gollnitz_gap) else p
                if width <= 0:
                    continue
                if next_slots is not None and rest > width * next_slots:
                    continue
            next_cap = p - 1 if (c.distinct or c.gollnitz_gap) else p
            if c.gollnitz_gap:
                next_cap = p - 2
            for tail in _tails(rest, next_cap, next_slots, c, exact, p):
                yield (p,) + tail
    if not exact or remaining == 0:
        yield ()


def enumerate_partitions(c: PartitionConstraints) -> Iterator[Partition]:
    """Every partition satisfying ``c`` exactly once, in decreasing lexicographic order."""
    if not c.is_finite():
        raise InfiniteUniverseError("set max_norm, fixed_norm, or both max_part and max_parts")
    exact = c.fixed_norm is not None
    total = c.fixed_norm if exact else c.norm_bound()
    if exact and c.max_norm is not None and c.fixed_norm > c.max_norm:
        return
    cap = total if c.max_part is None else min(c.max_part, total)
    for parts in _tails(total, cap, c.max_parts, c, exact, None):
        pi = Partition(parts)
        if c.stat_filters:
            st = stats(pi)
            if any(getattr(st, k) != v for k, v in c.stat_filters):
                continue
        yield pi


def count(c: PartitionConstraints) -> int:
    return sum(1 for _ in enumerate_partitions(c))


class WeightKind(enum.Enum):
    Q_NORM = "q"
    QTZ = "qtz"        # q^norm t^i z^j
    BG = "bg"          # q^norm t^bg
    ALT = "alt"        # q^norm z^alt
    BOULET = "boulet"  # a^#a b^#b c^#c d^#d


def _weight_exponent(st: PartitionStats, kind: WeightKind) -> tuple:
    e = [0] * NVARS
    if kind is WeightKind.BOULET:
        na, nb, nc, nd = st.boulet
        e[INDEX["a"]], e[INDEX["b"]], e[INDEX["c"]], e[INDEX["d"]] = na, nb, nc, nd
        return tuple(e)
    e[INDEX["q"]] = st.norm
    if kind is WeightKind.QTZ:
        e[INDEX["t"]] = st.i_odd_indexed_odd
        e[INDEX["z"]] = st.j_even_indexed_odd
    elif kind is WeightKind.BG:
        e[INDEX["t"]] = st.bg_rank
    elif kind is WeightKind.ALT:
        e[INDEX["z"]] = st.alt_sum
    return tuple(e)


def boulet_weight(pi: Partition, substitution: Sequence[LaurentPoly] | None = None) -> LaurentPoly:
    """Four-variable decorated weight, optionally with (a, b, c, d) replaced by monomials."""
    na, nb, nc, nd = stats(pi).boulet
    if substitution is None:
        return LaurentPoly.monomial(1, a=na, b=nb, c=nc, d=nd)
    out = LaurentPoly.const(1)
    for m, k in zip(substitution, (na, nb, nc, nd)):
        out = out * m ** k
    return out


def gf_enumerated(c: PartitionConstraints, weight: WeightKind | str = WeightKind.Q_NORM,
                  cutoff: int | None = None, substitution: Sequence[LaurentPoly] | None = None,
                  grading: Grading | None = None):
    """Sum of a weight over the enumerated universe.

    Finite universes give an exact :class:`LaurentPoly`. When ``cutoff`` (or a
    full ``grading``) is given the norm is capped there and the result is a
    :class:`TruncatedSeries`; for an infinite universe a cutoff is required.
    """
    weight = WeightKind(weight)
    if grading is None and cutoff is not None:
        grading = Grading.make(cutoff)
    if grading is not None:
        bound = grading.cutoff if c.max_norm is None else min(c.max_norm, grading.cutoff)
        universe = c.with_(max_norm=bound)
    else:
        if not c.is_finite():
            raise InfiniteUniverseError("a cutoff is required for an infinite universe")
        universe = c
    terms: dict = {}
    if substitution is not None:
        if weight is not WeightKind.BOULET:
            raise ValueError("substitution only applies to the boulet weight")
        mons = [m.as_monomial() for m in substitution]
        for pi in enumerate_partitions(universe):
            counts = stats(pi).boulet
            e = [0] * NVARS
            coef = 1
            for (mexp, mc), k in zip(mons, counts):
                if k:
                    for idx, v in enumerate(mexp):
                        e[idx] += v * k
                    coef *= mc ** k
            key = tuple(e)
            terms[key] = terms.get(key, 0) + coef
    else:
        for pi in enumerate_partitions(universe):
            key = _weight_exponent(stats(pi), weight)
            terms[key] = terms.get(key, 0) + 1
    poly = LaurentPoly(terms)
    if grading is not None:
        return TruncatedSeries(poly, grading)
    return poly

"""Identity registry, comparison engine and suites.

Every registered identity computes one or more comparisons. The first
comparison of an identity that has a brute-force oracle is always
closed form versus enumeration; comparisons between two builders are
marked ``cross`` and are extra evidence, never a substitute for the oracle.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import bijections as bij
from . import closed_forms as cf
from .partitions import (Partition, PartitionConstraints as PC, count, enumerate_partitions,
                         gf_enumerated, stats)
from .qpoly import (ONE, Grading, LaurentPoly, TruncatedSeries, ZERO, format_poly,
                    gaussian_binomial, mono, phi_terminating, pochhammer_inv, rat_pochhammer,
                    rogers_szego)

DEFAULT_SEED = 0xB6
DEFAULT_POINTS = 20

EXACT, TRUNCATED, RATIONAL = "exact", "truncated", "rational"


@dataclass(frozen=True)
class Mode:
    kind: str
    cutoff: int | None = None
    points: int | None = None
    seed: int | None = None

    def __str__(self):
        if self.kind == TRUNCATED:
            return f"truncated:{self.cutoff}"
        if self.kind == RATIONAL:
            return f"rational:{self.points}:{self.seed}"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> "Mode":
        head, *rest = text.split(":")
        if head == EXACT and not rest:
            return cls(EXACT)
        if head == TRUNCATED and len(rest) <= 1:
            return cls(TRUNCATED, int(rest[0]) if rest else None)
        if head == RATIONAL and len(rest) <= 2:
            pts = int(rest[0]) if rest else None
            seed = int(rest[1]) if len(rest) > 1 else None
            return cls(RATIONAL, points=pts, seed=seed)
        raise ValueError(f"unknown mode {text!r}")


@dataclass(frozen=True)
class IdentityInstance:
    id: str
    params: tuple = ()
    mode: Mode | None = None

    @classmethod
    def make(cls, id: str, mode: Mode | None = None, **params) -> "IdentityInstance":
        return cls(id, tuple(sorted(params.items())), mode)

    @property
    def param_dict(self) -> dict:
        return dict(self.params)


@dataclass
class Comparison:
    label: str
    lhs: object
    rhs: object
    kind: str = "oracle"   # "oracle", "cross" or "algebraic"


@dataclass
class VerificationReport:
    instance: IdentityInstance
    status: str
    lhs: str | None
    rhs: str | None
    first_discrepancy: dict | None
    elapsed_ms: int
    checks: list = field(default_factory=list)
    error: str | None = None
    mode: Mode | None = None

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "id": self.instance.id,
            "params": self.instance.param_dict,
            "mode": str(self.mode) if self.mode else None,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "first_discrepancy": self.first_discrepancy,
            "elapsed_ms": self.elapsed_ms if timing else 0,
            "checks": self.checks,
            "error": self.error,
        }
        return out


class RegistryError(ValueError):
    pass


@dataclass(frozen=True)
class Identity:
    id: str
    title: str
    params: tuple
    modes: tuple
    check: Callable
    optional: tuple = ()
    default_cutoff: int = 30
    rational_vars: tuple = ()

    def default_mode(self, params: dict) -> Mode:
        if EXACT in self.modes and (TRUNCATED not in self.modes or "n" in params):
            return Mode(EXACT)
        if TRUNCATED in self.modes:
            return Mode(TRUNCATED, self.default_cutoff)
        return Mode(RATIONAL, points=DEFAULT_POINTS, seed=DEFAULT_SEED)


REGISTRY: dict[str, Identity] = {}


def register(id, title, params, modes, cutoff=30, optional=(), rational_vars=()):
    def deco(fn):
        REGISTRY[id] = Identity(id, title, tuple(params), tuple(modes), fn, tuple(optional),
                                cutoff, tuple(rational_vars))
        return fn
    return deco


def list_identities() -> list[dict]:
    return [{"id": e.id, "title": e.title, "params": list(e.params),
             "optional": [k for k, _ in e.optional], "modes": list(e.modes)}
            for e in REGISTRY.values()]


# -- helpers ------------------------------------------------------------------

def _need(cond: bool, msg: str):
    if not cond:
        raise RegistryError(msg)


def _bit(v, name):
    _need(v in (0, 1), f"{name} must be 0 or 1")


def enum_gf(mode: Mode, weight="q", substitution=None, **constraints):
    c = PC(**constraints)
    if mode.kind == TRUNCATED:
        return gf_enumerated(c, weight, cutoff=mode.cutoff, substitution=substitution)
    return gf_enumerated(c, weight, substitution=substitution)


def counts_or_series(p: dict, mode: Mode, label: str, left: dict, right: dict,
                     closed=None) -> list:
    """Count identity at norm n (exact mode) or as series through the cutoff."""
    if mode.kind == EXACT:
        _need("n" in p, "exact mode of a count identity needs n")
        n = p["n"]
        out = [Comparison(label, count(PC(fixed_norm=n, **left)), count(PC(fixed_norm=n, **right)))]
        if closed is not None:
            poly = closed(n)
            val = poly.body.coeff("q", n) if isinstance(poly, TruncatedSeries) else poly.coeff("q", n)
            out.append(Comparison("closed form coefficient", out[0].lhs, val.constant_term(), "oracle"))
        return out
    g = Grading.make(mode.cutoff)
    lhs = gf_enumerated(PC(**left), cutoff=mode.cutoff)
    rhs = gf_enumerated(PC(**right), cutoff=mode.cutoff)
    out = [Comparison(label, lhs, rhs)]
    if closed is not None:
        out.append(Comparison("closed form", lhs, TruncatedSeries(_as_poly(closed(mode.cutoff)), g)))
    return out


def _as_poly(v):
    return v.body if isinstance(v, TruncatedSeries) else v


# -- distinct parts with fixed odd-indexed and even-indexed odd parts --

@register("T1_1", "distinct partitions: i odd-indexed/j even-indexed odd parts vs i parts 1 mod 4/j parts 3 mod 4",
          ["i", "j"], [EXACT, TRUNCATED], optional=[("n", None)])
def _t1_1(p, mode):
    i, j = p["i"], p["j"]
    _need(i >= 0 and j >= 0, "i, j must be non-negative")
    if mode.kind == EXACT:
        return counts_or_series(p, mode, "p(i,j,n) = p'(i,j,n)",
                                dict(distinct=True, stat_filters={"i": i, "j": j}),
                                dict(distinct=True, stat_filters={"c1mod4": i, "c3mod4": j}),
                                closed=lambda n: cf.p_distinct_limit(i, j, n))
    enum = enum_gf(mode, distinct=True, stat_filters={"i": i, "j": j})
    return [Comparison("product vs enumeration", enum, cf.p_distinct_limit(i, j, mode.cutoff)),
            Comparison("residue classes vs enumeration", enum,
                       enum_gf(mode, distinct=True, stat_filters={"c1mod4": i, "c3mod4": j}))]


@register("E1_GF13MOD4", "k distinct parts congruent to 2+(-1)^mu mod 4", ["k", "mu"], [TRUNCATED])
def _e1(p, mode):
    k, mu = p["k"], p["mu"]
    _bit(mu, "mu")
    _need(k >= 0, "k must be non-negative")
    enum = enum_gf(mode, distinct=True, part_residues=(4, (2 + (-1) ** mu,)),
                   stat_filters={"parts": k})
    return [Comparison("product vs enumeration", enum, cf.genfunc_residue(k, mu, Grading.make(mode.cutoff)))]


@register("T2_1", "bounded distinct partitions with fixed i and j", ["bound", "i", "j"], [EXACT])
def _t2_1(p, mode):
    b, i, j = p["bound"], p["i"], p["j"]
    _need(b >= 0 and i >= 0 and j >= 0, "parameters must be non-negative")
    enum = enum_gf(mode, distinct=True, max_part=b, stat_filters={"i": i, "j": j})
    return [Comparison("closed form vs enumeration", cf.p_distinct_closed(b, i, j), enum),
            Comparison("single-sum form", cf.p_distinct_closed(b, i, j),
                       cf.p_distinct_single_sum(b, i, j), "cross")]


def _recurrence(table: Callable, b: int, i: int, j: int) -> LaurentPoly:
    nu = b % 2
    out = table(b - 1, i, j)
    if i >= nu:
        out = out + cf.qp(b) * table(b - 1, j, i - nu)
    return out


@register("L2_2", "largest-part recurrence for the bounded distinct generating function",
          ["bound", "i", "j"], [EXACT])
def _l2_2(p, mode):
    b, i, j = p["bound"], p["i"], p["j"]
    _need(b >= 0 and i >= 0 and j >= 0, "parameters must be non-negative")
    enum = lambda bb, ii, jj: gf_enumerated(PC(distinct=True, max_part=bb,
                                               stat_filters={"i": ii, "j": jj}))
    if b == 0:
        init = ONE if (i, j) == (0, 0) else ZERO
        return [Comparison("initial condition", cf.p_distinct_closed(0, i, j), init),
                Comparison("initial condition (enumeration)", enum(0, i, j), init)]
    return [Comparison("recurrence on enumeration", enum(b, i, j), _recurrence(enum, b, i, j)),
            Comparison("recurrence on closed form", cf.p_distinct_closed(b, i, j),
                       _recurrence(cf.p_distinct_closed, b, i, j), "cross")]


@register("T2_3", "summing over one index: products with k parts in a residue class",
          ["k", "variant"], [TRUNCATED])
def _t2_3(p, mode):
    k, v = p["k"], p["variant"]
    _need(k >= 0 and v in (1, 2), "k >= 0 and variant in {1, 2}")
    over, fixed = ("i", "j") if v == 1 else ("j", "i")
    enum = enum_gf(mode, distinct=True, stat_filters={fixed: k})
    g = Grading.make(mode.cutoff)
    summed = TruncatedSeries(ZERO, g)
    for other in range(mode.cutoff + 1):
        ij = (other, k) if v == 1 else (k, other)
        term = cf.p_distinct_limit(*ij, g)
        if term.body.is_zero():
            break
        summed = summed + term
    return [Comparison("product vs enumeration", enum, cf.savage_sills_sum(k, over, g)),
            Comparison("sum form", cf.savage_sills_sum(k, over, g, middle=True),
                       cf.savage_sills_sum(k, over, g), "cross"),
            Comparison("summed limits", summed, cf.savage_sills_sum(k, over, g), "cross")]


@register("T2_4", "k odd-indexed (even-indexed) odd parts vs exactly k parts 1 (3) mod 4",
          ["k", "variant"], [EXACT, TRUNCATED], optional=[("n", None)])
def _t2_4(p, mode):
    k, v = p["k"], p["variant"]
    _need(k >= 0 and v in (1, 2), "k >= 0 and variant in {1, 2}")
    left = {"i": k} if v == 1 else {"j": k}
    right = {"c1mod4": k} if v == 1 else {"c3mod4": k}
    over = "j" if v == 1 else "i"
    return counts_or_series(p, mode, "index statistic vs residue count",
                            dict(distinct=True, stat_filters=left),
                            dict(distinct=True, stat_filters=right),
                            closed=lambda n: cf.savage_sills_sum(k, over, n))


@register("E2_PRODSILLS", "product rewriting of the k = 0 case into mod 8 products",
          ["variant"], [TRUNCATED])
def _e2(p, mode):
    v = p["variant"]
    _need(v in (1, 2), "variant in {1, 2}")
    g = Grading.make(mode.cutoff)
    residues = (1, 5, 6) if v == 1 else (2, 3, 7)
    fixed = {"j": 0} if v == 1 else {"i": 0}
    return [Comparison("mod 8 product vs enumeration", cf.gollnitz_product(v, g),
                       enum_gf(mode, part_residues=(8, residues))),
            Comparison("product of pochhammers vs enumeration", cf.savage_sills_product(v, g),
                       enum_gf(mode, distinct=True, stat_filters=fixed)),
            Comparison("product identity", cf.savage_sills_product(v, g), cf.gollnitz_product(v, g),
                       "cross")]


@register("T2_5", "little Gollnitz: gap conditions vs parts 1,5,6 (variant 1) or 2,3,7 mod 8 (variant 2)",
          ["variant"], [EXACT, TRUNCATED], optional=[("n", None)])
def _t2_5(p, mode):
    v = p["variant"]
    _need(v in (1, 2), "variant in {1, 2}")
    residues = (1, 5, 6) if v == 1 else (2, 3, 7)
    return counts_or_series(p, mode, "gap partitions vs residue partitions",
                            dict(gollnitz_gap=True, allow_ones=(v == 1)),
                            dict(part_residues=(8, residues)),
                            closed=lambda n: cf.gollnitz_product(v, n))


@register("T2_6", "distinct parts with even odd-indexed (1) or even-indexed (2) parts vs mod 8 classes",
          ["variant"], [EXACT, TRUNCATED], optional=[("n", None)])
def _t2_6(p, mode):
    v = p["variant"]
    _need(v in (1, 2), "variant in {1, 2}")
    fixed = {"i": 0} if v == 1 else {"j": 0}
    residues = (2, 3, 7) if v == 1 else (1, 5, 6)
    return counts_or_series(p, mode, "parity-indexed distinct vs residue partitions",
                            dict(distinct=True, stat_filters=fixed),
                            dict(part_residues=(8, residues)),
                            closed=lambda n: cf.gollnitz_product(3 - v, n))


# -- BG-rank --------------------------------------------------------------------

@register("T3_1", "distinct parts <= bound with BG-rank k", ["bound", "k"], [EXACT])
def _t3_1(p, mode):
    b, k = p["bound"], p["k"]
    _need(b >= 0, "bound must be non-negative")
    return [Comparison("closed form vs enumeration", cf.bg_closed(b, k),
                       enum_gf(mode, distinct=True, max_part=b, stat_filters={"bg": k}))]


@register("T3_2", "all partitions with parts <= bound and BG-rank k", ["bound", "k"], [TRUNCATED],
          cutoff=20)
def _t3_2(p, mode):
    b, k = p["bound"], p["k"]
    _need(b >= 0, "bound must be non-negative")
    g = Grading.make(mode.cutoff)
    closed = cf.bg_closed(b, k, restricted=False, grading=g)
    via_distinct = cf.bg_closed(b, k) * pochhammer_inv(cf.qp(2), cf.qp(2), b, g)
    return [Comparison("closed form vs enumeration", closed,
                       enum_gf(mode, max_part=b, stat_filters={"bg": k})),
            Comparison("distinct form over even multiplicities", closed, via_distinct, "cross")]


@register("T3_3", "sum over BG-rank of the distinct closed forms", ["bound"], [EXACT])
def _t3_3(p, mode):
    b = p["bound"]
    _need(b >= 0, "bound must be non-negative")
    total = ZERO
    for k in cf.bg_range(b):
        total = total + cf.bg_closed(b, k)
    return [Comparison("sum vs enumeration", total, enum_gf(mode, distinct=True, max_part=b)),
            Comparison("sum vs product", total, cf.minus_q_poch(b), "cross"),
            Comparison("Rogers-Szego at (q, q^2)", rogers_szego(b, cf.q, cf.qp(2)),
                       cf.minus_q_poch(b), "cross")]


@register("C3_4", "sum over BG-rank of the unrestricted closed forms", ["bound"], [TRUNCATED], cutoff=20)
def _c3_4(p, mode):
    b = p["bound"]
    _need(b >= 0, "bound must be non-negative")
    g = Grading.make(mode.cutoff)
    total = TruncatedSeries(ZERO, g)
    for k in cf.bg_range(b):
        total = total + cf.bg_closed(b, k, restricted=False, grading=g)
    return [Comparison("sum vs enumeration", total, enum_gf(mode, max_part=b)),
            Comparison("sum vs 1/(q;q)_bound", total, pochhammer_inv(cf.q, cf.q, b, g), "cross")]


@register("E3_CHB", "Gaussian binomial under q -> 1/q", ["n", "m"], [EXACT])
def _e3(p, mode):
    n, m = p["n"], p["m"]
    _need(n >= 0 and m >= 0, "n, m must be non-negative")
    inv = mono(1, q=-1)
    direct = gaussian_binomial(n + m, n, inv)
    return [Comparison("base 1/q vs q^(-nm) base q", direct,
                       mono(1, q=-n * m) * gaussian_binomial(n + m, n, cf.q), "algebraic"),
            Comparison("substitution q -> 1/q", direct,
                       gaussian_binomial(n + m, n, cf.q).substitute({"q": inv}), "algebraic")]


# -- Rogers-Szego consequences --------------------------------------------------------

@register("T4_1", "double sum over (i, j) equals a single sum", ["bound"], [EXACT])
def _t4_1(p, mode):
    b = p["bound"]
    _need(b >= 0, "bound must be non-negative")
    single = cf.double_to_single(b)
    return [Comparison("single sum vs enumeration", single,
                       enum_gf(mode, "qtz", distinct=True, max_part=b)),
            Comparison("double sum of closed forms", cf.double_sum_closed(b), single, "cross"),
            Comparison("four-variable form at (qt, q/t, qz, q/z)", cf.at(cf.psi_closed(b), cf.BOULET_BT),
                       single, "cross")]


@register("T4_2", "triple-binomial single sum with a polynomial right side", ["N", "nu", "i", "j"], [EXACT])
def _t4_2(p, mode):
    N, nu, i, j = p["N"], p["nu"], p["i"], p["j"]
    _bit(nu, "nu")
    _need(N >= 0 and i >= 0 and j >= 0, "parameters must be non-negative")
    rhs = cf.new52_rhs(N, nu, i, j)
    lead = cf.qp(2 * i * i - i + 2 * j * j + j)
    enum = enum_gf(mode, distinct=True, max_part=2 * N + nu, stat_filters={"i": i, "j": j})
    return [Comparison("right side at q^2 vs enumeration",
                       lead * cf.new52_rhs(N, nu, i, j, cf.qp(2)), enum),
            Comparison("left vs right", cf.new52_lhs(N, nu, i, j), rhs, "algebraic")]


def _gollnitz_q(p, mode, which):
    N, nu = p["N"], p["nu"]
    _bit(nu, "nu")
    _need(N >= 0, "N must be non-negative")
    fixed = {"i": 0} if which == "a" else {"j": 0}
    rhs = cf.little_gollnitz_q(N, nu, which, "rhs")
    return [Comparison("right side vs enumeration", rhs,
                       enum_gf(mode, distinct=True, max_part=2 * N + nu, stat_filters=fixed)),
            Comparison("left vs right", cf.little_gollnitz_q(N, nu, which, "lhs"), rhs, "cross")]


@register("C4_3a", "q-series identity at (t, z) = (0, 1)", ["N", "nu"], [EXACT])
def _c4_3a(p, mode):
    return _gollnitz_q(p, mode, "a")


@register("C4_3b", "q-series identity at (t, z) = (1, 0)", ["N", "nu"], [EXACT])
def _c4_3b(p, mode):
    return _gollnitz_q(p, mode, "b")


@register("T4_4", "(-q;q^4)_k sum equals (-q^3;q^4)_{N-k} sum", ["N"], [EXACT])
def _t4_4(p, mode):
    N = p["N"]
    _need(N >= 0, "N must be non-negative")
    lhs = cf.connect_sides(N, "lhs")
    return [Comparison("left side vs enumeration", lhs,
                       enum_gf(mode, distinct=True, max_part=2 * N, stat_filters={"i": 0})),
            Comparison("left vs right", lhs, cf.connect_sides(N, "rhs"), "cross")]


@register("T4_5", "Cigler's (y;q)_k z^k identity in symbolic y, z", ["N"], [EXACT])
def _t4_5(p, mode):
    N = p["N"]
    _need(N >= 0, "N must be non-negative")
    return [Comparison("left vs right", cf.cigler_sides(N, "lhs"), cf.cigler_sides(N, "rhs"),
                       "algebraic")]


# -- four-variable weights -------------------------------------------------------------

@register("T5_1a", "weighted distinct partitions: infinite product", [], [TRUNCATED], cutoff=14)
def _t5_1a(p, mode):
    return [Comparison("product vs enumeration", cf.psi_infinite(mode.cutoff),
                       enum_gf(mode, "boulet", distinct=True))]


@register("T5_1b", "weighted partitions: infinite product", [], [TRUNCATED], cutoff=14)
def _t5_1b(p, mode):
    phi = cf.phi_infinite(mode.cutoff)
    g1 = Grading.make(mode.cutoff)
    return [Comparison("product vs enumeration", phi, enum_gf(mode, "boulet")),
            Comparison("all variables q gives 1/(q;q)_inf",
                       TruncatedSeries(cf.at(phi.body, cf.BOULET_Q), g1),
                       pochhammer_inv(cf.q, cf.q, None, g1), "cross")]


@register("T5_2a", "weighted distinct partitions with parts <= bound", ["bound"], [EXACT])
def _t5_2a(p, mode):
    b = p["bound"]
    _need(b >= 0, "bound must be non-negative")
    psi = cf.psi_closed(b)
    return [Comparison("closed form vs enumeration", psi, enum_gf(mode, "boulet", distinct=True, max_part=b)),
            Comparison("all variables q gives (-q;q)_bound", cf.at(psi, cf.BOULET_Q),
                       cf.minus_q_poch(b), "cross")]


@register("T5_2b", "weighted partitions with parts <= bound", ["bound"], [TRUNCATED], cutoff=14)
def _t5_2b(p, mode):
    b = p["bound"]
    _need(b >= 0, "bound must be non-negative")
    return [Comparison("closed form vs enumeration", cf.phi_closed(b, mode.cutoff),
                       enum_gf(mode, "boulet", max_part=b))]


@register("T5_3", "x-generating function of the bounded distinct weights", ["nu"], [TRUNCATED],
          cutoff=12, optional=[("x_cutoff", 4)])
def _t5_3(p, mode):
    nu = p["nu"]
    _bit(nu, "nu")
    xc = p.get("x_cutoff", 4)
    g = cf.x_grading(xc, mode.cutoff)
    X = mono(1, x=1)
    from_enum = TruncatedSeries(ZERO, g)
    for N in range(xc + 1):
        psi = gf_enumerated(PC(distinct=True, max_part=2 * N + nu), "boulet")
        from_enum = from_enum + (X ** N) * pochhammer_inv(cf.Q, cf.Q, N, g) * TruncatedSeries(psi, g)
    product = cf.psi_x_series(nu, xc, mode.cutoff, "product")
    return [Comparison("product vs enumerated sum", product, from_enum),
            Comparison("product vs closed-form sum", product,
                       cf.psi_x_series(nu, xc, mode.cutoff, "sum"), "cross")]


@register("E5_PSI2PHI", "weighted partitions = weighted distinct partitions over even multiplicities",
          ["bound"], [TRUNCATED], cutoff=14)
def _e5_psi2phi(p, mode):
    b = p["bound"]
    _need(b >= 0, "bound must be non-negative")
    N, nu = cf.split(b)
    g = Grading.make(mode.cutoff)
    psi = gf_enumerated(PC(distinct=True, max_part=b), "boulet")
    bounded = (TruncatedSeries(psi, g) * pochhammer_inv(cf.AC, cf.Q, N + nu, g)
               * pochhammer_inv(cf.Q, cf.Q, N, g))
    psi_all = enum_gf(mode, "boulet", distinct=True)
    unbounded = psi_all * pochhammer_inv(cf.AC, cf.Q, None, g) * pochhammer_inv(cf.Q, cf.Q, None, g)
    return [Comparison("bounded", enum_gf(mode, "boulet", max_part=b), bounded),
            Comparison("unbounded", enum_gf(mode, "boulet"), unbounded)]


@register("T5_4", "Rogers-Szego H_bound(zq, q^2) as a single sum", ["bound"], [EXACT])
def _t5_4(p, mode):
    b = p["bound"]
    _need(b >= 0, "bound must be non-negative")
    single = cf.hermite_single_sum(b)
    return [Comparison("single sum vs enumeration", single, enum_gf(mode, "alt", distinct=True, max_part=b)),
            Comparison("single sum vs definition", single, cf.rs_specializations(b, "definition"), "cross")]


@register("E5_RS2PSI", "H_bound(zq, q^2) equals the distinct weight at (zq, zq, q/z, q/z)", ["bound"], [EXACT])
def _e5_rs2psi(p, mode):
    b = p["bound"]
    _need(b >= 0, "bound must be non-negative")
    rs = cf.rs_specializations(b, "definition")
    return [Comparison("definition vs enumeration", rs,
                       enum_gf(mode, "boulet", substitution=cf.BOULET_ALT, distinct=True, max_part=b)),
            Comparison("definition vs specialized closed form", rs, cf.rs_specializations(b, "RS2PSI"), "cross")]


@register("E5_EXTRACT", "distinct partitions with alternating sum k: q^k [bound; k]_{q^2}",
          ["bound", "k"], [EXACT])
def _e5_extract(p, mode):
    b, k = p["bound"], p["k"]
    _need(b >= 0 and k >= 0, "parameters must be non-negative")
    closed = cf.alt_extraction(b, k)
    return [Comparison("closed form vs enumeration", closed,
                       enum_gf(mode, distinct=True, max_part=b, stat_filters={"alt": k})),
            Comparison("coefficient of z^k in H_bound(zq, q^2)", closed,
                       cf.rs_specializations(b, "definition").coeff("z", k), "cross")]


@register("T5_6", "k odd parts <= 2N-2k+1 vs distinct parts <= N with alternating sum k",
          ["N", "k"], [EXACT, TRUNCATED], optional=[("n", None)])
def _t5_6(p, mode):
    N, k = p["N"], p["k"]
    _need(N >= 0 and k >= 0, "parameters must be non-negative")
    return counts_or_series(p, mode, "odd-part partitions vs alternating sums",
                            dict(part_residues=(2, (1,)), max_part=max(2 * N - 2 * k + 1, 0),
                                 stat_filters={"parts": k}),
                            dict(distinct=True, max_part=N, stat_filters={"alt": k}),
                            closed=lambda n: cf.alt_extraction(N, k))


@register("E5_EXTRACTPHI", "partitions with parts <= bound and alternating sum k",
          ["bound", "k"], [TRUNCATED], cutoff=20)
def _e5_extractphi(p, mode):
    b, k = p["bound"], p["k"]
    _need(b >= 0 and k >= 0, "parameters must be non-negative")
    g = Grading.make(mode.cutoff)
    closed = cf.alt_extraction_phi(b, k, g)
    phi = cf.phi_closed(b, g).substitute(dict(zip("abcd", cf.BOULET_ALT)))
    return [Comparison("closed form vs enumeration", closed,
                       enum_gf(mode, max_part=b, stat_filters={"alt": k})),
            Comparison("coefficient of z^k in the specialized weight", closed, phi.coeff("z", k), "cross")]


def _conjugates_match(n: int, N: int, k: int) -> tuple[list, list]:
    left = sorted(str(pi.conjugate()) for pi in
                  enumerate_partitions(PC(fixed_norm=n, max_parts=N, stat_filters={"odd": k})))
    right = sorted(str(pi) for pi in
                   enumerate_partitions(PC(fixed_norm=n, max_part=N, stat_filters={"alt": k})))
    return left, right


@register("T5_7", "at most N parts with k odd parts vs parts <= N with alternating sum k",
          ["N", "k"], [EXACT, TRUNCATED], optional=[("n", None)])
def _t5_7(p, mode):
    N, k = p["N"], p["k"]
    _need(N >= 0 and k >= 0, "parameters must be non-negative")
    out = counts_or_series(p, mode, "odd parts vs alternating sum",
                           dict(max_parts=N, stat_filters={"odd": k}),
                           dict(max_part=N, stat_filters={"alt": k}),
                           closed=lambda n: cf.alt_extraction_phi(N, k, n))
    if mode.kind == EXACT:
        left, right = _conjugates_match(p["n"], N, k)
        out.append(Comparison("conjugation maps one set onto the other", tuple(left), tuple(right)))
    return out


# -- bounded four-variable forms --------------------------------------------------

def _doubly(b, parts_bound):
    return gf_enumerated(PC(max_part=b, max_parts=parts_bound), "boulet")


@register("T6_1a", "weighted partitions with parts <= bound: finite companion sum", ["bound"],
          [TRUNCATED], cutoff=14)
def _t6_1a(p, mode):
    b = p["bound"]
    _need(b >= 0, "bound must be non-negative")
    return [Comparison("companion sum vs enumeration", cf.finite_boulet(b, "phi", grading=mode.cutoff),
                       enum_gf(mode, "boulet", max_part=b))]


@register("T6_1b", "weighted distinct partitions: finite companion sum", ["bound"], [EXACT])
def _t6_1b(p, mode):
    b = p["bound"]
    _need(b >= 0, "bound must be non-negative")
    comp = cf.finite_boulet(b, "psi")
    return [Comparison("companion sum vs enumeration", comp,
                       enum_gf(mode, "boulet", distinct=True, max_part=b)),
            Comparison("companion sum vs first finite form", comp, cf.psi_closed(b), "cross")]


def _rational_point(rng: random.Random, names) -> dict:
    out = {}
    for v in names:
        while True:
            val = Fraction(rng.randint(2, 50), rng.randint(2, 50))
            if val != 1:
                break
        out[v] = val
    return out


def _sample(mode: Mode, names, fn, limit_factor=50) -> list:
    rng = random.Random(mode.seed)
    comps = []
    attempts = 0
    while len(comps) < mode.points:
        attempts += 1
        if attempts > limit_factor * mode.points:
            raise RegistryError("could not find enough pole-free rational points")
        pt = _rational_point(rng, names)
        try:
            values = fn(pt)
        except ZeroDivisionError:
            continue
        comps.append((pt, values))
    return comps


def _point_label(pt: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in pt.items())


def transform_values(pt: dict, N: int, nu: int) -> list:
    """Values of the 2phi1 / 3phi1 forms and of the distinct weight at one point."""
    a, b, c, d = (pt[v] for v in "abcd")
    Qv = a * b * c * d
    two = phi_terminating([Qv ** -N, -a * Qv ** nu], [-Qv ** (1 - N) / c], Qv, -d)
    three = phi_terminating([Qv ** -N, -a * Qv ** nu, -a * b * c], [a * c * Qv ** nu], Qv, Qv ** N / (a * b))
    pre = ((-a * Qv ** nu) ** N * rat_pochhammer(b * d * Qv ** (-N - nu), Qv, N)
           / rat_pochhammer(-Qv ** (1 - N) / c, Qv, N))
    outer = (a * b) ** N * rat_pochhammer(-c, Qv, N) * (1 + nu * a)
    return [two, pre * three, outer * two, outer * pre * three]


@register("E6_TRANSFORM", "2phi1 to 3phi1 transformation of the distinct weight", ["N", "nu"], [RATIONAL],
          rational_vars="abcd")
def _e6_transform(p, mode):
    N, nu = p["N"], p["nu"]
    _bit(nu, "nu")
    _need(N >= 0, "N must be non-negative")
    psi = gf_enumerated(PC(distinct=True, max_part=2 * N + nu), "boulet")

    def values(pt):
        two, three, from_two, from_three = transform_values(pt, N, nu)
        return [("2phi1 vs 3phi1", two, three, "algebraic"),
                ("2phi1 form vs enumerated weight", from_two, psi.evaluate(pt), "oracle"),
                ("3phi1 form vs enumerated weight", from_three, psi.evaluate(pt), "oracle")]
    return _sample(mode, "abcd", values)


@register("T6_2", "four-fold sum: parts <= bound, at most 2M parts", ["bound", "M"], [EXACT])
def _t6_2(p, mode):
    b, M = p["bound"], p["M"]
    _need(b >= 1 and M >= 1, "bound and M must be positive")
    four = cf.finite_boulet(b, "even", 2 * M)
    out = [Comparison("four-fold sum vs enumeration", four, _doubly(b, 2 * M))]
    if b % 2 == 0:
        out.append(Comparison("four-fold sum vs nested sum", four, cf.phi_yee(b, 2 * M), "cross"))
    return out


@register("E6_QBIN", "all variables q gives the Gaussian binomial", ["bound", "parts_bound"], [EXACT])
def _e6_qbin(p, mode):
    b, m = p["bound"], p["parts_bound"]
    _need(b >= 0 and m >= 0, "bounds must be non-negative")
    target = gaussian_binomial(b + m, m, cf.q)
    out = [Comparison("enumeration vs Gaussian binomial", enum_gf(mode, max_part=b, max_parts=m), target)]
    if b >= 1:
        out.append(Comparison("closed form at q vs Gaussian binomial",
                              cf.at(cf.phi_doubly_bounded(b, m), cf.BOULET_Q), target, "cross"))
    return out


@register("E6_RESTPHI", "odd parts bound from two even parts bounds", ["bound", "M"], [EXACT])
def _e6_restphi(p, mode):
    b, M = p["bound"], p["M"]
    _need(b >= 1 and M >= 0, "bound positive and M non-negative")
    return [Comparison("difference quotient vs enumeration", cf.finite_boulet(b, "odd", 2 * M + 1),
                       _doubly(b, 2 * M + 1))]


@register("T6_3", "nested sum for doubly bounded weights", ["bound", "parts_bound"], [EXACT])
def _t6_3(p, mode):
    b, m = p["bound"], p["parts_bound"]
    _need(b >= 1 and m >= 1, "bounds must be positive")
    _need(not (b % 2 == 1 and m % 2 == 0), "odd part bound with even parts bound is not covered")
    return [Comparison("nested sum vs enumeration", cf.finite_boulet(b, "yee", m), _doubly(b, m))]


def t6_4_values(pt: dict, N: int, nu: int) -> tuple:
    a, qv = pt["a"], pt["q"]
    dl = 1 if nu == 0 else 0
    lhs = phi_terminating([qv ** (-4 * N), -a * qv], [-(a * qv) ** -1 * qv ** (-4 * (N - dl))],
                          qv ** 4, -qv ** (1 + 4 * dl) / a)
    rhs = (rat_pochhammer(-qv ** 2, qv ** 2, N) * rat_pochhammer(-a * qv ** 3, qv ** 2, N - 1 + nu)
           / rat_pochhammer(-a * qv ** 5, qv ** 4, N - 1 + nu))
    return lhs, rhs


@register("T6_4", "terminating 2phi1 summation for distinct parts counted by odd parts", ["N", "nu"],
          [RATIONAL], rational_vars="aq")
def _t6_4(p, mode):
    N, nu = p["N"], p["nu"]
    _bit(nu, "nu")
    _need(N >= 0, "N must be non-negative")
    enum = gf_enumerated(PC(distinct=True, max_part=2 * N + nu), "boulet", substitution=cf.BOULET_ODD)

    def values(pt):
        lhs, rhs = t6_4_values(pt, N, nu)
        out = [("2phi1 vs product", lhs, rhs, "algebraic")]
        # the distinct weight with a marking odd parts has the same product value
        prod = cf.odd_parts_product(2 * N + nu)
        out.append(("product vs enumeration", prod.evaluate(pt), enum.evaluate(pt), "oracle"))
        return out
    return _sample(mode, "aq", values)


# -- outlook -------------------------------------------------------------------------

@register("P7_1", "doubly bounded partitions counted by BG-rank", ["bound", "parts_bound"], [EXACT])
def _p7_1(p, mode):
    b, m = p["bound"], p["parts_bound"]
    _need(b >= 1 and m >= 1, "bounds must be positive")
    closed = cf.outlook_closed("P7_1", bound=b, parts_bound=m)
    out = [Comparison("closed form vs enumeration", closed, enum_gf(mode, "bg", max_part=b, max_parts=m)),
           Comparison("symmetric in the two bounds", closed,
                      cf.outlook_closed("P7_1", bound=m, parts_bound=b), "cross")]
    if not (b % 2 == 1 and m % 2 == 0):
        out.append(Comparison("nested four-variable sum at (qt, q/t, q/t, qt)", closed,
                              cf.at(cf.phi_yee(b, m), cf.BOULET_BG), "cross"))
    return out


@register("P7_2", "doubly bounded partitions counted by alternating sum", ["bound", "parts_bound"], [EXACT])
def _p7_2(p, mode):
    b, m = p["bound"], p["parts_bound"]
    _need(b >= 1 and m >= 1, "bounds must be positive")
    closed = cf.outlook_closed("P7_2", bound=b, parts_bound=m)
    return [Comparison("closed form vs enumeration", closed, enum_gf(mode, "alt", max_part=b, max_parts=m)),
            Comparison("four-variable form at (zq, zq, q/z, q/z)", closed,
                       cf.at(cf.phi_doubly_bounded(b, m), cf.BOULET_ALT), "cross")]


@register("P7_3", "parts <= P, at most N parts, k odd parts vs parts <= N, at most P parts, alternating sum k",
          ["bound", "parts_bound", "k"], [EXACT, TRUNCATED], optional=[("n", None)])
def _p7_3(p, mode):
    N, m, k = p["bound"], p["parts_bound"], p["k"]
    _need(N >= 1 and m >= 1 and k >= 0, "bounds positive, k non-negative")
    closed = lambda n: cf.outlook_closed("P7_2", bound=N, parts_bound=m).coeff("z", k)
    return counts_or_series(p, mode, "odd parts vs alternating sum",
                            dict(max_part=m, max_parts=N, stat_filters={"odd": k}),
                            dict(max_part=N, max_parts=m, stat_filters={"alt": k}),
                            closed=closed)


@register("P7_4", "distinct parts with given i, j and m even parts (i = 0 or j = 0)",
          ["bound", "i", "j", "m"], [EXACT])
def _p7_4(p, mode):
    b, i, j, m = p["bound"], p["i"], p["j"], p["m"]
    _need(min(b, i, j, m) >= 0, "parameters must be non-negative")
    _need(i == 0 or j == 0, "closed forms need i = 0 or j = 0")
    return [Comparison("closed form vs enumeration", cf.outlook_closed("P7_4", bound=b, i=i, j=j, m=m),
                       enum_gf(mode, distinct=True, max_part=b, stat_filters={"i": i, "j": j, "m": m}))]


# -- bijections ----------------------------------------------------------------------

def _even_multiplicities(pi: Partition) -> bool:
    from collections import Counter
    return all(m % 2 == 0 for m in Counter(pi.parts).values())


@register("RHO_PROPS", "equal-row-pair extraction: round trip, BG-rank, weights, cardinalities",
          ["max_norm"], [EXACT])
def _rho_props(p, mode):
    n = p["max_norm"]
    _need(n >= 0, "max_norm must be non-negative")
    total = trips = order_ok = bg_ok = bound_ok = weight_ok = 0
    for pi in enumerate_partitions(PC(max_norm=n)):
        total += 1
        img = bij.rho(pi)
        trips += bij.invert(img) == pi
        order_ok += bij.rho(pi, "smallest") == img
        bg_ok += stats(pi).bg_rank == stats(img.reduced).bg_rank
        top = pi.parts[0] if pi.parts else 0
        bound_ok += all(q_ <= top for q_ in img.reduced.parts + img.extracted.parts)
        weight_ok += bij.boulet_monomial(pi) == bij.boulet_monomial(img.reduced) * bij.row_pair_factor(img.extracted)
    out = [Comparison("round trip", total, trips), Comparison("order independence", total, order_ok),
           Comparison("BG-rank preserved", total, bg_ok), Comparison("largest part preserved", total, bound_ok),
           Comparison("weight decomposition", total, weight_ok)]
    g = Grading.make(n)
    for N in range(0, min(n, 6) + 1):
        e_terms: dict = {}
        for pi in enumerate_partitions(PC(max_part=N, max_norm=n)):
            if _even_multiplicities(pi):
                key = (pi.norm,) + (0,) * 8
                e_terms[key] = e_terms.get(key, 0) + 1
        evens = TruncatedSeries(LaurentPoly(e_terms), g)
        for k in cf.bg_range(N):
            u = gf_enumerated(PC(max_part=N, stat_filters={"bg": k}), cutoff=n)
            dk = gf_enumerated(PC(distinct=True, max_part=N, stat_filters={"bg": k}), cutoff=n)
            out.append(Comparison(f"cardinality transport N={N} k={k}", u, dk * evens))
    return out


@register("RHOSTAR_PROPS", "odd-column-pair extraction: round trip, image sets, weights",
          ["max_norm"], [EXACT])
def _rhostar_props(p, mode):
    n = p["max_norm"]
    _need(n >= 0, "max_norm must be non-negative")
    total = trips = order_ok = d_ok = weight_ok = 0
    for pi in enumerate_partitions(PC(max_norm=n)):
        total += 1
        img = bij.rho_star(pi)
        trips += bij.invert(img) == pi
        order_ok += bij.rho_star(pi, "smallest") == img
        d_ok += bij.in_d_tilde(img.reduced)
        weight_ok += (bij.boulet_monomial(pi)
                      == bij.boulet_monomial(img.reduced) * bij.column_pair_factor(img.extracted))
    return [Comparison("round trip", total, trips), Comparison("order independence", total, order_ok),
            Comparison("reduced part in the difference-condition set", total, d_ok),
            Comparison("weight decomposition", total, weight_ok)]


# -- comparison engine ------------------------------------------------------------------

def _summary(v) -> str:
    if isinstance(v, (LaurentPoly, TruncatedSeries)):
        return str(v)
    if isinstance(v, tuple):
        return "[" + ", ".join(map(str, v)) + "]"
    return str(v)


def _discrepancy(label: str, lhs, rhs) -> dict | None:
    if isinstance(lhs, TruncatedSeries) or isinstance(rhs, TruncatedSeries):
        g = lhs.grading if isinstance(lhs, TruncatedSeries) else rhs.grading
        lhs = TruncatedSeries(lhs.body if isinstance(lhs, TruncatedSeries) else lhs, g).body
        rhs = TruncatedSeries(rhs.body if isinstance(rhs, TruncatedSeries) else rhs, g).body
    if isinstance(lhs, (LaurentPoly, int)) and isinstance(rhs, (LaurentPoly, int)) and \
            (isinstance(lhs, LaurentPoly) or isinstance(rhs, LaurentPoly)):
        lp = lhs if isinstance(lhs, LaurentPoly) else LaurentPoly.const(lhs)
        rp = rhs if isinstance(rhs, LaurentPoly) else LaurentPoly.const(rhs)
        diff = lp - rp
        if diff.is_zero():
            return None
        exp, _ = diff.items()[0]
        mono_str = format_poly(LaurentPoly._raw({exp: 1}))
        return {"check": label, "monomial": mono_str,
                "lhs": lp.terms.get(exp, 0), "rhs": rp.terms.get(exp, 0)}
    if lhs == rhs:
        return None
    if isinstance(lhs, int) and isinstance(rhs, int):
        return {"check": label, "monomial": "1", "lhs": lhs, "rhs": rhs}
    return {"check": label, "monomial": None, "lhs": _summary(lhs), "rhs": _summary(rhs)}


def _resolve(inst: IdentityInstance) -> tuple[Identity, dict, Mode]:
    entry = REGISTRY.get(inst.id)
    if entry is None:
        raise RegistryError(f"unknown identity {inst.id!r}")
    params = dict(inst.params)
    allowed = set(entry.params) | {k for k, _ in entry.optional}
    missing = [k for k in entry.params if k not in params]
    extra = [k for k in params if k not in allowed]
    if missing:
        raise RegistryError(f"missing parameter(s) {', '.join(missing)} for {inst.id}")
    if extra:
        raise RegistryError(f"unexpected parameter(s) {', '.join(extra)} for {inst.id}")
    for k, v in params.items():
        if not isinstance(v, int):
            raise RegistryError(f"parameter {k} must be an integer")
    mode = inst.mode or entry.default_mode(params)
    if mode.kind not in entry.modes:
        raise RegistryError(f"mode {mode.kind} is not legal for {inst.id} (legal: {', '.join(entry.modes)})")
    if mode.kind == TRUNCATED and mode.cutoff is None:
        mode = Mode(TRUNCATED, entry.default_cutoff)
    if mode.kind == RATIONAL:
        mode = Mode(RATIONAL, points=mode.points or DEFAULT_POINTS,
                    seed=DEFAULT_SEED if mode.seed is None else mode.seed)
        if mode.points < 1:
            raise RegistryError("points must be positive")
    if mode.kind == TRUNCATED and mode.cutoff < 0:
        raise RegistryError("cutoff must be non-negative")
    return entry, params, mode


def verify(inst: IdentityInstance) -> VerificationReport:
    start = time.perf_counter()
    try:
        entry, params, mode = _resolve(inst)
    except RegistryError as exc:
        return VerificationReport(inst, "Error", None, None, None, 0, error=str(exc), mode=inst.mode)
    try:
        result = entry.check(params, mode)
    except (RegistryError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        ms = int((time.perf_counter() - start) * 1000)
        return VerificationReport(inst, "Error", None, None, None, ms,
                                  error=f"{type(exc).__name__}: {exc}", mode=mode)
    if mode.kind == RATIONAL:
        return _rational_report(inst, mode, result, start)
    checks = []
    failure = None
    for comp in result:
        disc = _discrepancy(comp.label, comp.lhs, comp.rhs)
        checks.append({"check": comp.label, "kind": comp.kind, "status": "Fail" if disc else "Pass"})
        if disc and failure is None:
            failure = (comp, disc)
    shown = failure[0] if failure else result[0]
    ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(inst, "Fail" if failure else "Pass", _summary(shown.lhs), _summary(shown.rhs),
                              failure[1] if failure else None, ms, checks, mode=mode)


def _rational_report(inst, mode, samples, start) -> VerificationReport:
    labels: dict = {}
    failure = None
    for pt, values in samples:
        for label, lhs, rhs, kind in values:
            ok = lhs == rhs
            st = labels.setdefault(label, {"check": label, "kind": kind, "status": "Pass"})
            if not ok:
                st["status"] = "Fail"
                if failure is None:
                    failure = {"check": label, "monomial": _point_label(pt), "lhs": str(lhs), "rhs": str(rhs)}
    first_pt, first_vals = samples[0]
    lhs = "; ".join(str(v[1]) for v in first_vals[:1])
    rhs = "; ".join(str(v[2]) for v in first_vals[:1])
    ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(inst, "Fail" if failure else "Pass", f"{lhs} at {_point_label(first_pt)}",
                              f"{rhs} at {_point_label(first_pt)}", failure, ms,
                              list(labels.values()), mode=mode)


# -- suites -------------------------------------------------------------------------------

def _inst(id, mode=None, **params):
    return IdentityInstance.make(id, mode, **params)


def table_instances() -> list[IdentityInstance]:
    return [
        _inst("T1_1", n=14, i=1, j=1),
        _inst("T5_7", N=3, n=10, k=2),
        _inst("P7_3", bound=3, parts_bound=5, n=10, k=2),
        _inst("P7_4", bound=7, i=0, j=1, m=2),
        _inst("P7_4", bound=7, i=1, j=0, m=1),
        _inst("P7_4", bound=6, i=2, j=0, m=1),
    ]


def smoke_suite() -> list[IdentityInstance]:
    out = table_instances()
    out += [_inst("T2_1", bound=3, i=1, j=0), _inst("T3_1", bound=5, k=-1),
            _inst("T6_4", Mode(RATIONAL, points=5, seed=DEFAULT_SEED), N=2, nu=1),
            _inst("RHO_PROPS", max_norm=8), _inst("RHOSTAR_PROPS", max_norm=8)]
    return out


def default_suite(scale: int = 0) -> list[IdentityInstance]:
    """The acceptance grid; ``scale`` widens every range for the full suite."""
    s = scale
    out = table_instances()
    for b in range(0, 10 + s):
        for i in range(0, 5):
            for j in range(0, 5):
                out.append(_inst("T2_1", bound=b, i=i, j=j))
                out.append(_inst("L2_2", bound=b, i=i, j=j))
    for b in range(0, 9 + s):
        for k in range(-5, 7):
            out.append(_inst("T3_1", bound=b, k=k))
            out.append(_inst("T3_2", Mode(TRUNCATED, 20), bound=b, k=k))
    out += [_inst("T3_3", bound=b) for b in range(0, 11 + s)]
    out += [_inst("C3_4", Mode(TRUNCATED, 20), bound=b) for b in range(0, 9 + s)]
    out += [_inst("E3_CHB", n=n, m=m) for n in range(0, 7) for m in range(0, 7)]
    out += [_inst("T4_1", bound=b) for b in range(0, 10 + s)]
    for N in range(0, 5 + s // 2):
        for nu in (0, 1):
            if 2 * N + nu > 9 + s:
                continue
            for i in range(0, 5):
                for j in range(0, 5):
                    out.append(_inst("T4_2", N=N, nu=nu, i=i, j=j))
    for N in range(0, 7 + s):
        for nu in (0, 1):
            out.append(_inst("C4_3a", N=N, nu=nu))
            out.append(_inst("C4_3b", N=N, nu=nu))
        out.append(_inst("T4_4", N=N))
        out.append(_inst("T4_5", N=N))
    out += [_inst("T5_1a", Mode(TRUNCATED, 14)), _inst("T5_1b", Mode(TRUNCATED, 14))]
    for b in range(0, 7 + s):
        out.append(_inst("T5_2a", bound=b))
        out.append(_inst("T5_2b", Mode(TRUNCATED, 14), bound=b))
        out.append(_inst("E5_PSI2PHI", Mode(TRUNCATED, 14), bound=b))
    out += [_inst("T5_3", Mode(TRUNCATED, 12), nu=nu, x_cutoff=4) for nu in (0, 1)]
    for b in range(0, 11 + s):
        out.append(_inst("T5_4", bound=b))
        out.append(_inst("E5_RS2PSI", bound=b))
        for k in range(0, b + 1):
            out.append(_inst("E5_EXTRACT", bound=b, k=k))
    for b in range(0, 7 + s):
        for k in range(0, b + 1):
            out.append(_inst("E5_EXTRACTPHI", Mode(TRUNCATED, 20), bound=b, k=k))
    for N in range(0, 17 + s):
        for k in range(0, 17 + s):
            out.append(_inst("T5_6", Mode(TRUNCATED, 16 + s), N=N, k=k))
            out.append(_inst("T5_7", Mode(TRUNCATED, 16 + s), N=N, k=k))
    for b in range(0, 6 + s):
        out.append(_inst("T6_1a", Mode(TRUNCATED, 14), bound=b))
        out.append(_inst("T6_1b", bound=b))
    for b in range(1, 6 + s):
        for m in range(1, 6 + s):
            if m % 2 == 0:
                out.append(_inst("T6_2", bound=b, M=m // 2))
            else:
                out.append(_inst("E6_RESTPHI", bound=b, M=m // 2))
            if not (b % 2 == 1 and m % 2 == 0):
                out.append(_inst("T6_3", bound=b, parts_bound=m))
            out.append(_inst("E6_QBIN", bound=b, parts_bound=m))
    for N in range(0, 5):
        for nu in (0, 1):
            out.append(_inst("T6_4", Mode(RATIONAL, points=DEFAULT_POINTS, seed=DEFAULT_SEED), N=N, nu=nu))
            out.append(_inst("E6_TRANSFORM", Mode(RATIONAL, points=DEFAULT_POINTS, seed=DEFAULT_SEED), N=N, nu=nu))
    for b in range(1, 7 + s):
        for m in range(1, 7 + s):
            out.append(_inst("P7_1", bound=b, parts_bound=m))
            out.append(_inst("P7_2", bound=b, parts_bound=m))
            for k in range(0, 15):
                out.append(_inst("P7_3", Mode(TRUNCATED, 14), bound=b, parts_bound=m, k=k))
    for b in range(0, 7 + s):
        for i in range(0, 4):
            for j in range(0, 4):
                for m in range(0, 4):
                    if i == 0 or j == 0:
                        out.append(_inst("P7_4", bound=b, i=i, j=j, m=m))
    for i in range(0, 4):
        for j in range(0, 4):
            out.append(_inst("T1_1", Mode(TRUNCATED, 30), i=i, j=j))
    for k in range(0, 4):
        for mu in (0, 1):
            out.append(_inst("E1_GF13MOD4", Mode(TRUNCATED, 30), k=k, mu=mu))
        for v in (1, 2):
            out.append(_inst("T2_3", Mode(TRUNCATED, 30), k=k, variant=v))
            out.append(_inst("T2_4", Mode(TRUNCATED, 30), k=k, variant=v))
    for v in (1, 2):
        out.append(_inst("E2_PRODSILLS", Mode(TRUNCATED, 30), variant=v))
        out.append(_inst("T2_5", Mode(TRUNCATED, 30), variant=v))
        out.append(_inst("T2_6", Mode(TRUNCATED, 30), variant=v))
    out += [_inst("RHO_PROPS", max_norm=18 + s), _inst("RHOSTAR_PROPS", max_norm=18 + s)]
    return out


SUITES = {
    "smoke": smoke_suite,
    "default": default_suite,
    "full": lambda: default_suite(scale=2),
}


@dataclass
class SuiteResult:
    name: str
    reports: list
    summary: dict


def summarize(reports) -> dict:
    out = {"pass": 0, "fail": 0, "error": 0}
    for r in reports:
        out[r.status.lower()] += 1
    return out


def run_instances(instances, jobs: int = 1) -> list[VerificationReport]:
    if jobs <= 1:
        return [verify(i) for i in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify, instances, chunksize=8))


def run_suite(name: str, jobs: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise RegistryError(f"unknown suite {name!r} (choose from {', '.join(SUITES)})")
    instances = SUITES[name]()
    reports = run_instances(instances, jobs)
    return SuiteResult(name, reports, summarize(reports))


def default_jobs() -> int:
    return max(1, min(8, (os.cpu_count() or 1)))

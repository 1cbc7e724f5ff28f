"""Exact sparse Laurent polynomials, graded truncated series and q-special functions.

Polynomials live over the fixed alphabet ``q t z a b c d x y``. Exponent
vectors are plain tuples indexed by :data:`VARIABLES`, coefficients are Python
ints, so every computation is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

VARIABLES = ("q", "t", "z", "a", "b", "c", "d", "x", "y")
INDEX = {v: k for k, v in enumerate(VARIABLES)}
NVARS = len(VARIABLES)
ZERO_EXP = (0,) * NVARS


class DivisionError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


class GradingError(ValueError):
    """Raised when truncated series with different gradings are mixed."""


def _grlex_key(exp):
    return (sum(exp), exp)


class LaurentPoly:
    """Immutable sparse multivariate Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    if len(exp) != NVARS:
                        raise ValueError(f"exponent vector must have length {NVARS}")
                    clean[tuple(exp)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # trusted constructor: terms already normalized
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({ZERO_EXP: int(c)} if c else {})

    @classmethod
    def monomial(cls, coeff: int = 1, **exps: int) -> "LaurentPoly":
        e = [0] * NVARS
        for name, k in exps.items():
            e[INDEX[name]] = k
        return cls._raw({tuple(e): coeff} if coeff else {})

    @classmethod
    def var(cls, name: str) -> "LaurentPoly":
        return cls.monomial(1, **{name: 1})

    # -- basic protocol ---------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in ascending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def as_monomial(self) -> tuple[tuple, int]:
        if len(self._terms) != 1:
            raise ValueError(f"not a monomial: {self}")
        (exp, c), = self._terms.items()
        return exp, c

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        res = dict(self._terms)
        for e, c in o._terms.items():
            v = res.get(e, 0) + c
            if v:
                res[e] = v
            else:
                res.pop(e, None)
        return LaurentPoly._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._raw(_mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            exp, c = self.as_monomial()
            if c not in (1, -1):
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly._raw({tuple(k * n for k in exp): c ** -n})
        if len(self._terms) == 1:
            (exp, c), = self._terms.items()
            return LaurentPoly._raw({tuple(k * n for k in exp): c ** n})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure --------------------------------------------------------

    def degree(self, var: str) -> int:
        k = INDEX[var]
        return max(e[k] for e in self._terms) if self._terms else 0

    def min_degree(self, var: str) -> int:
        k = INDEX[var]
        return min(e[k] for e in self._terms) if self._terms else 0

    def variables(self) -> set[str]:
        out = set()
        for e in self._terms:
            for k, v in enumerate(e):
                if v:
                    out.add(VARIABLES[k])
        return out

    def leading_term(self) -> tuple[tuple, int]:
        exp = max(self._terms, key=_grlex_key)
        return exp, self._terms[exp]

    def substitute(self, mapping: Mapping[str, "LaurentPoly | int"]) -> "LaurentPoly":
        """Simultaneously replace variables by polynomials.

        Variables raised to negative powers must map to unit monomials.
        """
        images = {INDEX[v]: self._coerce(p) for v, p in mapping.items()}
        if all(p.is_monomial() for p in images.values()):
            return self._substitute_monomial(images)
        result = LaurentPoly()
        cache: dict = {}
        for exp, c in self._terms.items():
            rest = list(exp)
            term = LaurentPoly.const(c)
            for k, img in images.items():
                if exp[k]:
                    key = (k, exp[k])
                    if key not in cache:
                        cache[key] = img ** exp[k]
                    term = term * cache[key]
                    rest[k] = 0
            result = result + term * LaurentPoly._raw({tuple(rest): 1})
        return result

    def _substitute_monomial(self, images) -> "LaurentPoly":
        mons = {k: p.as_monomial() for k, p in images.items()}
        for k, (_, c) in mons.items():
            if c not in (1, -1):
                if any(e[k] < 0 for e in self._terms):
                    raise ValueError("negative power of a non-unit monomial")
        res: dict = {}
        for exp, c in self._terms.items():
            new = list(exp)
            coef = c
            for k, (mexp, mc) in mons.items():
                p = exp[k]
                if not p:
                    continue
                new[k] -= p
                for idx, v in enumerate(mexp):
                    if v:
                        new[idx] += v * p
                if mc != 1:
                    coef *= mc ** p if p > 0 else mc ** (-p)
            key = tuple(new)
            v = res.get(key, 0) + coef
            if v:
                res[key] = v
            else:
                res.pop(key, None)
        return LaurentPoly._raw(res)

    def coeff(self, var: str, e: int) -> "LaurentPoly":
        """Coefficient of ``var**e`` as a polynomial in the remaining variables."""
        k = INDEX[var]
        res = {}
        for exp, c in self._terms.items():
            if exp[k] == e:
                res[exp[:k] + (0,) + exp[k + 1:]] = c
        return LaurentPoly._raw(res)

    def constant_term(self) -> int:
        return self._terms.get(ZERO_EXP, 0)

    def evaluate(self, assignment: Mapping[str, Fraction | int]) -> Fraction:
        return eval_rational(self, assignment)


def _mul_terms(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    res: dict = {}
    get = res.get
    for eb, cb in b.items():
        for ea, ca in a.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            res[key] = get(key, 0) + ca * cb
    return {e: c for e, c in res.items() if c}


ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()
q, t, z, a, b, c, d, x, y = (LaurentPoly.var(v) for v in VARIABLES)


def mono(coeff: int = 1, **exps: int) -> LaurentPoly:
    """Shorthand for a single-term polynomial, e.g. ``mono(-1, q=2)``."""
    return LaurentPoly.monomial(coeff, **exps)


def Qmono(power: int = 1) -> LaurentPoly:
    """The monomial ``(abcd)**power``; Q is a derived monomial, never a variable."""
    return mono(1, a=power, b=power, c=power, d=power)


# -- text form --------------------------------------------------------------

def _format_monomial(exp) -> str:
    parts = []
    for k, e in enumerate(exp):
        if e == 1:
            parts.append(VARIABLES[k])
        elif e:
            parts.append(f"{VARIABLES[k]}^{e}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Canonical text: terms in ascending graded-lex order, e.g. ``1 + q*t + 2*q^2``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (exp, c) in enumerate(p.items()):
        m = _format_monomial(exp)
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = m
        else:
            body = f"{mag}*{m}"
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`format_poly`."""
    s = text.strip()
    if s == "0":
        return ZERO
    # split on top-level + / - that are not part of an exponent "^-"
    tokens = []
    buf = ""
    sign = 1
    i = 0
    while i < len(s):
        ch = s[i]
        if ch in "+-" and not (buf.rstrip().endswith("^")):
            if buf.strip():
                tokens.append((sign, buf.strip()))
            elif tokens:
                raise ValueError(f"malformed polynomial {text!r}")
            sign = 1 if ch == "+" else -1
            buf = ""
        else:
            buf += ch
        i += 1
    if buf.strip():
        tokens.append((sign, buf.strip()))
    if not tokens:
        raise ValueError(f"malformed polynomial {text!r}")
    res: dict = {}
    for sgn, tok in tokens:
        coef = 1
        exp = [0] * NVARS
        for factor in tok.replace(" ", "").split("*"):
            if not factor:
                raise ValueError(f"malformed term {tok!r}")
            if factor.isdigit():
                coef *= int(factor)
                continue
            name, caret, power = factor.partition("^")
            if name not in INDEX:
                raise ValueError(f"unknown variable {name!r}")
            if caret and not power:
                raise ValueError(f"missing exponent in {factor!r}")
            exp[INDEX[name]] += int(power) if caret else 1
        key = tuple(exp)
        res[key] = res.get(key, 0) + sgn * coef
    return LaurentPoly(res)


# -- truncated series -------------------------------------------------------

_DEFAULT_WEIGHTS = {"q": 1, "a": 1, "b": 1, "c": 1, "d": 1}


@dataclass(frozen=True)
class Grading:
    """Weights per variable, a cutoff on the weighted degree and optional per-variable caps.

    With the default weights ``a^i b^j c^k d^l q^n`` has grade ``i+j+k+l+n``,
    which is the norm of the partition it decorates.
    """

    cutoff: int
    weights: tuple = field(default=tuple(_DEFAULT_WEIGHTS.get(v, 0) for v in VARIABLES))
    caps: tuple = (None,) * NVARS

    @classmethod
    def make(cls, cutoff: int, weights: Mapping[str, int] | None = None,
             caps: Mapping[str, int] | None = None) -> "Grading":
        w = dict(_DEFAULT_WEIGHTS)
        if weights:
            w.update(weights)
        if any(v < 0 for v in w.values()):
            raise ValueError("weights must be non-negative")
        cp = [None] * NVARS
        for v, k in (caps or {}).items():
            cp[INDEX[v]] = k
        return cls(cutoff, tuple(w.get(v, 0) for v in VARIABLES), tuple(cp))

    def grade(self, exp) -> int:
        return sum(w * e for w, e in zip(self.weights, exp) if w)

    def keeps(self, exp) -> bool:
        if self.grade(exp) > self.cutoff:
            return False
        for k, cap in enumerate(self.caps):
            if cap is not None and exp[k] > cap:
                return False
        return True

    def is_small(self, exp) -> bool:
        """True when powers of this monomial eventually fall outside the truncation."""
        if self.grade(exp) > 0:
            return True
        return any(cap is not None and exp[k] > 0 for k, cap in enumerate(self.caps))


class TruncatedSeries:
    """A Laurent polynomial body known exactly up to a grading cutoff."""

    __slots__ = ("body", "grading")

    def __init__(self, body: LaurentPoly | int, grading: Grading):
        if isinstance(body, int):
            body = LaurentPoly.const(body)
        self.grading = grading
        self.body = LaurentPoly._raw({e: c for e, c in body._terms.items() if grading.keeps(e)})
        for e in self.body._terms:
            if grading.grade(e) < 0:
                raise GradingError("series monomials must have non-negative grade")

    @property
    def cutoff(self) -> int:
        return self.grading.cutoff

    def _coerce(self, other) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            if other.grading != self.grading:
                raise GradingError("cannot mix series with different grading or cutoff")
            return other
        if isinstance(other, (LaurentPoly, int)):
            return TruncatedSeries(other, self.grading)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedSeries(self.body + o.body, self.grading)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.body, self.grading)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedSeries(self.body - o.body, self.grading)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        g = self.grading
        cut = g.cutoff
        grade = g.grade
        left: dict = {}
        for e, c in self.body._terms.items():
            left.setdefault(grade(e), []).append((e, c))
        right: dict = {}
        for e, c in o.body._terms.items():
            right.setdefault(grade(e), []).append((e, c))
        res: dict = {}
        get = res.get
        for g1, lt in left.items():
            for g2, rt in right.items():
                if g1 + g2 > cut:
                    continue
                for ea, ca in lt:
                    for eb, cb in rt:
                        key = tuple(u + v for u, v in zip(ea, eb))
                        res[key] = get(key, 0) + ca * cb
        return TruncatedSeries(LaurentPoly._raw({e: v for e, v in res.items() if v}), g)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = TruncatedSeries(ONE, self.grading)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.grading == other.grading and self.body == other.body
        if isinstance(other, (LaurentPoly, int)):
            return self == TruncatedSeries(other, self.grading)
        return NotImplemented

    __hash__ = None

    def substitute(self, mapping: Mapping[str, LaurentPoly]) -> "TruncatedSeries":
        """Substitute monomials; every image must have grade at least the variable's weight."""
        g = self.grading
        for v, img in mapping.items():
            exp, _ = img.as_monomial()
            if g.grade(exp) < g.weights[INDEX[v]]:
                raise GradingError(f"substitution for {v} lowers the grade")
        return TruncatedSeries(self.body.substitute(mapping), g)

    def coeff(self, var: str, e: int) -> "TruncatedSeries":
        return TruncatedSeries(self.body.coeff(var, e), self.grading)

    def __repr__(self):
        return f"TruncatedSeries({str(self.body)!r}, cutoff={self.cutoff})"

    def __str__(self):
        return f"{self.body} + O[{self.cutoff}]"


def series(body, cutoff: int, **kw) -> TruncatedSeries:
    return TruncatedSeries(body, Grading.make(cutoff, **kw))


# -- q-special functions ----------------------------------------------------

def pochhammer(a0: LaurentPoly | int, base: LaurentPoly, length: int) -> LaurentPoly:
    """``(a0; base)_length`` as an exact polynomial."""
    if length < 0:
        raise ValueError("pochhammer length must be non-negative")
    a0 = LaurentPoly._coerce(a0)
    result = ONE
    step = a0
    for _ in range(length):
        result = result * (ONE - step)
        step = step * base
    return result


def pochhammer_series(a0: LaurentPoly, base: LaurentPoly, length: int | None,
                      grading: Grading) -> TruncatedSeries:
    """``(a0; base)_length`` truncated; ``length=None`` means the infinite product."""
    exp0, _ = a0.as_monomial()
    bexp, _ = base.as_monomial()
    result = TruncatedSeries(ONE, grading)
    step = a0
    n = 0
    while length is None or n < length:
        sexp, _ = step.as_monomial()
        if not grading.keeps(sexp):
            if length is None and not grading.is_small(bexp):
                raise ValueError("infinite product does not converge in this grading")
            if grading.is_small(bexp):
                break
        else:
            result = result * TruncatedSeries(ONE - step, grading)
        step = step * base
        n += 1
        if length is None and n > 10_000:
            raise ValueError("infinite product does not converge in this grading")
    return result


def _geometric(m: LaurentPoly, grading: Grading) -> TruncatedSeries:
    exp, _ = m.as_monomial()
    if exp == ZERO_EXP or not grading.is_small(exp):
        raise ValueError(f"factor 1 - ({m}) is not invertible as a series")
    terms = ONE
    power = m
    while grading.keeps(power.as_monomial()[0]):
        terms = terms + power
        power = power * m
    return TruncatedSeries(terms, grading)


def pochhammer_inv(a0: LaurentPoly, base: LaurentPoly, length: int | None,
                   grading: Grading) -> TruncatedSeries:
    """``1 / (a0; base)_length`` expanded geometrically up to the cutoff."""
    a0.as_monomial()
    bexp, _ = base.as_monomial()
    if length is None and not grading.is_small(bexp):
        raise ValueError("infinite product does not converge in this grading")
    result = TruncatedSeries(ONE, grading)
    step = a0
    n = 0
    while length is None or n < length:
        sexp, _ = step.as_monomial()
        if grading.keeps(sexp):
            result = result * _geometric(step, grading)
        elif sexp == ZERO_EXP or not grading.is_small(sexp):
            raise ValueError(f"factor 1 - ({step}) is not invertible as a series")
        elif length is None:
            break
        step = step * base
        n += 1
    return result


@lru_cache(maxsize=None)
def _gauss_coeffs(k: int, n: int) -> tuple:
    """Coefficient list of [k;n]_u in a formal variable u (Pascal recurrence)."""
    if n < 0 or k < n:
        return ()
    if n == 0 or n == k:
        return (1,)
    left = _gauss_coeffs(k - 1, n - 1)
    right = _gauss_coeffs(k - 1, n)
    out = [0] * max(len(left), len(right) + n)
    for i, v in enumerate(left):
        out[i] += v
    for i, v in enumerate(right):
        out[i + n] += v
    return tuple(out)


def gaussian_binomial(k: int, n: int, base: LaurentPoly) -> LaurentPoly:
    """Gaussian binomial ``[k; n]`` in ``base``; zero outside ``k >= n >= 0``."""
    coeffs = _gauss_coeffs(k, n)
    if not coeffs:
        return ZERO
    exp, bc = base.as_monomial()
    res = {}
    for e, v in enumerate(coeffs):
        if v:
            res[tuple(k_ * e for k_ in exp)] = v * bc ** e
    return LaurentPoly(res)


def q_trinomial(k: int, n: int, m: int, base: LaurentPoly) -> LaurentPoly:
    if n < 0 or m < 0 or k < n + m:
        return ZERO
    return gaussian_binomial(k, n, base) * gaussian_binomial(k - n, m, base)


def rogers_szego(N: int, z_mono: LaurentPoly, base: LaurentPoly) -> LaurentPoly:
    """``H_N(z, base) = sum_l [N; l]_base z^l``."""
    if N < 0:
        raise ValueError("N must be non-negative")
    total = ZERO
    zp = ONE
    for l_ in range(N + 1):
        total = total + gaussian_binomial(N, l_, base) * zp
        zp = zp * z_mono
    return total


def _shift_min(p: LaurentPoly) -> tuple[LaurentPoly, tuple]:
    mins = tuple(min(e[k] for e in p._terms) for k in range(NVARS))
    return LaurentPoly._raw({tuple(u - v for u, v in zip(e, mins)): c
                             for e, c in p._terms.items()}), mins


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient of an exact division; a nonzero remainder raises :class:`DivisionError`."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return ZERO
    n0, nshift = _shift_min(num)
    d0, dshift = _shift_min(den)
    lead_e, lead_c = d0.leading_term()
    rem = dict(n0._terms)
    quot: dict = {}
    while rem:
        e = max(rem, key=_grlex_key)
        c = rem[e]
        diff = tuple(u - v for u, v in zip(e, lead_e))
        if min(diff) < 0 or c % lead_c:
            raise DivisionError(f"({num}) is not divisible by ({den})")
        f = c // lead_c
        quot[diff] = quot.get(diff, 0) + f
        for de, dc in d0._terms.items():
            key = tuple(u + v for u, v in zip(diff, de))
            v = rem.get(key, 0) - f * dc
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    shift = tuple(u - v for u, v in zip(nshift, dshift))
    return LaurentPoly._raw({tuple(u + v for u, v in zip(e, shift)): c
                             for e, c in quot.items() if c})


def coeff_extract(p, var: str, e: int):
    """Coefficient of ``var**e``; works for polynomials and truncated series."""
    return p.coeff(var, e)


# -- rational evaluation ----------------------------------------------------

def eval_rational(p: LaurentPoly, assignment: Mapping[str, Fraction | int]) -> Fraction:
    vals = {INDEX[k]: Fraction(v) for k, v in assignment.items()}
    total = Fraction(0)
    for exp, c in p._terms.items():
        term = Fraction(c)
        for k, e in enumerate(exp):
            if not e:
                continue
            if k not in vals:
                raise ValueError(f"no value assigned to {VARIABLES[k]}")
            v = vals[k]
            if v == 0 and e < 0:
                raise ZeroDivisionError(f"{VARIABLES[k]} = 0 raised to a negative power")
            term *= v ** e
        total += term
    return total


def rat_pochhammer(a0: Fraction, base: Fraction, length: int) -> Fraction:
    """``(a0; base)_length`` over the rationals, with ``(a;q)_{-n} = 1/(a q^{-n}; q)_n``."""
    a0, base = Fraction(a0), Fraction(base)
    if length < 0:
        denom = rat_pochhammer(a0 * base ** length, base, -length)
        if denom == 0:
            raise ZeroDivisionError("negative-length pochhammer has a pole here")
        return 1 / denom
    out = Fraction(1)
    for n in range(length):
        out *= 1 - a0 * base ** n
    return out


def _terminating_length(upper: Iterable[Fraction], base: Fraction, limit: int = 4096) -> int:
    best = None
    for u in upper:
        if u == 1:
            return 0
        if base in (0, 1, -1):
            continue
        p = Fraction(1)
        for K in range(1, limit + 1):
            p /= base
            if p == u:
                best = K if best is None else min(best, K)
                break
            if abs(base) < 1 and abs(p) > abs(u):
                break
            if abs(base) > 1 and abs(p) < abs(u):
                break
    if best is None:
        raise ValueError("series does not terminate: no upper parameter equals base^-K")
    return best


def phi_terminating(upper: list, lower: list, base, z0) -> Fraction:
    """Exact value of a terminating basic hypergeometric series ``r phi s``."""
    upper = [Fraction(u) for u in upper]
    lower = [Fraction(v) for v in lower]
    qb, zz = Fraction(base), Fraction(z0)
    K = _terminating_length(upper, qb)
    r, s = len(upper), len(lower)
    power = 1 - r + s
    total = Fraction(0)
    num = Fraction(1)
    den = Fraction(1)
    for n in range(K + 1):
        if n:
            for u in upper:
                num *= 1 - u * qb ** (n - 1)
            den *= 1 - qb ** n
            for v in lower:
                den *= 1 - v * qb ** (n - 1)
            if den == 0:
                raise ZeroDivisionError(f"lower parameter factor vanishes at n={n}")
        extra = ((-1) ** n * qb ** math.comb(n, 2)) ** power if power else 1
        total += num / den * extra * zz ** n
    return total

"""Closed-form generating functions as exact polynomials or truncated series.

Bounds are passed raw (largest part, number of parts) and split internally
into ``(N, nu)`` with ``bound = 2N + nu``. Quotients are never stored: they
are realized by :func:`divide_exact` or by telescoping pochhammer products.
"""

from __future__ import annotations

from .qpoly import (ONE, ZERO, Grading, LaurentPoly, TruncatedSeries, divide_exact,
                    gaussian_binomial as gb, mono, pochhammer, pochhammer_inv,
                    pochhammer_series, q_trinomial, rogers_szego)

q = mono(1, q=1)
Q = mono(1, a=1, b=1, c=1, d=1)
A, B, C, D = (mono(1, **{v: 1}) for v in "abcd")
AB, AC, ABC = A * B, A * C, A * B * C

BOULET_BT = (mono(1, q=1, t=1), mono(1, q=1, t=-1), mono(1, q=1, z=1), mono(1, q=1, z=-1))
BOULET_ALT = (mono(1, q=1, z=1), mono(1, q=1, z=1), mono(1, q=1, z=-1), mono(1, q=1, z=-1))
BOULET_BG = (mono(1, q=1, t=1), mono(1, q=1, t=-1), mono(1, q=1, t=-1), mono(1, q=1, t=1))
BOULET_ODD = (mono(1, q=1, a=1), mono(1, q=1, a=-1), mono(1, q=1, a=1), mono(1, q=1, a=-1))
BOULET_Q = (q, q, q, q)


def split(bound: int) -> tuple[int, int]:
    if bound < 0:
        raise ValueError("bounds must be non-negative")
    return divmod(bound, 2)


def qp(e: int) -> LaurentPoly:
    return mono(1, q=e)


def at(p: LaurentPoly, images) -> LaurentPoly:
    """Specialize ``(a, b, c, d)`` to the given monomials."""
    return p.substitute(dict(zip("abcd", images)))


def _parity(v: int, name: str) -> int:
    if v not in (0, 1):
        raise ValueError(f"{name} must be 0 or 1")
    return v


# -- distinct parts with fixed odd-indexed / even-indexed odd parts -----------

def p_distinct_closed(bound: int, i: int, j: int) -> LaurentPoly:
    """Generating polynomial of distinct partitions with parts <= bound, i odd-indexed
    and j even-indexed odd parts (rational factor for odd bounds divided out exactly)."""
    N, nu = split(bound)
    if i < 0 or j < 0:
        return ZERO
    lead = qp(2 * i * i - i + 2 * j * j + j)
    if nu == 0:
        if N - i - j < 0:
            return ZERO
        return lead * pochhammer(mono(-1, q=2), qp(2), N - i - j) * q_trinomial(N, i, j, qp(4))
    if N + 1 - i - j < 0:
        return ZERO
    num = (lead * pochhammer(mono(-1, q=2), qp(2), N - i - j + 1)
           * q_trinomial(N + 1, i, j, qp(4)) * (ONE - qp(2 * (N + i - j + 1))))
    return divide_exact(num, ONE - qp(4 * (N + 1)))


def new52_lhs(N: int, nu: int, i: int, j: int, base: LaurentPoly = q) -> LaurentPoly:
    """Left side of the single-sum formula: sum_l [N;l][l+nu;i][N-l;j] base^((N-l-j)/2)."""
    b2 = base * base
    total = ZERO
    for l_ in range(N + 1):
        if N - l_ - j < 0:
            continue
        total = total + gb(N, l_, b2) * gb(l_ + nu, i, b2) * gb(N - l_, j, b2) * base ** (N - l_ - j)
    return total


def new52_rhs(N: int, nu: int, i: int, j: int, base: LaurentPoly = q) -> LaurentPoly:
    """(-base; base)_{N-i-j+nu} [N+nu; i, j]_{base^2} (1 - nu base^(N+i-j+1)) / (1 - nu base^(2N+2))."""
    _parity(nu, "nu")
    if i < 0 or j < 0 or N + nu - i - j < 0:
        return ZERO
    b2 = base * base
    body = pochhammer(-base, base, N - i - j + nu) * q_trinomial(N + nu, i, j, b2)
    if nu == 0:
        return body
    return divide_exact(body * (ONE - base ** (N + i - j + 1)), ONE - base ** (2 * N + 2))


def p_distinct_single_sum(bound: int, i: int, j: int) -> LaurentPoly:
    """Polynomial form of p_distinct_closed via the single sum in base q^2."""
    N, nu = split(bound)
    if i < 0 or j < 0:
        return ZERO
    return qp(2 * i * i - i + 2 * j * j + j) * new52_lhs(N, nu, i, j, qp(2))


def genfunc_residue(k: int, mu: int, grading: Grading) -> TruncatedSeries:
    """q^(2k^2 + (-1)^mu k) / (q^4; q^4)_k: k distinct parts congruent to 2 + (-1)^mu mod 4."""
    _parity(mu, "mu")
    lead = qp(2 * k * k + (k if mu == 0 else -k))
    return lead * pochhammer_inv(qp(4), qp(4), k, grading)


def p_distinct_limit(i: int, j: int, grading: Grading | int) -> TruncatedSeries:
    """(-q^2;q^2)_inf q^(2i^2-i)/(q^4;q^4)_i q^(2j^2+j)/(q^4;q^4)_j."""
    g = _grading(grading)
    return (pochhammer_series(mono(-1, q=2), qp(2), None, g)
            * genfunc_residue(i, 1, g) * genfunc_residue(j, 0, g))


def savage_sills_sum(k: int, over: str, grading: Grading | int, middle: bool = False) -> TruncatedSeries:
    """Product side of summing P(i, k) over i (``over='i'``) or P(k, j) over j."""
    g = _grading(grading)
    evens = pochhammer_series(mono(-1, q=2), qp(2), None, g)
    if over == "i":
        fixed = genfunc_residue(k, 0, g)
        other = (_sum_residue_series(1, g) if middle
                 else pochhammer_series(mono(-1, q=1), qp(4), None, g))
    elif over == "j":
        fixed = genfunc_residue(k, 1, g)
        other = (_sum_residue_series(0, g) if middle
                 else pochhammer_series(mono(-1, q=3), qp(4), None, g))
    else:
        raise ValueError("over must be 'i' or 'j'")
    return evens * fixed * other


def _sum_residue_series(mu: int, g: Grading) -> TruncatedSeries:
    total = TruncatedSeries(ZERO, g)
    k = 0
    while 2 * k * k - k <= g.cutoff:
        total = total + genfunc_residue(k, mu, g)
        k += 1
    return total


def gollnitz_product(variant: int, grading: Grading | int) -> TruncatedSeries:
    """1/(q, q^5, q^6; q^8)_inf for variant 1, 1/(q^2, q^3, q^7; q^8)_inf for variant 2."""
    g = _grading(grading)
    residues = {1: (1, 5, 6), 2: (2, 3, 7)}[variant]
    out = TruncatedSeries(ONE, g)
    for r in residues:
        out = out * pochhammer_inv(qp(r), qp(8), None, g)
    return out


def savage_sills_product(variant: int, grading: Grading | int) -> TruncatedSeries:
    """(-q^2;q^2)_inf (-q;q^4)_inf (variant 1) or (-q^2;q^2)_inf (-q^3;q^4)_inf (variant 2)."""
    g = _grading(grading)
    shift = {1: 1, 2: 3}[variant]
    return (pochhammer_series(mono(-1, q=2), qp(2), None, g)
            * pochhammer_series(mono(-1, q=shift), qp(4), None, g))


# -- BG-rank -----------------------------------------------------------------

def bg_closed(bound: int, k: int, restricted: bool = True, grading: Grading | int | None = None):
    """Distinct (restricted) or unrestricted partitions with parts <= bound and BG-rank k."""
    N, nu = split(bound)
    lead = qp(2 * k * k - k)
    if restricted:
        return lead * gb(2 * N + nu, N + k, qp(2))
    if grading is None:
        raise ValueError("unrestricted BG generating function needs a cutoff")
    g = _grading(grading)
    if N + k < 0 or N - k + nu < 0:
        return TruncatedSeries(ZERO, g)
    return (lead * pochhammer_inv(qp(2), qp(2), N + k, g)
            * pochhammer_inv(qp(2), qp(2), N - k + nu, g))


def bg_range(bound: int) -> range:
    N, nu = split(bound)
    return range(-N, N + nu + 1)


def minus_q_poch(bound: int) -> LaurentPoly:
    """(-q; q)_bound."""
    return pochhammer(mono(-1, q=1), q, bound)


# -- double sums to single sums ------------------------------------------------

def double_to_single(bound: int) -> LaurentPoly:
    """sum_i [N;i]_{q^4} (-qt;q^4)_{N-i+nu} (-qz;q^4)_i q^(2i)."""
    N, nu = split(bound)
    total = ZERO
    for i in range(N + 1):
        total = total + (gb(N, i, qp(4)) * pochhammer(mono(-1, q=1, t=1), qp(4), N - i + nu)
                         * pochhammer(mono(-1, q=1, z=1), qp(4), i) * qp(2 * i))
    return total


def double_sum_closed(bound: int) -> LaurentPoly:
    """sum_{i,j} P_bound(i, j, q) t^i z^j assembled from p_distinct_closed."""
    total = ZERO
    for i in range(bound + 1):
        for j in range(bound + 1):
            p = p_distinct_closed(bound, i, j)
            if p:
                total = total + p * mono(1, t=i, z=j)
    return total


def little_gollnitz_q(N: int, nu: int, which: str, side: str) -> LaurentPoly:
    """Both sides of the two q-series identities obtained at (t, z) = (0, 1) and (1, 0).

    ``which='a'`` sums P(0, k), ``which='b'`` sums P(k, 0).
    """
    _parity(nu, "nu")
    if side == "rhs":
        total = ZERO
        for k in range(N + 1):
            length = k if which == "a" else N - k + nu
            total = total + gb(N, k, qp(4)) * pochhammer(mono(-1, q=1), qp(4), length) * qp(2 * k)
        return total
    num = ZERO
    for k in range(N + nu + 1):
        expo = 2 * k * k + k if which == "a" else 2 * k * k - k
        term = gb(N + nu, k, qp(4)) * pochhammer(mono(-1, q=2), qp(2), N - k + nu) * qp(expo)
        if nu:
            shift = N - k + 1 if which == "a" else N + k + 1
            term = term * (ONE - qp(2 * shift))
        num = num + term
    if nu:
        return divide_exact(num, ONE - qp(4 * (N + 1)))
    return num


def connect_sides(N: int, side: str) -> LaurentPoly:
    total = ZERO
    for k in range(N + 1):
        if side == "lhs":
            f = pochhammer(mono(-1, q=1), qp(4), k)
        else:
            f = pochhammer(mono(-1, q=3), qp(4), N - k)
        total = total + gb(N, k, qp(4)) * f * qp(2 * k)
    return total


def cigler_sides(N: int, side: str) -> LaurentPoly:
    """sum_k [N;k]_q (y;q)_k z^k  versus  sum_k [N;k]_q (yz;q)_{N-k} z^k."""
    yv, zv = mono(1, y=1), mono(1, z=1)
    total = ZERO
    for k in range(N + 1):
        if side == "lhs":
            f = pochhammer(yv, q, k)
        else:
            f = pochhammer(yv * zv, q, N - k)
        total = total + gb(N, k, q) * f * zv ** k
    return total


def cor4_3_and_connect(N: int, side: str, which: str, nu: int = 0) -> LaurentPoly:
    if which == "C4_3a":
        return little_gollnitz_q(N, nu, "a", side)
    if which == "C4_3b":
        return little_gollnitz_q(N, nu, "b", side)
    if which == "T4_4":
        return connect_sides(N, side)
    if which == "T4_5":
        return cigler_sides(N, side)
    raise ValueError(f"unknown identity {which!r}")


# -- four-variable weights ------------------------------------------------------

def psi_closed(bound: int) -> LaurentPoly:
    """Weighted sum over distinct partitions with parts <= bound."""
    N, nu = split(bound)
    total = ZERO
    for i in range(N + 1):
        total = total + (gb(N, i, Q) * pochhammer(-A, Q, N - i + nu)
                         * pochhammer(-C, Q, i) * AB ** i)
    return total


def phi_closed(bound: int, grading: Grading | int) -> TruncatedSeries:
    """Weighted sum over all partitions with parts <= bound, truncated."""
    N, nu = split(bound)
    g = _grading(grading)
    return (TruncatedSeries(psi_closed(bound), g)
            * pochhammer_inv(AC, Q, N + nu, g) * pochhammer_inv(Q, Q, N, g))


def psi_infinite(grading: Grading | int) -> TruncatedSeries:
    g = _grading(grading)
    return (pochhammer_series(-A, Q, None, g) * pochhammer_series(-ABC, Q, None, g)
            * pochhammer_inv(AB, Q, None, g))


def phi_infinite(grading: Grading | int) -> TruncatedSeries:
    g = _grading(grading)
    return psi_infinite(g) * pochhammer_inv(AC, Q, None, g) * pochhammer_inv(Q, Q, None, g)


def psi_phi_closed(bound: int | None, kind: str, grading: Grading | int | None = None):
    """``kind`` is 'psi' or 'phi'; ``bound=None`` selects the unbounded products."""
    if bound is None:
        return psi_infinite(grading) if kind == "psi" else phi_infinite(grading)
    if kind == "psi":
        p = psi_closed(bound)
        return p if grading is None else TruncatedSeries(p, _grading(grading))
    return phi_closed(bound, grading)


def x_grading(x_cutoff: int, norm_cutoff: int) -> Grading:
    return Grading.make(norm_cutoff, caps={"x": x_cutoff})


def psi_x_series(nu: int, x_cutoff: int, norm_cutoff: int, side: str = "sum") -> TruncatedSeries:
    """sum_N x^N/(Q;Q)_N Psi_{2N+nu}  (side='sum')  or its product form (side='product')."""
    _parity(nu, "nu")
    g = x_grading(x_cutoff, norm_cutoff)
    X = mono(1, x=1)
    if side == "sum":
        total = TruncatedSeries(ZERO, g)
        for N in range(x_cutoff + 1):
            total = total + (X ** N) * pochhammer_inv(Q, Q, N, g) * TruncatedSeries(psi_closed(2 * N + nu), g)
        return total
    prod = (pochhammer_series(-A * X * Q ** nu, Q, None, g) * pochhammer_series(-ABC * X, Q, None, g)
            * pochhammer_inv(X, Q, None, g) * pochhammer_inv(AB * X, Q, None, g))
    return prod * (ONE + A) if nu else prod


def _telescoped(a0: LaurentPoly, base: LaurentPoly, full: int, part: int) -> LaurentPoly:
    """(a0; base)_full / (a0; base)_part as the polynomial (a0 base^part; base)_{full-part}."""
    if full < part:
        raise ValueError("telescoping needs full >= part")
    return pochhammer(a0 * base ** part, base, full - part)


def psi_boulet_finite(bound: int) -> LaurentPoly:
    """Companion sum for Psi over i with the (ac;Q) ratio telescoped."""
    N, nu = split(bound)
    total = ZERO
    for i in range(N + 1):
        total = total + (gb(N, i, Q) * pochhammer(-A, Q, i + nu) * pochhammer(-ABC, Q, i)
                         * _telescoped(AC, Q, N + nu, i + nu) * AB ** (N - i))
    return total


def phi_boulet_finite(bound: int, grading: Grading | int) -> TruncatedSeries:
    """1/(Q;Q)_N sum_i [N;i]_Q (-a;Q)_{i+nu}(-abc;Q)_i/(ac;Q)_{i+nu} (ab)^(N-i), term by term."""
    N, nu = split(bound)
    g = _grading(grading)
    total = TruncatedSeries(ZERO, g)
    for i in range(N + 1):
        num = gb(N, i, Q) * pochhammer(-A, Q, i + nu) * pochhammer(-ABC, Q, i) * AB ** (N - i)
        total = total + TruncatedSeries(num, g) * pochhammer_inv(AC, Q, i + nu, g)
    return total * pochhammer_inv(Q, Q, N, g)


def _ratio_binomial(s: int, r: int) -> LaurentPoly:
    """(Q^s; Q)_r / (Q; Q)_r as a polynomial."""
    if r < 0:
        return ZERO
    if s == 0:
        return ONE if r == 0 else ZERO
    return gb(s + r - 1, r, Q)


def phi_even_parts_bound(bound: int, M: int) -> LaurentPoly:
    """Four-fold sum for partitions with parts <= bound and at most 2M parts."""
    if M < 0:
        raise ValueError("M must be non-negative")
    if bound == 0 or M == 0:
        return ONE
    N, nu = split(bound)
    total = ZERO
    for l_ in range(N + 1):
        outer = gb(N - l_ + M - 1, N - l_, Q) * AB ** (N - l_)
        if not outer:
            continue
        inner = ZERO
        for m2 in range(l_ + 1):
            f2 = ABC ** m2 * Q ** (m2 * (m2 - 1) // 2) * gb(l_, m2, Q)
            for m1 in range(l_ + nu + 1):
                if m1 + m2 > M:
                    continue
                f1 = A ** m1 * Q ** (m1 * (m1 - 1) // 2) * gb(l_ + nu, m1, Q)
                s = ZERO
                for n in range(M - m1 - m2 + 1):
                    s = s + (gb(M + l_ - n - m1 - m2, M - n - m1 - m2, Q)
                             * _ratio_binomial(l_ + nu, n) * AC ** n)
                inner = inner + f2 * f1 * s
        total = total + outer * inner
    return total


SWAP_ACBD = {"a": C, "b": D, "c": A, "d": B}


def phi_odd_parts_bound(bound: int, M: int) -> LaurentPoly:
    """Parts <= bound and at most 2M+1 parts, from two even-parts-bound values with a,b <-> c,d."""
    N, nu = split(bound)
    if bound == 0:
        return ONE
    hi = phi_even_parts_bound(bound, M + 1).substitute(SWAP_ACBD)
    lo = phi_even_parts_bound(bound - 1, M + 1).substitute(SWAP_ACBD)
    return divide_exact(hi - lo, C ** nu * (C * D) ** N)


def phi_yee(bound: int, parts_bound: int) -> LaurentPoly:
    """Alternative nested sum for parts <= bound and at most parts_bound parts."""
    N, nu = split(bound)
    M, mu = split(parts_bound)
    if (nu, mu) == (1, 0):
        raise ValueError("this sum does not cover an odd part bound with an even parts bound")
    if bound == 0 or parts_bound == 0:
        return ONE
    numu = nu * mu
    lead = ONE + A if numu else ONE
    total = ZERO
    for k in range(M + 1):
        fk = AC ** k * gb(N + k - 1 + nu, k, Q)
        if not fk:
            continue
        for j in range(N + 1):
            s1 = ZERO
            for m1 in range(j + 1):
                s1 = s1 + (A ** m1 * Q ** (m1 * (m1 - 1) // 2 + numu * m1)
                           * gb(M - k + mu - nu, m1, Q) * gb(M - k + j - m1, j - m1, Q))
            if not s1:
                continue
            s2 = ZERO
            for m2 in range(N - j + 1):
                s2 = s2 + (C ** m2 * Q ** (m2 * (m2 - 1) // 2) * gb(M - k, m2, Q)
                           * _ratio_binomial(M - k + mu, N - j - m2))
            total = total + fk * AB ** (N - j) * lead * s1 * s2
    return total


def finite_boulet(bound: int, variant: str, parts_bound: int | None = None,
                  grading: Grading | int | None = None):
    """Dispatch over the finite four-variable forms.

    variants: 'phi' (parts bound only, truncated), 'psi', 'even' (at most
    parts_bound parts, parts_bound even), 'yee', 'odd' (parts_bound odd).
    """
    if variant == "phi":
        return phi_boulet_finite(bound, grading)
    if variant == "psi":
        return psi_boulet_finite(bound)
    if parts_bound is None:
        raise ValueError("this variant needs a bound on the number of parts")
    if variant == "even":
        if parts_bound % 2:
            raise ValueError("even variant needs an even parts bound")
        return phi_even_parts_bound(bound, parts_bound // 2)
    if variant == "odd":
        if parts_bound % 2 == 0:
            raise ValueError("odd variant needs an odd parts bound")
        return phi_odd_parts_bound(bound, parts_bound // 2)
    if variant == "yee":
        return phi_yee(bound, parts_bound)
    raise ValueError(f"unknown variant {variant!r}")


def phi_doubly_bounded(bound: int, parts_bound: int) -> LaurentPoly:
    """Parts <= bound and at most parts_bound parts via the four-fold sum or its odd companion."""
    if parts_bound % 2 == 0:
        return phi_even_parts_bound(bound, parts_bound // 2)
    return phi_odd_parts_bound(bound, parts_bound // 2)


# -- Rogers-Szego specializations ---------------------------------------------

def hermite_single_sum(bound: int) -> LaurentPoly:
    """sum_l [N;l]_{q^4} (-zq;q^4)_{N-l+nu} (-q/z;q^4)_l (zq)^(2l)."""
    N, nu = split(bound)
    zq, q_z = mono(1, q=1, z=1), mono(1, q=1, z=-1)
    total = ZERO
    for l_ in range(N + 1):
        total = total + (gb(N, l_, qp(4)) * pochhammer(-zq, qp(4), N - l_ + nu)
                         * pochhammer(-q_z, qp(4), l_) * zq ** (2 * l_))
    return total


def rs_specializations(bound: int, which: str) -> LaurentPoly:
    if which == "single_sum":
        return hermite_single_sum(bound)
    if which == "RS2PSI":
        return at(psi_closed(bound), BOULET_ALT)
    if which == "definition":
        return rogers_szego(bound, mono(1, q=1, z=1), qp(2))
    raise ValueError(f"unknown specialization {which!r}")


def alt_extraction(N: int, k: int) -> LaurentPoly:
    """q^k [N;k]_{q^2}."""
    return qp(k) * gb(N, k, qp(2))


def alt_extraction_phi(N: int, k: int, grading: Grading | int) -> TruncatedSeries:
    """q^k / ((q^2;q^2)_k (q^2;q^2)_{N-k})."""
    g = _grading(grading)
    if k < 0 or k > N:
        return TruncatedSeries(ZERO, g)
    return qp(k) * pochhammer_inv(qp(2), qp(2), k, g) * pochhammer_inv(qp(2), qp(2), N - k, g)


def odd_parts_product(bound: int) -> LaurentPoly:
    """(-aq;q^2)_{N+nu} (-q^2;q^2)_N: distinct parts, a marking odd parts."""
    N, nu = split(bound)
    return (pochhammer(mono(-1, q=1, a=1), qp(2), N + nu)
            * pochhammer(mono(-1, q=2), qp(2), N))


# -- outlook ---------------------------------------------------------------

def bg_doubly_bounded(bound: int, parts_bound: int) -> LaurentPoly:
    """sum_j t^j q^(2j^2-j) [N+M+mu; N+j]_{q^2} [N+nu+M; M+j]_{q^2}."""
    N, nu = split(bound)
    M, mu = split(parts_bound)
    total = ZERO
    for j in range(-N, N + nu + 1):
        total = total + (mono(1, t=j, q=2 * j * j - j) * gb(N + M + mu, N + j, qp(2))
                         * gb(N + nu + M, M + j, qp(2)))
    return total


def alt_doubly_bounded(bound: int, parts_bound: int) -> LaurentPoly:
    """sum_j z^j q^j [M+mu+j-1; j]_{q^2} [M+N-j; M]_{q^2} with N the part bound."""
    M, mu = split(parts_bound)
    total = ZERO
    for j in range(bound + 1):
        total = total + (mono(1, z=j, q=j) * gb(M + mu + j - 1, j, qp(2))
                         * gb(M + bound - j, M, qp(2)))
    return total


def p_tilde(bound: int, i: int, j: int, m: int) -> LaurentPoly:
    """Distinct parts <= bound with i odd-indexed odd, j even-indexed odd and m even parts.

    Only the shapes with i == 0, or j == 0, have closed forms here.
    """
    N, nu = split(bound)
    if i == 0:
        e = j * (j + 1) + m * (m + 1) - j * (-1) ** (m + j)
        return qp(e) * gb(N + j, j + m, qp(2)) * gb((m + j) // 2, j, qp(4))
    if j != 0:
        raise ValueError("closed form needs i == 0 or j == 0")
    e = i * (i + 1) + m * (m + 1) + i * (-1) ** (m + i)
    if nu == 1:
        return qp(e) * gb(N + i, i + m, qp(2)) * gb(-(-(m + i) // 2), i, qp(4))
    first = qp(e) * gb(N + i - 1, i + m, qp(2)) * gb(-(-(m + i) // 2), i, qp(4))
    e2 = i * (i + 1) + m * (m - 1) + i * (-1) ** (m + i) + 2 * N
    second = qp(e2) * gb(N + i - 1, i + m - 1, qp(2)) * gb((m + i - 1) // 2, i, qp(4))
    return first + second


def outlook_closed(which: str, **params) -> LaurentPoly:
    if which == "P7_1":
        return bg_doubly_bounded(params["bound"], params["parts_bound"])
    if which == "P7_2":
        return alt_doubly_bounded(params["bound"], params["parts_bound"])
    if which == "P7_4":
        return p_tilde(params["bound"], params["i"], params["j"], params["m"])
    raise ValueError(f"unknown proposition {which!r}")


def _grading(g: Grading | int | None) -> Grading:
    if g is None:
        raise ValueError("a cutoff is required")
    return g if isinstance(g, Grading) else Grading.make(g)

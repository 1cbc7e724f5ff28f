from fractions import Fraction
from math import comb

from hypothesis import given, settings, strategies as st

from qplab import closed_forms as cf
from qplab.bijections import (boulet_monomial, check_image, column_pair_factor, invert, rho, rho_star,
                              row_pair_factor)
from qplab.partitions import Partition, conjugate, stats
from qplab.qpoly import (LaurentPoly, divide_exact, eval_rational, format_poly, gaussian_binomial, mono,
                         parse_poly, pochhammer, series)

q = mono(1, q=1)

small = st.integers(-3, 3)
monomials = st.fixed_dictionaries({"q": st.integers(0, 4), "t": small, "z": small})
polys = st.lists(st.tuples(st.integers(-5, 5), monomials), max_size=5).map(
    lambda ts: sum((mono(c, **e) for c, e in ts), LaurentPoly()))


@st.composite
def partitions(draw, max_norm=25):
    parts, left = [], max_norm
    while left > 0 and draw(st.booleans()):
        p = draw(st.integers(1, min(left, 9)))
        parts.append(p)
        left -= p
    return Partition(tuple(sorted(parts, reverse=True)))


def residue_counts(pi):
    r0 = r1 = 0
    for row, length in enumerate(pi.parts):
        for col in range(length):
            if (row + col) % 2:
                r1 += 1
            else:
                r0 += 1
    return r0, r1


class TestRing:
    @given(polys, polys)
    def test_commutative(self, f, g):
        assert f + g == g + f and f * g == g * f

    @given(polys, polys, polys)
    @settings(max_examples=50)
    def test_associative_distributive(self, f, g, h):
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h

    @given(polys)
    def test_inverse_and_identity(self, f):
        assert (f - f).is_zero() and f * 1 == f and f + 0 == f

    @given(polys)
    def test_text_round_trip(self, f):
        assert parse_poly(format_poly(f)) == f

    @given(polys, polys)
    @settings(max_examples=50)
    def test_exact_division(self, f, g):
        if not g.is_zero():
            assert divide_exact(f * g, g) == f


class TestPartitionStats:
    @given(partitions())
    def test_conjugation_involution(self, pi):
        assert conjugate(conjugate(pi)) == pi
        assert conjugate(pi).norm == pi.norm

    @given(partitions())
    def test_odd_parts_alternating_sum_duality(self, pi):
        assert stats(pi).odd_parts == stats(conjugate(pi)).alt_sum

    @given(partitions())
    def test_bg_rank_from_residues(self, pi):
        r0, r1 = residue_counts(pi)
        s = stats(pi)
        assert s.bg_rank == s.i_odd_indexed_odd - s.j_even_indexed_odd == r0 - r1

    @given(partitions())
    def test_bg_rank_conjugation_invariant(self, pi):
        assert stats(conjugate(pi)).bg_rank == stats(pi).bg_rank

    @given(partitions())
    def test_boulet_weight_at_q(self, pi):
        assert cf.at(boulet_monomial(pi), cf.BOULET_Q) == q ** pi.norm


class TestGaussian:
    @given(st.integers(0, 12), st.data())
    def test_symmetry(self, k, data):
        n = data.draw(st.integers(0, k))
        assert gaussian_binomial(k, n, q) == gaussian_binomial(k, k - n, q)

    @given(st.integers(0, 12), st.data())
    def test_at_one(self, k, data):
        n = data.draw(st.integers(0, k))
        assert eval_rational(gaussian_binomial(k, n, q), {"q": 1}) == comb(k, n)

    @given(st.integers(0, 7), st.integers(0, 7))
    def test_change_of_base(self, n, m):
        inv = mono(1, q=-1)
        assert gaussian_binomial(n + m, n, inv) == mono(1, q=-n * m) * gaussian_binomial(n + m, n, q)

    @given(st.integers(0, 8), st.integers(0, 8))
    def test_pascal(self, n, m):
        lhs = gaussian_binomial(n + m + 1, n + 1, q)
        rhs = gaussian_binomial(n + m, n, q) + q ** (n + 1) * gaussian_binomial(n + m, n + 1, q)
        assert lhs == rhs


class TestPochhammer:
    @given(monomials, st.integers(0, 5), st.integers(0, 5))
    def test_splitting(self, exps, m, n):
        a = mono(1, **exps)
        assert pochhammer(a, q, m + n) == pochhammer(a, q, m) * pochhammer(a * q ** m, q, n)

    @given(st.integers(0, 6), st.fractions(min_value=Fraction(1, 9), max_value=Fraction(9, 2)))
    def test_rational_matches_product(self, n, x):
        expected = Fraction(1)
        for k in range(n):
            expected *= 1 - x * x ** k
        assert eval_rational(pochhammer(q, q, n), {"q": x}) == expected


class TestSeries:
    @given(polys, polys, st.integers(0, 8))
    def test_truncation_is_a_ring_map(self, f, g, cutoff):
        exact = series(f * g + f, cutoff)
        assert series(f, cutoff) * series(g, cutoff) + series(f, cutoff) == exact


class TestBijections:
    @given(partitions())
    def test_rho_round_trip(self, pi):
        img = rho(pi)
        check_image(img)
        assert invert(img) == pi
        assert tuple(rho(pi, "smallest")) == tuple(img)

    @given(partitions())
    def test_rho_star_round_trip(self, pi):
        img = rho_star(pi)
        check_image(img)
        assert invert(img) == pi
        assert tuple(rho_star(pi, "smallest")) == tuple(img)

    @given(partitions())
    def test_rho_weight(self, pi):
        img = rho(pi)
        assert boulet_monomial(pi) == boulet_monomial(img.reduced) * row_pair_factor(img.extracted)
        assert stats(pi).bg_rank == stats(img.reduced).bg_rank

    @given(partitions())
    def test_rho_star_weight(self, pi):
        img = rho_star(pi)
        assert boulet_monomial(pi) == boulet_monomial(img.reduced) * column_pair_factor(img.extracted)

import pytest

from qplab.partitions import (InfiniteUniverseError, Partition, PartitionConstraints as PC,
                              STAT_FIELDS, conjugate, count, enumerate_partitions, gf_enumerated,
                              resolve_stat, stats)
from qplab.qpoly import mono, parse_poly


def euler_counts(n_max):
    """Partition numbers from the pentagonal number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


class TestPartition:
    def test_text_form(self):
        assert str(Partition((7, 5, 2))) == "(7,5,2)"
        assert str(Partition()) == "()"
        assert Partition.parse("(7,5,2)") == Partition((7, 5, 2))
        assert Partition.parse("()") == Partition()

    @pytest.mark.parametrize("bad", ["(2,5)", "(0)", "7,5", "( 7,5)", "(7,,5)", "(7,-1)"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            Partition.parse(bad)

    def test_construction_rejects(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((3, 0))


class TestStats:
    pi = Partition((12, 10, 7, 5, 2))

    def test_bg_rank(self):
        assert stats(self.pi).bg_rank == 0

    def test_boulet(self):
        assert stats(self.pi).boulet == (11, 10, 8, 7)

    def test_alternating_sum(self):
        assert stats(self.pi).alt_sum == 12 - 10 + 7 - 5 + 2 == 6

    def test_small(self):
        st = stats(Partition((13, 1)))
        assert (st.i_odd_indexed_odd, st.j_even_indexed_odd, st.norm) == (1, 1, 14)

    def test_empty(self):
        st = stats(Partition())
        assert all(getattr(st, f) in (0, (0, 0, 0, 0)) for f in STAT_FIELDS)

    def test_residue_counts(self):
        st = stats(Partition((9, 7, 5, 3, 2)))
        assert (st.c1mod4, st.c3mod4, st.m_even_parts, st.odd_parts) == (2, 2, 1, 4)

    def test_aliases(self):
        assert resolve_stat("alt") == "alt_sum"
        assert resolve_stat("bg_rank") == "bg_rank"
        with pytest.raises(KeyError):
            resolve_stat("boulet")
        with pytest.raises(KeyError):
            resolve_stat("nope")


class TestConjugate:
    def test_small(self):
        assert conjugate(Partition()) == Partition()
        assert conjugate(Partition((3, 2))) == Partition((2, 2, 1))

    def test_odd_parts_to_alternating_sum(self):
        pi = Partition((5, 5))
        assert conjugate(pi) == Partition((2, 2, 2, 2, 2))
        assert stats(pi).odd_parts == stats(conjugate(pi)).alt_sum == 2


class TestEnumerate:
    def test_distinct_fixed_stats(self):
        assert count(PC(distinct=True, fixed_norm=14, stat_filters={"i": 1, "j": 1})) == 10

    def test_distinct_residue_counts(self):
        assert count(PC(distinct=True, fixed_norm=14, stat_filters={"c1mod4": 1, "c3mod4": 1})) == 10

    def test_alternating_sum(self):
        assert count(PC(max_part=3, fixed_norm=10, stat_filters={"alt_sum": 2})) == 9

    def test_doubly_bounded_odd_parts(self):
        assert count(PC(max_part=5, max_parts=3, fixed_norm=10, stat_filters={"odd": 2})) == 4

    def test_order(self):
        got = [str(p) for p in enumerate_partitions(PC(max_norm=3))]
        assert got == ["(3)", "(2,1)", "(2)", "(1,1,1)", "(1,1)", "(1)", "()"]
        fixed = [str(p) for p in enumerate_partitions(PC(fixed_norm=4))]
        assert fixed == ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]

    def test_empty_only(self):
        assert list(enumerate_partitions(PC(max_part=1, fixed_norm=0))) == [Partition()]

    def test_infinite_rejected(self):
        with pytest.raises(InfiniteUniverseError):
            list(enumerate_partitions(PC(distinct=True)))
        with pytest.raises(InfiniteUniverseError):
            gf_enumerated(PC(max_part=3))

    def test_counts_against_euler(self):
        p = euler_counts(20)
        for n in range(21):
            assert count(PC(fixed_norm=n)) == p[n]
            assert count(PC(max_norm=n)) == sum(p[: n + 1])

    def test_gollnitz_gap(self):
        got = [p.parts for p in enumerate_partitions(PC(gollnitz_gap=True, fixed_norm=10))]
        assert got == [(10,), (8, 2), (7, 3), (6, 4)]
        with_ones = [p.parts for p in enumerate_partitions(PC(gollnitz_gap=True, allow_ones=True,
                                                              fixed_norm=6))]
        assert with_ones == [(6,), (5, 1), (4, 2)]

    def test_accepts_matches_generator(self):
        universe = PC(max_norm=12)
        for c in [PC(distinct=True, max_norm=12), PC(max_part=4, max_parts=3),
                  PC(gollnitz_gap=True, max_norm=12), PC(part_residues=(8, (1, 5, 6)), max_norm=12),
                  PC(max_norm=12, stat_filters={"bg": -1})]:
            expected = {p for p in enumerate_partitions(universe) if c.accepts(p)}
            assert set(enumerate_partitions(c)) == expected

    def test_with_(self):
        c = PC(distinct=True, max_part=4)
        assert c.with_(max_norm=3).max_norm == 3
        assert c.with_(max_norm=3).distinct


class TestGenerating:
    def test_qtz(self):
        assert gf_enumerated(PC(distinct=True, max_part=2), "qtz") == parse_poly("1 + q*t + q^2 + q^3*z")

    def test_boulet(self):
        assert gf_enumerated(PC(distinct=True, max_part=1), "boulet") == 1 + mono(1, a=1)

    def test_boulet_substituted(self):
        images = (mono(1, q=1, z=1), mono(1, q=1, z=1), mono(1, q=1, z=-1), mono(1, q=1, z=-1))
        got = gf_enumerated(PC(max_part=1, max_parts=2), "boulet", substitution=images)
        assert got == parse_poly("1 + q*z + q^2")

    def test_truncated(self):
        s = gf_enumerated(PC(), cutoff=5)
        assert s.body == parse_poly("1 + q + 2*q^2 + 3*q^3 + 5*q^4 + 7*q^5")

    def test_boulet_at_q_is_norm(self):
        for pi in enumerate_partitions(PC(max_norm=12)):
            na, nb, nc, nd = stats(pi).boulet
            assert na + nb + nc + nd == pi.norm

    def test_substitution_needs_boulet(self):
        with pytest.raises(ValueError):
            gf_enumerated(PC(max_norm=3), "q", substitution=(mono(1, q=1),) * 4)

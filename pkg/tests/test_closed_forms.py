import pytest

from qplab import closed_forms as cf
from qplab.partitions import PartitionConstraints as PC, gf_enumerated
from qplab.qpoly import (Grading, TruncatedSeries, gaussian_binomial, mono, parse_poly, pochhammer,
                         rogers_szego)

q = cf.q
P = parse_poly


def enum(weight="q", **kw):
    return gf_enumerated(PC(**kw), weight)


class TestDistinct:
    def test_examples(self):
        assert cf.p_distinct_closed(2, 0, 0) == 1 + q ** 2
        assert cf.p_distinct_closed(3, 1, 0) == P("q + q^3 + q^5")
        assert cf.p_distinct_closed(2, 0, 1) == q ** 3

    def test_vanishing(self):
        assert cf.p_distinct_closed(3, 2, 2).is_zero()
        assert cf.p_distinct_closed(4, -1, 0).is_zero()

    def test_limit_table_value(self):
        s = cf.p_distinct_limit(1, 1, 14)
        assert s.body.coeff("q", 14).constant_term() == 10

    def test_limit_even_parts(self):
        assert cf.p_distinct_limit(0, 0, 8).body == P("1 + q^2 + q^4 + 2*q^6 + 2*q^8")

    def test_residue_series(self):
        assert cf.genfunc_residue(1, 1, Grading.make(9)).body == P("q + q^5 + q^9")

    def test_single_sum_agrees(self):
        for b in range(8):
            for i in range(4):
                for j in range(4):
                    assert cf.p_distinct_single_sum(b, i, j) == cf.p_distinct_closed(b, i, j)

    def test_parity_checked(self):
        with pytest.raises(ValueError):
            cf.genfunc_residue(1, 2, Grading.make(5))


class TestBG:
    def test_restricted(self):
        assert cf.bg_closed(2, 0) == 1 + q ** 2
        assert cf.bg_closed(2, 1) == q

    def test_unrestricted(self):
        assert cf.bg_closed(1, 0, restricted=False, grading=6).body == P("1 + q^2 + q^4 + q^6")

    def test_out_of_range(self):
        assert cf.bg_closed(3, 5).is_zero()
        assert cf.bg_closed(3, -4, restricted=False, grading=8).body.is_zero()

    def test_unrestricted_needs_cutoff(self):
        with pytest.raises(ValueError):
            cf.bg_closed(3, 0, restricted=False)


class TestDoubleSums:
    def test_small_bounds(self):
        assert cf.double_to_single(1) == 1 + mono(1, q=1, t=1)
        assert cf.double_to_single(2) == P("1 + q*t + q^2 + q^3*z")

    def test_at_one(self):
        assert cf.double_to_single(4).substitute({"t": 1, "z": 1}) == cf.minus_q_poch(4)

    def test_connect(self):
        assert cf.cor4_3_and_connect(1, "lhs", "T4_4") == P("1 + q^2 + q^3")
        assert cf.cor4_3_and_connect(1, "rhs", "T4_4") == P("1 + q^2 + q^3")

    def test_cigler(self):
        y, z = mono(1, y=1), mono(1, z=1)
        assert cf.cor4_3_and_connect(1, "lhs", "T4_5") == 1 + (1 - y) * z
        assert cf.cor4_3_and_connect(1, "rhs", "T4_5") == (1 - y * z) + z

    def test_right_side_independent_of_parity(self):
        for side_nu in (0, 1):
            assert cf.cor4_3_and_connect(1, "rhs", "C4_3a", side_nu) == P("1 + q^2 + q^3")

    def test_unknown(self):
        with pytest.raises(ValueError):
            cf.cor4_3_and_connect(1, "lhs", "X")


class TestFourVariable:
    def test_psi2(self):
        assert cf.psi_closed(2) == P("1 + a + a*b + a*b*c")

    def test_psi_at_q(self):
        for b in range(8):
            assert cf.at(cf.psi_closed(b), cf.BOULET_Q) == pochhammer(mono(-1, q=1), q, b)

    def test_phi_infinite_at_q(self):
        phi = cf.phi_infinite(6)
        assert cf.at(phi.body, cf.BOULET_Q) == P("1 + q + 2*q^2 + 3*q^3 + 5*q^4 + 7*q^5 + 11*q^6")

    def test_dispatch(self):
        assert cf.psi_phi_closed(2, "psi") == cf.psi_closed(2)
        assert cf.psi_phi_closed(None, "phi", 5) == cf.phi_infinite(5)

    def test_x_series(self):
        s = cf.psi_x_series(0, 1, 4, "sum")
        assert s.body.coeff("x", 0) == 1
        Q = cf.Q
        # x^1 coefficient is Psi_2 / (1 - Q) truncated at norm 4
        expected = TruncatedSeries(cf.psi_closed(2) * (1 + Q), Grading.make(4)).body
        assert s.body.coeff("x", 1) == expected == P("1 + a + a*b + a*b*c + a*b*c*d")
        assert cf.psi_x_series(1, 2, 6, "product").body.coeff("x", 0) == 1 + cf.A

    def test_finite_variants(self):
        assert cf.finite_boulet(2, "even", 2) == enum("boulet", max_part=2, max_parts=2)
        assert cf.finite_boulet(2, "psi") == cf.psi_closed(2)
        for b in range(1, 5):
            for m in range(1, 5):
                assert cf.at(cf.phi_doubly_bounded(b, m), cf.BOULET_Q) == gaussian_binomial(b + m, m, q)

    def test_yee_rejects_excluded_parity(self):
        with pytest.raises(ValueError):
            cf.phi_yee(3, 2)

    def test_variant_parity(self):
        with pytest.raises(ValueError):
            cf.finite_boulet(3, "even", 3)
        with pytest.raises(ValueError):
            cf.finite_boulet(3, "odd", 2)
        with pytest.raises(ValueError):
            cf.finite_boulet(3, "yee")


class TestRogersSzego:
    def test_at_z_one(self):
        assert cf.rs_specializations(2, "single_sum").substitute({"z": 1}) == (1 + q) * (1 + q ** 2)

    def test_matches_definition(self):
        zq = mono(1, q=1, z=1)
        expected = rogers_szego(2, zq, q ** 2)
        assert expected == 1 + (1 + q ** 2) * zq + zq ** 2
        for which in ("single_sum", "RS2PSI", "definition"):
            assert cf.rs_specializations(2, which) == expected

    def test_bound_one(self):
        assert cf.rs_specializations(1, "single_sum") == 1 + mono(1, q=1, z=1)

    def test_extraction(self):
        assert cf.alt_extraction(4, 2) == q ** 2 * gaussian_binomial(4, 2, q ** 2)
        assert cf.alt_extraction_phi(3, 5, 10).body.is_zero()


class TestOutlook:
    def test_bg(self):
        assert cf.outlook_closed("P7_1", bound=2, parts_bound=2) == P("1 + q*t + 2*q^2 + q^3*t^-1 + q^4")

    def test_alt(self):
        assert cf.outlook_closed("P7_2", bound=1, parts_bound=2) == P("1 + q*z + q^2")

    def test_tilde(self):
        assert cf.outlook_closed("P7_4", bound=7, i=0, j=1, m=2) == P("q^9 + q^11 + q^13 + q^15")
        assert cf.p_tilde(7, 1, 0, 1) == P("q^5 + q^7 + 2*q^9 + q^11 + q^13")
        assert cf.p_tilde(6, 2, 0, 1) == P("q^6 + q^8 + q^10 + q^12")

    def test_tilde_domain(self):
        with pytest.raises(ValueError):
            cf.p_tilde(5, 1, 1, 0)

    def test_unknown(self):
        with pytest.raises(ValueError):
            cf.outlook_closed("P7_9")


def test_products_agree():
    for v in (1, 2):
        assert cf.savage_sills_product(v, 30) == cf.gollnitz_product(v, 30)


def test_split_rejects_negative():
    with pytest.raises(ValueError):
        cf.split(-1)

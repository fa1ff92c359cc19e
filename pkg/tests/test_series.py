import pytest
from hypothesis import given, strategies as st

from hookbias import (
    DomainError,
    TruncatedSeries,
    b_t_k,
    bt2_series,
    decomposition_sum,
    decomposition_term,
    enumerate_partitions,
    geometric,
    pochhammer,
    regular_series,
    verify_decomposition,
)


class TestArithmetic:
    def test_mul_truncates_to_smaller_degree(self):
        a = TruncatedSeries((1, 1, 1, 1))
        b = TruncatedSeries((1, 1))
        assert (a * b).coeffs == (1, 2)

    def test_shift(self):
        s = TruncatedSeries((1, 2, 3))
        assert s.shift(1).coeffs == (0, 1, 2)
        assert s.shift(5).coeffs == (0, 0, 0)

    def test_invert_geometric(self):
        one_minus_q = TruncatedSeries.one(8) - TruncatedSeries.monomial(1, 8)
        assert one_minus_q.invert() == geometric(1, 8)

    def test_invert_requires_unit(self):
        with pytest.raises(DomainError):
            TruncatedSeries((2, 1)).invert()

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=9))
    def test_invert_involution(self, tail):
        s = TruncatedSeries((1, *tail))
        inv = s.invert()
        assert (s * inv).coeffs == TruncatedSeries.one(s.degree).coeffs
        assert inv.invert() == s


class TestPochhammer:
    def test_pentagonal_numbers(self):
        # (q;q) truncated: 1 - q - q^2 + q^5 + q^7 - q^12 ...
        s = pochhammer(1, 1, 12)
        assert s.coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1)

    def test_partition_generating_function(self):
        inv = pochhammer(1, 1, 10).invert()
        for n in range(11):
            assert inv.coeff(n) == sum(1 for _ in enumerate_partitions(n))

    def test_regular_series_counts(self):
        s = regular_series(3, 12)
        for n in range(13):
            count = sum(1 for _ in enumerate_partitions(n, lambda v: v % 3))
            assert s.coeff(n) == count


class TestClosedForm:
    @pytest.mark.parametrize("t", [2, 3, 4, 5])
    def test_bt2_matches_enumeration(self, t):
        s = bt2_series(t, 16)
        for n in range(17):
            assert s.coeff(n) == b_t_k(t, 2, n), (t, n)

    def test_low_coefficients_vanish(self):
        s = bt2_series(3, 10)
        assert s.coeff(0) == 0 and s.coeff(1) == 0


class TestDecomposition:
    def test_term_b_small_coefficient(self):
        # three objects of weight 4 with an even overlined part and no part
        # on the 3 grid
        assert decomposition_term("b", 3, 10).coeff(4) == 3

    def test_term_lowest_exponents(self):
        for t in (3, 4, 5):
            e = decomposition_term("e", t, 4 * t)
            assert all(e.coeff(n) == 0 for n in range(2 * t + 1))
            assert e.coeff(2 * t + 1) == 1
            f = decomposition_term("f", t, 4 * t)
            assert all(f.coeff(n) == 0 for n in range(2 * t - 1))
            assert f.coeff(2 * t - 1) == 1

    def test_unknown_term_rejected(self):
        with pytest.raises(DomainError):
            decomposition_term("g", 3, 10)

    @pytest.mark.parametrize("t", [3, 4, 5, 6])
    def test_sum_equals_gap(self, t):
        combo = decomposition_sum(t, 40)
        gap = bt2_series(t + 1, 40) - bt2_series(t, 40)
        assert combo == gap

    @pytest.mark.parametrize("t", [3, 4])
    def test_verify_decomposition_passes(self, t):
        report = verify_decomposition(t, 60, enumeration_budget=14)
        assert report.passed, report.counterexamples[:3]
        assert report.checked == 61

import math

import pytest

from singmod import pell
from singmod.surd import SurdElement, field_norm, parse_surd


def test_paper_unit_table():
    for delta, T, U in [(280, 502, 30), (5, 3, 1), (21, 5, 1), (24, 10, 2)]:
        sol = pell.solve_even_pell(delta)
        assert (sol.T, sol.U) == (T, U)


def test_rejects_squares_and_small():
    for delta in (0, 1, 4, 9, 100, -5):
        with pytest.raises(ValueError):
            pell.solve_even_pell(delta)


def test_norm_equation_holds_up_to_1000():
    for delta in range(2, 1001):
        if math.isqrt(delta) ** 2 == delta:
            continue
        sol = pell.solve_even_pell(delta)
        assert sol.T * sol.T - delta * sol.U * sol.U == 4


def test_minimality_exhaustive():
    # scan below the returned U (capped; fundamental solutions explode for
    # some delta and a full scan there is not feasible)
    for delta in range(2, 501):
        if math.isqrt(delta) ** 2 == delta:
            continue
        sol = pell.solve_even_pell(delta)
        for u in range(1, min(sol.U, 4000)):
            tt = 4 + delta * u * u
            t = math.isqrt(tt)
            assert t * t != tt, (delta, u)


def test_unit_value_reduces_radicand():
    u280 = pell.unit_value(pell.solve_even_pell(280))
    assert u280 == parse_surd("251 + 30*sqrt(70)")
    assert u280 == SurdElement({5: 5, 14: 3}) ** 2
    assert pell.unit_value(pell.solve_even_pell(24)) == parse_surd("5 + 2*sqrt(6)")
    assert pell.unit_value(pell.solve_even_pell(5)) == parse_surd("3/2 + 1/2*sqrt(5)")


def test_unit_field_norm_is_one():
    for delta in range(2, 301):
        if math.isqrt(delta) ** 2 == delta:
            continue
        eps = pell.unit_value(pell.solve_even_pell(delta))
        assert field_norm(eps) == 1

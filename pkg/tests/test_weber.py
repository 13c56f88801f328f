from fractions import Fraction

import mpmath as mp
import pytest

from singmod import arith, pell, qforms, weber
from singmod.surd import SurdElement, parse_surd

# the 8x8 symbol table for m = 210: rows by form (A + C labels), columns by
# delta in (1, -3, 5, -7, -15, 21, -35, 105)
JACOBI_TABLE_210 = {
    211: (1, 1, 1, 1, 1, 1, 1, 1),
    107: (1, -1, -1, 1, 1, -1, -1, 1),
    73: (1, 1, -1, -1, -1, -1, 1, 1),
    47: (1, -1, -1, -1, 1, 1, 1, -1),
    41: (1, -1, 1, -1, -1, 1, -1, 1),
    37: (1, 1, -1, 1, -1, 1, -1, -1),
    31: (1, 1, 1, -1, 1, -1, -1, -1),
    29: (1, -1, 1, 1, -1, -1, 1, -1),
}

DIFFERENCES_210 = {
    1: (0, 0, 0, 0),
    -3: (2, 2, -2, 2),
    5: (2, -2, -2, -2),
    -7: (0, 0, 0, 0),
    -15: (0, 0, 0, 0),
    21: (2, -2, 2, 2),
    -35: (2, 2, 2, -2),
    105: (0, 0, 0, 0),
}


def test_l_value_negative_golden():
    with mp.workdps(45):
        L = weber.l_value(-3, 40)
        assert abs(L - mp.pi / (3 * mp.sqrt(3))) < mp.mpf("1e-25")


def test_l_value_positive_golden():
    with mp.workdps(45):
        L = weber.l_value(280, 40)
        closed = 8 / mp.sqrt(280) * mp.log(5 * mp.sqrt(5) + 3 * mp.sqrt(14))
        assert abs(L - closed) < mp.mpf("1e-25")


def test_l_value_five_agrees_with_unit_form():
    with mp.workdps(45):
        L = weber.l_value(5, 40)
        eps = (3 + mp.sqrt(5)) / 2
        assert abs(L - mp.log(eps) / mp.sqrt(5)) < mp.mpf("1e-35")


def test_l_value_rejects_one():
    with pytest.raises(ValueError):
        weber.l_value(1)


def test_class_number_formula_all_discriminants_in_scope():
    deltas = set()
    for m in (30, 210):
        for p in weber.disc_pairs(m):
            deltas.update({p.delta, p.delta_prime})
    deltas.discard(1)
    with mp.workdps(50):
        for delta in sorted(deltas, key=abs):
            L = weber.l_value(delta, 40)
            K = qforms.weighted_class_number(delta)
            Kv = mp.mpf(K.numerator) / K.denominator
            if delta < 0:
                closed = mp.pi / mp.sqrt(-delta) * Kv
            else:
                sol = pell.solve_even_pell(delta)
                closed = mp.log((sol.T + sol.U * mp.sqrt(delta)) / 2) / mp.sqrt(delta) * Kv
            assert abs(L - closed) < mp.mpf("1e-30"), delta


def test_disc_pairs():
    got = [(p.delta, p.delta_prime) for p in weber.disc_pairs(210)]
    assert got == [(1, -840), (-3, 280), (5, -168), (-7, 120), (-15, 56), (21, -40), (-35, 24), (105, -8)]
    assert [(p.delta, p.delta_prime) for p in weber.disc_pairs(2)] == [(1, -8)]
    assert [(p.delta, p.delta_prime) for p in weber.disc_pairs(30)] == [
        (1, -120),
        (-3, 40),
        (5, -24),
        (-15, 8),
    ]
    for p in weber.disc_pairs(210):
        assert p.delta * p.delta_prime == -840
        assert (p.delta > 0) != (p.delta_prime > 0)


def test_disc_pairs_rejects_bad_shape():
    for m in (15, 12, 4, 60):
        with pytest.raises(ValueError):
            weber.disc_pairs(m)


def test_surviving_sums_210():
    survivors = weber.surviving_sums(210)
    assert [s.delta for s in survivors] == [-3, 5, 21, -35]
    for s in survivors:
        assert tuple(s.coefficients[a] for a in (1, 3, 5, 7)) == DIFFERENCES_210[s.delta]
        assert s.coefficients[1] == 2
        assert arith.kronecker(2, s.delta) == -1


def test_surviving_sums_30():
    assert [s.delta for s in weber.surviving_sums(30)] == [-3, 5]


def test_homologue_weight_relation():
    # chi of the homologue equals (2/delta) times chi of the form
    for m in (30, 210):
        forms = qforms.reduced_forms(-4 * m)
        pairs = qforms.homologue_pairs(forms)
        for delta in arith.fundamental_discriminants_dividing(-4 * m):
            for Q, Qp in pairs:
                assert qforms.chi(delta, Qp) == arith.kronecker(2, delta) * qforms.chi(delta, Q)


def test_survivor_coefficients_collapse():
    survivors = weber.surviving_sums(210)
    total = {}
    for s in survivors:
        for a, c in s.coefficients.items():
            total[a] = total.get(a, 0) + c
    assert total == {1: 8, 3: 0, 5: 0, 7: 0}


def test_weighted_sum_total_collapse_numeric():
    # sum of the four surviving sums equals (32 pi / sqrt(210)) ln g_210
    from singmod import highprec

    with mp.workdps(50):
        total = mp.mpf(0)
        for s in weber.surviving_sums(210):
            total += 4 * weber.l_value(s.delta, 45) * weber.l_value(s.pair.delta_prime, 45)
        rhs = 32 * mp.pi / mp.sqrt(210) * mp.log(highprec.gn_numeric(210, 45))
        assert abs(total - rhs) < mp.mpf("1e-30")


def test_weighted_sum_table_matches_golden():
    data = weber.weighted_sum_table(210)
    assert data["deltas"] == [1, -3, 5, -7, -15, 21, -35, 105]
    for row in data["rows"]:
        assert tuple(row["chi"][d] for d in data["deltas"]) == JACOBI_TABLE_210[row["label"]]
    for delta, expected in DIFFERENCES_210.items():
        got = data["differences"][delta]
        assert tuple(got[a] for a in (1, 3, 5, 7)) == expected


def test_weighted_sum_table_30_shape():
    data = weber.weighted_sum_table(30)
    assert len(data["rows"]) == 4
    assert len(data["deltas"]) == 4
    for row in data["rows"]:
        F = row["form"]
        assert row["chi"] == {d: qforms.chi(d, F) for d in data["deltas"]}


def test_g210_exact_product(g210):
    product, value = g210
    exps = {}
    for base, exp in product.factors:
        exps[str(base)] = exp
    assert exps == {
        "251 + 30*sqrt(70)": Fraction(1, 12),
        "3/2 + 1/2*sqrt(5)": Fraction(1, 4),
        "5/2 + 1/2*sqrt(21)": Fraction(1, 4),
        "5 + 2*sqrt(6)": Fraction(1, 4),
    }
    assert product.all_unit_norms()


def test_g210_matches_closed_form(g210):
    _, value = g210
    with mp.workdps(70):
        boxed = (
            mp.sqrt(mp.sqrt(2) + mp.sqrt(3))
            * mp.power(5 * mp.sqrt(5) + 3 * mp.sqrt(14), mp.mpf(1) / 6)
            * mp.sqrt((mp.sqrt(3) + mp.sqrt(7)) / 2)
            * mp.sqrt((mp.sqrt(5) + 1) / 2)
        )
        assert abs(value - boxed) < mp.mpf("1e-40")


def test_g2n_numeric_agrees_with_qseries():
    from singmod import highprec

    for n in (1, 3, 5, 15, 105):
        prec = 60
        _, value = weber.g2n(n, prec)
        with mp.workdps(prec + 10):
            assert abs(value - highprec.gn_numeric(2 * n, prec)) < mp.mpf(10) ** (10 - prec)


def test_g30_sixth_power_exact():
    product, _ = weber.g2n(15, 60)
    g12 = (product**12).expand_exact()
    from singmod.surd import exact_sqrt

    g6 = exact_sqrt(g12, ambient_primes=(2, 3, 5))
    assert g6 == SurdElement({1: 3, 10: 1}) * SurdElement({1: 2, 5: 1})


def test_exponent_denominators_divide_6h():
    # 2h from the double class number, one factor 3 from the weight at -3
    for n, h in ((105, 8), (15, 4), (5, 2), (3, 2)):
        product, _ = weber.g2n(n, 60)
        for _, exp in product.factors:
            assert (6 * h) % exp.denominator == 0


def test_g2_degenerate():
    product, value = weber.g2n(1, 60)
    assert product.factors == []
    with mp.workdps(60):
        assert abs(value - 1) < mp.mpf("1e-55")

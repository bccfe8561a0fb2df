from fractions import Fraction
from math import gcd

import pytest

import oracles
from fareytree.errors import BreakpointError, DomainError, NotInSetError
from fareytree.exact_rational import INFINITY, ZERO, make
from fareytree.farey import ROOT as FAREY_ROOT
from fareytree.farey import FareyVertex, farey_intervals, v_map
from fareytree.terminal import ROOT, LShape, TerminalPair, u_map
from fareytree.young import (
    RankingTable,
    delta,
    delta_one_sided,
    is_young,
    phi_map,
    ranking_table,
    suranyi_inverse,
    suranyi_table,
    suranyi_terminal,
    young_terminal_pairs,
)

T = TerminalPair.of
EQ20 = ((1, 2, 4, 7), (3, 5, 8, 10), (6, 9, 11, 12))


def fv(a, b, m, n):
    return FareyVertex(a, b, m, n)


def frac(x):
    return Fraction(x.num, x.den)


def test_table_eq20():
    t = ranking_table(4, 3, make(5, 4))
    assert t.rows == EQ20
    assert t(4, 1) == 7 and t(1, 3) == 6 and t(1, 1) == 1
    assert str(t).splitlines()[0].split() == ["6", "9", "11", "12"]
    assert is_young(t) and t.is_young()
    assert t.terminal_pair() == T(7, 6, 4, 3)
    assert t.lshape() == LShape((1, 2, 4, 7), (1, 3, 6))


def test_table_small():
    assert ranking_table(1, 1, make(7, 3)).rows == ((1,),)
    assert ranking_table(2, 1, make(1, 1)).rows == ((1, 2),)


def test_table_errors():
    with pytest.raises(BreakpointError):
        ranking_table(4, 3, make(1, 1))
    with pytest.raises(DomainError):
        ranking_table(2, 2, ZERO)
    with pytest.raises(DomainError):
        ranking_table(2, 2, INFINITY)
    with pytest.raises(DomainError):
        ranking_table(0, 2, make(1, 2))
    with pytest.raises(IndexError):
        ranking_table(2, 2, make(1, 2))(3, 1)


@pytest.mark.parametrize("xi", [make(5, 4), make(1, 3), make(7, 2), make(2, 5)])
def test_table_matches_oracle(xi):
    for m in range(1, 6):
        for n in range(1, 6):
            if (m - 1) * (n - 1) and xi.num <= m - 1 and xi.den <= n - 1:
                continue
            want = oracles.rank_table(m, n, frac(xi))
            assert [list(r) for r in ranking_table(m, n, xi).rows] == want


def test_table_transpose_and_json():
    t = ranking_table(4, 3, make(5, 4))
    tt = t.transpose()
    assert tt == ranking_table(3, 4, make(4, 5))
    assert is_young(tt)
    assert RankingTable.from_json(t.to_json()) == t
    assert t.array.shape == (3, 4)


def test_is_young():
    assert not is_young([[1, 2], [4, 3]])
    assert is_young([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        is_young([1, 2, 3])


def test_delta_examples():
    assert delta(4, 3, make(5, 4)) == 1
    assert delta(4, 3, make(3, 2)) == 0
    assert delta(4, 3, make(1, 1)) == 3


def test_delta_one_sided_examples():
    assert delta_one_sided(4, 3, make(1, 1), "left") == 5
    # frozen from the cell-by-cell oracle evaluated just above 1
    assert oracles.delta(4, 3, Fraction(1001, 1000)) == 1
    assert delta_one_sided(4, 3, make(1, 1), "right") == 1
    assert oracles.delta(3, 4, Fraction(1001, 1000)) == -5
    assert delta_one_sided(3, 4, make(1, 1), "right") == -5
    with pytest.raises(DomainError):
        delta_one_sided(3, 4, make(1, 1), "up")


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_delta_matches_oracle(m, n):
    pts = {Fraction(p, q) for p in range(1, 8) for q in range(1, 8)}
    for x in sorted(pts):
        assert delta(m, n, make(x.numerator, x.denominator)) == oracles.delta(m, n, x)


def test_suranyi_examples():
    v = fv(make(1), make(3, 2), 3, 2)
    assert suranyi_table(v).rows == EQ20
    assert suranyi_table(v, make(5, 4)).rows == EQ20
    assert suranyi_terminal(v) == T(7, 6, 4, 3)
    assert suranyi_table(FAREY_ROOT).rows == ((1,),)
    assert suranyi_terminal(FAREY_ROOT) == ROOT
    for m in range(1, 8):
        assert suranyi_terminal(fv(ZERO, INFINITY, m - 1, 0)) == T(m, 1, m, 1)


def test_suranyi_left_gap():
    # frozen from the oracle table at two interior slopes
    for xi in (Fraction(1, 3), Fraction(1, 4)):
        rows = oracles.rank_table(4, 3, xi)
        assert (rows[0][3], rows[2][0]) == (10, 3)
    t = suranyi_table(fv(ZERO, make(1, 2), 3, 2))
    assert (t(4, 1), t(1, 3)) == (10, 3)


def test_suranyi_errors():
    with pytest.raises(NotInSetError):
        suranyi_table(fv(ZERO, make(1, 3), 3, 2))
    with pytest.raises(DomainError):
        suranyi_table(fv(make(1), make(3, 2), 3, 2), make(2))


def test_young_terminal_pairs():
    ys = young_terminal_pairs(4, 3)
    assert len(ys) == 6 and T(7, 6, 4, 3) in ys
    assert young_terminal_pairs(1, 1) == [ROOT]
    ys = young_terminal_pairs(2, 3)
    assert T(4, 3, 2, 3) in ys and T(2, 5, 2, 3) in ys


def test_suranyi_inverse():
    assert suranyi_inverse(T(7, 6, 4, 3)) == fv(make(1), make(3, 2), 3, 2)
    assert suranyi_inverse(ROOT) == FAREY_ROOT
    assert suranyi_inverse(T(2, 5, 2, 3)) == fv(make(1), INFINITY, 1, 2)
    with pytest.raises(NotInSetError):
        suranyi_inverse(T(8, 6, 4, 3))


def test_phi_examples():
    assert phi_map(T(7, 3, 3, 3)) == T(4, 3, 2, 3)
    assert phi_map(T(2, 7, 2, 4)) == T(2, 5, 2, 3)
    with pytest.raises(DomainError):
        phi_map(ROOT)


@pytest.mark.parametrize("k", range(1, 9))
def test_phi_equals_u_on_small_levels(k):
    for m in range(1, k + 2):
        n = k + 2 - m
        for p in young_terminal_pairs(m, n):
            assert phi_map(p) == u_map(p)


@pytest.mark.parametrize("m", range(1, 8))
@pytest.mark.parametrize("n", range(1, 8))
def test_interior_point_independence(m, n):
    for v in farey_intervals(m - 1, n - 1):
        pts = oracles.interior_points(frac(v.a), None if v.b.is_infinite else frac(v.b))
        tables = {suranyi_table(v, make(x.numerator, x.denominator)).rows for x in pts}
        tables.add(suranyi_table(v).rows)
        assert len(tables) == 1


def test_gcd_corrected_limits_small():
    for m in range(2, 6):
        for n in range(2, 6):
            x = make(m - 1, n)
            assert delta_one_sided(m, n, x, "left") == m - 1 + gcd(m - 1, n) - 1

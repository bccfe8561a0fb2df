import pytest

import oracles
from fareytree.errors import DomainError, GuardError, NotInSetError
from fareytree.terminal import (
    ROOT,
    LShape,
    TerminalPair,
    check_E,
    children,
    decompress,
    enumerate_E_lshapes,
    in_E,
    transpose,
    u_map,
)

T = TerminalPair.of
EXAMPLE = LShape((1, 2, 4, 7), (1, 3, 6))
RESTRICTED = LShape((1, 2, 4), (1, 3, 6))


def test_pair_basics():
    p = T(7, 6, 4, 3)
    assert p.as_tuple() == (7, 6, 4, 3)
    assert str(p) == "(7,6,(4,3))"
    assert p.level == 5
    assert TerminalPair.from_json(p.to_json()) == p


def test_check_E_examples():
    assert check_E(EXAMPLE) and in_E(EXAMPLE)
    assert check_E(RESTRICTED) and in_E(RESTRICTED)
    assert not check_E(LShape((1, 2), (1, 2)))


def test_check_E_rejects_bad_difference():
    assert not check_E(LShape((1, 2, 5, 7), (1, 3, 6)))


def test_in_E_needs_corner_one():
    # shifting every value keeps the equations but breaks the normalization
    shifted = LShape((2, 3, 5, 8), (2, 4, 7))
    assert check_E(shifted) and not in_E(shifted)


@pytest.mark.parametrize(
    "bottom,left",
    [((), (1,)), ((1, 2), (2, 3)), ((1, 9), (1, 2, 3))],
)
def test_lshape_structure_errors(bottom, left):
    with pytest.raises(ValueError):
        LShape(bottom, left)


def test_lshape_helpers():
    assert EXAMPLE.m == 4 and EXAMPLE.n == 3
    assert EXAMPLE.terminal_pair() == T(7, 6, 4, 3)
    assert EXAMPLE.transpose() == LShape((1, 3, 6), (1, 2, 4, 7))
    assert LShape.from_json(EXAMPLE.to_json()) == EXAMPLE


def test_u_map_examples():
    assert u_map(T(7, 6, 4, 3)) == T(4, 6, 3, 3)
    for m in range(2, 8):
        assert u_map(T(m, 1, m, 1)) == T(m - 1, 1, m - 1, 1)
    assert u_map(T(1, 2, 1, 2)) == ROOT


def test_u_map_errors():
    with pytest.raises(DomainError):
        u_map(ROOT)
    with pytest.raises(NotInSetError):
        u_map(T(3, 3, 2, 2))
    with pytest.raises(NotInSetError):
        u_map(T(1, 3, 3, 1))
    with pytest.raises(DomainError):
        u_map(T(1, 1, 0, 2))


def test_children_examples():
    assert children(ROOT) == (T(2, 1, 2, 1), T(1, 2, 1, 2))
    assert children(T(4, 3, 2, 3)) == (T(7, 3, 3, 3), T(4, 5, 2, 4))
    c = children(T(2, 5, 2, 3))
    assert c.horizontal is None and c.vertical == T(2, 7, 2, 4)


def test_transpose_examples():
    assert transpose(T(7, 6, 4, 3)) == T(6, 7, 3, 4)
    assert transpose(ROOT) == ROOT


def test_decompress_examples():
    assert decompress(T(7, 6, 4, 3)) == EXAMPLE
    assert decompress(ROOT) == LShape((1,), (1,))
    for m in range(1, 8):
        assert decompress(T(m, 1, m, 1)) == LShape(tuple(range(1, m + 1)), (1,))


@pytest.mark.parametrize("p", [T(5, 5, 3, 2), T(20, 1, 4, 3), T(2, 2, 2, 2), T(6, 1, 3, 2)])
def test_decompress_rejects(p):
    with pytest.raises(NotInSetError):
        decompress(p)


LEVELS = oracles.terminal_tree(12)


@pytest.mark.parametrize("k", range(1, 13))
def test_round_trips_against_generated_tree(k):
    for s, t, m, n in LEVELS[k]:
        p = T(s, t, m, n)
        assert T(*_flat(u_map(p))) in {T(*q) for q in LEVELS[k - 1]}
        assert p in children(u_map(p)).present()
        shape = decompress(p)
        assert shape.terminal_pair() == p and in_E(shape)


def _flat(p):
    return p.as_tuple()


def test_enumerate_small():
    assert enumerate_E_lshapes(1, 1) == [LShape((1,), (1,))]
    assert len(enumerate_E_lshapes(2, 2)) == 2
    shapes = enumerate_E_lshapes(4, 3)
    assert len(shapes) == 6 and EXAMPLE in shapes


@pytest.mark.parametrize("m,n", [(m, s - m) for s in range(2, 8) for m in range(1, s)])
def test_enumerate_matches_exhaustive_oracle(m, n):
    got = [(s.bottom, s.left) for s in enumerate_E_lshapes(m, n)]
    assert got == oracles.e_lshapes(m, n)


def test_enumerate_guard():
    with pytest.raises(GuardError):
        enumerate_E_lshapes(5, 5)
    assert len(enumerate_E_lshapes(5, 5, guard=10)) > 0
    with pytest.raises(DomainError):
        enumerate_E_lshapes(0, 3)

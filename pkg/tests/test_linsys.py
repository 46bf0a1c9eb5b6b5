import random
from fractions import Fraction

import pytest

from stabpoly.errors import DomainError
from stabpoly.linsys import (
    FACET,
    NONNEGATIVITY,
    Inequality,
    LinearSystem,
    format_rational,
    parse_rational,
)


def test_rational_strings():
    assert format_rational(Fraction(1, 2)) == "1/2"
    assert format_rational(Fraction(-3)) == "-3"
    assert parse_rational("7/3") == Fraction(7, 3)
    assert parse_rational("-2") == Fraction(-2)
    with pytest.raises(DomainError):
        parse_rational("1/0")
    with pytest.raises(DomainError):
        parse_rational("x")


def test_primitive_normalization():
    i = Inequality.from_rational([Fraction(1, 2), Fraction(1, 2)], Fraction(1))
    assert i.coeffs == (1, 1) and i.rhs == 2
    i = Inequality.from_rational([2, 4], 6)
    assert i.coeffs == (1, 2) and i.rhs == 3
    with pytest.raises(DomainError):
        Inequality.from_rational([0, 0], 0)


def test_normalized_view():
    i = Inequality((1, 1, 1, 1, 1), 2, FACET)
    coeffs, rhs = i.normalized()
    assert coeffs == tuple([Fraction(1, 2)] * 5) and rhs == 1
    with pytest.raises(DomainError):
        Inequality.nonnegativity(3, 0).normalized()


def test_support_and_eval():
    i = Inequality((1, 0, 2), 2, FACET)
    assert i.support() == 0b101
    assert i.evaluate_mask(0b101) == 3
    assert i.is_tight_mask(0b100)
    assert not i.is_full()
    assert Inequality((1, 1), 1).is_full()


def test_json_round_trip_bit_exact():
    rng = random.Random(6)
    rows = [Inequality.nonnegativity(4, v) for v in range(4)]
    for _ in range(30):
        coeffs = [rng.randint(0, 9) for _ in range(4)]
        if not any(coeffs):
            coeffs[0] = 1
        rows.append(Inequality.from_rational(coeffs, rng.randint(1, 9)))
    sys_ = LinearSystem(4, tuple(rows))
    text = sys_.to_json()
    again = LinearSystem.from_json(text)
    assert again == sys_
    assert again.to_json() == text


def test_json_errors():
    with pytest.raises(DomainError):
        LinearSystem.from_json("{")
    with pytest.raises(DomainError):
        LinearSystem.from_json('{"n": 2}')
    with pytest.raises(DomainError):
        LinearSystem.from_json('{"n":2,"rows":[{"coeffs":["1","1"],"rhs":"1","kind":"odd"}]}')


def test_kind_filters():
    sys_ = LinearSystem(
        2,
        (
            Inequality.nonnegativity(2, 0),
            Inequality.nonnegativity(2, 1),
            Inequality((1, 1), 1, FACET),
        ),
    )
    assert len(sys_.nonnegativity_rows()) == 2
    assert len(sys_.facet_rows()) == 1
    assert len(sys_.full_rows()) == 1
    assert sys_.rows[0].kind == NONNEGATIVITY
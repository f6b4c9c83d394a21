import pytest
from hypothesis import given, strategies as st

from gaussperfect.core import (
    ONE,
    UNITS,
    GaussianInt as G,
    ParseError,
    Unit,
    ZeroInputError,
    add,
    associates,
    canonicalize,
    divides,
    divmod_round,
    gcd,
    is_even,
    mul,
    norm,
    parse,
)

small = st.integers(-10**6, 10**6)
gaussians = st.builds(G, small, small)
nonzero = gaussians.filter(bool)


def test_add_examples():
    assert add(G(2, 1), G(1, 2)) == G(3, 3)
    assert add(G(7, -4), 0) == G(7, -4)
    assert add(G(2, 1), G(-2, -1)) == G(0, 0)


def test_mul_examples():
    assert mul(G(1, 1), G(1, 1)) == G(0, 2)
    assert mul(G(2, 1), G(2, -1)) == G(5, 0)
    product = mul(G(1, 2), G(2, 1))
    assert product == G(0, 5)
    assert norm(product) == 25 == norm(G(1, 2)) * norm(G(2, 1))


@pytest.mark.parametrize("eta, expected", [(G(2, 1), 5), (G(0, 0), 0), (G(1, 1), 2)])
def test_norm_examples(eta, expected):
    assert norm(eta) == expected


def test_divides_examples():
    assert divides(G(1, 1), G(3, 7)) == (True, G(5, 2))
    assert divides(G(1, 1), G(2, 1)) == (False, None)
    assert divides(G(2, 1), 5) == (True, G(2, -1))
    with pytest.raises(ZeroDivisionError):
        divides(0, G(3, 1))


@pytest.mark.parametrize("eta, even", [(G(1, 1), True), (G(2, 1), False), (G(3, 7), True)])
def test_is_even_examples(eta, even):
    assert is_even(eta) is even


def test_associates_examples():
    assert set(associates(G(2, -1))) == {G(2, -1), G(1, 2), G(-2, 1), G(-1, -2)}
    assert set(associates(1)) == {G(1), G(0, 1), G(-1), G(0, -1)}
    assert set(associates(G(1, 1))) == {G(1, 1), G(-1, 1), G(-1, -1), G(1, -1)}
    with pytest.raises(ZeroInputError):
        associates(0)


def test_canonicalize_examples():
    assert canonicalize(G(2, -1)) == (Unit.NEG_I, G(1, 2))
    assert canonicalize(5) == (Unit.ONE, G(5))
    assert canonicalize(-3) == (Unit.NEG_ONE, G(3))
    with pytest.raises(ZeroInputError):
        canonicalize(0)


def test_gcd_examples():
    assert gcd(5, G(2, 1)) == G(2, 1)
    assert gcd(G(2, 1), G(1, 2)) == ONE
    assert gcd(G(-4, 7), G(-4, 7)) == canonicalize(G(-4, 7))[1]
    assert gcd(0, G(0, -3)) == G(3)
    with pytest.raises(ZeroInputError):
        gcd(0, 0)


def test_unit_group():
    for u in UNITS:
        assert u.gaussian.norm() == 1
        assert u * u.inverse() is Unit.ONE
        for v in UNITS:
            assert isinstance(u * v, Unit)


@pytest.mark.parametrize(
    "text, value",
    [
        ("2+i", G(2, 1)),
        ("-1-2i", G(-1, -2)),
        ("0", G(0, 0)),
        ("i", G(0, 1)),
        ("-i", G(0, -1)),
        ("3i", G(0, 3)),
        ("-12i", G(0, -12)),
        ("7", G(7, 0)),
        ("-7", G(-7, 0)),
        ("2-i", G(2, -1)),
        ("10+23i", G(10, 23)),
    ],
)
def test_parse_and_format(text, value):
    assert parse(text) == value
    assert str(value) == text


@pytest.mark.parametrize("text", ["", "2 + i", "2+", "i2", "2i+3", "--1", "2*i", "1.5", "2+-i", "j"])
def test_parse_rejects(text):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.token == text


@given(gaussians)
def test_format_parse_round_trip(eta):
    assert parse(str(eta)) == eta


@given(gaussians, gaussians)
def test_norm_is_multiplicative(a, b):
    assert norm(a * b) == norm(a) * norm(b)


def test_parity_three_ways_on_grid():
    for a in range(-50, 51):
        for b in range(-50, 51):
            eta = G(a, b)
            by_division = divides(G(1, 1), eta)[0]
            assert is_even(eta) == by_division == ((a - b) % 2 == 0) == (norm(eta) % 2 == 0)
            if not is_even(eta):
                assert norm(eta) % 4 == 1


@given(st.lists(st.builds(G, st.integers(-20, 20), st.integers(-20, 20)), max_size=8))
def test_norm_of_sum_mod_two(etas):
    total = sum(etas, G(0, 0))
    assert norm(total) % 2 == sum(norm(e) for e in etas) % 2


@given(nonzero)
def test_canonicalize_unique(eta):
    unit, canon = canonicalize(eta)
    assert unit * canon == eta
    in_quadrant = [a for a in associates(eta) if a.re > 0 and a.im >= 0]
    assert in_quadrant == [canon]


@given(gaussians, nonzero)
def test_rounded_division_remainder_bound(a, b):
    q, r = divmod_round(a, b)
    assert q * b + r == a
    assert 2 * norm(r) <= norm(b)


@given(gaussians, gaussians, gaussians)
def test_gcd_is_greatest(a, b, c):
    if not a and not b:
        return
    g = gcd(a, b)
    assert g.re > 0 and g.im >= 0
    assert divides(g, a)[0] and divides(g, b)[0]
    # any common divisor c of a*c and b*c divides their gcd
    if c:
        assert divides(c, gcd(a * c, b * c))[0]


def test_components_must_be_ints():
    with pytest.raises(TypeError):
        G(1.5, 0)

from fractions import Fraction

from bruhatkit.polynomial import Poly, geometric


def test_construction_trims_zeros():
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly(()).is_zero()
    assert Poly((0,)).is_zero()


def test_arithmetic():
    q = Poly.q()
    p = (q - 1) * (q + 1)
    assert p == Poly((-1, 0, 1))
    assert p + 1 == q * q
    assert (q - 1) * geometric(4) == Poly.monomial(4) - 1
    assert -(q - 2) == 2 - q


def test_evaluation():
    p = Poly((1, 2, 3))  # 1 + 2q + 3q^2
    assert p(0) == 1
    assert p(2) == 17
    assert p(Fraction(1, 2)) == Fraction(11, 4)


def test_degree_and_str():
    assert Poly((1, 2, 3)).degree == 2
    assert Poly(()).degree == -1
    assert str(Poly((1, 2, 3))) == "3*q^2 + 2*q + 1"
    assert str(Poly((0, -1))) == "-q"
    assert str(Poly(())) == "0"
    assert str(Poly((0, 1)) - 1) == "q - 1"


def test_geometric_series_identity():
    q = Poly.q()
    for d in range(1, 7):
        assert geometric(d) * (q - 1) == Poly.monomial(d) - 1

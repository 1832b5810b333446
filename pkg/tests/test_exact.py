import random
from fractions import Fraction

import pytest

from bruhatkit.errors import SingularMatrixError
from bruhatkit.exact import (
    GF,
    QQ,
    ExactMatrix,
    PrimeField,
    int_det,
    int_rank,
    is_prime,
    matrix_from_json,
    random_invertible,
)


def test_is_prime():
    primes = [2, 3, 5, 7, 11, 101, 7919, 2**31 - 1]
    composites = [1, 0, 4, 9, 91, 561, 1105, 2**20]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(c) for c in composites)


def test_prime_field_validation():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(1)
    with pytest.raises(ValueError):
        GF(2**31 + 11)  # beyond the supported range
    f = GF(7)
    assert f.coerce(-1) == 6
    assert f.inv(3) == 5
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_rational_field_coercion():
    assert QQ.coerce("2/4") == Fraction(1, 2)
    assert QQ.coerce(3) == 3
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(TypeError):
        QQ.coerce(0.5)
    # stored rationals are always in lowest terms with positive denominator
    from math import gcd

    m = ExactMatrix(QQ, [["2/4", Fraction(-3, -6)], ["-6/8", Fraction(7, -1)]])
    for row in m.entries:
        for x in row:
            assert x.denominator > 0
            assert gcd(x.numerator, x.denominator) == 1
    assert m[0, 1] == Fraction(1, 2)
    assert m[1, 0] == Fraction(-3, 4)
    assert m[1, 1] == -7


def test_matrix_basics():
    m = ExactMatrix(QQ, [[1, 1], [1, 2]])
    assert m.det() == 1
    assert m.rank() == 2
    assert ExactMatrix.identity(QQ, 3).rank() == 3
    ones = ExactMatrix(GF(2), [[1, 1, 1]] * 3)
    assert ones.rank() == 1
    assert ones.det() == 0
    with pytest.raises(ValueError):
        ExactMatrix(QQ, [[1, 2], [3]])
    with pytest.raises(ValueError):
        m * ExactMatrix(GF(5), [[1, 0], [0, 1]])


def test_inverse_round_trip():
    rng = random.Random(3)
    for field in (QQ, GF(7)):
        for n in (2, 3, 4):
            for _ in range(20):
                m = random_invertible(field, n, rng)
                assert m * m.inverse() == ExactMatrix.identity(field, n)
    singular = ExactMatrix(QQ, [[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError) as info:
        singular.inverse()
    assert info.value.column == 2


def _fraction_det(m):
    # naive Fraction elimination oracle, independent of the Bareiss path
    a = [[Fraction(x) for x in row] for row in m.entries]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for i in range(col + 1, n):
            f = a[i][col] / a[col][col]
            a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


def test_rational_det_and_rank_against_fraction_oracle():
    rng = random.Random(4)
    pool = [Fraction(a, b) for a in range(-4, 5) for b in (1, 2, 3)]
    for n in (2, 3, 4, 5):
        for _ in range(25):
            entries = [[rng.choice(pool) for _ in range(n)] for _ in range(n)]
            m = ExactMatrix(QQ, entries)
            assert m.det() == _fraction_det(m)
    # rank of a product of a random column times a random row is 1
    for _ in range(10):
        col = [rng.choice(pool) for _ in range(4)]
        row = [rng.choice(pool) for _ in range(4)]
        if all(x == 0 for x in col) or all(x == 0 for x in row):
            continue
        m = ExactMatrix(QQ, [[c * r for r in row] for c in col])
        assert m.rank() == 1


def test_int_det_and_rank():
    assert int_det([[2, 0], [0, 3]]) == 6
    assert int_det([[1, 2], [2, 4]]) == 0
    assert int_det([[0, 1], [1, 0]]) == -1
    assert int_rank([[1, 2], [2, 4]]) == 1
    assert int_rank([[0, 0], [0, 0]]) == 0
    rng = random.Random(5)
    for n in (3, 4, 5):
        for _ in range(25):
            rows = [[rng.randrange(-6, 7) for _ in range(n)] for _ in range(n)]
            m = ExactMatrix(QQ, rows)
            assert int_det(rows) == _fraction_det(m)
            assert int_rank(rows) == m.rank()


def test_triangularity_predicate():
    up = ExactMatrix(QQ, [[1, 5], [0, 2]])
    assert up.is_upper_triangular()
    assert not up.transpose().is_upper_triangular()


def test_json_round_trip():
    m = ExactMatrix(QQ, [["1/2", 3], [-2, "7/3"]])
    back = matrix_from_json(m.to_json())
    assert back == m
    assert m.to_json()["entries"][0] == ["1/2", 3]
    g = ExactMatrix(GF(5), [[4, 0], [1, 3]])
    assert matrix_from_json(g.to_json()) == g
    assert g.to_json()["field"] == {"p": 5}


def test_json_validation_errors():
    with pytest.raises(ValueError):
        matrix_from_json({"field": "R", "rows": 1, "cols": 1, "entries": [[1]]})
    with pytest.raises(ValueError):
        matrix_from_json({"field": "Q", "rows": 2, "cols": 2, "entries": [[1, 2]]})
    with pytest.raises(ValueError):
        matrix_from_json({"rows": 1, "cols": 1, "entries": [[1]]})
    with pytest.raises(ValueError):
        matrix_from_json([[1, 2]])


def test_prime_field_equality_semantics():
    assert GF(5) == PrimeField(5)
    assert GF(5) != GF(7)
    assert QQ != GF(5)
    assert hash(GF(5)) == hash(PrimeField(5))

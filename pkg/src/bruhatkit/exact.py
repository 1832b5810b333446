"""Exact scalars and dense matrices over Q and over prime fields GF(p).

Rationals are Python Fractions (always reduced, positive denominator);
GF(p) elements are plain residues 0..p-1 with the modulus carried by the
field descriptor.  Nothing here ever touches floating point.

Elimination over Q is fraction-free: rows are scaled to integers and
determinants/ranks run through one-step fraction-free reduction, which keeps
intermediate entries polynomially bounded.  Over GF(p) it is plain modular
arithmetic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import SingularMatrixError

_MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3_215_031_751 (covers 2^31)."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rationals; a stateless singleton (see QQ)."""

    name = "Q"

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def format(self, a) -> str:
        return str(a)

    def entry_to_json(self, a):
        return int(a) if a.denominator == 1 else str(a)

    def to_json(self):
        return "Q"


class PrimeField:
    """GF(p) for a prime p < 2^31; elements are residues 0..p-1."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p >= _MAX_PRIME or not is_prime(p):
            raise ValueError(f"p must be a prime below 2^31, got {p}")
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x) -> int:
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            return int(x) % self.p
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def format(self, a) -> str:
        return str(a)

    def entry_to_json(self, a):
        return int(a)

    def to_json(self):
        return {"p": self.p}


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


class ExactMatrix:
    """An immutable dense matrix over QQ or GF(p)."""

    __slots__ = ("field", "rows", "cols", "entries", "_hash")

    def __init__(self, field, entries):
        rows = tuple(tuple(field.coerce(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must be non-empty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self.field = field
        self.rows = len(rows)
        self.cols = width
        self.entries = rows
        self._hash = hash((field, rows))

    @classmethod
    def identity(cls, field, n: int) -> "ExactMatrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, field, window) -> "ExactMatrix":
        """The 0/1 matrix sending e_j to e_{window[j]} (family-A window)."""
        n = len(window)
        mat = [[field.zero] * n for _ in range(n)]
        for j, image in enumerate(window):
            mat[image - 1][j] = field.one
        return cls(field, mat)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ExactMatrix({self.field!r}, {self.rows}x{self.cols})"

    def __str__(self):
        fmt = self.field.format
        widths = [max(len(fmt(self.entries[i][j])) for i in range(self.rows)) for j in range(self.cols)]
        lines = []
        for row in self.entries:
            lines.append("[" + "  ".join(fmt(x).rjust(w) for x, w in zip(row, widths)) + "]")
        return "\n".join(lines)

    def _require_same_field(self, other):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._require_same_field(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        f = self.field
        bt = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in bt:
                acc = f.zero
                for a, b in zip(row, col):
                    acc = f.add(acc, f.mul(a, b))
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(f, out)

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._require_same_field(other)
        f = self.field
        return ExactMatrix(
            f, [[f.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._require_same_field(other)
        f = self.field
        return ExactMatrix(
            f, [[f.sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def scaled(self, c) -> "ExactMatrix":
        f = self.field
        c = f.coerce(c)
        return ExactMatrix(f, [[f.mul(c, x) for x in row] for row in self.entries])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, list(zip(*self.entries)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_upper_triangular(self) -> bool:
        return all(
            self.entries[i][j] == self.field.zero
            for i in range(self.rows)
            for j in range(min(i, self.cols))
        )

    def submatrix(self, row_range, col_range) -> "ExactMatrix":
        return ExactMatrix(
            self.field, [[self.entries[i][j] for j in col_range] for i in row_range]
        )

    def det(self):
        if not self.is_square():
            raise ValueError("determinant needs a square matrix")
        if isinstance(self.field, PrimeField):
            return _det_mod_p([list(r) for r in self.entries], self.field.p)
        int_rows, scale = _clear_denominators(self.entries)
        return Fraction(int_det(int_rows), scale)

    def rank(self) -> int:
        if isinstance(self.field, PrimeField):
            return _rank_mod_p([list(r) for r in self.entries], self.field.p)
        int_rows, _ = _clear_denominators(self.entries)
        return int_rank(int_rows)

    def inverse(self) -> "ExactMatrix":
        """Gauss-Jordan inverse; raises SingularMatrixError on singular input."""
        if not self.is_square():
            raise ValueError("inverse needs a square matrix")
        f = self.field
        n = self.rows
        work = [list(row) + list(ident_row) for row, ident_row in zip(self.entries, ExactMatrix.identity(f, n).entries)]
        for col in range(n):
            piv = None
            for i in range(col, n):
                if work[i][col] != f.zero:
                    piv = i
                    break
            if piv is None:
                raise SingularMatrixError(
                    f"matrix is singular: no nonzero pivot in column {col + 1}", column=col + 1
                )
            work[col], work[piv] = work[piv], work[col]
            inv_piv = f.inv(work[col][col])
            work[col] = [f.mul(inv_piv, x) for x in work[col]]
            for i in range(n):
                if i != col and work[i][col] != f.zero:
                    c = work[i][col]
                    work[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(work[i], work[col])]
        return ExactMatrix(f, [row[n:] for row in work])

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[self.field.entry_to_json(x) for x in row] for row in self.entries],
        }


def matrix_from_json(obj) -> ExactMatrix:
    """Parse the shared wire format:
    {"field": "Q" | {"p": prime}, "rows": n, "cols": n, "entries": [[...], ...]}
    with rationals as "a/b" strings (plain ints accepted) and GF(p) entries
    as integers."""
    if not isinstance(obj, dict):
        raise ValueError("matrix JSON must be an object")
    try:
        field_spec = obj["field"]
        rows, cols = obj["rows"], obj["cols"]
        entries = obj["entries"]
    except KeyError as missing:
        raise ValueError(f"matrix JSON lacks key {missing}") from None
    if field_spec == "Q":
        field = QQ
    elif isinstance(field_spec, dict) and "p" in field_spec:
        field = PrimeField(field_spec["p"])
    else:
        raise ValueError(f"unknown field spec {field_spec!r}")
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ValueError("entries do not match the declared shape")
    return ExactMatrix(field, entries)


# ---------------------------------------------------------------------------
# integer fraction-free elimination


def int_det(rows: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by one-step fraction-free
    elimination (all intermediate divisions are exact)."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                assert r == 0
                m[i][j] = q
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def int_rank(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                num = m[i][j] * pivot - m[i][c] * m[r][j]
                q, rem = divmod(num, prev)
                assert rem == 0
                m[i][j] = q
            m[i][c] = 0
        prev = pivot
        r += 1
        if r == nr:
            break
    return r


def _clear_denominators(entries) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns (rows, product of the scalings)."""
    out = []
    scale = 1
    for row in entries:
        mult = 1
        for x in row:
            mult = mult * x.denominator // _gcd(mult, x.denominator)
        out.append([int(x * mult) for x in row])
        scale *= mult
    return out, scale


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _det_mod_p(m: list[list[int]], p: int) -> int:
    n = len(m)
    det = 1
    for col in range(n):
        piv = None
        for i in range(col, n):
            if m[i][col] % p:
                piv = i
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pivot = m[col][col] % p
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        for i in range(col + 1, n):
            factor = m[i][col] * inv % p
            if factor:
                m[i] = [(a - factor * b) % p for a, b in zip(m[i], m[col])]
    return det % p


def _rank_mod_p(m: list[list[int]], p: int) -> int:
    nr, nc = len(m), len(m[0])
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        for i in range(r + 1, nr):
            factor = m[i][c] * inv % p
            if factor:
                m[i] = [(a - factor * b) % p for a, b in zip(m[i], m[r])]
        r += 1
        if r == nr:
            break
    return r


def random_invertible(field, n: int, rng, entry_pool=None) -> ExactMatrix:
    """A uniformly-sampled-enough invertible matrix for randomized checks."""
    while True:
        if isinstance(field, PrimeField):
            entries = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
        else:
            pool = entry_pool or [Fraction(a, b) for a in range(-5, 6) for b in range(1, 4)]
            entries = [[rng.choice(pool) for _ in range(n)] for _ in range(n)]
        m = ExactMatrix(field, entries)
        if m.det() != field.zero:
            return m


def enumerate_matrices(field, n: int):
    """All n x n matrices over a prime field (tiny cases only)."""
    if not isinstance(field, PrimeField):
        raise ValueError("enumeration needs a finite field")
    values = range(field.p)
    for flat in itertools.product(values, repeat=n * n):
        yield ExactMatrix(field, [flat[i * n:(i + 1) * n] for i in range(n)])

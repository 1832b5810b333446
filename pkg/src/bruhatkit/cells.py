"""Bruhat cell extraction over exact fields, flags, and cell enumeration.

The Borel subgroup B is fixed once and for all as the invertible upper
triangular matrices; every cell statement below is relative to that choice.
Each invertible g lies in exactly one double coset B.w_rep.B, and this module
recovers the indexing permutation w two independent ways: by elimination with
recorded factors (bruhat_decompose) and from rank profiles of lower-left
submatrices (bruhat_cell_rank_profile).

Symplectic conventions
----------------------
The symplectic form is the antidiagonal J with +1 in rows 1..n and -1 in rows
n+1..2n, so that upper triangular symplectic matrices form a Borel of Sp_2n
and the GL_2n cell of a symplectic matrix always lands in the embedded
hyperoctahedral group (signed letter i sits at position i, -i at 2n+1-i).
Weyl representatives are normalized to the 0/1 permutation matrix in type A
and to the J-compatible signed monomial matrix in type C; torus ambiguity is
absorbed into the right Borel factor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetError, IntegrityError, SingularMatrixError
from .exact import ExactMatrix, PrimeField
from .weyl import GroupSpec, WeylElement, signed_window_from_symmetric

DEFAULT_CELL_BUDGET = 10**7


@dataclass(frozen=True)
class BruhatFactorization:
    """g = b1 * w_rep * b2 with b1, b2 invertible upper triangular."""

    w: WeylElement
    w_rep: ExactMatrix
    b1: ExactMatrix
    b2: ExactMatrix

    def product(self) -> ExactMatrix:
        return self.b1 * self.w_rep * self.b2


def bruhat_decompose(g: ExactMatrix) -> BruhatFactorization:
    """Factor an invertible matrix as b1 * w_rep * b2.

    Columns are processed left to right; the pivot of each column is its
    lowest nonzero entry in a not-yet-used row.  Clearing above the pivot is
    a left multiplication by an upper triangular transvection, clearing the
    pivot row to the right (and scaling the pivot to 1) are right
    multiplications, so the accumulated factors stay in B and the matrix
    left over is exactly the 0/1 representative of the cell.
    """
    if not g.is_square():
        raise ValueError("Bruhat decomposition needs a square matrix")
    f = g.field
    n = g.rows
    a = [list(row) for row in g.entries]
    u1 = [list(row) for row in ExactMatrix.identity(f, n).entries]
    u2 = [list(row) for row in ExactMatrix.identity(f, n).entries]
    used = [False] * n
    window = [0] * n
    for j in range(n):
        piv = None
        for i in range(n - 1, -1, -1):
            if not used[i] and a[i][j] != f.zero:
                piv = i
                break
        if piv is None:
            raise SingularMatrixError(
                f"matrix is singular: no unused nonzero pivot in column {j + 1}",
                column=j + 1,
            )
        used[piv] = True
        window[j] = piv + 1
        scale = f.inv(a[piv][j])
        if scale != f.one:
            for i in range(n):
                a[i][j] = f.mul(a[i][j], scale)
                u2[i][j] = f.mul(u2[i][j], scale)
        for i in range(piv):
            c = a[i][j]
            if c != f.zero:
                a[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(a[i], a[piv])]
                u1[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(u1[i], u1[piv])]
        for j2 in range(j + 1, n):
            c = a[piv][j2]
            if c != f.zero:
                for i in range(n):
                    a[i][j2] = f.sub(a[i][j2], f.mul(c, a[i][j]))
                    u2[i][j2] = f.sub(u2[i][j2], f.mul(c, u2[i][j]))
    w = WeylElement(GroupSpec("A", n - 1), tuple(window))
    w_rep = ExactMatrix.permutation(f, window)
    b1 = ExactMatrix(f, u1).inverse()
    b2 = ExactMatrix(f, u2).inverse()
    fact = BruhatFactorization(w, w_rep, b1, b2)
    if fact.product() != g:
        raise IntegrityError("factorization failed to reconstruct the input")
    return fact


def bruhat_cell_window(g: ExactMatrix) -> tuple[int, ...]:
    """Just the cell's window, by column reduction alone.

    Greedy: the pivot of each column is its lowest nonzero entry in an
    unused row; clearing the pivot row rightward by column operations is a
    right multiplication by B, and the pivot positions are the window.
    """
    if not g.is_square():
        raise ValueError("Bruhat cell needs a square matrix")
    f = g.field
    if isinstance(f, PrimeField):
        return cell_window_mod_p([list(row) for row in g.entries], f.p)
    n = g.rows
    cols = [[g.entries[i][j] for i in range(n)] for j in range(n)]
    used = [False] * n
    window = [0] * n
    for j in range(n):
        col = cols[j]
        piv = None
        for i in range(n - 1, -1, -1):
            if not used[i] and col[i] != f.zero:
                piv = i
                break
        if piv is None:
            raise SingularMatrixError(
                f"matrix is singular: no unused nonzero pivot in column {j + 1}",
                column=j + 1,
            )
        used[piv] = True
        window[j] = piv + 1
        inv = f.inv(col[piv])
        for j2 in range(j + 1, n):
            col2 = cols[j2]
            c = f.mul(col2[piv], inv)
            if c != f.zero:
                for i in range(n):
                    col2[i] = f.sub(col2[i], f.mul(c, col[i]))
    return tuple(window)


def cell_window_mod_p(rows: list[list[int]], p: int) -> tuple[int, ...]:
    """Cell window of an invertible matrix mod p (hot path for bulk scans)."""
    n = len(rows)
    cols = [[rows[i][j] % p for i in range(n)] for j in range(n)]
    used = [False] * n
    window = [0] * n
    for j in range(n):
        col = cols[j]
        piv = None
        for i in range(n - 1, -1, -1):
            if not used[i] and col[i]:
                piv = i
                break
        if piv is None:
            raise SingularMatrixError(
                f"matrix is singular: no unused nonzero pivot in column {j + 1}",
                column=j + 1,
            )
        used[piv] = True
        window[j] = piv + 1
        inv = pow(col[piv], -1, p)
        for j2 in range(j + 1, n):
            col2 = cols[j2]
            c = col2[piv] * inv % p
            if c:
                for i in range(n):
                    col2[i] = (col2[i] - c * col[i]) % p
    return tuple(window)


def bruhat_cell_rank_profile(g: ExactMatrix) -> WeylElement:
    """The cell permutation read off rank profiles, independent of elimination.

    For g in the cell of w, the rank of the submatrix on rows i..n and
    columns 1..j equals #{k <= j : w(k) >= i}; the permutation positions are
    where the second difference of that table is 1.
    """
    if not g.is_square():
        raise ValueError("rank profile needs a square matrix")
    n = g.rows
    ranks = [[0] * (n + 1) for _ in range(n + 2)]
    for i in range(n, 0, -1):
        for j in range(1, n + 1):
            ranks[i][j] = g.submatrix(range(i - 1, n), range(j)).rank()
    if ranks[1][n] != n:
        raise SingularMatrixError("matrix is singular: full rank profile missing")
    window = []
    for j in range(1, n + 1):
        hits = [
            i
            for i in range(1, n + 1)
            if ranks[i][j] - ranks[i + 1][j] - ranks[i][j - 1] + ranks[i + 1][j - 1] == 1
        ]
        if len(hits) != 1:
            raise IntegrityError(f"rank profile of column {j} is not a permutation step")
        window.append(hits[0])
    return WeylElement(GroupSpec("A", n - 1), tuple(window))


# ---------------------------------------------------------------------------
# complete flags


class Flag:
    """A complete flag: subspace i is the span of the first i basis columns."""

    __slots__ = ("basis",)

    def __init__(self, basis: ExactMatrix):
        if not basis.is_square():
            raise ValueError("a flag basis must be square")
        if basis.det() == basis.field.zero:
            raise SingularMatrixError("flag basis is singular")
        self.basis = basis

    @classmethod
    def standard(cls, field, n: int) -> "Flag":
        return cls(ExactMatrix.identity(field, n))

    @property
    def field(self):
        return self.basis.field

    @property
    def dimension(self) -> int:
        return self.basis.rows


def relative_position(f1: Flag, f2: Flag) -> WeylElement:
    """The Weyl element indexing the orbit of the pair (f1, f2): the cell of
    basis(f1)^-1 * basis(f2).  Invariant under a common change of frame and
    under column operations preserving each flag."""
    if f1.field != f2.field:
        raise ValueError("flags live over different fields")
    if f1.dimension != f2.dimension:
        raise ValueError("flags have different dimensions")
    rel = f1.basis.inverse() * f2.basis
    window = bruhat_cell_window(rel)
    return WeylElement(GroupSpec("A", len(window) - 1), window)


# ---------------------------------------------------------------------------
# type C root machinery (dimension 2n, form J as in the module docstring)


def symplectic_form(field, n: int) -> ExactMatrix:
    big = 2 * n
    mat = [[field.zero] * big for _ in range(big)]
    for i in range(1, n + 1):
        mat[i - 1][big - i] = field.one
        mat[big - i][i - 1] = field.neg(field.one)
    return ExactMatrix(field, mat)


def symplectic_membership(g: ExactMatrix, form: ExactMatrix | None = None) -> bool:
    """Whether g preserves the fixed antidiagonal symplectic form."""
    if not g.is_square() or g.rows % 2:
        return False
    j = form if form is not None else symplectic_form(g.field, g.rows // 2)
    return g.transpose() * j * g == j


def sp_bruhat_decompose(g: ExactMatrix) -> WeylElement:
    """The signed-permutation cell of a symplectic matrix.

    Extracts the GL cell of g and converts the window through the embedding;
    a symplectic matrix whose GL cell fell outside the embedded group would
    falsify the setup, so that raises IntegrityError rather than returning.
    """
    if not symplectic_membership(g):
        raise ValueError("matrix does not preserve the symplectic form")
    window = bruhat_cell_window(g)
    signed = signed_window_from_symmetric(window)
    if signed is None:
        raise IntegrityError(
            f"symplectic matrix landed in GL cell {window}, outside the embedded group"
        )
    return WeylElement(GroupSpec("BC", g.rows // 2), signed)


def c_positive_roots(n: int) -> list[tuple]:
    """Positive roots of type C_n: ("d",i,j) = e_i - e_j and ("s",i,j) =
    e_i + e_j for i < j, ("l",i) = 2 e_i.  There are n^2 of them."""
    roots = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(("d", i, j))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(("s", i, j))
    for i in range(1, n + 1):
        roots.append(("l", i))
    return roots


def c_root_negate(root: tuple) -> tuple:
    return ("n",) + root


def _root_coeffs(window: tuple[int, ...], root: tuple) -> list[int]:
    # coefficients of w(root) in the e-basis
    n = len(window)
    coeffs = [0] * (n + 1)
    if root[0] == "n":
        inner = _root_coeffs(window, root[1:])
        return [-c for c in inner]
    if root[0] == "l":
        v = window[root[1] - 1]
        coeffs[abs(v)] = 2 if v > 0 else -2
        return coeffs
    kind, i, j = root
    vi, vj = window[i - 1], window[j - 1]
    coeffs[abs(vi)] += 1 if vi > 0 else -1
    sign_j = 1 if kind == "s" else -1
    coeffs[abs(vj)] += sign_j if vj > 0 else -sign_j
    return coeffs


def c_root_is_positive(window: tuple[int, ...], root: tuple) -> bool:
    """Whether w applied to the root is again positive."""
    coeffs = _root_coeffs(window, root)
    for c in coeffs:
        if c:
            return c > 0
    raise IntegrityError("root image vanished")


def inverted_roots(w: WeylElement) -> list[tuple]:
    """Positive roots alpha with w^-1(alpha) negative; there are length(w)."""
    if w.spec.family != "BC":
        raise ValueError("inverted_roots works on the type C root system")
    inv_window = w.inverse().window
    roots = [a for a in c_positive_roots(w.spec.rank) if not c_root_is_positive(inv_window, a)]
    if len(roots) != w.length():
        raise IntegrityError(f"{w} inverts {len(roots)} roots but has length {w.length()}")
    return roots


def c_root_positions(root: tuple, n: int) -> list[tuple[int, int, int]]:
    """Entry positions (row, col, coefficient) of the nilpotent part of the
    one-parameter subgroup of Sp_2n attached to the root (0-based)."""
    big = 2 * n
    if root[0] == "n":
        return [(c, r, v) for (r, c, v) in c_root_positions(root[1:], n)]
    if root[0] == "l":
        i = root[1]
        return [(i - 1, big - i, 1)]
    kind, i, j = root
    if kind == "d":
        return [(i - 1, j - 1, 1), (big - j, big - i, -1)]
    return [(i - 1, big - j, 1), (j - 1, big - i, 1)]


def c_root_element(field, n: int, root: tuple, t) -> ExactMatrix:
    """The symplectic one-parameter element: identity plus t at the root
    positions.  Upper triangular exactly for positive roots."""
    t = field.coerce(t)
    mat = [list(row) for row in ExactMatrix.identity(field, 2 * n).entries]
    for r, c, v in c_root_positions(root, n):
        mat[r][c] = field.mul(t, field.coerce(v))
    return ExactMatrix(field, mat)


def sp_weyl_matrix(w: WeylElement, field) -> ExactMatrix:
    """The J-compatible signed monomial representative of a BC element:
    columns 1..n carry +1, column 2n+1-i carries -1 exactly when w(i) < 0."""
    if w.spec.family != "BC":
        raise ValueError("symplectic representatives exist for family BC")
    n = w.spec.rank
    big = 2 * n
    perm = w.embed_in_symmetric().window
    mat = [[field.zero] * big for _ in range(big)]
    for j in range(1, big + 1):
        if j <= n:
            value = field.one
        else:
            value = field.one if w.window[big - j] > 0 else field.neg(field.one)
        mat[perm[j - 1] - 1][j - 1] = value
    return ExactMatrix(field, mat)


def sp_torus_matrix(field, n: int, diag) -> ExactMatrix:
    big = 2 * n
    mat = [[field.zero] * big for _ in range(big)]
    for i, t in enumerate(diag):
        t = field.coerce(t)
        mat[i][i] = t
        mat[big - 1 - i][big - 1 - i] = field.inv(t)
    return ExactMatrix(field, mat)


# ---------------------------------------------------------------------------
# cell enumeration over prime fields


def borel_order(family: str, rank: int, q: int) -> int:
    """|B(F_q)|: the GL Borel for family A, the symplectic Borel for BC."""
    if family == "A":
        n = rank + 1
        return (q - 1) ** n * q ** (n * (n - 1) // 2)
    if family == "BC":
        return (q - 1) ** rank * q ** (rank * rank)
    raise ValueError(f"no matrix group wired for family {family}")


def cell_order(w: WeylElement, q: int) -> int:
    return q ** w.length() * borel_order(w.spec.family, w.spec.rank, q)


def gl_free_positions(window: tuple[int, ...]) -> list[tuple[int, int]]:
    """Strictly-upper positions (i, j), 0-based, that parametrize the
    unipotent factor of the cell: one per inversion of the window."""
    n = len(window)
    inv = [0] * (n + 1)
    for pos, image in enumerate(window, start=1):
        inv[image] = pos
    return [(i, j) for i in range(n) for j in range(i + 1, n) if inv[i + 1] > inv[j + 1]]


def gl_borel_matrices(field, n: int):
    """Every element of the GL Borel over a prime field, exactly once."""
    q = field.p
    uppers = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for diag in itertools.product(range(1, q), repeat=n):
        for strict in itertools.product(range(q), repeat=len(uppers)):
            mat = [[0] * n for _ in range(n)]
            for i, d in enumerate(diag):
                mat[i][i] = d
            for (i, j), v in zip(uppers, strict):
                mat[i][j] = v
            yield ExactMatrix(field, mat)


def sp_borel_matrices(field, n: int):
    """Every element of the symplectic Borel over a prime field: a torus
    element times the positive root elements in a fixed order."""
    q = field.p
    roots = c_positive_roots(n)
    for diag in itertools.product(range(1, q), repeat=n):
        torus = sp_torus_matrix(field, n, diag)
        for params in itertools.product(range(q), repeat=len(roots)):
            b = torus
            for root, t in zip(roots, params):
                if t:
                    b = b * c_root_element(field, n, root, t)
            yield b


def enumerate_cell(w: WeylElement, q: int, budget: int = DEFAULT_CELL_BUDGET):
    """Yield every element of the cell of w over GF(q), exactly once.

    Type A yields GL matrices, type BC symplectic ones.  Elements come out
    as u * w_rep * b with u running over the free unipotent coordinates
    (one per positive root inverted by w) and b over the whole Borel.
    """
    field = PrimeField(q)
    size = cell_order(w, q)
    if size > budget:
        raise BudgetError(
            f"cell of {w} over GF({q}) has {size} elements, over budget {budget}",
            required=size,
            budget=budget,
        )
    if w.spec.family == "A":
        n = w.spec.degree
        w_rep = ExactMatrix.permutation(field, w.window)
        free = gl_free_positions(w.window)
        if len(free) != w.length():
            raise IntegrityError(f"{w}: {len(free)} free positions for length {w.length()}")
        for params in itertools.product(range(q), repeat=len(free)):
            mat = [list(row) for row in ExactMatrix.identity(field, n).entries]
            for (i, j), t in zip(free, params):
                mat[i][j] = t
            uw = ExactMatrix(field, mat) * w_rep
            for b in gl_borel_matrices(field, n):
                yield uw * b
    elif w.spec.family == "BC":
        n = w.spec.rank
        w_rep = sp_weyl_matrix(w, field)
        free = inverted_roots(w)
        for params in itertools.product(range(q), repeat=len(free)):
            u = ExactMatrix.identity(field, 2 * n)
            for root, t in zip(free, params):
                if t:
                    u = u * c_root_element(field, n, root, t)
            uw = u * w_rep
            for b in sp_borel_matrices(field, n):
                yield uw * b
    else:
        raise ValueError("no matrix group wired for family D")

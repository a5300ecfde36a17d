"""Exact integer matrix algebra: Hermite/Smith normal forms, kernels, solving.

Everything here works over Z with Python's arbitrary-precision integers.
Matrices are dense and small (desk scale); the pivoting strategy throughout
is "nonzero entry of minimal absolute value, ties broken by smallest row
then column index", which keeps coefficient growth tame and makes every
output deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence


class Mat:
    """Dense integer matrix. Rows of Python ints; shape is explicit so that
    0 x n and n x 0 matrices are first-class (they show up as empty kernels
    and rank-zero lattices)."""

    __slots__ = ("rows", "cols", "a")

    def __init__(self, rows: int, cols: int, a: list[list[int]]):
        self.rows = rows
        self.cols = cols
        self.a = a

    @classmethod
    def from_rows(cls, a: Sequence[Sequence[int]], cols: Optional[int] = None) -> "Mat":
        rows = len(a)
        if rows == 0:
            if cols is None:
                raise ValueError("cols required for a 0-row matrix")
            return cls(0, cols, [])
        width = len(a[0])
        data = []
        for row in a:
            if len(row) != width:
                raise ValueError("ragged rows")
            data.append([int(x) for x in row])
        if cols is not None and cols != width:
            raise ValueError("cols mismatch")
        return cls(rows, width, data)

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[int]], rows: Optional[int] = None) -> "Mat":
        if len(cols) == 0:
            if rows is None:
                raise ValueError("rows required for a 0-column matrix")
            return cls(rows, 0, [[] for _ in range(rows)])
        height = len(cols[0])
        data = [[int(col[i]) for col in cols] for i in range(height)]
        return cls(height, len(cols), data)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    def copy(self) -> "Mat":
        return Mat(self.rows, self.cols, [row[:] for row in self.a])

    def col(self, j: int) -> list[int]:
        return [row[j] for row in self.a]

    def columns(self) -> list[list[int]]:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   [[self.a[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def mul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ob = other.a
        out = []
        for row in self.a:
            acc = [0] * other.cols
            for k, x in enumerate(row):
                if x:
                    brow = ob[k]
                    for j, y in enumerate(brow):
                        if y:
                            acc[j] += x * y
            out.append(acc)
        return Mat(self.rows, other.cols, out)

    def __matmul__(self, other: "Mat") -> "Mat":
        return self.mul(other)

    def mulvec(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(x * y for x, y in zip(row, v)) for row in self.a]

    def add(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat(self.rows, self.cols,
                   [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.a, other.a)])

    def sub(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat(self.rows, self.cols,
                   [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.a, other.a)])

    def neg(self) -> "Mat":
        return Mat(self.rows, self.cols, [[-x for x in row] for row in self.a])

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return Mat(self.rows, self.cols + other.cols,
                   [r1 + r2 for r1, r2 in zip(self.a, other.a)])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.a for x in row)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(x == (1 if i == j else 0)
                   for i, row in enumerate(self.a) for j, x in enumerate(row))

    def is_permutation(self) -> bool:
        """True iff this is a 0/1 matrix with exactly one 1 per row and column."""
        if self.rows != self.cols:
            return False
        seen_cols = set()
        for row in self.a:
            ones = [j for j, x in enumerate(row) if x != 0]
            if len(ones) != 1 or row[ones[0]] != 1:
                return False
            seen_cols.add(ones[0])
        return len(seen_cols) == self.rows

    def to_lists(self) -> list[list[int]]:
        return [row[:] for row in self.a]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.a == other.a

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.a)))

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols}, {self.a})"


@dataclass(frozen=True)
class AbelianInvariants:
    """Finite-rank abelian group Z^free_rank + Z/d1 + ... with d1 | d2 | ...

    Divisors are all >= 2 and stored in ascending divisibility order, so two
    values compare equal iff the groups are isomorphic.
    """

    divisors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        prev = 1
        for d in self.divisors:
            if d < 2 or d % prev != 0:
                raise ValueError(f"bad divisor chain {self.divisors}")
            prev = d
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    @property
    def is_trivial(self) -> bool:
        return not self.divisors and self.free_rank == 0

    def order(self) -> int:
        if self.free_rank:
            raise ValueError("infinite group")
        n = 1
        for d in self.divisors:
            n *= d
        return n

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"C{d}" for d in self.divisors]
        return " x ".join(parts) if parts else "0"

    def to_list(self) -> list[int]:
        return list(self.divisors)


TRIVIAL_GROUP_INVARIANTS = AbelianInvariants()


class SmithDecomposition(NamedTuple):
    U: Mat
    D: Mat
    V: Mat


def _pick_pivot(a: list[list[int]], start_row: int, ncols: int, col: int) -> Optional[int]:
    """Row index >= start_row minimizing |a[i][col]| over nonzero entries."""
    best = None
    best_abs = None
    for i in range(start_row, len(a)):
        x = a[i][col]
        if x:
            ax = -x if x < 0 else x
            if best_abs is None or ax < best_abs:
                best, best_abs = i, ax
                if ax == 1:
                    break
    return best


def row_hermite(A: Mat, transform: bool = False):
    """Row-style Hermite normal form.

    Returns (H, U, pivots) with H = U*A when transform is requested, U
    unimodular. H is the canonical echelon form: pivot columns strictly
    increase, pivots are positive, entries above a pivot lie in [0, pivot),
    zero rows sit at the bottom.
    """
    a = [row[:] for row in A.a]
    n, m = A.rows, A.cols
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if transform else None
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(m):
        if r >= n:
            break
        # Euclidean passes until only row r is nonzero in column c.
        while True:
            i = _pick_pivot(a, r, m, c)
            if i is None:
                break
            if i != r:
                a[r], a[i] = a[i], a[r]
                if u is not None:
                    u[r], u[i] = u[i], u[r]
            piv = a[r][c]
            if piv < 0:
                a[r] = [-x for x in a[r]]
                if u is not None:
                    u[r] = [-x for x in u[r]]
                piv = -piv
            done = True
            for i in range(r + 1, n):
                x = a[i][c]
                if x:
                    q = x // piv
                    if q:
                        row_r = a[r]
                        a[i] = [y - q * z for y, z in zip(a[i], row_r)]
                        if u is not None:
                            ur = u[r]
                            u[i] = [y - q * z for y, z in zip(u[i], ur)]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < n and a[r][c]:
            piv = a[r][c]
            for i in range(r):
                x = a[i][c]
                q = x // piv
                if q:
                    row_r = a[r]
                    a[i] = [y - q * z for y, z in zip(a[i], row_r)]
                    if u is not None:
                        ur = u[r]
                        u[i] = [y - q * z for y, z in zip(u[i], ur)]
            pivots.append((r, c))
            r += 1
    H = Mat(n, m, a)
    U = Mat(n, n, u) if transform else None
    return H, U, pivots


def hermite_basis(columns: Iterable[Sequence[int]], dim: int) -> Mat:
    """Canonical basis (as columns) of the lattice spanned by the given columns.

    The result is the row-HNF of the transposed generator list, transposed
    back, with zero rows dropped: unique per lattice, pivots in ascending
    coordinate order.
    """
    rows = [list(c) for c in columns]
    if not rows:
        return Mat(dim, 0, [[] for _ in range(dim)])
    H, _, pivots = row_hermite(Mat.from_rows(rows, dim))
    basis_rows = [H.a[r] for r, _ in pivots]
    return Mat.from_rows(basis_rows, dim).transpose() if basis_rows else Mat(dim, 0, [[] for _ in range(dim)])


def kernel_basis(A: Mat) -> Mat:
    """Saturated basis of {x : A*x = 0}, as columns, canonically normalized.

    Computed from a unimodular transform U with U*A^T in echelon form: the
    rows of U matching zero rows of the echelon span the kernel lattice
    exactly (saturation comes for free from unimodularity).
    """
    H, U, pivots = row_hermite(A.transpose(), transform=True)
    pivot_rows = {r for r, _ in pivots}
    kernel_rows = [U.a[i] for i in range(A.cols) if i not in pivot_rows]
    return hermite_basis(kernel_rows, A.cols)


class LinearSolver:
    """Prepared solver for repeated A*x = b queries against a fixed A."""

    def __init__(self, A: Mat):
        self.A = A
        self._H, self._U, self._pivots = row_hermite(A.transpose(), transform=True)

    def solve(self, b: Sequence[int]) -> Optional[list[int]]:
        if len(b) != self.A.rows:
            raise ValueError("dimension mismatch")
        residual = list(b)
        coeffs: list[tuple[int, int]] = []
        for r, c in self._pivots:
            val = residual[c]
            piv = self._H.a[r][c]
            if val % piv:
                return None
            y = val // piv
            if y:
                row = self._H.a[r]
                residual = [x - y * z for x, z in zip(residual, row)]
                coeffs.append((r, y))
        if any(residual):
            return None
        x = [0] * self.A.cols
        for r, y in coeffs:
            urow = self._U.a[r]
            x = [xi + y * ui for xi, ui in zip(x, urow)]
        return x

    def contains(self, b: Sequence[int]) -> bool:
        return self.solve(b) is not None

    def solve_matrix(self, B: Mat) -> Optional[Mat]:
        """Solve A*X = B columnwise; None if any column fails."""
        cols = []
        for j in range(B.cols):
            x = self.solve(B.col(j))
            if x is None:
                return None
            cols.append(x)
        return Mat.from_cols(cols, rows=self.A.cols)


def solve_integer(A: Mat, b: Sequence[int]) -> Optional[list[int]]:
    """Some integral solution of A*x = b, or None if there is none."""
    return LinearSolver(A).solve(b)


class LatticeAccumulator:
    """Growing sublattice of Z^dim with exact membership tests.

    Keeps an echelon basis (one row per pivot column) updated incrementally;
    add() is an HNF insertion, contains() reduces with exact divisions.
    Suited to cover construction where images grow a few vectors at a time
    and membership is queried often.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: dict[int, list[int]] = {}  # pivot column -> row

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vec: Sequence[int]) -> bool:
        """Insert a vector; True if the lattice grew."""
        v = [int(x) for x in vec]
        grew = False
        while True:
            lead = next((c for c in range(self.dim) if v[c]), None)
            if lead is None:
                return grew
            row = self._rows.get(lead)
            if row is None:
                if v[lead] < 0:
                    v = [-x for x in v]
                self._rows[lead] = v
                return True
            while v[lead]:
                q = v[lead] // row[lead]
                if q:
                    v = [x - q * y for x, y in zip(v, row)]
                if v[lead]:
                    # Euclid step shrank the candidate below the pivot: swap
                    self._rows[lead], v = v, row
                    row = self._rows[lead]
                    grew = True
            if row[lead] < 0:
                self._rows[lead] = [-x for x in row]

    def contains(self, vec: Sequence[int]) -> bool:
        v = [int(x) for x in vec]
        for c in range(self.dim):
            x = v[c]
            if x == 0:
                continue
            row = self._rows.get(c)
            if row is None or x % row[c]:
                return False
            q = x // row[c]
            v = [a - q * b for a, b in zip(v, row)]
        return True


def smith_normal_form(A: Mat) -> SmithDecomposition:
    """Smith normal form with transforms: U*A*V = D, U and V unimodular,
    D diagonal with d1 | d2 | ... >= 0."""
    n, m = A.rows, A.cols
    a = [row[:] for row in A.a]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    v = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def addmul_col(dst, src, q):
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    size = min(n, m)
    for t in range(size):
        while True:
            # minimal |entry| in the trailing submatrix, ties by (row, col)
            pi = pj = -1
            pabs = None
            for i in range(t, n):
                row = a[i]
                for j in range(t, m):
                    x = row[j]
                    if x:
                        ax = -x if x < 0 else x
                        if pabs is None or ax < pabs:
                            pi, pj, pabs = i, j, ax
            if pabs is None:
                break
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            if a[t][t] < 0:
                negate_row(t)
            piv = a[t][t]
            clean = True
            for i in range(t + 1, n):
                x = a[i][t]
                if x:
                    q = x // piv
                    if q:
                        addmul_row(i, t, q)
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, m):
                x = a[t][j]
                if x:
                    q = x // piv
                    if q:
                        addmul_col(j, t, q)
                    if a[t][j]:
                        clean = False
            if not clean:
                continue
            # divisibility fix: drag in the first offending entry
            offender = None
            for i in range(t + 1, n):
                row = a[i]
                for j in range(t + 1, m):
                    if row[j] % piv:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            addmul_row(t, offender, -1)
        if t < size and a[t][t] == 0:
            break

    return SmithDecomposition(Mat(n, n, u), Mat(n, m, a), Mat(m, m, v))


def smith_diagonal(A: Mat) -> list[int]:
    """Diagonal of the Smith form only (no transforms; faster path)."""
    n, m = A.rows, A.cols
    a = [row[:] for row in A.a]
    size = min(n, m)
    diag = []
    for t in range(size):
        while True:
            pi = pj = -1
            pabs = None
            for i in range(t, n):
                row = a[i]
                for j in range(t, m):
                    x = row[j]
                    if x:
                        ax = -x if x < 0 else x
                        if pabs is None or ax < pabs:
                            pi, pj, pabs = i, j, ax
            if pabs is None:
                break
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
            piv = a[t][t]
            clean = True
            for i in range(t + 1, n):
                x = a[i][t]
                if x:
                    q = x // piv
                    if q:
                        a[i] = [y - q * z for y, z in zip(a[i], a[t])]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, m):
                x = a[t][j]
                if x:
                    q = x // piv
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        clean = False
            if not clean:
                continue
            offender = None
            for i in range(t + 1, n):
                row = a[i]
                for j in range(t + 1, m):
                    if row[j] % piv:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [y + z for y, z in zip(a[t], a[offender])]
        diag.append(a[t][t] if t < size else 0)
        if a[t][t] == 0:
            diag.extend([0] * (size - t - 1))
            break
    while len(diag) < size:
        diag.append(0)
    return diag


def cokernel_invariants(A: Mat, ambient_rank: int) -> AbelianInvariants:
    """Invariants of Z^ambient_rank / columnspan(A); unit divisors dropped."""
    if A.rows != ambient_rank:
        raise ValueError(f"matrix has {A.rows} rows, ambient rank is {ambient_rank}")
    diag = smith_diagonal(A)
    nonzero = [d for d in diag if d]
    free = ambient_rank - len(nonzero)
    return AbelianInvariants(tuple(d for d in nonzero if d > 1), free)


def quotient_invariants(basis: Mat, subgens: Mat) -> AbelianInvariants:
    """Invariants of L / L' where basis columns span L and subgens columns
    span a sublattice L' of L. The coordinates of every generator in the
    basis must be integral (this is asserted, not assumed)."""
    if basis.cols == 0:
        if not subgens.is_zero():
            raise ValueError("sublattice not contained in the zero lattice")
        return TRIVIAL_GROUP_INVARIANTS
    solver = LinearSolver(basis)
    coords = solver.solve_matrix(subgens)
    if coords is None:
        raise ValueError("generators do not lie in the span of the basis")
    return cokernel_invariants(coords, basis.cols)


def det(A: Mat) -> int:
    """Determinant via fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    a = [row[:] for row in A.a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(A: Mat) -> bool:
    return A.rows == A.cols and det(A) in (1, -1)


def lattice_rank(A: Mat) -> int:
    """Rank of the column span."""
    _, _, pivots = row_hermite(A.transpose())
    return len(pivots)

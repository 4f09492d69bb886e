"""Exact linear algebra over the rationals and prime fields.

Everything downstream (ideals, idealizers, vanishing modules, kernels of
Hopf-operators) reduces to the operations in this module: reduced row echelon
form, kernels, subspace lattice operations and intertwiner spaces.  All
arithmetic is exact; subspaces are kept in RREF so equality is syntactic.

Scalars are ``fractions.Fraction`` over the rationals and plain ints in
``range(p)`` over a prime field F_p.
"""

from fractions import Fraction

try:  # compiled F_p row-reduction kernel (optional)
    from . import _fpkernel_c as _fpk
    FP_BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _fpkernel as _fpk
    FP_BACKEND = "pure"


class DimensionMismatch(ValueError):
    """Shapes or ambient dimensions are incompatible."""


class NotASubspace(ValueError):
    """quotient_dim was called with a pair that is not nested."""


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The ground field: the rationals, or F_p for a prime p."""

    def __init__(self, p=0):
        if p == 0:
            self.kind = "rationals"
            self.p = 0
        else:
            if not _is_prime(p):
                raise ValueError(f"not a prime: {p}")
            self.kind = "prime"
            self.p = p

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def of(self, x):
        """Coerce an int or Fraction into the field."""
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            num = x.numerator % self.p
            den = x.denominator % self.p
            return (num * pow(den, -1, self.p)) % self.p
        return x % self.p

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a):
        if self.p == 0:
            return 1 / a
        return pow(a, -1, self.p)


QQ = Field(0)
GF2 = Field(2)


class Mat:
    """A dense matrix over a Field, stored as a list of row lists."""

    def __init__(self, field, rows, cols, entries):
        self.field = field
        self.rows = rows
        self.cols = cols
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise DimensionMismatch("entry grid does not match shape")
        self.entries = [[field.of(x) for x in row] for row in entries]

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, rows, cols, [[field.zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        m = cls.zero(field, n, n)
        for i in range(n):
            m.entries[i][i] = field.one
        return m

    @classmethod
    def from_rows(cls, field, rows_list, cols=None):
        rows = len(rows_list)
        if cols is None:
            if rows == 0:
                raise DimensionMismatch("cols needed for an empty row list")
            cols = len(rows_list[0])
        return cls(field, rows, cols, [list(r) for r in rows_list])

    def row(self, i):
        return list(self.entries[i])

    def col(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def transpose(self):
        return Mat(self.field, self.cols, self.rows,
                   [[self.entries[i][j] for i in range(self.rows)]
                    for j in range(self.cols)])

    def mul(self, other):
        if self.cols != other.rows or self.field != other.field:
            raise DimensionMismatch("matrix product shapes")
        F = self.field
        out = Mat.zero(F, self.rows, other.cols)
        for i in range(self.rows):
            srow = self.entries[i]
            orow = out.entries[i]
            for k in range(self.cols):
                a = srow[k]
                if a == 0:
                    continue
                brow = other.entries[k]
                for j in range(other.cols):
                    b = brow[j]
                    if b != 0:
                        orow[j] = F.add(orow[j], F.mul(a, b))
        return out

    def apply(self, vec):
        """Matrix times a column vector (given as a list)."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length")
        F = self.field
        out = []
        for i in range(self.rows):
            acc = F.zero
            row = self.entries[i]
            for j, v in enumerate(vec):
                if v != 0 and row[j] != 0:
                    acc = F.add(acc, F.mul(row[j], v))
            out.append(acc)
        return out

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols} over {self.field})"


def _rref_rows_qq(rows, cols):
    """RREF of a list of Fraction rows (in place on a copy); returns (rows, pivots).

    Uses an integer-scaled elimination to keep Fraction blowup down: each row is
    cleared of denominators before elimination and renormalized at the end.
    """
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(cols):
        # find pivot
        piv = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                wi = work[i]
                for j in range(c, cols):
                    if prow[j] != 0:
                        wi[j] = wi[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [row for row in work[:r]], pivots


def rref(m):
    """Reduced row-echelon form.  Returns (Mat, pivot column list)."""
    F = m.field
    if F.p == 0:
        reduced, pivots = _rref_rows_qq(m.entries, m.cols)
    else:
        reduced, pivots = _fpk.rref_mod_p([list(r) for r in m.entries],
                                          m.cols, F.p)
    return Mat(F, len(reduced), m.cols, reduced), pivots


def kernel(m):
    """The right kernel {v : m·v = 0} as a Subspace of the column space."""
    R, pivots = rref(m)
    F = m.field
    free = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for fc in free:
        v = [F.zero] * m.cols
        v[fc] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R.entries[i][fc])
        basis.append(v)
    return Subspace.from_vectors(F, m.cols, basis)


class Subspace:
    """A subspace of a based coordinate space, stored as an RREF basis matrix."""

    def __init__(self, field, ambient_dim, basis):
        self.field = field
        self.ambient_dim = ambient_dim
        if basis.cols != ambient_dim:
            raise DimensionMismatch("basis width != ambient dimension")
        self.basis = basis
        # pivots of an RREF matrix are recoverable by scanning
        self.pivots = []
        for row in basis.entries:
            for j, x in enumerate(row):
                if x != 0:
                    self.pivots.append(j)
                    break

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors):
        m = Mat.from_rows(field, [list(v) for v in vectors], cols=ambient_dim) \
            if vectors else Mat.zero(field, 0, ambient_dim)
        R, _ = rref(m)
        return cls(field, ambient_dim, R)

    @classmethod
    def zero_space(cls, field, ambient_dim):
        return cls(field, ambient_dim, Mat.zero(field, 0, ambient_dim))

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(field, ambient_dim, Mat.identity(field, ambient_dim))

    @property
    def dim(self):
        return self.basis.rows

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim} over {self.field})"

    def basis_vectors(self):
        return [list(r) for r in self.basis.entries]

    def reduce(self, v):
        """Residue of v after eliminating the basis components (mod-subspace rep)."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length")
        F = self.field
        w = [F.of(x) for x in v]
        for i, pc in enumerate(self.pivots):
            c = w[pc]
            if c != 0:
                row = self.basis.entries[i]
                for j in range(pc, self.ambient_dim):
                    if row[j] != 0:
                        w[j] = F.sub(w[j], F.mul(c, row[j]))
        return w

    def member(self, v):
        return all(x == 0 for x in self.reduce(v))

    def coords(self, v):
        """Coordinates of v in the RREF basis; raises if v is not a member.

        For an RREF basis the coordinate on row i is just v[pivot_i].
        """
        w = self.reduce(v)
        if any(x != 0 for x in w):
            raise NotASubspace("vector not in subspace")
        F = self.field
        return [F.of(v[pc]) for pc in self.pivots]

    def sum(self, other):
        self._check(other)
        return Subspace.from_vectors(
            self.field, self.ambient_dim,
            self.basis_vectors() + other.basis_vectors())

    def intersect(self, other):
        """Zassenhaus-style intersection via the kernel of stacked coordinates."""
        self._check(other)
        F = self.field
        n = self.ambient_dim
        a = self.basis_vectors()
        b = other.basis_vectors()
        if not a or not b:
            return Subspace.zero_space(F, n)
        # solve x·A - y·B = 0 over the coefficient space
        cols = [[a[i][j] for i in range(len(a))] +
                [F.neg(b[i][j]) for i in range(len(b))] for j in range(n)]
        m = Mat.from_rows(F, cols, cols=len(a) + len(b))
        ker = kernel(m)
        vecs = []
        for coeffs in ker.basis_vectors():
            v = [F.zero] * n
            for i in range(len(a)):
                if coeffs[i] != 0:
                    for j in range(n):
                        if a[i][j] != 0:
                            v[j] = F.add(v[j], F.mul(coeffs[i], a[i][j]))
            vecs.append(v)
        return Subspace.from_vectors(F, n, vecs)

    def contains(self, other):
        self._check(other)
        return all(self.member(v) for v in other.basis_vectors())

    def quotient_dim(self, within):
        """dim(within/self); requires self ⊆ within."""
        self._check(within)
        if not within.contains(self):
            raise NotASubspace("quotient_dim: first argument not inside second")
        return within.dim - self.dim

    def _check(self, other):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspace ambient mismatch")


def intersect_many(spaces, field=None, ambient_dim=None):
    """Intersection of a list of subspaces (full space if the list is empty)."""
    if not spaces:
        return Subspace.full(field, ambient_dim)
    acc = spaces[0]
    for s in spaces[1:]:
        if acc.dim == 0:
            break
        acc = acc.intersect(s)
    return acc


def solve_intertwiner(constraints, rows, cols):
    """All matrices X (rows x cols) with A_i·X = X·B_i for every pair.

    ``constraints`` is a list of (A, B) with A square of size ``rows`` and B
    square of size ``cols``.  Returns a Subspace of the flattened (row-major)
    coordinate space of dimension rows*cols.
    """
    if not constraints:
        raise DimensionMismatch("need a field: pass at least one constraint "
                                "or use Subspace.full directly")
    F = constraints[0][0].field
    n = rows * cols
    eq_rows = []
    for A, B in constraints:
        if A.rows != rows or A.cols != rows or B.rows != cols or B.cols != cols:
            raise DimensionMismatch("intertwiner constraint shapes")
        for i in range(rows):
            for j in range(cols):
                # (A·X - X·B)[i][j] = sum_k A[i][k] X[k][j] - sum_k X[i][k] B[k][j]
                coeff = [F.zero] * n
                for k in range(rows):
                    coeff[k * cols + j] = F.add(coeff[k * cols + j],
                                                A.entries[i][k])
                for k in range(cols):
                    coeff[i * cols + k] = F.sub(coeff[i * cols + k],
                                                B.entries[k][j])
                if any(x != 0 for x in coeff):
                    eq_rows.append(coeff)
    if not eq_rows:
        return Subspace.full(F, n)
    return kernel(Mat.from_rows(F, eq_rows, cols=n))

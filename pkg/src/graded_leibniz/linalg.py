"""Exact linear algebra over a Field: row reduction, kernels, subspaces.

Vectors are lists of Scalar; matrices are lists of row vectors.
All results are canonical (reduced row echelon form) so subspace
equality is plain row comparison.
"""

from __future__ import annotations

from .fields import Field, Scalar


def zero_vector(field: Field, n: int) -> list[Scalar]:
    return [field.zero()] * n

def unit_vector(field: Field, n: int, i: int) -> list[Scalar]:
    """Standard basis vector e_i, 1-based."""
    v = [field.zero()] * n
    v[i - 1] = field.one()
    return v

def identity_matrix(field: Field, n: int) -> list[list[Scalar]]:
    return [unit_vector(field, n, i) for i in range(1, n + 1)]

def mat_vec(m: list[list[Scalar]], v: list[Scalar]) -> list[Scalar]:
    if m and len(m[0]) != len(v):
        raise ValueError("matrix/vector length mismatch")
    return [sum((row[j] * v[j] for j in range(len(v))), v[0].field.zero()) for row in m]

def mat_mul(a: list[list[Scalar]], b: list[list[Scalar]]) -> list[list[Scalar]]:
    if len(a[0]) != len(b):
        raise ValueError("matrix shape mismatch")
    zero = a[0][0].field.zero()
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), zero) for col in bt] for row in a]

def column(m: list[list[Scalar]], j: int) -> list[Scalar]:
    """Column j of a matrix, 1-based."""
    return [row[j - 1] for row in m]


def rref(rows: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, 0-based pivot columns)."""
    rows = [row[:] for row in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def kernel_basis(m: list[list[Scalar]], field: Field, ncols: int) -> list[list[Scalar]]:
    """Basis of {x : m @ x = 0}, via free variables of the RREF."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = zero_vector(field, ncols)
        v[f] = field.one()
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        basis.append(v)
    return basis


def invert(m: list[list[Scalar]]) -> list[list[Scalar]] | None:
    """Matrix inverse over the field, or None when singular."""
    n = len(m)
    field = m[0][0].field
    aug = [list(row) + unit_vector(field, n, i + 1) for i, row in enumerate(m)]
    reduced, pivots = rref(aug)
    if len(reduced) < n or pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in reduced[:n]]


class Subspace:
    """A subspace of F^n held in canonical RREF basis form."""

    __slots__ = ("field", "ambient_dim", "rows", "pivots")

    def __init__(self, field: Field, ambient_dim: int, vectors: list[list[Scalar]]):
        self.field = field
        self.ambient_dim = ambient_dim
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        self.rows, self.pivots = rref(vectors)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: list[Scalar]) -> list[Scalar]:
        """Residue of v after elimination against the basis rows."""
        v = v[:]
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                f = v[c]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, v: list[Scalar]) -> bool:
        return not any(self.reduce(v))

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"

    def is_zero(self) -> bool:
        return not self.rows

    def basis_complement_in(self, larger: "Subspace") -> list[list[Scalar]]:
        """Rows of `larger` extending this subspace's basis (representatives mod self)."""
        stack = [r[:] for r in self.rows]
        rank = self.dim
        out = []
        for v in larger.rows:
            trial, _ = rref(stack + [v])
            if len(trial) > rank:
                stack.append(v)
                rank += 1
                out.append(v)
        return out

    @staticmethod
    def full(field: Field, n: int) -> "Subspace":
        return Subspace(field, n, identity_matrix(field, n))

    @staticmethod
    def zero(field: Field, n: int) -> "Subspace":
        return Subspace(field, n, [])

"""Finite-dimensional algebras given by exact structure constants.

The bracket of basis vectors is [e_i, e_j] = sum_k c_{ij}^k e_k with the
c's stored sparsely.  The built-in families are the nilpotent Leibniz
algebras used throughout the verification suite:

  nf     null-filiform:            [e_i, e_1] = e_{i+1},  1 <= i <= n-1
  f1     filiform, non-Lie:        [e_i, e_1] = e_{i+1},  2 <= i <= n-1
  f2     filiform, non-Lie:        [e_i, e_1] = e_{i+1},  1 <= i <= n-2
  lie_l  filiform Lie:             [e_i, e_1] = -[e_1, e_i] = e_{i+1}, 2 <= i <= n-1
  lie_q  filiform Lie, n even:     lie_l products plus
                                   [e_i, e_{n+1-i}] = -[e_{n+1-i}, e_i] = (-1)^{i+1} e_n

For lie_q the pairs summing to n+1 are forced: a pairing on i+j = n has a
fixed point at i = n/2 (incompatible with antisymmetry) and its sign
alternation is incompatible with antisymmetry for even n.  check_leibniz
confirms the stored constants mechanically.

Indices are 1-based everywhere, matching the usual e_1..e_n notation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionTooSmall, FieldMismatch, NotNilpotent, QnOddDimension, UnsupportedFamily
from .fields import QQ, Field, Scalar
from .linalg import Subspace, kernel_basis, rref, unit_vector, zero_vector

FAMILIES = ("nf", "f1", "f2", "lie_l", "lie_q")


class Algebra:
    """An algebra over an exact field, defined by structure constants."""

    __slots__ = ("dim", "field", "sc", "label")

    def __init__(self, dim: int, field: Field, sc: dict, label: str = "custom"):
        if dim < 1:
            raise DimensionTooSmall("dimension must be at least 1")
        self.dim = dim
        self.field = field
        self.label = label
        clean: dict[tuple[int, int], tuple[tuple[int, Scalar], ...]] = {}
        for (i, j), terms in sc.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ValueError(f"structure constant index ({i},{j}) out of range")
            acc: dict[int, Scalar] = {}
            for k, c in terms:
                if not (1 <= k <= dim):
                    raise ValueError(f"structure constant target {k} out of range")
                c = field.scalar(c)
                s = acc.get(k, field.zero()) + c
                acc[k] = s
            cleaned = tuple((k, c) for k, c in sorted(acc.items()) if c)
            if cleaned:
                clean[(i, j)] = cleaned
        self.sc = clean

    # -- basic structure -------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> tuple[tuple[int, Scalar], ...]:
        """[e_i, e_j] as a sparse list of (index, coefficient)."""
        return self.sc.get((i, j), ())

    def product(self, x: list[Scalar], y: list[Scalar]) -> list[Scalar]:
        """Bracket of two coefficient vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("coefficient vector length does not match the dimension")
        out = zero_vector(self.field, self.dim)
        for (i, j), terms in self.sc.items():
            f = x[i - 1] * y[j - 1]
            if f:
                for k, c in terms:
                    out[k - 1] = out[k - 1] + c * f
        return out

    def same_structure(self, other: "Algebra") -> bool:
        """Equality of (dim, field, structure constants); labels ignored."""
        return (
            isinstance(other, Algebra)
            and self.dim == other.dim
            and self.field == other.field
            and self.sc == other.sc
        )

    def __repr__(self):
        return f"Algebra({self.label}, dim={self.dim}, field={self.field!r})"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        entries = []
        for (i, j) in sorted(self.sc):
            entries.append(
                {"i": i, "j": j, "terms": [{"k": k, "c": c.to_json()} for k, c in self.sc[(i, j)]]}
            )
        doc = {"dim": self.dim, "field": self.field.to_json(), "sc": entries}
        if self.label != "custom":
            doc["label"] = self.label
        return doc

    @staticmethod
    def from_json(doc: dict) -> "Algebra":
        field = Field.from_json(doc["field"])
        sc = {}
        for entry in doc["sc"]:
            key = (entry["i"], entry["j"])
            if key in sc:
                raise ValueError(f"duplicate structure constant entry for {key}")
            sc[key] = [(t["k"], field.scalar(t["c"])) for t in entry["terms"]]
        return Algebra(doc["dim"], field, sc, doc.get("label", "custom"))


# -- constructors --------------------------------------------------------


def make_family(family: str, n: int, field: Field = QQ) -> Algebra:
    """One of the built-in families on basis e_1..e_n."""
    if family not in FAMILIES:
        raise UnsupportedFamily(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 2:
        raise DimensionTooSmall(f"family {family} needs dimension >= 2")
    one = field.one()
    sc: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
    if family == "nf":
        for i in range(1, n):
            sc[(i, 1)] = [(i + 1, one)]
    elif family == "f1":
        for i in range(2, n):
            sc[(i, 1)] = [(i + 1, one)]
    elif family == "f2":
        for i in range(1, n - 1):
            sc[(i, 1)] = [(i + 1, one)]
    elif family in ("lie_l", "lie_q"):
        if family == "lie_q" and n % 2:
            raise QnOddDimension("the quadratic Lie family needs even dimension")
        for i in range(2, n):
            sc[(i, 1)] = [(i + 1, one)]
            sc[(1, i)] = [(i + 1, -one)]
        if family == "lie_q":
            for i in range(2, n):
                j = n + 1 - i
                if 2 <= j <= n - 1:
                    sign = one if i % 2 else -one
                    sc[(i, j)] = [(n, sign)]
    return Algebra(n, field, sc, label=family)


def abelian_algebra(n: int, field: Field = QQ) -> Algebra:
    """The n-dimensional algebra with all products zero."""
    return Algebra(n, field, {}, label="custom")


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """Direct sum; b's basis indices are shifted past a's."""
    if a.field != b.field:
        raise FieldMismatch("direct summands live over different fields")
    sc: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
    for (i, j), terms in a.sc.items():
        sc[(i, j)] = list(terms)
    d = a.dim
    for (i, j), terms in b.sc.items():
        sc[(i + d, j + d)] = [(k + d, c) for k, c in terms]
    return Algebra(a.dim + b.dim, a.field, sc, label="custom")


# -- identities ----------------------------------------------------------


@dataclass(frozen=True)
class LeibnizReport:
    ok: bool
    first_violation: tuple[int, int, int] | None = None


def _sparse_bracket(alg: Algebra, u: dict[int, Scalar], v: dict[int, Scalar]) -> dict[int, Scalar]:
    out: dict[int, Scalar] = {}
    for i, cu in u.items():
        for j, cv in v.items():
            f = cu * cv
            if not f:
                continue
            for k, c in alg.bracket_basis(i, j):
                s = out.get(k, alg.field.zero()) + c * f
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
    return out


def check_leibniz(alg: Algebra) -> LeibnizReport:
    """Verify [x, [y, z]] == [[x, y], z] - [[x, z], y] on all basis triples.

    Bilinearity makes the basis check sufficient.  Returns the first
    violating triple (x, y, z) in lexicographic order, if any.
    """
    one = alg.field.one()
    basis = [{i: one} for i in range(1, alg.dim + 1)]
    for x in range(1, alg.dim + 1):
        ex = basis[x - 1]
        for y in range(1, alg.dim + 1):
            ey = basis[y - 1]
            xy = _sparse_bracket(alg, ex, ey)
            for z in range(1, alg.dim + 1):
                ez = basis[z - 1]
                lhs = _sparse_bracket(alg, ex, _sparse_bracket(alg, ey, ez))
                rhs = _sparse_bracket(alg, xy, ez)
                for k, c in _sparse_bracket(alg, _sparse_bracket(alg, ex, ez), ey).items():
                    s = rhs.get(k, alg.field.zero()) - c
                    if s:
                        rhs[k] = s
                    elif k in rhs:
                        del rhs[k]
                if lhs != rhs:
                    return LeibnizReport(False, (x, y, z))
    return LeibnizReport(True, None)


def is_antisymmetric(alg: Algebra) -> bool:
    """True when [e_i, e_j] == -[e_j, e_i] for all basis pairs (so [x,x] = 0 too)."""
    for i in range(1, alg.dim + 1):
        for j in range(i, alg.dim + 1):
            left = dict(alg.bracket_basis(i, j))
            right = {k: -c for k, c in alg.bracket_basis(j, i)}
            if left != right:
                return False
    return True


# -- series and invariant subspaces --------------------------------------


def lower_central_series(alg: Algebra) -> list[Subspace]:
    """L^1 = L, L^{k+1} = [L^k, L], listed until zero or stabilization.

    The first repeated term is kept as the non-nilpotency witness.
    """
    field = alg.field
    n = alg.dim
    series = [Subspace.full(field, n)]
    while not series[-1].is_zero() and len(series) <= n + 1:
        prev = series[-1]
        products = []
        for v in prev.rows:
            for j in range(1, n + 1):
                w = zero_vector(field, n)
                hit = False
                for i in range(1, n + 1):
                    if v[i - 1]:
                        for k, c in alg.bracket_basis(i, j):
                            w[k - 1] = w[k - 1] + c * v[i - 1]
                            hit = True
                if hit and any(w):
                    products.append(w)
        nxt = Subspace(field, n, products)
        series.append(nxt)
        if nxt == prev:
            break
    return series


@dataclass(frozen=True)
class NilpotencyProfile:
    dims: tuple[int, ...]
    nilpotent: bool
    index: int | None
    null_filiform: bool
    filiform: bool


def nilpotency_profile(alg: Algebra) -> NilpotencyProfile:
    series = lower_central_series(alg)
    dims = tuple(s.dim for s in series)
    n = alg.dim
    nilpotent = dims[-1] == 0
    index = len(dims) if nilpotent else None
    null_filiform = nilpotent and dims == tuple(range(n, -1, -1))
    filiform = nilpotent and len(dims) == n and all(
        dims[i - 1] == n - i for i in range(2, n + 1)
    )
    return NilpotencyProfile(dims, nilpotent, index, null_filiform, filiform)


def right_annihilator(alg: Algebra) -> Subspace:
    """{x : [y, x] = 0 for all y}, the two-sided ideal of right annihilators."""
    rows = []
    for i in range(1, alg.dim + 1):
        for k in range(1, alg.dim + 1):
            row = zero_vector(alg.field, alg.dim)
            hit = False
            for j in range(1, alg.dim + 1):
                for kk, c in alg.bracket_basis(i, j):
                    if kk == k:
                        row[j - 1] = row[j - 1] + c
                        hit = True
            if hit:
                rows.append(row)
    return Subspace(alg.field, alg.dim, kernel_basis(rows, alg.field, alg.dim))


def center(alg: Algebra) -> Subspace:
    """{x : [x, y] = [y, x] = 0 for all y}."""
    rows = []
    for i in range(1, alg.dim + 1):
        for k in range(1, alg.dim + 1):
            right_row = zero_vector(alg.field, alg.dim)
            left_row = zero_vector(alg.field, alg.dim)
            hit_r = hit_l = False
            for j in range(1, alg.dim + 1):
                for kk, c in alg.bracket_basis(i, j):
                    if kk == k:
                        right_row[j - 1] = right_row[j - 1] + c
                        hit_r = True
                for kk, c in alg.bracket_basis(j, i):
                    if kk == k:
                        left_row[j - 1] = left_row[j - 1] + c
                        hit_l = True
            if hit_r:
                rows.append(right_row)
            if hit_l:
                rows.append(left_row)
    return Subspace(alg.field, alg.dim, kernel_basis(rows, alg.field, alg.dim))


def associated_graded(alg: Algebra):
    """The graded algebra of the lower central filtration.

    Returns (graded algebra, grading) where the new basis is adapted to
    the filtration (block t spans L^t mod L^{t+1}) and the grading puts
    block t in degree t of Z.  Raises NotNilpotent otherwise.
    """
    from .gradings import Grading
    from .groups import AbelianGroup

    series = lower_central_series(alg)
    if series[-1].dim != 0:
        raise NotNilpotent("the lower central series does not reach zero")
    blocks: list[list[list[Scalar]]] = []
    for t in range(len(series) - 1):
        blocks.append(series[t + 1].basis_complement_in(series[t]))
    new_basis = [v for block in blocks for v in block]
    degree_of_index: list[int] = []
    for t, block in enumerate(blocks, start=1):
        degree_of_index += [t] * len(block)

    # Coordinates in the adapted basis: solve c @ P = w for each product.
    from .linalg import invert, mat_vec

    p_matrix = new_basis  # rows are the new basis vectors
    p_inv = invert([list(col) for col in zip(*p_matrix)])  # columns are basis vectors
    if p_inv is None:
        raise RuntimeError("adapted basis failed to be invertible")

    n = alg.dim
    sc: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            w = alg.product(new_basis[a - 1], new_basis[b - 1])
            coords = mat_vec(p_inv, w)
            target = degree_of_index[a - 1] + degree_of_index[b - 1]
            terms = [
                (k, coords[k - 1])
                for k in range(1, n + 1)
                if coords[k - 1] and degree_of_index[k - 1] == target
            ]
            if terms:
                sc[(a, b)] = terms
    graded = Algebra(n, alg.field, sc, label="custom")
    z_group = AbelianGroup(free_rank=1)
    grading = Grading(graded, z_group, tuple(z_group.element((t,)) for t in degree_of_index))
    return graded, grading

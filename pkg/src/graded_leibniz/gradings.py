"""Abelian group gradings of structure-constant algebras.

A grading assigns a degree (group element) to each basis vector such
that every nonzero product lands in the component of the summed degree.
Two forms are supported: the degree-map form (every standard basis
vector homogeneous) and a subspace form for gradings obtained by a
change of basis.

The central construction is the universal grading of a set partition of
the basis: the finest abelian group receiving a degree map with the
prescribed blocks.  It is computed by presenting the group with one
generator per block and one relation per nonzero structure constant,
then reducing with the Smith normal form.  Every homogeneous-basis
grading factors through the universal grading of its partition, which
turns exhaustive grading searches into searches over homomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import Algebra
from .errors import DifferentAlgebras, GroupMismatch
from .groups import AbelianGroup, GroupElem, apply_hom, validate_hom
from .linalg import Subspace, rref
from .snf import int_matrix_inverse, row_hnf, smith_normal_form


class Grading:
    """A homogeneous-basis grading: one degree per basis index."""

    __slots__ = ("algebra", "group", "degrees")

    def __init__(self, algebra: Algebra, group: AbelianGroup, degrees):
        degrees = tuple(degrees)
        if len(degrees) != algebra.dim:
            raise ValueError("need one degree per basis vector")
        for d in degrees:
            if not isinstance(d, GroupElem) or d.group != group:
                raise GroupMismatch("degree lies in the wrong group")
        self.algebra = algebra
        self.group = group
        self.degrees = degrees

    def degree(self, i: int) -> GroupElem:
        """Degree of e_i (1-based)."""
        return self.degrees[i - 1]

    def partition(self) -> tuple[tuple[int, ...], ...]:
        """Blocks of equal-degree basis indices, ordered by least index."""
        by_degree: dict[GroupElem, list[int]] = {}
        for i, d in enumerate(self.degrees, start=1):
            by_degree.setdefault(d, []).append(i)
        return tuple(sorted((tuple(ids) for ids in by_degree.values()), key=lambda b: b[0]))

    def components(self) -> list[tuple[GroupElem, tuple[int, ...]]]:
        """(degree, indices) pairs in canonical support order.

        Degrees sort by element order (finite first, ascending), then
        coordinates; ties break on the least contained basis index.
        """
        by_degree: dict[GroupElem, list[int]] = {}
        for i, d in enumerate(self.degrees, start=1):
            by_degree.setdefault(d, []).append(i)
        items = [(d, tuple(ids)) for d, ids in by_degree.items()]
        items.sort(key=lambda pair: (pair[0].order_key(), pair[1][0]))
        return items

    def support(self) -> list[GroupElem]:
        return [d for d, _ in self.components()]

    def __eq__(self, other):
        return (
            isinstance(other, Grading)
            and self.algebra.same_structure(other.algebra)
            and self.group == other.group
            and self.degrees == other.degrees
        )

    def __repr__(self):
        chunks = [
            "<" + ",".join(f"e{i}" for i in ids) + f">_{deg!r}"
            for deg, ids in self.components()
        ]
        return f"Grading({self.group.describe()}: " + " + ".join(chunks) + ")"

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "degrees": [list(d.coords) for d in self.degrees],
        }

    @staticmethod
    def from_json(algebra: Algebra, doc: dict) -> "Grading":
        group = AbelianGroup.from_json(doc["group"])
        return Grading(algebra, group, tuple(group.element(c) for c in doc["degrees"]))


def trivial_grading(algebra: Algebra) -> Grading:
    g = AbelianGroup()
    return Grading(algebra, g, (g.zero(),) * algebra.dim)


class SubspaceGrading:
    """A grading whose components are subspaces, not spans of basis vectors.

    Produced by transporting a homogeneous-basis grading along an
    automorphism.  Components must carry distinct degrees and form a
    direct-sum decomposition of the ambient space.
    """

    __slots__ = ("algebra", "group", "components")

    def __init__(self, algebra: Algebra, group: AbelianGroup, components):
        components = tuple(components)
        degrees = [d for d, _ in components]
        if len(set(degrees)) != len(degrees):
            raise ValueError("components must carry distinct degrees")
        total = 0
        stacked: list = []
        for d, space in components:
            if not isinstance(d, GroupElem) or d.group != group:
                raise GroupMismatch("degree lies in the wrong group")
            if space.ambient_dim != algebra.dim or space.field != algebra.field:
                raise ValueError("component subspace has the wrong ambient space")
            total += space.dim
            stacked.extend(space.rows)
        if total != algebra.dim or len(rref(stacked)[0]) != algebra.dim:
            raise ValueError("components do not decompose the space")
        self.algebra = algebra
        self.group = group
        self.components = components

    def __repr__(self):
        return f"SubspaceGrading({self.group.describe()}, {len(self.components)} components)"


@dataclass(frozen=True)
class GradingReport:
    """first_violation is a basis triple (i, j, k) for the degree-map
    form, or a pair of component degrees for the subspace form."""

    ok: bool
    first_violation: tuple | None = None


def verify_grading(grading) -> GradingReport:
    """Check closure: each product lands in the summed-degree component."""
    if isinstance(grading, SubspaceGrading):
        return _verify_subspace_grading(grading)
    alg = grading.algebra
    for (i, j) in sorted(alg.sc):
        s = grading.degree(i) + grading.degree(j)
        for k, _ in alg.sc[(i, j)]:
            if grading.degree(k) != s:
                return GradingReport(False, (i, j, k))
    return GradingReport(True, None)


def _verify_subspace_grading(grading: SubspaceGrading) -> GradingReport:
    alg = grading.algebra
    spaces = {d: space for d, space in grading.components}
    for g, left in grading.components:
        for h, right in grading.components:
            target = spaces.get(g + h)
            for v in left.rows:
                for w in right.rows:
                    p = alg.product(v, w)
                    if not any(p):
                        continue
                    if target is None or not target.contains(p):
                        return GradingReport(False, (g, h))
    return GradingReport(True, None)


def transport(grading: Grading, matrix) -> SubspaceGrading:
    """Push a grading forward along an invertible linear map.

    Column i of `matrix` is the image of e_i; the component of degree g
    becomes the span of the images of its basis vectors.
    """
    alg = grading.algebra
    n = alg.dim
    comps = []
    for d, ids in grading.components():
        vectors = [[matrix[r][i - 1] for r in range(n)] for i in ids]
        comps.append((d, Subspace(alg.field, n, vectors)))
    return SubspaceGrading(alg, grading.group, comps)


# -- universal gradings ---------------------------------------------------


def _normalize_partition(algebra: Algebra, partition) -> list[tuple[int, ...]]:
    if partition is None:
        return [(i,) for i in range(1, algebra.dim + 1)]
    blocks = sorted((tuple(sorted(set(map(int, b)))) for b in partition), key=lambda b: b[0])
    flat = sorted(i for b in blocks for i in b)
    if flat != list(range(1, algebra.dim + 1)):
        raise ValueError("partition must cover each basis index exactly once")
    return blocks


def universal_grading(algebra: Algebra, partition=None):
    """Finest grading whose equal-degree blocks refine to `partition`.

    Returns (group, grading) with the group in invariant-factor form
    and the free coordinates canonicalized (Hermite form), or None when
    the structure constants force two distinct blocks to share a degree
    (no grading with exactly this partition exists).  The default
    partition is discrete: every basis vector in its own block.
    """
    result = universal_grading_with_generators(algebra, partition)
    if result is None:
        return None
    group, grading, _ = result
    return group, grading


def universal_grading_with_generators(algebra: Algebra, partition=None):
    """As universal_grading, also returning generator expressions.

    The third component lists, for each generator of the resulting
    group (free generators first), integer coefficients over the
    partition blocks expressing that generator as a combination of the
    block degrees.  Used to factor arbitrary gradings through the
    universal one.
    """
    blocks = _normalize_partition(algebra, partition)
    nblocks = len(blocks)
    block_of = {}
    for b, ids in enumerate(blocks):
        for i in ids:
            block_of[i] = b

    rels = set()
    for (i, j), terms in algebra.sc.items():
        for k, _ in terms:
            vec = [0] * nblocks
            vec[block_of[i]] += 1
            vec[block_of[j]] += 1
            vec[block_of[k]] -= 1
            if any(vec):
                rels.add(tuple(vec))
    rel_list = sorted(rels)

    if rel_list:
        matrix = [[rel[b] for rel in rel_list] for b in range(nblocks)]
        u, d, _ = smith_normal_form(matrix)
        diag = [d[i][i] if i < len(rel_list) else 0 for i in range(nblocks)]
    else:
        u = [[int(i == j) for j in range(nblocks)] for i in range(nblocks)]
        diag = [0] * nblocks

    free_rows = [i for i in range(nblocks) if diag[i] == 0]
    tors_rows = [i for i in range(nblocks) if diag[i] >= 2]
    group = AbelianGroup(len(free_rows), tuple(diag[i] for i in tors_rows))
    uinv = int_matrix_inverse(u)

    # Free coordinates from the Smith transform are only unique up to a
    # unimodular change; Hermite-reduce them so equal quotients get
    # literally equal degree tuples.
    if free_rows:
        f_t = [[u[i][b] for b in range(nblocks)] for i in free_rows]
        h, w = row_hnf(f_t)
        winv = int_matrix_inverse(w)
        free_coords = [[h[r][b] for r in range(len(free_rows))] for b in range(nblocks)]
    else:
        free_coords = [[] for _ in range(nblocks)]

    degrees_by_block = [
        group.element(tuple(free_coords[b]) + tuple(u[i][b] for i in tors_rows))
        for b in range(nblocks)
    ]
    if len(set(degrees_by_block)) < nblocks:
        return None

    gen_exprs: list[tuple[int, ...]] = []
    for r in range(len(free_rows)):
        expr = [
            sum(uinv[b][free_rows[s]] * winv[s][r] for s in range(len(free_rows)))
            for b in range(nblocks)
        ]
        gen_exprs.append(tuple(expr))
    for i in tors_rows:
        gen_exprs.append(tuple(uinv[b][i] for b in range(nblocks)))

    degrees = tuple(degrees_by_block[block_of[i]] for i in range(1, algebra.dim + 1))
    return group, Grading(algebra, group, degrees), gen_exprs


def coarsen(grading: Grading, target: AbelianGroup, images) -> Grading:
    """Push degrees through the homomorphism sending the i-th generator
    of the grading group to images[i]."""
    images = list(images)
    validate_hom(grading.group, target, images)
    new = tuple(apply_hom(images, d.coords, target) for d in grading.degrees)
    return Grading(grading.algebra, target, new)


def equivalent(g1: Grading, g2: Grading) -> bool:
    """Weak equivalence of homogeneous-basis gradings.

    For valid gradings on one algebra this is equality of the induced
    partitions: the degree bijection between supports then matches up
    every realized degree sum automatically, because both sides satisfy
    the same closure constraints.
    """
    if not g1.algebra.same_structure(g2.algebra):
        raise DifferentAlgebras("gradings live on different algebras")
    return g1.partition() == g2.partition()


def factor_through_universal(grading: Grading):
    """Express a valid grading as a coarsening of the universal grading
    of its own partition.

    Returns (group, universal grading, images) such that coarsening the
    universal grading by generator -> image reproduces `grading`.
    """
    result = universal_grading_with_generators(grading.algebra, grading.partition())
    if result is None:
        raise ValueError("not a valid grading: its partition admits no grading")
    group, base, gen_exprs = result
    blocks = base.partition()
    block_degrees = [grading.degree(ids[0]) for ids in blocks]
    images = []
    for expr in gen_exprs:
        acc = grading.group.zero()
        for b, coeff in enumerate(expr):
            if coeff:
                acc = acc + coeff * block_degrees[b]
        images.append(acc)
    return group, base, images

"""Gradings: verification, universal construction, coarsening, transport."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graded_leibniz import (
    AbelianGroup,
    Algebra,
    DifferentAlgebras,
    Field,
    Grading,
    GroupMismatch,
    QQ,
    coarsen,
    equivalent,
    factor_through_universal,
    make_family,
    transport,
    trivial_grading,
    universal_grading,
    verify_grading,
)
from graded_leibniz.gradings import SubspaceGrading
from graded_leibniz.torus import AutParamsNF, aut_matrix_nf

Z = AbelianGroup(1)


def z_grading(alg, degs):
    return Grading(alg, Z, tuple(Z.element((d,)) for d in degs))


def test_trivial_grading_verifies():
    for family in ("nf", "f1", "lie_l"):
        g = trivial_grading(make_family(family, 5))
        assert verify_grading(g).ok
        assert g.group.is_trivial()


def test_verify_accepts_chain_grading():
    alg = make_family("nf", 4)
    assert verify_grading(z_grading(alg, [1, 2, 3, 4])).ok


def test_verify_rejects_wrong_degrees_with_witness():
    alg = make_family("nf", 3)
    rep = verify_grading(z_grading(alg, [1, 1, 3]))
    assert not rep.ok
    assert rep.first_violation == (1, 1, 2)  # [e1,e1]=e2 needs deg 1+1


def test_grading_requires_matching_group():
    alg = make_family("nf", 3)
    z2 = AbelianGroup(0, (2,))
    with pytest.raises(GroupMismatch):
        Grading(alg, Z, (Z.element((1,)), z2.element((1,)), Z.element((1,))))
    with pytest.raises(ValueError):
        Grading(alg, Z, (Z.element((1,)),))


def test_partition_and_components():
    alg = make_family("nf", 4)
    g = Grading(alg, AbelianGroup(0, (2,)), tuple(
        AbelianGroup(0, (2,)).element((j % 2,)) for j in range(1, 5)
    ))
    assert g.partition() == ((1, 3), (2, 4))
    comps = g.components()
    assert [ids for _, ids in comps] == [(2, 4), (1, 3)]  # identity degree first
    assert [d.coords for d in g.support()] == [(0,), (1,)]


def test_grading_json_round_trip():
    alg = make_family("f1", 4)
    g = Grading(alg, AbelianGroup(1, (2,)), tuple(
        AbelianGroup(1, (2,)).element(c) for c in [(0, 1), (1, 0), (1, 1), (2, 0)]
    ))
    assert Grading.from_json(alg, g.to_json()) == g


def test_universal_grading_nf():
    for n in range(2, 9):
        group, g = universal_grading(make_family("nf", n))
        assert group == Z
        assert [d.coords for d in g.degrees] == [(j,) for j in range(1, n + 1)]
        assert verify_grading(g).ok


def test_universal_grading_f1():
    group, g = universal_grading(make_family("f1", 5))
    assert group == AbelianGroup(2)
    assert [d.coords for d in g.degrees] == [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1)]


def test_universal_grading_f2():
    group, g = universal_grading(make_family("f2", 5))
    assert group == AbelianGroup(2)
    assert [d.coords for d in g.degrees] == [(1, 0), (2, 0), (3, 0), (4, 0), (0, 1)]


def test_universal_grading_abelian_partition():
    # no products: every block is free and independent
    alg = Algebra(3, QQ, {})
    group, g = universal_grading(alg, partition=[(1, 2), (3,)])
    assert group == AbelianGroup(2)
    assert g.degrees[0] == g.degrees[1] != g.degrees[2]


def test_universal_grading_with_torsion():
    # relations 2a - b = 0 and b = 0 leave a of order two
    alg = Algebra(2, QQ, {(1, 1): [(2, 1)], (2, 1): [(1, 1)]})
    result = universal_grading(alg)
    assert result is not None
    group, g = result
    assert group == AbelianGroup(0, (2,))
    assert [d.coords for d in g.degrees] == [(1,), (0,)]


def test_universal_grading_collapse_returns_none():
    # [e1,e2]=e2 and [e1,e2']=e2' style relations forcing deg(e1)=0=identity
    # with the discrete partition: [e1,e2]=e2 gives a + b - b = a = 0 and
    # [e2,e1]=e1 gives b + a - a = b = 0, so blocks {1},{2} share degree 0
    alg = Algebra(2, QQ, {(1, 2): [(2, 1)], (2, 1): [(1, 1)]})
    assert universal_grading(alg) is None


def test_partition_validation():
    alg = make_family("nf", 3)
    with pytest.raises(ValueError):
        universal_grading(alg, partition=[(1,), (2,)])  # misses 3
    with pytest.raises(ValueError):
        universal_grading(alg, partition=[(1, 2), (2, 3)])  # duplicates 2


def test_coarsen_chain_to_parity():
    alg = make_family("nf", 4)
    _, base = universal_grading(alg)
    z2 = AbelianGroup(0, (2,))
    g = coarsen(base, z2, [z2.element((1,))])
    assert [d.coords[0] for d in g.degrees] == [1, 0, 1, 0]
    assert verify_grading(g).ok


def test_equivalence_is_partition_equality():
    alg = make_family("nf", 4)
    a = z_grading(alg, [1, 2, 3, 4])
    b = z_grading(alg, [-1, -2, -3, -4])
    c = z_grading(alg, [2, 4, 6, 8])
    assert equivalent(a, b) and equivalent(a, c)
    z2 = AbelianGroup(0, (2,))
    d = Grading(alg, z2, tuple(z2.element((j % 2,)) for j in range(1, 5)))
    assert not equivalent(a, d)


def test_equivalent_rejects_different_algebras():
    with pytest.raises(DifferentAlgebras):
        equivalent(
            trivial_grading(make_family("nf", 3)),
            trivial_grading(make_family("f1", 3)),
        )


def test_factor_through_universal_round_trip():
    alg = make_family("f1", 5)
    z3 = AbelianGroup(0, (3,))
    # degrees e1 -> 1, e2 -> 0, e_i -> i-2 mod 3
    g = Grading(alg, z3, tuple(z3.element((c,)) for c in (1, 0, 1, 2, 0)))
    assert verify_grading(g).ok
    group, base, images = factor_through_universal(g)
    rebuilt = coarsen(base, g.group, images)
    assert rebuilt == g


def test_factor_through_universal_random_coarsenings():
    alg = make_family("nf", 6)
    _, base = universal_grading(alg)
    for target, image_coords in [
        (AbelianGroup(1), (3,)),
        (AbelianGroup(0, (4,)), (2,)),
        (AbelianGroup(1, (2,)), (1, 1)),
    ]:
        g = coarsen(base, target, [target.element(image_coords)])
        _, _, images = factor_through_universal(g)
        assert coarsen(factor_through_universal(g)[1], target, images) == g


def test_transport_by_automorphism_verifies():
    alg = make_family("nf", 4, Field(5))
    _, base = universal_grading(alg)
    f5 = Field(5)
    m = aut_matrix_nf(4, AutParamsNF(f5.scalar(2), (f5.scalar(1), f5.scalar(0), f5.scalar(3))))
    moved = transport(base, m)
    assert isinstance(moved, SubspaceGrading)
    assert verify_grading(moved).ok


def test_transport_detects_broken_decomposition():
    alg = make_family("nf", 3)
    _, base = universal_grading(alg)
    # non-invertible matrix: transported spans no longer decompose
    singular = [[QQ.zero()] * 3 for _ in range(3)]
    with pytest.raises(ValueError):
        transport(base, singular)


def test_subspace_grading_closure_violation_witness():
    alg = make_family("nf", 3, Field(5))
    f5 = Field(5)
    one, zero = f5.one(), f5.zero()
    z2 = AbelianGroup(0, (2,))
    from graded_leibniz.linalg import Subspace

    comps = [
        (z2.element((0,)), Subspace(f5, 3, [[one, zero, zero], [zero, zero, one]])),
        (z2.element((1,)), Subspace(f5, 3, [[zero, one, zero]])),
    ]
    bad = SubspaceGrading(alg, z2, comps)
    rep = verify_grading(bad)
    assert not rep.ok
    g, h = rep.first_violation
    assert g.coords == (0,) and h.coords == (0,)  # [e1,e1]=e2 leaves degree 0


@given(st.integers(min_value=2, max_value=7), st.integers(min_value=-5, max_value=5))
@settings(max_examples=40)
def test_chain_shifts_by_any_unit_slope(n, s):
    """Any nonzero multiple of the chain degrees stays a valid grading."""
    if s == 0:
        return
    alg = make_family("nf", n)
    g = z_grading(alg, [s * j for j in range(1, n + 1)])
    assert verify_grading(g).ok
    _, base = universal_grading(alg)
    assert equivalent(g, base)

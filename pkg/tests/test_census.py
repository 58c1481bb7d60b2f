"""Grassmannian enumeration, homological census, counting polynomials."""

from __future__ import annotations

import pytest

from qgrass import (
    CountNotPolynomialError,
    Field,
    InputError,
    Representation,
    SubspaceBasis,
    all_dim_vectors,
    brute_force_subreps,
    census,
    counting_polynomial,
    enumerate_subreps,
    euler_form,
    is_rigid,
    is_subrep,
    reduce_mod_p,
    tangent_dim,
    transverse_homological,
)
from conftest import BATTERY, builtin_rep

F2 = Field.prime(2)


def modp(name, p):
    quiver, rep = builtin_rep(name)
    return quiver, reduce_mod_p(rep, p)


def test_example1_slice_is_projective_line():
    # dims (3,3,3), e = (0,2,1): a P^1 worth of points, so q + 1 of them
    for q in (2, 3):
        _, rep = modp("a21-ex1", q)
        points = enumerate_subreps(rep, (0, 2, 1))
        assert len(points) == q + 1
        for point in points:
            assert is_subrep(rep, point.spaces)


def test_example1_every_point_has_one_dimensional_ext():
    quiver, rep = modp("a21-ex1", 2)
    report = census(rep, (0, 2, 1))
    entries = report.entries((0, 2, 1))
    assert len(entries) == 3
    assert all(e.ext_dim == 1 and e.hom_dim == 1 for e in entries)
    assert transverse_homological(report, (0, 2, 1)) == []
    assert euler_form(quiver, (0, 2, 1), (3, 1, 2)) == 0


def test_zero_dim_vector_gives_single_zero_point():
    _, rep = modp("a21-ex1", 2)
    points = enumerate_subreps(rep, (0, 0, 0))
    assert len(points) == 1
    assert all(s.dim == 0 for s in points[0].spaces)


def test_example2_unique_point_with_ext():
    # the only (1,1)-subrepresentation is the eigenline of the nilpotent map
    for q in (2, 3, 5):
        _, rep = modp("kronecker-reg:2", q)
        points = enumerate_subreps(rep, (1, 1))
        assert len(points) == 1
        eigen = SubspaceBasis.from_vectors(rep.field, [[1, 0]], 2)
        assert points[0].spaces == (eigen, eigen)
        report = census(rep, (1, 1))
        entry = report.entries((1, 1))[0]
        assert entry.ext_dim == 1
        assert transverse_homological(report, (1, 1)) == []


def test_example3_census_counts_and_singular_point():
    for q in (2, 3):
        _, rep = modp("a21-ex3", q)
        report = census(rep, (0, 1, 1))
        entries = report.entries((0, 1, 1))
        assert len(entries) == 2 * q + 1
        singular = [e for e in entries if e.ext_dim == 1]
        smooth = [e for e in entries if e.ext_dim == 0]
        assert len(singular) == 1 and len(smooth) == 2 * q
        assert singular[0].hom_dim == 2
        assert all(e.hom_dim == 1 for e in smooth)
        # the singular point is the intersection of the two component families
        eigen = SubspaceBasis.from_vectors(rep.field, [[1, 0]], 2)
        assert singular[0].point.spaces[1] == eigen
        assert singular[0].point.spaces[2] == eigen


def test_full_dim_vector_is_single_transverse_point():
    _, rep = modp("a21-ex3", 2)
    report = census(rep, rep.dims)
    entries = report.entries(rep.dims)
    assert len(entries) == 1
    assert entries[0].ext_dim == 0


def test_enumerate_matches_brute_force_on_guarded_fixtures():
    cases = [
        ("a21-ex3", 2), ("a21-ex3", 3),
        ("kronecker-reg:2", 2), ("kronecker-reg:2", 3),
        ("kronecker-reg:1", 2),
        ("a21-ray:3", 2), ("a21-ray:3", 3),
        ("kronecker-preproj:1", 2),
        ("kronecker-preproj:2", 2),
    ]
    for name, q in cases:
        _, rep = modp(name, q)
        for e in all_dim_vectors(rep.dims):
            fast = set(enumerate_subreps(rep, e))
            slow = set(brute_force_subreps(rep, e))
            assert fast == slow, (name, q, e)


def test_brute_force_guard():
    _, rep = modp("a21-ex1", 2)  # total dimension 9 exceeds the guard
    with pytest.raises(InputError):
        brute_force_subreps(rep, (0, 0, 0))
    _, rep = modp("kronecker-reg:2", 5)
    with pytest.raises(InputError):
        brute_force_subreps(rep, (1, 1))


def test_rigid_preprojective_line_census():
    _, rep = modp("kronecker-preproj:1", 2)
    assert is_rigid(rep)
    report = census(rep, (0, 1))
    assert len(report.entries((0, 1))) == 3
    assert len(transverse_homological(report, (0, 1))) == 3


def test_preprojective_has_no_diagonal_point():
    # both arrow images together span the whole plane, so no (1,1) point
    _, rep = modp("kronecker-preproj:1", 2)
    assert enumerate_subreps(rep, (1, 1)) == []


def test_census_totals_and_extreme_points():
    for name in BATTERY:
        _, rep = modp(name, 2)
        report = census(rep)
        zero = (0,) * rep.quiver.n
        assert len(report.entries(zero)) == 1
        assert len(report.entries(rep.dims)) == 1
        assert report.entries(zero)[0].ext_dim == 0
        assert report.entries(rep.dims)[0].ext_dim == 0
        assert report.total_points() == sum(
            len(report.entries(e)) for e in all_dim_vectors(rep.dims)
        )


def test_tangent_dim_bounds():
    # tangent dimension is hom, and it never drops below <e, d-e>
    for name in BATTERY:
        quiver, rep = modp(name, 2)
        report = census(rep)
        for e, entries in report.entries_by_e.items():
            lower = euler_form(quiver, e, tuple(d - x for d, x in zip(rep.dims, e)))
            for entry in entries:
                assert tangent_dim(entry) == entry.hom_dim
                assert tangent_dim(entry) >= lower
                assert (tangent_dim(entry) == lower) == entry.homologically_transverse


def test_rigid_modules_are_everywhere_transverse():
    for name, q in [("kronecker-preproj:1", 2), ("kronecker-preproj:1", 3),
                    ("kronecker-preproj:2", 2)]:
        _, rep = modp(name, q)
        assert is_rigid(rep)
        report = census(rep)
        assert report.total_points() == report.total_transverse()


def test_enumeration_is_deterministic():
    _, rep = modp("a21-ex3", 2)
    first = [p.sort_key() for p in enumerate_subreps(rep, (0, 1, 1))]
    second = [p.sort_key() for p in enumerate_subreps(rep, (0, 1, 1))]
    assert first == second


def test_enumerate_rejects_out_of_range():
    _, rep = modp("kronecker-reg:2", 2)
    with pytest.raises(InputError):
        enumerate_subreps(rep, (3, 0))


def test_point_counts_respect_duality():
    # independent invariant: transposing all matrices and reversing all
    # arrows turns e-dimensional subrepresentations into (d-e)-dimensional
    # ones (annihilator by vertex), so the slice counts must mirror
    from qgrass import Quiver, Representation

    for name in ("a21-ex3", "kronecker-reg:2", "kronecker-preproj:1"):
        for q in (2, 3):
            _, rep = modp(name, q)
            quiver = rep.quiver
            op_quiver = Quiver(
                quiver.vertices,
                [(a.name, a.target, a.source) for a in quiver.arrows],
            )
            op_rep = Representation(
                op_quiver,
                rep.field,
                rep.dims,
                {a: mat.transpose() for a, mat in rep.matrices.items()},
            )
            for e in all_dim_vectors(rep.dims):
                mirror = tuple(d - x for d, x in zip(rep.dims, e))
                assert len(enumerate_subreps(rep, e)) == len(
                    enumerate_subreps(op_rep, mirror)
                ), (name, q, e)


def test_counting_polynomial_example1():
    # counts 3, 4 at q = 2, 3 interpolate to q + 1; the q = 5 check sees 6
    _, rep = builtin_rep("a21-ex1")
    poly = counting_polynomial(rep, (0, 2, 1), [2, 3])
    assert poly.coefficients == (1, 1)
    assert poly.samples == ((2, 3), (3, 4))
    assert poly.check_sample == (5, 6)
    assert poly.euler_characteristic == 2
    assert poly.degree == 1
    assert str(poly) == "q + 1"
    # the paper-visible gap: degree 1 exceeds <e, d-e> = 0 and must stay so
    quiver = rep.quiver
    assert euler_form(quiver, (0, 2, 1), (3, 1, 2)) == 0
    assert poly.degree == 1


def test_counting_polynomial_example3():
    _, rep = builtin_rep("a21-ex3")
    poly = counting_polynomial(rep, (0, 1, 1), [2, 3])
    assert poly.coefficients == (1, 2)
    assert poly.euler_characteristic == 3
    assert str(poly) == "2q + 1"


def test_counting_polynomial_constant_for_zero_vector():
    _, rep = builtin_rep("a21-ex3")
    poly = counting_polynomial(rep, (0, 0, 0), [2, 3])
    assert poly.coefficients == (1,)
    assert poly.degree == 0
    assert poly.euler_characteristic == 1


def test_counting_polynomial_flags_insufficient_samples():
    # a full vertex Grassmannian of planes in 4-space grows like a quartic,
    # so two samples cannot interpolate it and the check sample must object
    _, rep = builtin_rep("kronecker-reg:4")
    with pytest.raises(CountNotPolynomialError) as info:
        counting_polynomial(rep, (0, 2), [2, 3])
    assert info.value.samples[0][0] == 2
    assert info.value.check_sample[0] == 5

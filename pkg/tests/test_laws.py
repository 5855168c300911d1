"""Spheroid, imaginaroid, associativity and H-space suites."""

from fractions import Fraction

import pytest

from hopfcheck.errors import PreconditionError
from hopfcheck.laws import (assoc_check, corner_transport_check,
                            corner_transport_suite,
                            hspace_check, imaginaroid_check, imaginaroid_instance,
                            spheroid_check, spheroid_instance, sphere_hspace_carrier)


def F(n, d=1):
    return Fraction(n, d)


def all_hold(reports):
    return all(r.holds for r in reports)


# --- spheroids ---------------------------------------------------------------

def test_sign_group_spheroid_exact():
    reports = spheroid_check(spheroid_instance("s0"), samples=50, seed=1)
    assert all_hold(reports)
    assert all(r.status == "holds-exact" for r in reports)


def test_circle_spheroid_exact():
    reports = spheroid_check(spheroid_instance("s1"), samples=200, seed=1)
    assert all_hold(reports)


def test_quaternion_spheroid_exact_and_float():
    exact = spheroid_check(spheroid_instance("s3"), samples=200, seed=2)
    assert all_hold(exact)
    sampled = spheroid_check(spheroid_instance("s3"), samples=500, seed=2,
                             mode="float")
    assert all_hold(sampled)
    assert max(r.max_residual for r in sampled) < 1e-9


def test_circle_conjugation_inverts_points():
    inst = spheroid_instance("s1")
    x = (F(3, 5), F(4, 5))
    assert inst.mul(inst.conj(x), x) == (F(1), F(0))


def test_spheroid_laws_include_derived_pair():
    names = {r.law for r in spheroid_check(spheroid_instance("s0"), samples=5)}
    assert {"star-right-inverse", "neg-mul"} <= names
    assert {"one-star", "mul-neg", "star-mul", "star-left-inverse"} <= names


def test_broken_conjugation_produces_witness():
    inst = spheroid_instance("s1")
    broken = type(inst)(
        name="broken", dim=2, unit=inst.unit, mul=inst.mul,
        conj=lambda x: x,  # conjugation deliberately wrong
        neg=inst.neg)
    reports = {r.law: r for r in spheroid_check(broken, samples=50, seed=3)}
    assert not reports["star-left-inverse"].holds
    assert reports["star-left-inverse"].witness is not None


# --- imaginaroids ------------------------------------------------------------

@pytest.mark.parametrize("name", ["empty", "s0", "s2"])
def test_imaginaroid_suites_hold_exact(name):
    reports = imaginaroid_check(imaginaroid_instance(name), samples=150, seed=4)
    assert all_hold(reports)
    assert {r.law for r in reports} >= {
        "base-neg-involution", "mul-neg", "star-right-inverse", "star-mul",
        "one-mul", "mul-one"}
    # the induced spheroid on the suspension is part of the suite
    assert any(r.instance == f"susp({name})" for r in reports)


def test_imaginaroid_float_residuals_small():
    reports = imaginaroid_check(imaginaroid_instance("s2"), samples=400, seed=5,
                                mode="float")
    assert all_hold(reports)
    assert max(r.max_residual for r in reports) < 1e-9


# --- associativity -----------------------------------------------------------

def test_assoc_holds_for_circle_and_quaternions():
    for name in ("empty", "s0", "s2"):
        inst = imaginaroid_instance(name)
        report = assoc_check(inst, samples=100, seed=6)
        assert report.holds
        assert inst.assoc_verified


def test_assoc_fails_for_octonions_with_exact_witness():
    inst = imaginaroid_instance("octonion-control")
    report = assoc_check(inst, samples=50, seed=6, expect_holds=False)
    assert not report.holds
    assert report.expected
    assert report.witness is not None
    assert not inst.assoc_verified


# --- corner transport --------------------------------------------------------

def test_corner_transport_trivial_tuple():
    inst = imaginaroid_instance("s0")
    assoc_check(inst, samples=50, seed=7)
    one = inst.unit
    report = corner_transport_check(inst, one, one, one, one)
    assert report.holds


def test_corner_transport_complex_example():
    # a = c = i, b = d = 1: f(-1) = ac = -1 and g(1) = cb = i
    inst = imaginaroid_instance("s0")
    assoc_check(inst, samples=50, seed=7)
    i = (F(0), F(1))
    one = inst.unit
    ac = inst.mul(i, i)
    assert ac == (F(-1), F(0))
    cb = inst.mul(i, one)
    assert cb == i
    report = corner_transport_check(inst, i, one, i, one)
    assert report.holds


def test_corner_transport_random_quaternions_exact():
    inst = imaginaroid_instance("s2")
    assoc_check(inst, samples=100, seed=8)
    report = corner_transport_suite(inst, samples=300, seed=8)
    assert report.holds
    assert report.status == "holds-exact"


def test_corner_transport_requires_verified_associativity():
    inst = imaginaroid_instance("s2")  # fresh instance: not yet verified
    with pytest.raises(PreconditionError):
        corner_transport_suite(inst, samples=10, seed=9)


def test_corner_transport_octonion_negative_control():
    inst = imaginaroid_instance("octonion-control")
    report = corner_transport_suite(inst, samples=200, seed=9,
                                    allow_unverified=True, expect_holds=False)
    assert not report.holds
    assert report.witness is not None
    assert report.expected


def test_derived_laws_follow_when_primaries_hold():
    # whenever the six primary spheroid laws hold on an instance, the two
    # derived ones must as well
    for name in ("s0", "s1", "s3"):
        reports = {r.law: r for r in
                   spheroid_check(spheroid_instance(name), samples=100, seed=10)}
        primaries = ["one-star", "neg-star", "neg-involution", "star-involution",
                     "mul-neg", "star-mul", "star-left-inverse"]
        if all(reports[p].holds for p in primaries):
            assert reports["star-right-inverse"].holds
            assert reports["neg-mul"].holds


# --- H-spaces ----------------------------------------------------------------

@pytest.mark.parametrize("name", ["s0", "s1", "s3"])
def test_sphere_hspace_checks_exact(name):
    reports = hspace_check(sphere_hspace_carrier(name), samples=150, seed=11)
    assert all_hold(reports)
    assert {r.law for r in reports} == {
        "left-unit", "right-unit",
        "left-translation-inverse", "left-translation-inverse-alt",
        "right-translation-inverse", "right-translation-inverse-alt"}


def test_hspace_detects_broken_unit():
    carrier = sphere_hspace_carrier("s1")
    broken = type(carrier)(
        name="broken", unit=(F(0), F(1)), mul=carrier.mul, star=carrier.star,
        sample=carrier.sample, structured=carrier.structured,
        residual=carrier.residual, serialize=carrier.serialize)
    reports = {r.law: r for r in hspace_check(broken, samples=40, seed=12)}
    assert not reports["left-unit"].holds

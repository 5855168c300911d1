"""The projection join(G, G) -> susp(G) and its fiber structure."""

from fractions import Fraction

import pytest

from hopfcheck.cdalg import mul_coeffs
from hopfcheck.hopf import (dimension_report, fiber_check, fibration_report,
                            hopf_instance, hopf_map)
from hopfcheck.sampling import CounterRng, rand_quarter_pair, rand_unit
from hopfcheck.spheremodel import JoinPoint, SuspPoint


def F(n, d=1):
    return Fraction(n, d)


def rational_pair(inst, seed, index=0):
    rng = CounterRng(seed, "test/hopf", index)
    dim = inst.fiber_dim
    u = rand_unit(rng, dim, "exact")
    v = rand_unit(rng, dim, "exact")
    c, s = rand_quarter_pair(rng, "exact")
    return u, v, c, s


# --- the projection -----------------------------------------------------------

@pytest.mark.parametrize("name", ["real", "complex", "quaternionic"])
def test_poles(name):
    inst = hopf_instance(name)
    u, v, _, _ = rational_pair(inst, 1)
    dim = inst.fiber_dim
    zero = (F(0),) * dim
    assert hopf_map(JoinPoint(u, zero), inst).coords == SuspPoint.north(dim).coords
    assert hopf_map(JoinPoint(zero, v), inst).coords == SuspPoint.south(dim).coords


def test_arc_lands_on_meridian_through_product():
    inst = hopf_instance("quaternionic")
    u, v, c, s = rational_pair(inst, 2)
    X = JoinPoint(tuple(c * a for a in u), tuple(s * b for b in v))
    out = hopf_map(X, inst)
    assert out.coords[0] == c * c - s * s
    assert out.coords[1:] == tuple(2 * c * s * t for t in mul_coeffs(u, v))


def test_equator_at_balanced_arc():
    inst = hopf_instance("complex")
    u, v, _, _ = rational_pair(inst, 3)
    r = 2 ** -0.5
    X = JoinPoint(tuple(r * float(a) for a in u), tuple(r * float(b) for b in v))
    out = hopf_map(X, inst)
    assert abs(out.coords[0]) < 1e-12
    prod = mul_coeffs(tuple(map(float, u)), tuple(map(float, v)))
    assert max(abs(x - y) for x, y in zip(out.coords[1:], prod)) < 1e-12


def test_projection_is_unit_norm_exact():
    inst = hopf_instance("quaternionic")
    for idx in range(10):
        u, v, c, s = rational_pair(inst, 4, idx)
        X = JoinPoint(tuple(c * a for a in u), tuple(s * b for b in v))
        out = hopf_map(X, inst)
        assert sum(t * t for t in out.coords) == 1


def test_real_projection_is_the_squaring_map():
    inst = hopf_instance("real")
    # (p, q) on the circle goes to (p^2 - q^2, 2pq): the double cover
    p, q = F(3, 5), F(4, 5)
    out = hopf_map(JoinPoint((p,), (q,)), inst)
    assert out.coords == (F(-7, 25), F(24, 25))


def test_inl_copy_collapses_to_north():
    inst = hopf_instance("quaternionic")
    dim = inst.fiber_dim
    zero = (F(0),) * dim
    for idx in range(8):
        rng = CounterRng(5, "test/inl", idx)
        u = rand_unit(rng, dim, "exact")
        assert hopf_map(JoinPoint(u, zero), inst).coords == SuspPoint.north(dim).coords


# --- fibers --------------------------------------------------------------------

@pytest.mark.parametrize("name", ["complex", "quaternionic"])
def test_fiber_structure_exact(name):
    inst = hopf_instance(name)
    reports = fiber_check(inst, samples=200, seed=6)
    assert {r.law for r in reports} == {
        "fiber-membership", "fiber-completeness", "fiber-separation", "fiber-polar"}
    for r in reports:
        assert r.holds, (r.law, r.witness)
        assert r.status == "holds-exact"


def test_fiber_structure_float():
    inst = hopf_instance("quaternionic")
    reports = fiber_check(inst, samples=400, seed=7, mode="float")
    assert all(r.holds for r in reports)
    assert max(r.max_residual for r in reports) < 1e-9


def test_real_fiber_structure():
    reports = fiber_check(hopf_instance("real"), samples=100, seed=8)
    assert all(r.holds for r in reports)


def test_translate_with_unit_is_identity():
    inst = hopf_instance("complex")
    u, v, c, s = rational_pair(inst, 9)
    X = JoinPoint(tuple(c * a for a in u), tuple(s * b for b in v))
    one = (F(1), F(0))
    u2 = mul_coeffs(u, one)
    v2 = mul_coeffs(one, v)
    X2 = JoinPoint(tuple(c * a for a in u2), tuple(s * b for b in v2))
    assert X2.flatten() == X.flatten()


# --- the aggregate report -------------------------------------------------------

def test_dimension_bookkeeping():
    expectations = {"real": (2, 2), "complex": (4, 3), "quaternionic": (8, 5)}
    for name, (total, base) in expectations.items():
        inst = hopf_instance(name)
        assert (inst.total_dim, inst.base_dim) == (total, base)
        assert dimension_report(inst).holds


@pytest.mark.parametrize("name", ["real", "complex", "quaternionic"])
def test_fibration_report_passes(name):
    doc = fibration_report(hopf_instance(name), samples=150, seed=10)
    assert doc.overall == "pass"
    assert all(r.expected for r in doc.reports)
    laws = {r.law for r in doc.reports}
    assert "fiber-membership" in laws
    assert "left-unit" in laws
    assert "dimension-bookkeeping" in laws
    assert any(law.startswith("oracle-equivalence") for law in laws)

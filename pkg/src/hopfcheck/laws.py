"""Spheroid, imaginaroid and H-space law suites over concrete sphere instances.

A spheroid is a multiplicative unit sphere with conjugation and negation;
an imaginaroid is a sphere of imaginaries whose suspension carries the
multiplication.  The concrete instances here are the unit spheres of the
low Cayley-Dickson levels:

    base A = {}    -> susp A = S^0, level-0 (sign) multiplication
    base A = S^0   -> susp A = S^1, level-1 (complex) multiplication
    base A = S^2   -> susp A = S^3, level-2 (quaternion) multiplication

plus the octonion sphere S^7 as a deliberately non-associative control.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional

from .cdalg import conj_coeffs, mul_coeffs
from .checks import LawReport, execute_check, max_abs_diff
from .errors import PreconditionError, UsageError
from .sampling import CounterRng, rand_unit


def _signed_basis(dim: int) -> tuple:
    out = []
    for i in range(dim):
        for s in (1, -1):
            c = [Fraction(0)] * dim
            c[i] = Fraction(s)
            out.append(tuple(c))
    return tuple(out)


# ---------------------------------------------------------------------------
# instances


@dataclass(frozen=True)
class SpheroidInstance:
    """A unit sphere with multiplication, conjugation and negation handles.

    All operation handles work on raw coordinate tuples.
    """

    name: str
    dim: int
    unit: tuple
    mul: Callable
    conj: Callable
    neg: Callable

    def sample(self, rng: CounterRng, mode: str) -> tuple:
        return rand_unit(rng, self.dim, mode)

    def structured(self) -> tuple:
        return _signed_basis(self.dim)


@dataclass
class ImaginaroidInstance:
    """A base sphere with involutive negation plus multiplication on its suspension.

    level is the Cayley-Dickson level of the suspension's multiplication;
    the base sphere sits in ambient dimension 2^level - 1.  assoc_verified
    is set by a passing assoc_check and gates the operations that assume
    an associative suspension.
    """

    name: str
    level: int
    assoc_verified: bool = field(default=False, compare=False)

    @property
    def susp_dim(self) -> int:
        return 1 << self.level

    @property
    def base_dim(self) -> int:
        return (1 << self.level) - 1

    @property
    def unit(self) -> tuple:
        return (Fraction(1),) + (Fraction(0),) * (self.susp_dim - 1)

    def mul(self, x: tuple, y: tuple) -> tuple:
        return mul_coeffs(x, y)

    def conj(self, x: tuple) -> tuple:
        # the suspension conjugation: fix the axis, negate the base directions
        return conj_coeffs(x)

    def neg(self, x: tuple) -> tuple:
        return tuple(-c for c in x)

    def base_neg(self, a: tuple) -> tuple:
        return tuple(-c for c in a)

    def sample_susp(self, rng: CounterRng, mode: str) -> tuple:
        return rand_unit(rng, self.susp_dim, mode)

    def sample_base(self, rng: CounterRng, mode: str) -> Optional[tuple]:
        if self.base_dim == 0:
            return None
        return rand_unit(rng, self.base_dim, mode)

    def induced_spheroid(self) -> SpheroidInstance:
        """The suspension as a spheroid (this is what the laws certify)."""
        return SpheroidInstance(
            name=f"susp({self.name})",
            dim=self.susp_dim,
            unit=self.unit,
            mul=self.mul,
            conj=self.conj,
            neg=self.neg)


def spheroid_instance(name: str) -> SpheroidInstance:
    """Provided spheroids: the sign group and the induced circle/quaternion spheres."""
    if name == "s0":
        return SpheroidInstance(
            name="s0", dim=1,
            unit=(Fraction(1),),
            mul=lambda x, y: (x[0] * y[0],),
            conj=lambda x: x,
            neg=lambda x: (-x[0],))
    if name == "s1":
        return replace(imaginaroid_instance("s0").induced_spheroid(), name="s1")
    if name == "s3":
        return replace(imaginaroid_instance("s2").induced_spheroid(), name="s3")
    raise UsageError(f"unknown spheroid instance {name!r}")


def imaginaroid_instance(name: str) -> ImaginaroidInstance:
    """Provided imaginaroids, named by their base sphere.

    "empty" has no imaginaries (suspension S^0), "s0" suspends to the
    circle, "s2" to the quaternion sphere.  "octonion-control" exposes the
    level-3 multiplication as a negative control: its suspension is not
    associative, and suites pointed at it must produce witnesses.
    """
    levels = {"empty": 0, "s0": 1, "s2": 2, "octonion-control": 3}
    if name not in levels:
        raise UsageError(f"unknown imaginaroid instance {name!r}")
    return ImaginaroidInstance(name=name, level=levels[name])


# ---------------------------------------------------------------------------
# suites


def _pair_sampler(inst, suite: str, seed: int, mode: str, arity: int):
    def sampler(i):
        rng = CounterRng(seed, suite, i)
        return tuple(inst.sample(rng, mode) if isinstance(inst, SpheroidInstance)
                     else inst.sample_susp(rng, mode)
                     for _ in range(arity))
    return sampler


def spheroid_check(inst: SpheroidInstance,
                   samples: int = 10000,
                   seed: int = 0,
                   mode: str = "exact",
                   *,
                   tolerance: float = 1e-9,
                   workers: int = 1) -> list:
    """The six spheroid laws plus the two derived ones, one report per law."""
    unit, mul, conj, neg = inst.unit, inst.mul, inst.conj, inst.neg

    def law_unit_conj(inputs):
        lhs = conj(unit)
        return max_abs_diff(lhs, unit), lhs, unit

    def law_neg_star(inputs):
        (x,) = inputs
        lhs = conj(neg(x))
        rhs = neg(conj(x))
        return max_abs_diff(lhs, rhs), lhs, rhs

    def law_neg_involution(inputs):
        (x,) = inputs
        lhs = neg(neg(x))
        return max_abs_diff(lhs, x), lhs, x

    def law_star_involution(inputs):
        (x,) = inputs
        lhs = conj(conj(x))
        return max_abs_diff(lhs, x), lhs, x

    def law_mul_neg(inputs):
        x, y = inputs
        lhs = mul(x, neg(y))
        rhs = neg(mul(x, y))
        return max_abs_diff(lhs, rhs), lhs, rhs

    def law_star_mul(inputs):
        x, y = inputs
        lhs = conj(mul(x, y))
        rhs = mul(conj(y), conj(x))
        return max_abs_diff(lhs, rhs), lhs, rhs

    def law_star_left_inverse(inputs):
        (x,) = inputs
        lhs = mul(conj(x), x)
        return max_abs_diff(lhs, unit), lhs, unit

    # derived: these follow from the six above, checked independently
    def law_star_right_inverse(inputs):
        (x,) = inputs
        lhs = mul(x, conj(x))
        return max_abs_diff(lhs, unit), lhs, unit

    def law_neg_mul(inputs):
        x, y = inputs
        lhs = mul(neg(x), y)
        rhs = neg(mul(x, y))
        return max_abs_diff(lhs, rhs), lhs, rhs

    laws = [
        ("one-star", law_unit_conj, 0),
        ("neg-star", law_neg_star, 1),
        ("neg-involution", law_neg_involution, 1),
        ("star-involution", law_star_involution, 1),
        ("mul-neg", law_mul_neg, 2),
        ("star-mul", law_star_mul, 2),
        ("star-left-inverse", law_star_left_inverse, 1),
        ("star-right-inverse", law_star_right_inverse, 1),
        ("neg-mul", law_neg_mul, 2),
    ]
    return _run_point_laws(inst, laws, samples, seed, mode, tolerance, workers)


def _run_point_laws(inst, laws, samples, seed, mode, tolerance, workers) -> list:
    structured_points = inst.structured() if isinstance(inst, SpheroidInstance) \
        else _signed_basis(inst.susp_dim)
    name = inst.name
    reports = []
    for law, evaluate, arity in laws:
        if arity == 0:
            structured = [()]
            sampler, n = None, 0
        else:
            structured = _tuples(structured_points, arity)
            sampler = _pair_sampler(inst, f"laws/{name}/{law}/{mode}", seed, mode, arity)
            n = samples
        reports.append(execute_check(
            law, name, evaluate, structured=structured, sampler=sampler,
            samples=n, seed=seed, mode=mode, tolerance=tolerance,
            workers=workers))
    return reports


def _tuples(points, arity):
    if arity == 1:
        return [(p,) for p in points]
    if arity == 2:
        return [(p, q) for p in points for q in points]
    return [(p, q, r) for p in points for q in points for r in points]


def imaginaroid_check(inst: ImaginaroidInstance,
                      samples: int = 10000,
                      seed: int = 0,
                      mode: str = "exact",
                      *,
                      tolerance: float = 1e-9,
                      workers: int = 1) -> list:
    """The imaginaroid laws on the suspension, then the spheroid suite it induces."""
    unit, mul, conj, neg = inst.unit, inst.mul, inst.conj, inst.neg

    def law_base_neg_involution(inputs):
        (a,) = inputs
        lhs = inst.base_neg(inst.base_neg(a))
        return max_abs_diff(lhs, a), lhs, a

    def law_mul_neg(inputs):
        x, y = inputs
        lhs = mul(x, neg(y))
        rhs = neg(mul(x, y))
        return max_abs_diff(lhs, rhs), lhs, rhs

    def law_star_right_inverse(inputs):
        (x,) = inputs
        lhs = mul(x, conj(x))
        return max_abs_diff(lhs, unit), lhs, unit

    def law_star_mul(inputs):
        x, y = inputs
        lhs = conj(mul(x, y))
        rhs = mul(conj(y), conj(x))
        return max_abs_diff(lhs, rhs), lhs, rhs

    def law_one_mul(inputs):
        (x,) = inputs
        lhs = mul(unit, x)
        return max_abs_diff(lhs, x), lhs, x

    def law_mul_one(inputs):
        (x,) = inputs
        lhs = mul(x, unit)
        return max_abs_diff(lhs, x), lhs, x

    reports = []

    # base negation must be involutive (vacuous for the empty base)
    if inst.base_dim > 0:
        base_structured = [(p,) for p in _signed_basis(inst.base_dim)]

        def base_sampler(i):
            rng = CounterRng(seed, f"laws/{inst.name}/base-neg/{mode}", i)
            return (inst.sample_base(rng, mode),)

        reports.append(execute_check(
            "base-neg-involution", inst.name, law_base_neg_involution,
            structured=base_structured, sampler=base_sampler, samples=samples,
            seed=seed, mode=mode, tolerance=tolerance, workers=workers))
    else:
        reports.append(execute_check(
            "base-neg-involution", inst.name, lambda inputs: (0, None, None),
            structured=[], sampler=None, samples=0, seed=seed, mode=mode,
            tolerance=tolerance, workers=workers))

    laws = [
        ("mul-neg", law_mul_neg, 2),
        ("star-right-inverse", law_star_right_inverse, 1),
        ("star-mul", law_star_mul, 2),
        ("one-mul", law_one_mul, 1),
        ("mul-one", law_mul_one, 1),
    ]
    reports.extend(_run_point_laws(inst, laws, samples, seed, mode, tolerance, workers))
    reports.extend(spheroid_check(
        inst.induced_spheroid(), samples=samples, seed=seed, mode=mode,
        tolerance=tolerance, workers=workers))
    return reports


def assoc_check(inst: ImaginaroidInstance,
                samples: int = 10000,
                seed: int = 0,
                mode: str = "exact",
                *,
                tolerance: float = 1e-9,
                workers: int = 1,
                expect_holds: bool = True) -> LawReport:
    """(xy)z = x(yz) on the suspension; a pass unlocks the join construction."""
    mul = inst.mul

    def law(inputs):
        x, y, z = inputs
        lhs = mul(mul(x, y), z)
        rhs = mul(x, mul(y, z))
        return max_abs_diff(lhs, rhs), lhs, rhs

    report = execute_check(
        "associativity", inst.name, law,
        structured=_tuples(_signed_basis(inst.susp_dim), 3),
        sampler=_pair_sampler(inst, f"laws/{inst.name}/assoc/{mode}", seed, mode, 3),
        samples=samples, seed=seed, mode=mode, tolerance=tolerance,
        workers=workers, expect_holds=expect_holds)
    if report.holds:
        inst.assoc_verified = True
    return report


# ---------------------------------------------------------------------------
# the corner-transport identities (require an associative suspension)


def corner_transport_residual(inst: ImaginaroidInstance, a, b, c, d):
    """Residual of the four identities carrying the reduced diamond to a product diamond.

    With f(x) = -(ac)x and g(y) = (cy)b and the pivot
    xhat = ((c* a*) d) b*, an associative suspension forces

        f(-1) = ac,   f(xhat) = -(d b*),   g(1) = cb,   g(xhat) = a* d.
    """
    mul, conj, neg, unit = inst.mul, inst.conj, inst.neg, inst.unit
    ac = mul(a, c)
    xhat = mul(mul(mul(conj(c), conj(a)), d), conj(b))

    def f(x):
        return neg(mul(ac, x))

    def g(y):
        return mul(mul(c, y), b)

    checks = [
        ("f(-1) = ac", f(neg(unit)), ac),
        ("f(xhat) = -d b*", f(xhat), neg(mul(d, conj(b)))),
        ("g(1) = cb", g(unit), mul(c, b)),
        ("g(xhat) = a* d", g(xhat), mul(conj(a), d)),
    ]
    worst = 0
    detail = None
    for label, lhs, rhs in checks:
        r = max_abs_diff(lhs, rhs)
        if r > worst:
            worst = r
            detail = (label, lhs, rhs)
    return worst, detail


def corner_transport_check(inst: ImaginaroidInstance, a, b, c, d,
                           *, allow_unverified: bool = False) -> LawReport:
    """Check the four corner identities for one 4-tuple of suspension points."""
    _require_assoc(inst, allow_unverified)

    def evaluate(inputs):
        worst, detail = corner_transport_residual(inst, *inputs)
        if detail is None:
            return 0, None, None
        return worst, detail[1], detail[2]

    return execute_check("corner-transport", inst.name, evaluate,
                         structured=[(a, b, c, d)], samples=0)


def corner_transport_suite(inst: ImaginaroidInstance,
                           samples: int = 10000,
                           seed: int = 0,
                           mode: str = "exact",
                           *,
                           tolerance: float = 1e-9,
                           workers: int = 1,
                           allow_unverified: bool = False,
                           expect_holds: bool = True) -> LawReport:
    """Corner identities over random unit 4-tuples of the suspension."""
    _require_assoc(inst, allow_unverified)

    def evaluate(inputs):
        worst, detail = corner_transport_residual(inst, *inputs)
        if detail is None:
            return 0, None, None
        return worst, detail[1], detail[2]

    return execute_check(
        "corner-transport", inst.name, evaluate,
        sampler=_pair_sampler(inst, f"laws/{inst.name}/corner/{mode}", seed, mode, 4),
        samples=samples, seed=seed, mode=mode, tolerance=tolerance,
        workers=workers, expect_holds=expect_holds)


def _require_assoc(inst: ImaginaroidInstance, allow_unverified: bool):
    if not inst.assoc_verified and not allow_unverified:
        raise PreconditionError(
            f"associativity of {inst.name} is unverified; run assoc_check first")


# ---------------------------------------------------------------------------
# H-space checks


@dataclass(frozen=True)
class HSpaceCarrier:
    """A pointed carrier with multiplication and a conjugation-like inverse.

    Points are opaque; sample/structured produce them, mul/star combine
    them and residual compares them.  Translation invertibility is checked
    through explicit two-sided conjugate inverses, which is sound for all
    carriers provided here (groups or alternative-algebra spheres).
    """

    name: str
    unit: object
    mul: Callable
    star: Callable
    sample: Callable          # (rng, mode) -> point
    structured: tuple
    residual: Callable        # (x, y) -> scalar
    serialize: Callable       # point -> json-ready coefficients


def sphere_hspace_carrier(name: str) -> HSpaceCarrier:
    """Carriers backed directly by a Cayley-Dickson sphere: s0, s1, s3."""
    levels = {"s0": 0, "s1": 1, "s3": 2}
    if name not in levels:
        raise UsageError(f"unknown sphere carrier {name!r}")
    dim = 1 << levels[name]
    return HSpaceCarrier(
        name=name,
        unit=(Fraction(1),) + (Fraction(0),) * (dim - 1),
        mul=mul_coeffs,
        star=conj_coeffs,
        sample=lambda rng, mode: rand_unit(rng, dim, mode),
        structured=_signed_basis(dim),
        residual=max_abs_diff,
        serialize=lambda p: p)


def hspace_check(carrier: HSpaceCarrier,
                 samples: int = 10000,
                 seed: int = 0,
                 mode: str = "exact",
                 *,
                 tolerance: float = 1e-9,
                 workers: int = 1) -> list:
    """Unit laws plus two-sided conjugate-inverse identities for translations."""
    unit, mul, star, res = carrier.unit, carrier.mul, carrier.star, carrier.residual

    def left_unit(inputs):
        (x,) = inputs
        lhs = mul(unit, x)
        return res(lhs, x), carrier.serialize(lhs), carrier.serialize(x)

    def right_unit(inputs):
        (x,) = inputs
        lhs = mul(x, unit)
        return res(lhs, x), carrier.serialize(lhs), carrier.serialize(x)

    def left_inv(inputs):
        a, x = inputs
        lhs = mul(star(a), mul(a, x))
        return res(lhs, x), carrier.serialize(lhs), carrier.serialize(x)

    def left_inv_alt(inputs):
        a, x = inputs
        lhs = mul(a, mul(star(a), x))
        return res(lhs, x), carrier.serialize(lhs), carrier.serialize(x)

    def right_inv(inputs):
        a, x = inputs
        lhs = mul(mul(x, a), star(a))
        return res(lhs, x), carrier.serialize(lhs), carrier.serialize(x)

    def right_inv_alt(inputs):
        a, x = inputs
        lhs = mul(mul(x, star(a)), a)
        return res(lhs, x), carrier.serialize(lhs), carrier.serialize(x)

    laws = [
        ("left-unit", left_unit, 1),
        ("right-unit", right_unit, 1),
        ("left-translation-inverse", left_inv, 2),
        ("left-translation-inverse-alt", left_inv_alt, 2),
        ("right-translation-inverse", right_inv, 2),
        ("right-translation-inverse-alt", right_inv_alt, 2),
    ]
    reports = []
    for law, evaluate, arity in laws:
        def sampler(i, arity=arity, law=law):
            rng = CounterRng(seed, f"hspace/{carrier.name}/{law}/{mode}", i)
            return tuple(carrier.sample(rng, mode) for _ in range(arity))

        reports.append(execute_check(
            law, carrier.name, evaluate,
            structured=_tuples(carrier.structured, arity),
            sampler=sampler, samples=samples, seed=seed, mode=mode,
            tolerance=tolerance, workers=workers))
    return reports

"""Law reports and the generic check executor.

A check runs in two phases.  The structured phase scans a deterministic,
capped stream of exact inputs (small integer coefficients) and yields the
minimal witness when the law fails on one of them.  The sampling phase
evaluates `samples` random inputs indexed 0..samples-1; each input is
derived from (seed, suite id, index) so the outcome is identical for any
partition of the index range across workers.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import InvariantViolation

STATUS_HOLDS_EXACT = "holds-exact"
STATUS_HOLDS_SAMPLED = "holds-sampled"
STATUS_FAILS = "fails"


def scalar_to_json(x):
    """Rationals go to 'p/q' strings (lossless); floats and ints pass through."""
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def coeffs_to_json(value):
    if isinstance(value, (tuple, list)):
        return [coeffs_to_json(v) for v in value]
    return scalar_to_json(value)


@dataclass
class LawReport:
    law: str
    instance: str
    status: str
    samples: int
    tolerance: Optional[float]
    max_residual: float
    witness: Optional[dict]
    seed: int
    duration_ms: float
    expected: bool

    def __post_init__(self):
        if self.status == STATUS_FAILS and self.witness is None:
            raise InvariantViolation("failing report without witness")
        if self.status == STATUS_HOLDS_SAMPLED and (
                self.tolerance is None or self.samples is None):
            raise InvariantViolation("sampled report without tolerance/sample count")

    def to_dict(self) -> dict:
        d = {
            "law": self.law,
            "instance": self.instance,
            "status": self.status,
            "samples": self.samples,
            "tolerance": self.tolerance,
            "max_residual": self.max_residual,
            "seed": self.seed,
            "duration_ms": self.duration_ms,
            "expected": self.expected,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    @property
    def holds(self) -> bool:
        return self.status != STATUS_FAILS


@dataclass
class ReportDocument:
    version: str
    config: dict
    reports: list
    overall: str = "pass"
    duration_ms: float = 0.0

    def finalize(self):
        self.reports.sort(key=lambda r: (r.instance, r.law))
        self.overall = "pass" if all(r.expected for r in self.reports) else "fail"
        return self

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "config": self.config,
            "reports": [r.to_dict() for r in self.reports],
            "overall": self.overall,
            "duration_ms": self.duration_ms,
        }


@dataclass
class _Violation:
    index: int          # -1 for structured-phase witnesses
    residual: object
    inputs: tuple
    lhs: object
    rhs: object


def _witness_dict(v: _Violation) -> dict:
    return {
        "inputs": [coeffs_to_json(x) for x in v.inputs],
        "lhs": coeffs_to_json(v.lhs),
        "rhs": coeffs_to_json(v.rhs),
    }


def execute_check(law: str,
                  instance: str,
                  evaluate: Callable,
                  *,
                  structured: Iterable = (),
                  sampler: Optional[Callable] = None,
                  samples: int = 0,
                  seed: int = 0,
                  mode: str = "exact",
                  tolerance: float = 1e-9,
                  expect_holds: bool = True,
                  workers: int = 1) -> LawReport:
    """Run one law check and produce its report.

    evaluate(inputs) -> (residual, lhs, rhs); the law holds on the inputs
    when the residual is zero (exact mode) or at most `tolerance` (float
    mode).  Structured inputs are always judged exactly.  sampler(index)
    builds the random inputs for the sampling phase.
    """
    t0 = time.perf_counter()
    threshold = 0 if mode == "exact" else tolerance
    violation = None
    max_residual = 0

    # structured inputs are exact; any nonzero residual is a witness
    for inputs in structured:
        residual, lhs, rhs = evaluate(inputs)
        if residual > 0:
            violation = _Violation(-1, residual, inputs, lhs, rhs)
            break

    if violation is None and sampler is not None and samples > 0:
        def scan(lo: int, hi: int):
            best = None
            worst = 0
            for i in range(lo, hi):
                residual, lhs, rhs = evaluate(sampler(i))
                if residual > worst:
                    worst = residual
                if residual > threshold:
                    best = _Violation(i, residual, sampler(i), lhs, rhs)
                    break
            return best, worst

        if workers <= 1:
            violation, worst = scan(0, samples)
            max_residual = max(max_residual, worst)
        else:
            step = -(-samples // workers)
            bounds = [(w * step, min((w + 1) * step, samples)) for w in range(workers)]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda b: scan(*b), bounds))
            hits = [p[0] for p in parts if p[0] is not None]
            if hits:
                violation = min(hits, key=lambda v: v.index)
                max_residual = violation.residual
            else:
                max_residual = max([max_residual] + [p[1] for p in parts])

    if violation is not None:
        status = STATUS_FAILS
        witness = _witness_dict(violation)
        max_residual = violation.residual
    else:
        status = STATUS_HOLDS_EXACT if mode == "exact" else STATUS_HOLDS_SAMPLED
        witness = None

    duration_ms = (time.perf_counter() - t0) * 1000.0
    return LawReport(
        law=law,
        instance=instance,
        status=status,
        samples=samples,
        tolerance=None if mode == "exact" else tolerance,
        max_residual=float(max_residual),
        witness=witness,
        seed=seed,
        duration_ms=duration_ms,
        expected=(status != STATUS_FAILS) == expect_holds,
    )


def max_abs_diff(a: tuple, b: tuple):
    """Largest absolute coefficient difference; the residual used everywhere."""
    worst = 0
    for x, y in zip(a, b):
        d = x - y
        if d < 0:
            d = -d
        if d > worst:
            worst = d
    return worst


def reports_to_json(doc: ReportDocument) -> bytes:
    return json.dumps(doc.to_dict(), indent=2).encode() + b"\n"

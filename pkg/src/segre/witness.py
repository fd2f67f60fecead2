"""Randomized witness generators with full verification and retry.

Two constructions are realized over an exact field:

* stratum witnesses: a generic cycle of the right length whose ideal has no
  forms of the watched degree, giving a stable bundle with a prescribed
  Segre invariant;
* section-rich witnesses: all but one point of the cycle ride a low-degree
  curve, forcing many sections after a twist and certifying that a
  Brill-Noether locus is nonempty.

Every generated bundle is re-verified by the exact calculators before it is
returned, and each report records the checks so they can be replayed from
the bundle alone.  Generators are deterministic functions of (parameters,
stream seed); retries use indexed substreams.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundles import (
    ExtensionBundle,
    bundle_from_json,
    cayley_bacharach,
    h0_twist,
    is_stable,
    segre_invariant,
)
from .brillnoether import bn_nonempty_t
from .errors import ConsistencyError, CounterexampleError, InvalidParameterError, RetryExhausted
from .fields import PrimeField
from .plane import (
    PlaneCurve,
    PlanePoint,
    ZeroCycle,
    h0_ideal,
    monomial_count,
    point_from_index,
    points_on_curve,
    projective_point_count,
)
from .rng import RngState
from .strata import ChernData, admissibility_condition, invariant_k, is_admissible, normalize_chern

DEFAULT_PRIME = 10007
DEFAULT_RETRIES = 64
DEFAULT_COORD_BOUND = 1000


def default_field() -> PrimeField:
    return PrimeField(DEFAULT_PRIME)


def random_point(field, rng: RngState, coord_bound: int = DEFAULT_COORD_BOUND) -> PlanePoint:
    """One uniform point: over F_p uniform on the projective plane, over Q a
    normalized integer coordinate vector drawn from [-bound, bound]^3."""
    if isinstance(field, PrimeField):
        idx = rng.randrange(projective_point_count(field.p))
        return point_from_index(field, idx)
    while True:
        coords = (
            rng.randint_signed(coord_bound),
            rng.randint_signed(coord_bound),
            rng.randint_signed(coord_bound),
        )
        if any(coords):
            return PlanePoint(field, coords)


def random_cycle(
    length: int,
    field,
    rng: RngState,
    coord_bound: int = DEFAULT_COORD_BOUND,
) -> ZeroCycle:
    """A reduced cycle of the requested length; duplicate draws are rejected.

    Draw budget is 100 + 60*length point samples; exceeding it raises
    RetryExhausted (only plausible over tiny prime fields).
    """
    if length < 0:
        raise InvalidParameterError("cycle length must be >= 0")
    if isinstance(field, PrimeField) and length > projective_point_count(field.p):
        raise InvalidParameterError(
            f"cannot place {length} distinct points in a plane with "
            f"{projective_point_count(field.p)} points"
        )
    seen = set()
    picked = []
    budget = 100 + 60 * length
    for _ in range(budget):
        if len(picked) == length:
            break
        pt = random_point(field, rng, coord_bound)
        if pt not in seen:
            seen.add(pt)
            picked.append(pt)
    if len(picked) != length:
        raise RetryExhausted(
            f"could not draw {length} distinct points within {budget} samples"
        )
    return ZeroCycle(field, picked)


@dataclass(frozen=True)
class WitnessReport:
    bundle: ExtensionBundle
    checks: dict
    retries_used: int
    seed: int
    prime: int | None

    def to_json(self) -> dict:
        return {
            "bundle": self.bundle.to_json(),
            "checks": dict(self.checks),
            "retries_used": self.retries_used,
            "seed": self.seed,
            "prime": self.prime,
        }


def witness_report_from_json(obj: dict) -> WitnessReport:
    return WitnessReport(
        bundle=bundle_from_json(obj["bundle"]),
        checks=dict(obj["checks"]),
        retries_used=int(obj["retries_used"]),
        seed=int(obj["seed"]),
        prime=obj.get("prime"),
    )


def _field_prime(field) -> int | None:
    return field.p if isinstance(field, PrimeField) else None


def _stratum_shape(c: ChernData, s: int) -> tuple[int, int, int, int]:
    """Presentation (a, b), cycle length, and watched vanishing degree."""
    k = invariant_k(c.c1, s)
    even, r, c2n = normalize_chern(c)
    if even:
        a, b = r - k, r + k
        length = c2n + k * k
    else:
        a, b = r - k, r + k - 1
        length = c2n + k * k - k
    d_watch = b - a - 1  # 2k-1 for even invariants, 2k-2 for odd
    return a, b, length, d_watch


def stratum_witness(
    c: ChernData,
    s: int,
    rng: RngState,
    max_retries: int = DEFAULT_RETRIES,
    field=None,
) -> WitnessReport:
    """A verified bundle with Segre invariant exactly s for the given classes.

    Samples cycles until no form of the watched degree passes through all
    of Z and the local-freeness (Cayley-Bacharach) condition holds; the
    resulting bundle is certified stable with the requested invariant.
    """
    field = field if field is not None else default_field()
    if not is_admissible(c, s):
        raise InvalidParameterError(
            f"{admissibility_condition(c, s)} fails for c1={c.c1}, c2={c.c2}, s={s}"
        )
    a, b, length, d_watch = _stratum_shape(c, s)
    fails = {"h0_nonzero": 0, "cayley_bacharach": 0}
    for attempt in range(max_retries):
        tr = rng.spawn(attempt)
        cycle = random_cycle(length, field, tr)
        h0v = h0_ideal(d_watch, cycle)
        if h0v != 0:
            fails["h0_nonzero"] += 1
            continue
        if not cayley_bacharach(b - a - 3, cycle):
            fails["cayley_bacharach"] += 1
            continue
        bundle = ExtensionBundle(a, b, cycle)
        seg = segre_invariant(bundle)
        stable = is_stable(bundle)
        if seg.s != s or not stable:
            raise ConsistencyError(
                f"verified cycle produced invariant {seg.s} (stable={stable}), wanted {s}"
            )
        checks = {
            "cayley_bacharach": True,
            "h0_value": h0v,
            "segre_value": seg.s,
            "stable": stable,
        }
        return WitnessReport(
            bundle=bundle,
            checks=checks,
            retries_used=attempt,
            seed=rng.seed,
            prime=_field_prime(field),
        )
    raise RetryExhausted(
        f"no witness for c1={c.c1}, c2={c.c2}, s={s} within {max_retries} retries "
        f"(failures: {fails})"
    )


@dataclass(frozen=True)
class BoundaryProbeReport:
    c1: int
    c2: int
    s: int
    trials: int
    max_segre: int
    seed: int
    prime: int | None

    def to_json(self) -> dict:
        return {
            "c1": self.c1,
            "c2": self.c2,
            "s": self.s,
            "trials": self.trials,
            "max_segre": self.max_segre,
            "seed": self.seed,
            "prime": self.prime,
        }


def below_boundary_probe(
    c: ChernData,
    s: int,
    trials: int,
    rng: RngState,
    field=None,
) -> BoundaryProbeReport:
    """Check that no cycle of the would-be length reaches invariant s.

    Only meaningful below the existence boundary, where the cycle is too
    short to avoid all curves of the watched degree, so a lower twist always
    carries a section.  Reaching s in any trial raises CounterexampleError:
    it would expose a bug, not new geometry.
    """
    field = field if field is not None else default_field()
    if trials < 1:
        raise InvalidParameterError("probe needs trials >= 1")
    if is_admissible(c, s):
        raise InvalidParameterError(
            f"s={s} is admissible for c1={c.c1}, c2={c.c2}; probe needs a "
            "below-boundary invariant"
        )
    a, b, length, d_watch = _stratum_shape(c, s)
    if length < 0:
        raise InvalidParameterError(
            f"c2={c.c2} is too small to form the cycle (length {length})"
        )
    deficiency = monomial_count(d_watch) - length
    assert deficiency > 0  # what makes the probe a guarantee, not an experiment
    worst = None
    for i in range(trials):
        tr = rng.spawn(i)
        cycle = random_cycle(length, field, tr)
        seg = segre_invariant(ExtensionBundle(a, b, cycle))
        if seg.s >= s:
            raise CounterexampleError(
                f"trial {i} reached invariant {seg.s} >= {s}; offending cycle: "
                f"{cycle.to_json()}"
            )
        worst = seg.s if worst is None else max(worst, seg.s)
    return BoundaryProbeReport(
        c1=c.c1,
        c2=c.c2,
        s=s,
        trials=trials,
        max_segre=worst,
        seed=rng.seed,
        prime=_field_prime(field),
    )


def _random_curve(field: PrimeField, degree: int, rng: RngState) -> PlaneCurve:
    p = field.p
    n = monomial_count(degree)
    while True:
        coeffs = [rng.randrange(p) for _ in range(n)]
        if any(coeffs):
            return PlaneCurve(field, degree, coeffs)


def _sample_distinct(items: list, count: int, rng: RngState) -> list:
    """Partial Fisher-Yates draw of `count` distinct members."""
    pool = list(items)
    for i in range(count):
        j = i + rng.randrange(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:count]


def bn_witness(
    r: int,
    k: int,
    c2: int,
    parity: str,
    rng: RngState,
    max_retries: int = DEFAULT_RETRIES,
    field=None,
) -> WitnessReport:
    """A verified section-rich bundle: W^t is nonempty at the stratum threshold.

    All but one point of the cycle are drawn on a random curve of the
    prescribed low degree and the last point is drawn off it.  The report
    certifies local freeness, stability, and the section count of the twist
    by r against the closed-form threshold.  Needs a prime field: curve
    points are found by enumeration.
    """
    field = field if field is not None else default_field()
    if not isinstance(field, PrimeField):
        raise InvalidParameterError("section-rich witnesses need a prime field")
    threshold = bn_nonempty_t(r, k, parity, c2)  # validates the hypotheses
    even = parity == "even"
    if even:
        a, b = -k, k
        length = c2 + k * k - r * r
        curve_degree = 2 * k - 1
    else:
        a, b = -k, k - 1
        length = c2 + k * k - k - r * r + r
        curve_degree = max(2 * k - 2, 1)  # k = 1 rides a line
    if length < 1:
        raise InvalidParameterError(f"cycle length {length} < 1; raise c2")
    p = field.p
    fails = {"curve_too_small": 0, "stability": 0, "cayley_bacharach": 0, "sections": 0}
    for attempt in range(max_retries):
        tr = rng.spawn(attempt)
        curve = _random_curve(field, curve_degree, tr)
        on_c = points_on_curve(curve)
        if len(on_c) < length - 1:
            fails["curve_too_small"] += 1
            continue
        riders = _sample_distinct(on_c, length - 1, tr)
        apex = None
        for _ in range(200):
            cand = point_from_index(field, tr.randrange(projective_point_count(p)))
            if not curve.contains(cand):
                apex = cand
                break
        if apex is None:
            fails["curve_too_small"] += 1
            continue
        cycle = ZeroCycle(field, riders + [apex])
        bundle = ExtensionBundle(a, b, cycle)
        if not cayley_bacharach(b - a - 3, cycle):
            fails["cayley_bacharach"] += 1
            continue
        if not is_stable(bundle):
            fails["stability"] += 1
            continue
        sections = h0_twist(bundle, r)
        if sections < threshold:
            fails["sections"] += 1
            continue
        checks = {
            "cayley_bacharach": True,
            "stable": True,
            "h0_value": sections,
            "h0_threshold": threshold,
            "twist": r,
        }
        return WitnessReport(
            bundle=bundle,
            checks=checks,
            retries_used=attempt,
            seed=rng.seed,
            prime=p,
        )
    raise RetryExhausted(
        f"no section-rich witness for r={r}, k={k}, c2={c2} ({parity}) within "
        f"{max_retries} retries (failures: {fails})"
    )

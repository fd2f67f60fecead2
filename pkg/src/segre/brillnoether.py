"""Brill-Noether calculators for rank-2 bundles on the plane.

The t-th Brill-Noether locus collects stable bundles with at least t
independent sections.  This module computes its expected-dimension count
rho, the guaranteed section count of each Segre stratum, the section
thresholds at which nonemptiness is certified by an explicit construction,
and closed-form lower bounds for the locus dimension.

Convention note: the dimension lower bound for odd first Chern class has a
dedicated final case which applies exactly when k = 1; see README for the
rationale.  rho may be negative and is never clamped -- nonempty loci with
negative rho are precisely the interesting output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, InvalidParameterError
from .strata import (
    ChernData,
    admissible_invariants,
    moduli_dim,
    normalize_chern,
    open_stratum,
    stratum_dim,
)

PARITIES = ("even", "odd")


def _check_parity(parity: str) -> bool:
    if parity not in PARITIES:
        raise InvalidParameterError(f"parity must be 'even' or 'odd', got {parity!r}")
    return parity == "even"


@dataclass(frozen=True)
class BNReport:
    t: int
    rho: int
    lower_bound: int | None
    nonempty_certified: bool


def rho(c: ChernData, t: int) -> int:
    """The Brill-Noether number at section count t.

    rho = 4*c2 - c1^2 - 3 - t*(t - c1*(c1+3)/2 + c2 - 2); the c1 term is
    always an even product, so the value is an integer.
    """
    if t < 0:
        raise InvalidParameterError("section count t must be >= 0")
    half = (c.c1 * (c.c1 + 3)) // 2
    return moduli_dim(c) - t * (t - half + c.c2 - 2)


def stratum_min_sections(r: int, k: int, parity: str) -> int:
    """Sections guaranteed for every bundle of the (r, k) stratum.

    The sub line bundle has degree r - k, so its full space of sections,
    (r-k+2)(r-k+1)/2 of them, embeds into H^0(E); when r < k it has none
    and the generic stratum member has no sections at all.
    """
    _check_parity(parity)
    if k < 1:
        raise InvalidParameterError("stratum index k must be >= 1")
    if r < k:
        return 0
    q = r - k
    return (q + 2) * (q + 1) // 2


def bn_nonempty_t(r: int, k: int, parity: str, c2: int | None = None) -> int:
    """Section threshold t with a certified nonempty locus W^t.

    Comes from bundles whose cycle rides a low-degree curve: the witness
    generator in `segre.witness` realizes exactly these parameters.  When
    c2 is supplied, the existence gate on c2 is enforced as well.
    """
    even = _check_parity(parity)
    if k < 1:
        raise InvalidParameterError("stratum index k must be >= 1")
    if even:
        if not k < r:
            raise InvalidParameterError(f"k < r fails for r={r}, k={k}")
        if c2 is not None and c2 < r * r + 2:
            raise InvalidParameterError(f"r^2+2 <= c2 fails for r={r}, c2={c2}")
        q = r - k
        return q * q + 4 * q + 3
    if c2 is not None and c2 < r * r - r + 1:
        raise InvalidParameterError(f"r^2-r+1 <= c2 fails for r={r}, c2={c2}")
    if k == 1:
        return r * r + r - 1
    q = r - k
    return q * q + 4 * q + 3


def bn_dim_lower_bound(r: int, k: int, c2: int, parity: str) -> int:
    """Lower bound for dim W^t at the threshold t of the (r, k) stratum.

    Hypotheses are enforced as stated: r >= 2, k < r, and a lower bound on
    c2 that keeps the witness construction inside the stratum count.
    """
    even = _check_parity(parity)
    if k < 1:
        raise InvalidParameterError("stratum index k must be >= 1")
    if r < 2:
        raise InvalidParameterError(f"r >= 2 fails for r={r}")
    if not k < r:
        raise InvalidParameterError(f"k < r fails for r={r}, k={k}")
    if even:
        if not 3 * k * k - 4 * k + r * r + 2 < c2:
            raise InvalidParameterError(
                f"3k^2-4k+r^2+2 < c2 fails for r={r}, k={k}, c2={c2}"
            )
        if c2 > k * k + 3 * k + r * r + 1:
            return 2 * c2 + 2 * k * k - 2 * r * r + 4 * k - 2
        return k * k + 3 * c2 + k - r * r - 3
    if not 3 * k * k - 7 * k + r * r - r + 5 < c2:
        raise InvalidParameterError(
            f"3k^2-7k+r^2-r+5 < c2 fails for r={r}, k={k}, c2={c2}"
        )
    if k == 1:
        return 3 * c2 - 3 * r * r + 3 * r + 1
    if c2 > k * k - 2 * k + r * r - r:
        return 2 * c2 + 2 * k * k - 2 * r * r + 2 * k + 2 * r - 4
    return 3 * c2 + k * k - 3 * r * r + 3 * r - 4


def weak_bn_check(c1: int) -> tuple[int, int]:
    """The chi = 0 second Chern class for c1 > 0 and the open-stratum k there.

    At c2 = 2 + c1*(c1+3)/2 the general stable bundle has no cohomology,
    and the cohomology-free locus is exactly the open stratum, which sits
    at k = r + 1.  Cross-checked against the stratum calculator.
    """
    if c1 <= 0:
        raise InvalidParameterError("weak Brill-Noether check needs c1 > 0")
    c2 = 2 + (c1 * (c1 + 3)) // 2
    r = c1 // 2 if c1 % 2 == 0 else (c1 + 1) // 2
    k = r + 1
    top = open_stratum(ChernData(c1, c2))
    if top.k != k:
        raise ConsistencyError(
            f"open stratum k={top.k} disagrees with expected k={k} at c1={c1}, c2={c2}"
        )
    return c2, k


def certified_section_count(c: ChernData) -> int | None:
    """Largest t for which a witness construction certifies W^t nonempty.

    None when the moduli space itself is empty.  Scans both certificate
    families: the guaranteed sections of each admissible stratum, and the
    points-on-a-curve construction where its hypotheses hold.
    """
    reports = admissible_invariants(c)
    if not reports:
        return None
    even, r, _ = normalize_chern(c)
    parity = "even" if even else "odd"
    best = 0
    for rep in reports:
        best = max(best, stratum_min_sections(r, rep.k, parity))
        try:
            best = max(best, bn_nonempty_t(r, rep.k, parity, c.c2))
        except InvalidParameterError:
            pass
    return best


def rho_crossover_c2(r: int, k: int, parity: str) -> int:
    """Smallest c2 from which rho at the stratum's guaranteed t stays below
    the stratum dimension.

    Requires r > k (so t >= 3): then rho grows in c2 with slope 4 - t < 3
    while the stratum dimension grows with slope 3, and any crossover is
    permanent.  At r = k the two are identically equal on the stable branch
    and no crossover exists.
    """
    even = _check_parity(parity)
    if not r > k >= 1:
        raise InvalidParameterError(
            f"crossover needs r > k >= 1, got r={r}, k={k}"
        )
    t = stratum_min_sections(r, k, parity)
    if even:
        c1 = 2 * r
        start = max(r * r + 2, r * r + k * k + k, r * r + k * k + 3 * k + 2)
        s = 2 * k
    else:
        c1 = 2 * r - 1
        start = max(r * r - r + 1, r * r - r + k * k, r * r - r + k * k + 2 * k + 1)
        s = 2 * k - 1
    c2 = start
    while rho(ChernData(c1, c2), t) >= stratum_dim(ChernData(c1, c2), s):
        c2 += 1
    return c2


def bn_report(c: ChernData, t: int) -> BNReport:
    """rho, certification status, and any dimension lower bound at level t."""
    certified_max = certified_section_count(c)
    certified = certified_max is not None and t <= certified_max
    even, r, _ = normalize_chern(c)
    parity = "even" if even else "odd"
    lower: int | None = None
    for rep in admissible_invariants(c):
        try:
            if bn_nonempty_t(r, rep.k, parity, c.c2) == t:
                bound = bn_dim_lower_bound(r, rep.k, c.c2, parity)
                lower = bound if lower is None else max(lower, bound)
        except InvalidParameterError:
            continue
    return BNReport(t=t, rho=rho(c, t), lower_bound=lower, nonempty_certified=certified)

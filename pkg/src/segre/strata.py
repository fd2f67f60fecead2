"""Closed-form calculators for the Segre-invariant stratification.

Fixing Chern classes (c1, c2), the moduli of stable rank-2 bundles breaks
into locally closed strata by the value s of the Segre invariant.  Twisting
normalizes c1 into {0, -1}: write c1 = 2r (s = 2k) or c1 = 2r - 1
(s = 2k - 1), with k >= 1.  Admissibility and dimensions are polynomial in
(r, k, c2) with one branch boundary each.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError


@dataclass(frozen=True)
class ChernData:
    c1: int
    c2: int


@dataclass(frozen=True)
class StratumReport:
    s: int
    k: int
    dim: int
    is_open: bool


def moduli_dim(c: ChernData) -> int:
    """Dimension of the full moduli space: 4*c2 - c1^2 - 3."""
    return 4 * c.c2 - c.c1 * c.c1 - 3


def normalize_chern(c: ChernData) -> tuple[bool, int, int]:
    """Split c1 by parity: returns (even, r, normalized c2).

    Twisting by -r sends c1 to 0 (even, c1 = 2r) or -1 (odd, c1 = 2r - 1)
    and c2 to c2 - r*c1 + r^2.
    """
    if c.c1 % 2 == 0:
        r = c.c1 // 2
        return True, r, c.c2 - r * r
    r = (c.c1 + 1) // 2
    return False, r, c.c2 - r * r + r


def invariant_k(c1: int, s: int) -> int:
    """Recover k from a stratum invariant, checking parity and positivity."""
    if (c1 - s) % 2 != 0:
        raise InvalidParameterError(f"invariant s={s} has the wrong parity for c1={c1}")
    k = s // 2 if c1 % 2 == 0 else (s + 1) // 2
    if k < 1:
        raise InvalidParameterError(f"invariant s={s} needs k >= 1")
    return k


def is_admissible(c: ChernData, s: int) -> bool:
    """Whether a stable bundle with this Segre invariant exists for (c1, c2)."""
    try:
        k = invariant_k(c.c1, s)
    except InvalidParameterError:
        return False
    even, _, c2n = normalize_chern(c)
    return (k * k + k <= c2n) if even else (k * k <= c2n)


def admissibility_condition(c: ChernData, s: int) -> str:
    """The inequality governing admissibility, for error messages and tables."""
    even, _, _ = normalize_chern(c)
    return "k^2+k+r^2 <= c2" if even else "k^2+r^2-r <= c2"


def max_admissible_k(c: ChernData) -> int | None:
    """The largest admissible k, or None when every stratum is empty."""
    even, _, c2n = normalize_chern(c)
    if even:
        if c2n < 2:
            return None
        k = 1
        while (k + 1) * (k + 1) + (k + 1) <= c2n:
            k += 1
        return k
    if c2n < 1:
        return None
    k = 1
    while (k + 1) * (k + 1) <= c2n:
        k += 1
    return k


def stratum_dim(c: ChernData, s: int) -> int:
    """Dimension of the stratum with Segre invariant s; rejects inadmissible s."""
    k = invariant_k(c.c1, s)
    if not is_admissible(c, s):
        raise InvalidParameterError(
            f"{admissibility_condition(c, s)} fails for c1={c.c1}, c2={c.c2}, s={s}"
        )
    even, r, _ = normalize_chern(c)
    c2 = c.c2
    if even:
        if c2 > r * r + k * k + 3 * k + 1:
            return 3 * c2 - 3 * r * r + k * k + 3 * k - 2
        return 4 * c2 - 4 * r * r - 3
    if c2 > r * r - r + k * k + 2 * k:
        return 3 * c2 + 3 * r - 3 * r * r + k * k + 2 * k - 4
    return 4 * c2 + 4 * r - 4 * r * r - 4


def stratum_dim_branch(c: ChernData, s: int) -> str:
    """Which branch of the dimension formula applies; for audit columns."""
    k = invariant_k(c.c1, s)
    even, r, _ = normalize_chern(c)
    if even:
        boundary = r * r + k * k + 3 * k + 1
        return f"c2 > {boundary}" if c.c2 > boundary else f"c2 <= {boundary}"
    boundary = r * r - r + k * k + 2 * k
    return f"c2 > {boundary}" if c.c2 > boundary else f"c2 <= {boundary}"


def admissible_invariants(c: ChernData) -> list[StratumReport]:
    """Every admissible stratum with its dimension, sorted by invariant.

    Empty when c2 sits below the existence gate (normalized c2 < 2 for even
    c1, < 1 for odd).
    """
    even, _, _ = normalize_chern(c)
    k_top = max_admissible_k(c)
    if k_top is None:
        return []
    reports = []
    for k in range(1, k_top + 1):
        s = 2 * k if even else 2 * k - 1
        reports.append(
            StratumReport(s=s, k=k, dim=stratum_dim(c, s), is_open=(k == k_top))
        )
    return reports


def open_stratum(c: ChernData) -> StratumReport:
    """The stratum of maximal k; open and of full moduli dimension."""
    reports = admissible_invariants(c)
    if not reports:
        raise InvalidParameterError(
            f"no admissible stratum for c1={c.c1}, c2={c.c2}"
        )
    top = reports[-1]
    if top.dim != moduli_dim(c):
        raise AssertionError(
            f"open stratum dimension {top.dim} != moduli dimension {moduli_dim(c)}"
        )
    return top

"""Rank-2 bundles on the plane presented as extensions of twisted ideal sheaves.

A bundle is the datum (a, b, Z) of a sub line bundle degree a, a quotient
line-bundle degree b >= a, and a reduced zero-cycle Z -- the extension

    0 -> O(a) -> E -> O(b) (x) I_Z -> 0.

The extension class is never modeled: on the plane the middle cohomology of
every line bundle vanishes, so twisted section counts -- and with them the
Segre invariant and stability -- depend only on (a, b, Z).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError
from .plane import ZeroCycle, h0_ideal, monomial_count, zero_cycle_from_json


@dataclass(frozen=True)
class ExtensionBundle:
    a: int
    b: int
    cycle: ZeroCycle

    def __post_init__(self):
        if self.a > self.b:
            raise ValueError("extension datum requires sub-degree a <= quotient degree b")

    @property
    def c1(self) -> int:
        return self.a + self.b

    @property
    def c2(self) -> int:
        return self.a * self.b + len(self.cycle)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "cycle": self.cycle.to_json()}


def bundle_from_json(obj: dict) -> ExtensionBundle:
    return ExtensionBundle(int(obj["a"]), int(obj["b"]), zero_cycle_from_json(obj["cycle"]))


def chern(bundle: ExtensionBundle) -> tuple[int, int]:
    """Chern classes (c1, c2) = (a + b, a*b + l(Z))."""
    return bundle.c1, bundle.c2


def h0_twist(bundle: ExtensionBundle, m: int) -> int:
    """Exact global-section count of the twist E(m).

    The twisted extension splits the count: sections of O(a+m) plus
    degree-(b+m) forms through Z.  No correction term appears because the
    connecting map lands in a vanishing cohomology group.
    """
    return monomial_count(bundle.a + m) + h0_ideal(bundle.b + m, bundle.cycle)


def cayley_bacharach(m: int, cycle: ZeroCycle) -> bool:
    """Whether every degree-m curve through all but one point of Z passes
    through the remaining point, for each choice of omitted point.

    Vacuously true for m < 0 and for the empty cycle.
    """
    if m < 0 or len(cycle) == 0:
        return True
    full = h0_ideal(m, cycle)
    return all(h0_ideal(m, cycle.minus(pt)) == full for pt in cycle)


def is_locally_free(bundle: ExtensionBundle) -> bool:
    """Whether some extension with this datum is a vector bundle.

    Criterion: the pair (O(b - a - 3), Z) has the Cayley-Bacharach property;
    b - a - 3 is the twist by the plane's canonical degree -3.
    """
    return cayley_bacharach(bundle.b - bundle.a - 3, bundle.cycle)


@dataclass(frozen=True)
class SegreResult:
    s: int
    witness_m: int
    stable: bool


def segre_invariant(bundle: ExtensionBundle) -> SegreResult:
    """Segre invariant via the smallest twist of E carrying a section.

    A section of E(m) corresponds to a line subbundle of degree >= -m, so
    s = c1 + 2*m at the minimal such m.  Below m = -b both terms of the
    section count vanish; at m = -a the sub line bundle itself provides a
    section, so the scan always terminates.
    """
    l = len(bundle.cycle)
    for m in range(-bundle.b, -bundle.a + 1):
        if bundle.a + m >= 0:
            positive = True
        elif monomial_count(bundle.b + m) > l:
            # corank bound: h0 >= N(b+m) - l > 0 without any elimination
            positive = True
        else:
            positive = h0_ideal(bundle.b + m, bundle.cycle) > 0
        if positive:
            s = bundle.c1 + 2 * m
            return SegreResult(s=s, witness_m=m, stable=s > 0)
    raise ConsistencyError("segre scan failed to terminate")  # unreachable


def is_stable(bundle: ExtensionBundle) -> bool:
    """Stability (slope with respect to the hyperplane class).

    Equivalent to a positive Segre invariant.  For normalized first Chern
    class (0 or -1) the section criterion h0(E) = 0 must agree; disagreement
    would be an implementation bug.
    """
    result = segre_invariant(bundle)
    if bundle.c1 in (0, -1):
        section_free = h0_twist(bundle, 0) == 0
        if section_free != result.stable:
            raise ConsistencyError(
                f"stability criteria disagree for {bundle!r}: "
                f"segre={result.s}, h0(E)={h0_twist(bundle, 0)}"
            )
    return result.stable

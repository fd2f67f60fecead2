"""The projective plane over an exact field.

Points and reduced zero-cycles, monomial bases of degree-d forms, the
point-evaluation (multivariate Vandermonde) matrix, and the two cohomology
counts of a twisted ideal sheaf:

* ``h0_ideal(d, Z)`` -- degree-d forms vanishing on Z, computed as the
  corank of the evaluation matrix;
* ``h1_ideal(d, Z)`` -- recovered from h0 through the Euler characteristic
  of the ideal-sheaf sequence, so it is exact for every d and Z.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidParameterError
from .fields import PrimeField, field_from_json
from .linalg import ExactMatrix, rank_fp_array


def monomial_count(d: int) -> int:
    """Number of degree-d monomials in three variables; 0 for negative d."""
    return (d + 1) * (d + 2) // 2 if d >= 0 else 0


def monomial_basis(d: int) -> list[tuple[int, int, int]]:
    """All exponent triples (i, j, k) with i+j+k = d, in descending lex order."""
    if d < 0:
        return []
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def _chi(d: int) -> int:
    # Euler characteristic of the degree-d line bundle, valid for every integer d.
    return (d + 1) * (d + 2) // 2


class PlanePoint:
    """A projective point with normalized coordinates (first nonzero entry 1)."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        coords = tuple(field.convert(c) for c in coords)
        if len(coords) != 3:
            raise ValueError("a plane point needs exactly 3 coordinates")
        lead = next((c for c in coords if c != field.zero), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        if lead != field.one:
            scale = field.inv(lead)
            coords = tuple(field.mul(scale, c) for c in coords)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("PlanePoint is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlanePoint)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __repr__(self) -> str:
        inside = ":".join(self.field.format(c) for c in self.coords)
        return f"[{inside}]"


class ZeroCycle:
    """A reduced zero-cycle: a finite set of distinct points of one field.

    Points are kept sorted by coordinates, so equal cycles have equal
    representations and matrix rows come out in a reproducible order.
    """

    __slots__ = ("field", "points")

    def __init__(self, field, points=()):
        pts = tuple(points)
        for pt in pts:
            if not isinstance(pt, PlanePoint):
                raise TypeError("zero-cycle members must be PlanePoint instances")
            if pt.field != field:
                raise ValueError("zero-cycle mixes fields")
        ordered = tuple(sorted(pts, key=lambda q: q.coords))
        for prev, cur in zip(ordered, ordered[1:]):
            if prev == cur:
                raise ValueError(f"duplicate point {cur!r} in zero-cycle")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "points", ordered)

    def __setattr__(self, name, value):
        raise AttributeError("ZeroCycle is immutable")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def length(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt) -> bool:
        return pt in self.points

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZeroCycle)
            and self.field == other.field
            and self.points == other.points
        )

    def __hash__(self) -> int:
        return hash((self.field, self.points))

    def __repr__(self) -> str:
        return f"ZeroCycle({self.field!r}, {len(self.points)} points)"

    def minus(self, pt: PlanePoint) -> "ZeroCycle":
        """The cycle with one point removed."""
        if pt not in self.points:
            raise ValueError("point not in cycle")
        return ZeroCycle(self.field, (q for q in self.points if q != pt))

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "points": [[self.field.format(c) for c in pt.coords] for pt in self.points],
        }


def zero_cycle_from_json(obj: dict) -> ZeroCycle:
    field = field_from_json(obj["field"])
    pts = [PlanePoint(field, coords) for coords in obj["points"]]
    return ZeroCycle(field, pts)


def evaluation_matrix(d: int, cycle: ZeroCycle) -> ExactMatrix:
    """The l(Z) x N(d) matrix of degree-d monomials evaluated at the points of Z."""
    if d < 0:
        raise InvalidParameterError("evaluation matrix needs d >= 0")
    if len(cycle) == 0:
        raise InvalidParameterError("evaluation matrix needs a nonempty cycle")
    f = cycle.field
    exps = monomial_basis(d)
    entries = []
    for pt in cycle:
        pows = [[f.pow(c, e) for e in range(d + 1)] for c in pt.coords]
        entries.extend(
            f.mul(f.mul(pows[0][i], pows[1][j]), pows[2][k]) for (i, j, k) in exps
        )
    return ExactMatrix(f, len(cycle), monomial_count(d), tuple(entries))


def _eval_array_fp(d: int, cycle: ZeroCycle, p: int) -> np.ndarray:
    """Evaluation matrix as an int64 array; prime-field fast path."""
    l = len(cycle)
    coords = np.array([pt.coords for pt in cycle], dtype=np.int64)
    pw = np.ones((3, d + 1, l), dtype=np.int64)
    for e in range(1, d + 1):
        pw[:, e] = pw[:, e - 1] * coords.T % p
    exps = np.array(monomial_basis(d), dtype=np.int64)
    cols = pw[0, exps[:, 0]] * pw[1, exps[:, 1]] % p * pw[2, exps[:, 2]] % p
    return np.ascontiguousarray(cols.T)


def h0_ideal(d: int, cycle: ZeroCycle) -> int:
    """Dimension of the degree-d forms vanishing on the cycle."""
    if d < 0:
        return 0
    nd = monomial_count(d)
    if len(cycle) == 0:
        return nd
    if isinstance(cycle.field, PrimeField):
        p = cycle.field.p
        r = rank_fp_array(_eval_array_fp(d, cycle, p), p)
    else:
        r = evaluation_matrix(d, cycle).rank()
    return nd - r


def h1_ideal(d: int, cycle: ZeroCycle) -> int:
    """First cohomology of the degree-d twist of the cycle's ideal sheaf.

    From the restriction sequence, h1 = h0 - chi(d) + l(Z) + h2, and h2
    equals the count of degree-(-d-3) monomials.  Valid for every integer d.
    """
    return h0_ideal(d, cycle) - _chi(d) + len(cycle) + monomial_count(-d - 3)


class PlaneCurve:
    """A degree-d plane curve given by a normalized coefficient vector.

    Coefficients are indexed by ``monomial_basis(degree)``; the first
    nonzero coefficient is scaled to 1.
    """

    __slots__ = ("field", "degree", "coefficients")

    def __init__(self, field, degree: int, coefficients):
        if degree < 1:
            raise ValueError("curve degree must be >= 1")
        coeffs = tuple(field.convert(c) for c in coefficients)
        if len(coeffs) != monomial_count(degree):
            raise ValueError(
                f"degree {degree} needs {monomial_count(degree)} coefficients"
            )
        lead = next((c for c in coeffs if c != field.zero), None)
        if lead is None:
            raise ValueError("zero polynomial does not define a curve")
        if lead != field.one:
            scale = field.inv(lead)
            coeffs = tuple(field.mul(scale, c) for c in coeffs)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("PlaneCurve is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlaneCurve)
            and self.field == other.field
            and self.degree == other.degree
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash((self.field, self.degree, self.coefficients))

    def __repr__(self) -> str:
        return f"PlaneCurve(degree={self.degree}, field={self.field!r})"

    def value_at(self, pt: PlanePoint):
        f = self.field
        if pt.field != f:
            raise ValueError("point and curve live over different fields")
        d = self.degree
        pows = [[f.pow(c, e) for e in range(d + 1)] for c in pt.coords]
        acc = f.zero
        for coef, (i, j, k) in zip(self.coefficients, monomial_basis(d)):
            if coef != f.zero:
                term = f.mul(f.mul(pows[0][i], pows[1][j]), pows[2][k])
                acc = f.add(acc, f.mul(coef, term))
        return acc

    def contains(self, pt: PlanePoint) -> bool:
        return self.value_at(pt) == self.field.zero


def on_curve(curve: PlaneCurve, pt: PlanePoint) -> bool:
    """True when the curve's form vanishes at the point."""
    return curve.contains(pt)


def curve_through(d: int, cycle: ZeroCycle) -> PlaneCurve | None:
    """The unique degree-d curve through the cycle, when exactly one exists."""
    if d < 1:
        raise InvalidParameterError("curve_through needs d >= 1")
    if len(cycle) == 0:
        return None
    kernel = evaluation_matrix(d, cycle).kernel_basis()
    if len(kernel) != 1:
        return None
    return PlaneCurve(cycle.field, d, kernel[0])


def projective_point_count(p: int) -> int:
    """Number of points of the projective plane over F_p."""
    return p * p + p + 1


def point_from_index(field: PrimeField, index: int) -> PlanePoint:
    """The index-th point of P^2(F_p) in the canonical scan order.

    Order: [1:y:z] with y major and z minor, then [0:1:z], then [0:0:1].
    """
    p = field.p
    total = projective_point_count(p)
    if not 0 <= index < total:
        raise IndexError(f"point index {index} out of range for p={p}")
    if index < p * p:
        return PlanePoint(field, (1, index // p, index % p))
    index -= p * p
    if index < p:
        return PlanePoint(field, (0, 1, index))
    return PlanePoint(field, (0, 0, 1))


def points_on_curve(curve: PlaneCurve) -> list[PlanePoint]:
    """All rational points of the curve over its prime field, in scan order.

    Scans the full plane (p^2 + p + 1 points) with blocked vectorized
    evaluation, so it stays usable at the default working prime.
    """
    field = curve.field
    if not isinstance(field, PrimeField):
        raise InvalidParameterError("point enumeration needs a prime field")
    p, d = field.p, curve.degree

    # coefficient grid over the affine chart x=1: C[j, k] = coeff of y^j z^k
    grid = np.zeros((d + 1, d + 1), dtype=np.int64)
    for coef, (_, j, k) in zip(curve.coefficients, monomial_basis(d)):
        grid[j, k] = coef

    vals = np.arange(p, dtype=np.int64)
    pows = np.ones((d + 1, p), dtype=np.int64)
    for e in range(1, d + 1):
        pows[e] = pows[e - 1] * vals % p

    found = []
    block = max(1, min(p, 2_000_000 // p))
    for start in range(0, p, block):
        ys = slice(start, min(start + block, p))
        partial = pows[:, ys].T @ grid % p           # (block, d+1)
        chart = partial @ pows % p                   # (block, p)
        for y_off, z in np.argwhere(chart == 0):
            found.append(PlanePoint(field, (1, start + int(y_off), int(z))))

    # the line x=0: monomials with i=0 are y^j z^k, j+k = d
    line_coeffs = np.array([grid[d - k, k] for k in range(d + 1)], dtype=np.int64)
    line_vals = line_coeffs @ pows % p
    for z in np.nonzero(line_vals == 0)[0]:
        found.append(PlanePoint(field, (0, 1, int(z))))
    if grid[0, d] == 0:
        found.append(PlanePoint(field, (0, 0, 1)))
    return found

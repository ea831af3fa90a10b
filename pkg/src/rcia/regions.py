"""Exact-rational 2-D DoF polytopes and the bound/region constructors.

A region is an intersection of half planes a*d1 + b*d2 <= c with rational
coefficients; nonnegativity d1, d2 >= 0 is always implicit.  All predicates
(membership, subset, equality) evaluate in exact rational arithmetic so that
region comparisons never depend on floating-point tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import UnboundedRegionError, UnsupportedConfigError

Point = Tuple[Fraction, Fraction]


def point(d1, d2) -> Point:
    return (Fraction(d1), Fraction(d2))


@dataclass(frozen=True)
class HalfPlane:
    """Constraint a*d1 + b*d2 <= c."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.a == 0 and self.b == 0:
            raise ValueError("half plane needs a nonzero normal")

    def holds(self, p: Point) -> bool:
        return self.a * p[0] + self.b * p[1] <= self.c

    def tight(self, p: Point) -> bool:
        return self.a * p[0] + self.b * p[1] == self.c

    def __str__(self):
        return f"{self.a}*d1 + {self.b}*d2 <= {self.c}"


@dataclass(frozen=True)
class Region2D:
    constraints: Tuple[HalfPlane, ...]
    name: str = ""
    note: str = ""

    @classmethod
    def of(cls, triples: Iterable[Tuple], name: str = "", note: str = "") -> "Region2D":
        return cls(tuple(HalfPlane(a, b, c) for a, b, c in triples), name=name, note=note)


def _axis_lines():
    # d1 >= 0 and d2 >= 0 written as lines for intersection purposes.
    return [(Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0))]


def contains(region: Region2D, p: Point) -> bool:
    p = (Fraction(p[0]), Fraction(p[1]))
    if p[0] < 0 or p[1] < 0:
        return False
    return all(hp.holds(p) for hp in region.constraints)


def on_boundary(region: Region2D, p: Point) -> bool:
    """Inside the region with at least one region constraint tight."""
    p = (Fraction(p[0]), Fraction(p[1]))
    return contains(region, p) and any(hp.tight(p) for hp in region.constraints)


def is_bounded(region: Region2D) -> bool:
    """No recession direction in the nonnegative quadrant.

    The recession cone of the region is polyhedral; if nontrivial it has an
    extreme ray along an axis or along some constraint line, so checking
    those candidate directions is exhaustive.
    """
    cands = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    for hp in region.constraints:
        for d in ((hp.b, -hp.a), (-hp.b, hp.a)):
            if d[0] >= 0 and d[1] >= 0 and (d[0] > 0 or d[1] > 0):
                cands.append(d)
    for u, v in cands:
        if u < 0 or v < 0 or (u == 0 and v == 0):
            continue
        if all(hp.a * u + hp.b * v <= 0 for hp in region.constraints):
            return False
    return True


def vertices(region: Region2D) -> List[Point]:
    """Exact vertices, counterclockwise, starting at the lexicographic minimum.

    Every vertex is the intersection of two tight constraint lines (axes
    included); conversely a feasible intersection of two distinct lines is
    always an extreme point, so pairwise enumeration plus a feasibility
    filter is exact.
    """
    if not is_bounded(region):
        raise UnboundedRegionError(f"region {region.name or '<unnamed>'} is unbounded")
    lines = [(hp.a, hp.b, hp.c) for hp in region.constraints] + _axis_lines()
    found = set()
    for i in range(len(lines)):
        a1, b1, c1 = lines[i]
        for j in range(i + 1, len(lines)):
            a2, b2, c2 = lines[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = (c1 * b2 - c2 * b1) / det
            y = (a1 * c2 - a2 * c1) / det
            if x >= 0 and y >= 0 and all(hp.holds((x, y)) for hp in region.constraints):
                found.add((x, y))
    pts = sorted(found)
    if len(pts) <= 2:
        return pts
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    pts.sort(key=lambda p: math.atan2(float(p[1] - cy), float(p[0] - cx)))
    start = pts.index(min(pts))
    return pts[start:] + pts[:start]


def is_subset(r1: Region2D, r2: Region2D) -> bool:
    """r1 subseteq r2; exact, using that r2 is convex."""
    return all(contains(r2, v) for v in vertices(r1))


def equals(r1: Region2D, r2: Region2D) -> bool:
    return is_subset(r1, r2) and is_subset(r2, r1)


# ---------------------------------------------------------------------------
# Convex hulls (for time sharing)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[Point]) -> List[Point]:
    """Counterclockwise hull via monotone chain, exact arithmetic."""
    pts = sorted(set((Fraction(x), Fraction(y)) for x, y in points))
    if len(pts) <= 2:
        return pts
    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # all input points collinear
        return [pts[0], pts[-1]]
    return hull


def hull_region(points: Sequence[Point], name: str = "") -> Region2D:
    """Down-closed convex hull of the points as a Region2D.

    The origin and the axis projections of every point are included, so the
    result is the set of pairs dominated by a time-sharing combination.
    """
    if not points:
        raise ValueError("need at least one point")
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    aug = list(pts) + [(x, Fraction(0)) for x, _ in pts] + [(Fraction(0), y) for _, y in pts]
    aug.append((Fraction(0), Fraction(0)))
    hull = convex_hull(aug)
    if len(hull) == 1:
        return Region2D.of([(1, 0, 0), (0, 1, 0)], name=name)
    if len(hull) == 2:
        # With origin and projections included a segment lies on an axis.
        (x0, y0), (x1, y1) = hull
        if y0 == 0 and y1 == 0:
            return Region2D.of([(0, 1, 0), (1, 0, max(x0, x1))], name=name)
        return Region2D.of([(1, 0, 0), (0, 1, max(y0, y1))], name=name)
    cons = []
    for k in range(len(hull)):
        px, py = hull[k]
        qx, qy = hull[(k + 1) % len(hull)]
        ex, ey = qx - px, qy - py
        a, b = ey, -ex  # outward normal of a CCW edge
        if a <= 0 and b <= 0:
            continue  # implied by d1, d2 >= 0
        cons.append((a, b, a * px + b * py))
    return Region2D.of(cons, name=name)


# ---------------------------------------------------------------------------
# Outer bounds


def outer_bc_type_ic(n1: int, n2: int) -> Region2D:
    """Broadcast-type outer bound for the cooperative IC; depends only on the
    receive antenna counts."""
    _positive(n1=n1, n2=n2)
    return Region2D.of(
        [
            (Fraction(1, n1 + n2), Fraction(1, n2), 1),
            (Fraction(1, n1), Fraction(1, n1 + n2), 1),
        ],
        name=f"bc-type outer bound, IC N=({n1},{n2})",
    )


def outer_ic_type_ic(m1: int, m2: int, n1: int, n2: int) -> Region2D:
    """Interference-type outer bound for the cooperative IC."""
    _positive(m1=m1, m2=m2, n1=n1, n2=n2)
    return Region2D.of(
        [
            (
                Fraction(1, min(n1 + n2, m1)),
                Fraction(1, min(n2, m1)),
                Fraction(n2, min(n2, m1)),
            ),
            (
                Fraction(1, min(n1, m2)),
                Fraction(1, min(n1 + n2, m2)),
                Fraction(n1, min(n1, m2)),
            ),
        ],
        name=f"ic-type outer bound, IC ({m1},{m2},{n1},{n2})",
    )


def outer_bc_type_bc(m: int, n1: int, n2: int) -> Region2D:
    """Broadcast-type outer bound for the cooperative BC.

    Emitted in the same two-inequality form as the IC bound: the enhanced
    transmitter has at least n1+n2 antennas for every m, so the inequalities
    do not depend on m.
    """
    _positive(m=m, n1=n1, n2=n2)
    region = outer_bc_type_ic(n1, n2)
    return Region2D(
        region.constraints,
        name=f"bc-type outer bound, BC ({m},{n1},{n2})",
        note="derived form",
    )


def outer_crc_type_bc(m: int, n1: int, n2: int) -> Region2D:
    """Cognitive-channel-type outer bound for the cooperative BC."""
    _positive(m=m, n1=n1, n2=n2)
    return Region2D.of(
        [
            (
                Fraction(1, min(m, n1 + n2)),
                Fraction(1, min(m, n2)),
                Fraction(n2, min(n2, m)),
            ),
            (
                Fraction(1, min(m, n1)),
                Fraction(1, min(m, n1 + n2)),
                Fraction(n1, min(n1, m)),
            ),
        ],
        name=f"crc-type outer bound, BC ({m},{n1},{n2})",
    )


# ---------------------------------------------------------------------------
# Achievable / exact regions


def region_ic_perfect_csit(m1: int, m2: int, n1: int, n2: int) -> Region2D:
    """Two-user IC region under perfect CSIT (equivalently with idealized
    cooperation): single-user caps plus the standard sum bound."""
    _positive(m1=m1, m2=m2, n1=n1, n2=n2)
    return Region2D.of(
        [
            (1, 0, min(m1, n1)),
            (0, 1, min(m2, n2)),
            (1, 1, min(m1 + m2, n1 + n2, max(m1, n2), max(m2, n1))),
        ],
        name=f"perfect-csit IC region ({m1},{m2},{n1},{n2})",
    )


def region_ic_rx_coop_equal_n(m1: int, m2: int, n: int) -> Region2D:
    """Cooperative-receiver IC region for equal receive antenna counts.

    When either transmitter has at most n antennas, cooperation does not
    enlarge the region and the perfect-CSIT region applies; otherwise the
    region is cut by the two min-capped inequalities.
    """
    _positive(m1=m1, m2=m2, n=n)
    if m1 <= n or m2 <= n:
        base = region_ic_perfect_csit(m1, m2, n, n)
        return Region2D(base.constraints, name=f"rx-coop IC region ({m1},{m2},N={n})")
    m1p, m2p = min(m1, 2 * n), min(m2, 2 * n)
    return Region2D.of(
        [
            (Fraction(1, m1p), Fraction(1, n), 1),
            (Fraction(1, n), Fraction(1, m2p), 1),
        ],
        name=f"rx-coop IC region ({m1},{m2},N={n})",
    )


def check_unequal_class(m1: int, m2: int, n1: int, n2: int) -> None:
    """Antenna class of the unequal-receiver result: M1 > N1 > N2 >= 2*M2 and
    M1 + M2 == N1 + N2.  Raises UnsupportedConfigError naming the violation."""
    _positive(m1=m1, m2=m2, n1=n1, n2=n2)
    if not m1 > n1:
        raise UnsupportedConfigError(f"requires M1 > N1, got M1={m1}, N1={n1}")
    if not n1 > n2:
        raise UnsupportedConfigError(f"requires N1 > N2, got N1={n1}, N2={n2}")
    if not 2 * m2 <= n2:
        raise UnsupportedConfigError(f"requires N2/2 >= M2, got N2={n2}, M2={m2}")
    if m1 + m2 != n1 + n2:
        raise UnsupportedConfigError(
            f"requires M1+M2 == N1+N2, got {m1}+{m2} != {n1}+{n2}"
        )


def region_ic_rx_coop_unequal(m1: int, m2: int, n1: int, n2: int) -> Region2D:
    """Cooperative-receiver IC region for the supported unequal-receiver class."""
    check_unequal_class(m1, m2, n1, n2)
    return Region2D.of(
        [(0, 1, m2), (1, 1, n1)],
        name=f"rx-coop IC region ({m1},{m2},{n1},{n2})",
    )


def region_bc_rx_coop_equal_n(m: int, n: int) -> Region2D:
    """Cooperative-receiver BC region for equal receive antenna counts."""
    _positive(m=m, n=n)
    rhs = Fraction(n, min(m, n))
    return Region2D.of(
        [
            (Fraction(1, min(m, 2 * n)), Fraction(1, min(m, n)), rhs),
            (Fraction(1, min(m, n)), Fraction(1, min(m, 2 * n)), rhs),
        ],
        name=f"rx-coop BC region ({m},N={n})",
    )


def corner_equal_n(m1: int, m2: int, n: int) -> Point:
    """Intersection corner of the two equal-N region boundary lines.

    With mi' = min(mi, 2n) the exact corner is
      d1 = n*m1'*(m2'-n) / (m1'*m2' - n^2),
      d2 = n*m2'*(m1'-n) / (m1'*m2' - n^2),
    which is asymmetric whenever m1' != m2'.
    """
    _positive(m1=m1, m2=m2, n=n)
    if m1 <= n or m2 <= n:
        raise UnsupportedConfigError(f"corner needs M1, M2 > N, got ({m1},{m2},{n})")
    m1p, m2p = min(m1, 2 * n), min(m2, 2 * n)
    den = m1p * m2p - n * n
    return (Fraction(n * m1p * (m2p - n), den), Fraction(n * m2p * (m1p - n), den))


def _positive(**counts):
    for name, value in counts.items():
        if value < 1:
            raise UnsupportedConfigError(f"{name} must be >= 1, got {value}")


# ---------------------------------------------------------------------------
# Serialization


def region_text(region: Region2D) -> str:
    lines = [f"region: {region.name or '<unnamed>'}"]
    if region.note:
        lines.append(f"note: {region.note}")
    lines.append("constraints (plus d1 >= 0, d2 >= 0):")
    for hp in region.constraints:
        lines.append(f"  {hp}")
    lines.append("vertices (counterclockwise):")
    for x, y in vertices(region):
        lines.append(f"  ({x}, {y})")
    return "\n".join(lines)


def constraint_csv_rows(region: Region2D, label: str = None):
    label = label if label is not None else region.name
    rows = [("region", "constraint_index", "a_num", "a_den", "b_num", "b_den", "c_num", "c_den")]
    for i, hp in enumerate(region.constraints):
        rows.append(
            (
                label,
                i,
                hp.a.numerator,
                hp.a.denominator,
                hp.b.numerator,
                hp.b.denominator,
                hp.c.numerator,
                hp.c.denominator,
            )
        )
    return rows


def vertex_csv_rows(region: Region2D, label: str = None):
    label = label if label is not None else region.name
    rows = [("region", "vertex_index", "d1_num", "d1_den", "d2_num", "d2_den")]
    for i, (x, y) in enumerate(vertices(region)):
        rows.append((label, i, x.numerator, x.denominator, y.numerator, y.denominator))
    return rows

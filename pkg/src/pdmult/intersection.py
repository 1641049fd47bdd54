"""Rational intersection points, the standing hypotheses on curve pairs, and
the Bezout count with arithmetical multiplicities."""

from dataclasses import dataclass
from functools import lru_cache

from pdmult import univariate as up
from pdmult.errors import (
    CommonComponent,
    InfinityIntersection,
    MalformedInput,
    NotAnIntersectionPoint,
    ZeroPolynomial,
)
from pdmult.multiplicity import MultiplicitySpace, OperatorSystem, multiplicity_space
from pdmult.poly import Point, form_gcd, poly_gcd, resultant_y, specialize, swap_xy


def _nonzero(p, q):
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("curves must be nonzero polynomials")


def no_common_component(p, q):
    _nonzero(p, q)
    return poly_gcd(p, q).degree == 0


def no_infinity_intersection(p, q):
    _nonzero(p, q)
    return form_gcd(p.leading_form(), q.leading_form()).degree == 0


def no_common_tangent(p, q, point):
    """Lowest forms of p and q at the point share no linear factor."""
    point = Point.of(*point)
    if p.at(point) != 0 or q.at(point) != 0:
        raise NotAnIntersectionPoint(f"{tuple(point)} is not on both curves")
    lp = p.shift(point).lowest_form()
    lq = q.shift(point).lowest_form()
    return form_gcd(lp, lq).degree == 0


def _points_by_elimination(p, q):
    xs = up.rational_roots(resultant_y(p, q))
    found = []
    for x0 in xs:
        a = specialize(p, 0, x0)
        b = specialize(q, 0, x0)
        if not a and not b:
            # shared vertical line; excluded by the common-component check
            raise CommonComponent(f"both curves contain x = {x0}")
        g = up.ugcd(a, b)
        for y0 in up.rational_roots(g):
            found.append(Point(x0, y0))
    return found


def rational_points(p, q):
    """All rational common zeros of p and q, lexicographically sorted."""
    if not no_common_component(p, q):
        raise CommonComponent(f"common factor {poly_gcd(p, q)}")
    if not resultant_y(p, q):
        raise CommonComponent("resultant vanishes identically")
    pts = set(_points_by_elimination(p, q))
    # symmetric pass eliminating x
    pts.update(Point(pt.y, pt.x) for pt in _points_by_elimination(swap_xy(p), swap_xy(q)))
    for pt in pts:
        assert p.at(pt) == 0 and q.at(pt) == 0
    return sorted(pts)


@dataclass(frozen=True)
class IntersectionRecord:
    point: Point
    multiplicity: int
    space: MultiplicitySpace

    def to_json(self):
        return {
            "point": self.point.to_json(),
            "multiplicity": self.multiplicity,
            "space": self.space.to_json(),
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(
                Point.from_json(data["point"]),
                int(data["multiplicity"]),
                MultiplicitySpace.from_json(data["space"]),
            )
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad intersection record: {exc}") from None


@dataclass(frozen=True)
class BezoutReport:
    records: tuple
    expected: int

    @property
    def total(self):
        return sum(r.multiplicity for r in self.records)

    @property
    def complete(self):
        return self.total == self.expected

    def to_json(self):
        return {
            "expected": self.expected,
            "total": self.total,
            "complete": self.complete,
            "points": [r.to_json() for r in self.records],
        }

    @classmethod
    def from_json(cls, data):
        try:
            report = cls(tuple(IntersectionRecord.from_json(r) for r in data["points"]), int(data["expected"]))
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad Bezout report: {exc}") from None
        if data.get("total", report.total) != report.total:
            raise MalformedInput("total does not match the records")
        return report


@lru_cache(maxsize=128)
def _records(p, q):
    out = []
    for pt in rational_points(p, q):
        space = multiplicity_space(p, q, pt, check=False)
        out.append(IntersectionRecord(pt, space.dimension, space))
    return tuple(out)


def rational_intersections(p, q):
    """Rational intersection points and whether they carry all finite mass.

    ``exhaustive`` can only be certified when there is no intersection at
    infinity (then the full mass is deg p * deg q); otherwise it is False.
    """
    records = _records(p, q)
    points = [r.point for r in records]
    exhaustive = no_infinity_intersection(p, q) and sum(r.multiplicity for r in records) == p.degree * q.degree
    return points, exhaustive


def _require_hypotheses(p, q):
    if not no_common_component(p, q):
        raise CommonComponent(f"common factor {poly_gcd(p, q)}")
    if not no_infinity_intersection(p, q):
        raise InfinityIntersection(
            f"leading forms share {form_gcd(p.leading_form(), q.leading_form())}"
        )


def bezout_check(p, q):
    _require_hypotheses(p, q)
    return BezoutReport(_records(p, q), p.degree * q.degree)


def operator_system(p, q):
    """Multiplicity spaces at every rational intersection point, points in lex order."""
    return OperatorSystem(tuple(r.space for r in _records(p, q)))

"""Poisedness of finite sets of PD functionals on Pi_n and the
Cayley-Bacharach rank analysis of intersection operator systems."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from pdmult.errors import CardinalityMismatch, MalformedInput, PreconditionFailed
from pdmult.intersection import (
    bezout_check,
    no_common_component,
    no_common_tangent,
    no_infinity_intersection,
)
from pdmult.linalg import RationalMatrix, rank, solve
from pdmult.multiplicity import PDFunctional, graded_basis
from pdmult.poly import BivarPoly, Point, apply_pd, dim_pi, monomials


class FunctionalSet:
    """Ordered, nonempty collection of PD functionals; indices are identities."""

    def __init__(self, functionals):
        self.functionals = tuple(functionals)
        if not self.functionals:
            raise ValueError("a functional set must be nonempty")

    def __len__(self):
        return len(self.functionals)

    def __iter__(self):
        return iter(self.functionals)

    def __getitem__(self, i):
        return self.functionals[i]

    def __eq__(self, other):
        return isinstance(other, FunctionalSet) and self.functionals == other.functionals

    def __hash__(self):
        return hash(self.functionals)

    def without(self, index):
        return FunctionalSet(L for i, L in enumerate(self.functionals) if i != index)

    @classmethod
    def points(cls, pts):
        one = BivarPoly.const(1)
        return cls(PDFunctional(one, Point.of(*pt)) for pt in pts)

    @classmethod
    def from_system(cls, system):
        return cls(system.functionals())

    def to_json(self):
        return [L.to_json() for L in self.functionals]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not data:
            raise MalformedInput("functional set must be a nonempty list")
        return cls(PDFunctional.from_json(d) for d in data)


def evaluation_matrix(S, n):
    """Rows: functionals; columns: monomials of Pi_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    basis = [BivarPoly.monomial(i, j) for i, j in monomials(n)]
    return RationalMatrix.from_rows(
        [[apply_pd(L.symbol, m, L.point) for m in basis] for L in S], len(basis)
    )


def _rank_on(S, n):
    if n < 0 or len(S) == 0:
        return 0
    return rank(evaluation_matrix(S, n))


def is_n_independent(S, n):
    return _rank_on(S, n) == len(S)


def is_n_correct(S, n):
    return len(S) == dim_pi(n) and _rank_on(S, n) == dim_pi(n)


def fundamental_polynomial(index, S, n):
    """``p`` in Pi_n with ``L_i p = delta(i, index)``, or None if none exists."""
    if not 0 <= index < len(S):
        raise IndexError(f"functional index {index} out of range")
    if n < 0:
        return None
    rhs = [Fraction(int(i == index)) for i in range(len(S))]
    sol = solve(evaluation_matrix(S, n), rhs)
    if sol is None:
        return None
    return BivarPoly.from_vector(sol, n)


@dataclass(frozen=True)
class PointCB:
    point: Point
    top_degree: int
    top_count: int
    tangent_free: bool
    top_operator: Optional[PDFunctional]
    rank_minus: Optional[int]
    implication_holds: Optional[bool]

    @property
    def unique_top(self):
        return self.top_count == 1

    def to_json(self):
        return {
            "point": self.point.to_json(),
            "top_degree": self.top_degree,
            "top_count": self.top_count,
            "tangent_free": self.tangent_free,
            "unique_top": self.unique_top,
            "top_operator": None if self.top_operator is None else self.top_operator.to_json(),
            "rank_minus": self.rank_minus,
            "implication_holds": self.implication_holds,
        }

    @classmethod
    def from_json(cls, data):
        top = data["top_operator"]
        return cls(
            Point.from_json(data["point"]),
            int(data["top_degree"]),
            int(data["top_count"]),
            bool(data["tangent_free"]),
            None if top is None else PDFunctional.from_json(top),
            data["rank_minus"],
            data["implication_holds"],
        )


@dataclass(frozen=True)
class CBReport:
    """Per-point top-degree structure plus the global rank count on Pi_(m+n-3).

    ``implication_holds`` is the conjunction over tangent-free points: each
    must have a unique top operator whose removal leaves the rank unchanged.
    """

    points: tuple
    degree: int
    expected_rank: int
    rank_full: int
    degenerate: bool

    @property
    def implication_holds(self):
        if self.degenerate:
            return True
        return all(pc.unique_top and pc.implication_holds for pc in self.points if pc.tangent_free)

    def to_json(self):
        return {
            "degree": self.degree,
            "expected_rank": self.expected_rank,
            "rank_full": self.rank_full,
            "degenerate": self.degenerate,
            "implication_holds": self.implication_holds,
            "points": [pc.to_json() for pc in self.points],
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(
                tuple(PointCB.from_json(d) for d in data["points"]),
                int(data["degree"]),
                int(data["expected_rank"]),
                int(data["rank_full"]),
                bool(data["degenerate"]),
            )
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad CB report: {exc}") from None


def cayley_bacharach_analyze(p, q):
    """Top-degree operators and the rank test on Pi_(m+n-3).

    Removing a row leaves the rank unchanged exactly when every polynomial
    of degree m+n-3 annihilated by the other functionals is annihilated by
    the removed one as well.
    """
    if not no_common_component(p, q):
        raise PreconditionFailed("no_common_component")
    if not no_infinity_intersection(p, q):
        raise PreconditionFailed("no_infinity_intersection")
    report = bezout_check(p, q)
    if not report.complete:
        raise PreconditionFailed("bezout_complete")
    m, n = p.degree, q.degree
    deg = m + n - 3
    degenerate = deg < 0
    S = []
    offsets = []
    for rec in report.records:
        offsets.append(len(S))
        S.extend(rec.space.functionals())
    S = FunctionalSet(S)
    E = evaluation_matrix(S, deg) if not degenerate else None
    rank_full = rank(E) if E is not None else 0
    entries = []
    for rec, off in zip(report.records, offsets):
        levels = graded_basis(rec.space)
        top_degree, top = levels[0]
        tangent_free = no_common_tangent(p, q, rec.point)
        top_op = rank_minus = holds = None
        if len(top) == 1:
            # graded order puts the top operator first within its point
            top_op = S[off]
            if E is not None:
                rank_minus = rank(E.without_row(off))
                holds = rank_minus == rank_full
            else:
                rank_minus, holds = 0, True
        entries.append(PointCB(rec.point, top_degree, len(top), tangent_free, top_op, rank_minus, holds))
    return CBReport(tuple(entries), deg, m * n - 1, rank_full, degenerate)


def classic_cb_check(points, m, n):
    """Every (mn-1)-subset of the point evaluations is (m+n-3)-independent."""
    points = [Point.of(*pt) for pt in points]
    if len(points) != m * n:
        raise CardinalityMismatch(f"expected {m * n} points, got {len(points)}")
    deg = m + n - 3
    for subset in combinations(points, len(points) - 1):
        if not subset:
            continue
        if deg < 0 or not is_n_independent(FunctionalSet.points(subset), deg):
            return False
    return True

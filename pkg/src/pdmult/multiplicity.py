"""PD multiplicity spaces of intersection points.

A symbol ``h`` belongs to ``M_lam(p)`` when every derivative ``D^a h``,
read as a constant-coefficient differential operator, annihilates ``p`` at
``lam``.  ``M_lam(p, q)`` is the intersection of the two spaces and its
dimension is the arithmetical multiplicity of ``lam``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from pdmult.errors import CommonComponent, MalformedInput, NotAnIntersectionPoint
from pdmult.linalg import RationalMatrix, kernel_basis, solve
from pdmult.poly import BivarPoly, Point, apply_pd, monomials, poly_gcd


@dataclass(frozen=True)
class PDFunctional:
    """The functional ``f -> symbol(D) f (point)``."""

    symbol: BivarPoly
    point: Point

    def __post_init__(self):
        if self.symbol.is_zero():
            raise ValueError("a PD functional needs a nonzero symbol")

    @property
    def degree(self):
        return self.symbol.degree

    def __call__(self, f):
        return apply_pd(self.symbol, f, self.point)

    def to_json(self):
        return {"symbol": self.symbol.to_json(), "point": self.point.to_json()}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "symbol" not in data or "point" not in data:
            raise MalformedInput('functional must be {"symbol": poly, "point": [x, y]}')
        try:
            return cls(BivarPoly.from_json(data["symbol"]), Point.from_json(data["point"]))
        except ValueError as exc:
            raise MalformedInput(str(exc)) from None


@dataclass(frozen=True)
class MultiplicitySpace:
    """A point with a basis of ``M_lam(p, q)``, basis sorted by ascending degree."""

    point: Point
    basis: tuple

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def max_degree(self):
        return max(h.degree for h in self.basis) if self.basis else None

    def levels(self):
        """Ascending list of ``(degree, symbols)``."""
        out = []
        for h in self.basis:
            d = h.degree
            if out and out[-1][0] == d:
                out[-1][1].append(h)
            else:
                out.append((d, [h]))
        return out

    def functionals(self):
        """Functionals in graded order: highest degree first."""
        return [PDFunctional(h, self.point) for _, hs in graded_basis(self) for h in hs]

    def to_json(self):
        return {
            "point": self.point.to_json(),
            "dimension": self.dimension,
            "basis": [
                {"degree": d, "symbols": [h.to_json() for h in hs]} for d, hs in self.levels()
            ],
        }

    @classmethod
    def from_json(cls, data):
        try:
            point = Point.from_json(data["point"])
            basis = []
            for level in data["basis"]:
                basis.extend(BivarPoly.from_json(h) for h in level["symbols"])
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad multiplicity space: {exc}") from None
        space = cls(point, tuple(basis))
        if data.get("dimension", space.dimension) != space.dimension:
            raise MalformedInput("dimension does not match the basis")
        return space


@dataclass(frozen=True)
class OperatorSystem:
    """The union of the graded bases over all intersection points."""

    spaces: tuple

    def __post_init__(self):
        pts = [s.point for s in self.spaces]
        if len(set(pts)) != len(pts):
            raise ValueError("points of an operator system must be distinct")

    @property
    def total_dimension(self):
        return sum(s.dimension for s in self.spaces)

    def functionals(self):
        return [L for s in self.spaces for L in s.functionals()]


def condition_matrix(p, point, d):
    """Conditions ``D^a h(D) p (point) = 0`` on ``h`` in Pi_d.

    With ``p`` expanded around the point as ``sum c_st (x-x0)^s (y-y0)^t``,
    the entry for row ``a`` and monomial column ``x^i y^j`` is
    ``i! j! c_{(i,j) - a}``.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    cols = monomials(d)
    local = p.shift(point)
    rows = []
    for a1, a2 in monomials(d):
        row = []
        for i, j in cols:
            if i < a1 or j < a2:
                row.append(Fraction(0))
            else:
                row.append(factorial(i) * factorial(j) * local.coeff(i - a1, j - a2))
        rows.append(row)
    return RationalMatrix.from_rows(rows, len(cols))


def _kernel_polys(p, q, point, d):
    M = condition_matrix(p, point, d).vstack(condition_matrix(q, point, d))
    return [BivarPoly.from_vector(v, d) for v in kernel_basis(M)]


def _degree_cap(p, q):
    return max(p.degree * q.degree - 1, 0)


def _check_pair(p, q, point):
    if p.is_zero() or q.is_zero():
        raise CommonComponent("a zero polynomial shares every component")
    if p.at(point) != 0 or q.at(point) != 0:
        raise NotAnIntersectionPoint(f"{tuple(point)} is not on both curves")
    if poly_gcd(p, q).degree > 0:
        raise CommonComponent(f"common factor {poly_gcd(p, q)}")


def multiplicity_space(p, q, point, check=True):
    """Basis of ``M_point(p, q)``, computed degree by degree.

    Stops at the first degree that adds nothing of that exact degree; a
    D-invariant space has contiguous degree support, so nothing further can
    appear.  Never goes beyond degree ``deg p * deg q - 1``.
    """
    point = Point(Fraction(point[0]), Fraction(point[1]))
    if check:
        _check_pair(p, q, point)
    cap = _degree_cap(p, q)
    basis = []
    for d in range(cap + 1):
        kernel = _kernel_polys(p, q, point, d)
        if len(kernel) == len(basis):
            break
        basis = kernel
    if not basis:
        raise NotAnIntersectionPoint(f"{tuple(point)} is not on both curves")
    # the RREF kernel in graded column order is itself graded
    basis.sort(key=lambda h: h.degree)
    return MultiplicitySpace(point, tuple(basis))


def arithmetical_multiplicity(p, q, point):
    return multiplicity_space(p, q, point).dimension


def _span_columns(symbols):
    n = max((h.degree for h in symbols), default=0)
    n = max(n, 0)
    return RationalMatrix.from_columns([h.to_vector(n) for h in symbols], len(monomials(n))), n


def in_span(f, symbols):
    if f.is_zero():
        return True
    if not symbols:
        return False
    M, n = _span_columns(symbols)
    if f.degree > n:
        return False
    return solve(M, f.to_vector(n)) is not None


def graded_basis(space):
    """Levels ``(degree, symbols)`` from the top degree down to 0.

    Each level completes the lower ones to an independent set, so its
    symbols have independent top-degree parts.
    """
    symbols = space.basis if isinstance(space, MultiplicitySpace) else tuple(space)
    levels = []
    chosen = []
    for d in range(max((h.degree for h in symbols), default=-1) + 1):
        level = []
        for h in symbols:
            if h.degree != d:
                continue
            if not in_span(h, chosen + level):
                level.append(h)
        chosen.extend(level)
        levels.append((d, level))
    return [(d, hs) for d, hs in reversed(levels) if hs]


def check_d_invariance(space):
    """True iff both partials of every basis symbol stay in the span."""
    symbols = list(space.basis if isinstance(space, MultiplicitySpace) else space)
    for h in symbols:
        for dh in (h.diff(1, 0), h.diff(0, 1)):
            if not in_span(dh, symbols):
                return False
    return True

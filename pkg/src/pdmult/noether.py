"""Degree-bounded membership ``f = A p + B q`` with explicit certificates, and
the dimension count of ``{A p + B q : A in Pi_(k-m), B in Pi_(k-n)}``."""

from dataclasses import dataclass
from typing import Optional

from pdmult.errors import CommonComponent, MalformedInput
from pdmult.intersection import _require_hypotheses, no_common_component, operator_system
from pdmult.linalg import RationalMatrix, rank, solve
from pdmult.poly import ZERO, BivarPoly, Point, apply_pd, dim_pi, monomials


@dataclass(frozen=True)
class DecompositionCertificate:
    A: BivarPoly
    B: BivarPoly
    k: int

    def residual(self, f, p, q):
        return f - (self.A * p + self.B * q)

    def verify(self, f, p, q):
        m, n = p.degree, q.degree
        return (
            self.residual(f, p, q).is_zero()
            and self.A.degree <= self.k - m
            and self.B.degree <= self.k - n
        )

    def to_json(self):
        return {"k": self.k, "A": self.A.to_json(), "B": self.B.to_json()}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(BivarPoly.from_json(data["A"]), BivarPoly.from_json(data["B"]), int(data["k"]))
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad certificate: {exc}") from None


@dataclass(frozen=True)
class NotInIdeal:
    """Negative membership verdict.  ``witness`` is a ``(point, symbol)`` pair
    with ``symbol(D) f (point) != 0`` when one is available at a rational point."""

    witness: Optional[tuple] = None

    def to_json(self):
        w = None
        if self.witness is not None:
            point, symbol = self.witness
            w = {"point": point.to_json(), "symbol": symbol.to_json()}
        return {"member": False, "witness": w}

    @classmethod
    def from_json(cls, data):
        if data.get("member") is not False:
            raise MalformedInput("not a NotInIdeal payload")
        w = data.get("witness")
        if w is None:
            return cls(None)
        return cls((Point.from_json(w["point"]), BivarPoly.from_json(w["symbol"])))


@dataclass(frozen=True)
class VanishingReport:
    failures: tuple

    @property
    def holds(self):
        return not self.failures

    def to_json(self):
        return {
            "holds": self.holds,
            "failures": [{"point": pt.to_json(), "symbol": h.to_json()} for pt, h in self.failures],
        }


def vanishes_on(f, system):
    """Check ``h(D) f (lam) = 0`` for every basis symbol at every point."""
    failures = []
    for space in system.spaces:
        for h in space.basis:
            if apply_pd(h, f, space.point) != 0:
                failures.append((space.point, h))
    return VanishingReport(tuple(failures))


def _multiples(g, bound, k):
    """Coefficient vectors in Pi_k of x^a y^b g for a + b <= bound."""
    return [(BivarPoly.monomial(a, b) * g).to_vector(k) for a, b in monomials(bound)]


def noether_decompose(f, p, q, k=None):
    """Certificate ``(A, B)`` with ``f = A p + B q``, ``A`` in Pi_(k-m), ``B`` in Pi_(k-n).

    ``k`` defaults to ``deg f``.  Returns :class:`NotInIdeal` when the linear
    system is inconsistent.
    """
    _require_hypotheses(p, q)
    m, n = p.degree, q.degree
    if k is None:
        k = 0 if f.is_zero() else f.degree
    if f.degree > k:
        raise ValueError(f"deg f = {f.degree} exceeds k = {k}")
    if f.is_zero():
        return DecompositionCertificate(ZERO, ZERO, k)
    if k < m and k < n:
        return NotInIdeal(_witness(f, p, q))
    cols = _multiples(p, k - m, k) + _multiples(q, k - n, k)
    M = RationalMatrix.from_columns(cols, dim_pi(k))
    sol = solve(M, f.to_vector(k))
    if sol is None:
        return NotInIdeal(_witness(f, p, q))
    na = dim_pi(k - m)
    A = BivarPoly.from_vector(sol[:na], k - m) if na else ZERO
    B = BivarPoly.from_vector(sol[na:], k - n) if dim_pi(k - n) else ZERO
    cert = DecompositionCertificate(A, B, k)
    assert cert.residual(f, p, q).is_zero()
    return cert


def _witness(f, p, q):
    failures = vanishes_on(f, operator_system(p, q)).failures
    return failures[0] if failures else None


def dim_w_formula(k, m, n):
    return dim_pi(k - m) + dim_pi(k - n) - dim_pi(k - m - n)


@dataclass(frozen=True)
class DimWCheck:
    k: int
    formula: int
    actual: int

    @property
    def match(self):
        return self.formula == self.actual

    def to_json(self):
        return {"k": self.k, "formula": self.formula, "actual": self.actual, "match": self.match}


def verify_dim_w(p, q, k):
    """Compare the rank of ``{x^a y^b p} + {x^a y^b q}`` in Pi_k with the formula.

    Requires only that p and q have no common component.
    """
    if not no_common_component(p, q):
        raise CommonComponent("p and q share a component")
    m, n = p.degree, q.degree
    cols = _multiples(p, k - m, k) + _multiples(q, k - n, k)
    actual = rank(RationalMatrix.from_columns(cols, dim_pi(k))) if cols else 0
    return DimWCheck(k, dim_w_formula(k, m, n), actual)

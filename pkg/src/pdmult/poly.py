"""Sparse bivariate polynomials with exact rational coefficients.

Also houses the scalar-level operations built on them: homogeneous parts,
PD functionals ``h(D) f (lam)``, the Leibniz expansion of ``R(D)[g f]``,
exact division by a line, homogenization and gcds of forms and of
bivariate polynomials.
"""

import re
from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple

from pdmult import univariate as up
from pdmult.errors import (
    DegenerateLine,
    MalformedInput,
    NotHomogeneous,
    ZeroPolynomial,
)

#: Degree of the zero polynomial.
NEG_INF = float("-inf")

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text):
    if isinstance(text, bool):
        raise MalformedInput(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise MalformedInput(f"not a rational literal: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise MalformedInput(f"zero denominator in {text!r}") from None


def format_rational(c):
    return str(Fraction(c))


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y):
        return cls(Fraction(x), Fraction(y))

    @classmethod
    def parse(cls, text):
        """Parse the command-line form ``"a/b,c/d"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise MalformedInput(f"point must be 'x,y': {text!r}")
        return cls(parse_rational(parts[0]), parse_rational(parts[1]))

    def to_json(self):
        return [format_rational(self.x), format_rational(self.y)]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise MalformedInput(f"point must be a pair: {data!r}")
        return cls(parse_rational(data[0]), parse_rational(data[1]))


ORIGIN = Point.of(0, 0)


def dim_pi(n):
    """Dimension of the space of bivariate polynomials of degree <= n."""
    if n < 0:
        return 0
    return (n + 2) * (n + 1) // 2


def monomials(n):
    """Exponents of the monomial basis of Pi_n: degree ascending, x-power descending."""
    return [(t - j, j) for t in range(n + 1) for j in range(t + 1)]


def _grlex_key(e):
    return (-(e[0] + e[1]), -e[0])


class BivarPoly:
    """Immutable sparse polynomial in x, y over Q.

    ``terms`` maps exponent pairs ``(i, j)`` to nonzero Fractions.  Iteration
    and serialization use graded-lex order, leading term first.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for (i, j), c in items:
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent {(i, j)}")
                c = Fraction(c)
                key = (int(i), int(j))
                clean[key] = clean.get(key, 0) + c
        self._terms = {e: clean[e] for e in sorted(clean, key=_grlex_key) if clean[e] != 0}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_vector(cls, vec, n):
        """Inverse of :meth:`to_vector` on the monomial basis of Pi_n."""
        return cls(dict(zip(monomials(n), vec)))

    # inspection
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, i, j):
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self):
        return not self._terms

    @property
    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(i + j for i, j in self._terms)

    def degree_in(self, var):
        """Degree in a single variable (0 for x, 1 for y); -inf for zero."""
        if not self._terms:
            return NEG_INF
        return max(e[var] for e in self._terms)

    def is_homogeneous(self):
        return len({i + j for i, j in self._terms}) <= 1

    def to_vector(self, n):
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds {n}")
        return [self.coeff(i, j) for i, j in monomials(n)]

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivarPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = BivarPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, x, y):
        # Horner-free but exact; polynomials here are small
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * Fraction(x) ** i * Fraction(y) ** j
        return total

    def at(self, point):
        return self(point.x, point.y)

    def diff(self, i=1, j=0):
        """Partial derivative d^i/dx^i d^j/dy^j."""
        out = {}
        for (a, b), c in self._terms.items():
            if a >= i and b >= j:
                fac = (factorial(a) // factorial(a - i)) * (factorial(b) // factorial(b - j))
                out[(a - i, b - j)] = c * fac
        return BivarPoly(out)

    def shift(self, point):
        """The polynomial ``f(x + point.x, y + point.y)``."""
        a, b = Fraction(point[0]), Fraction(point[1])
        if a == 0 and b == 0:
            return self
        out = {}
        for (i, j), c in self._terms.items():
            for s in range(i + 1):
                cs = c * comb(i, s) * a ** (i - s)
                if cs == 0:
                    continue
                for t in range(j + 1):
                    ct = cs * comb(j, t) * b ** (j - t)
                    if ct:
                        out[(s, t)] = out.get((s, t), 0) + ct
        return BivarPoly(out)

    def leading_form(self):
        if self.is_zero():
            return self
        return homogeneous_part(self, self.degree)

    def lowest_form(self):
        if self.is_zero():
            return self
        return homogeneous_part(self, min(i + j for i, j in self._terms))

    # output
    def to_json(self):
        return {"terms": [[i, j, format_rational(c)] for (i, j), c in self._terms.items()]}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or not isinstance(data.get("terms"), list):
            raise MalformedInput('polynomial must be {"terms": [[i, j, "c"], ...]}')
        out = {}
        for term in data["terms"]:
            if not isinstance(term, (list, tuple)) or len(term) != 3:
                raise MalformedInput(f"bad term {term!r}")
            i, j, c = term
            if not all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in (i, j)):
                raise MalformedInput(f"bad exponents in {term!r}")
            out[(i, j)] = out.get((i, j), 0) + parse_rational(c)
        return cls(out)

    def pretty(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self._terms.items():
            mono = "*".join(
                s for s in (_var("x", i), _var("y", j)) if s
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"BivarPoly({self.pretty()!r})"


def _var(name, k):
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


def _coerce(v):
    if isinstance(v, BivarPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return BivarPoly.const(v)
    return NotImplemented


X = BivarPoly.x()
Y = BivarPoly.y()
ONE = BivarPoly.const(1)
ZERO = BivarPoly()


def homogeneous_part(p, k):
    """Sum of the terms of ``p`` of total degree exactly ``k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return BivarPoly({e: c for e, c in p.items() if e[0] + e[1] == k})


def apply_pd(h, f, point):
    """Evaluate ``h(d/dx, d/dy) f`` at ``point``."""
    if h.is_zero() or f.is_zero():
        return Fraction(0)
    shifted = f.shift(point)
    total = Fraction(0)
    for (i, j), c in h.items():
        total += c * factorial(i) * factorial(j) * shifted.coeff(i, j)
    return total


def leibniz_rhs(R, g, f, point):
    """Right side of ``R(D)[g f] = sum 1/(i! j!) g^(i,j) R^(i,j)(D) f``."""
    if R.is_zero():
        return Fraction(0)
    total = Fraction(0)
    for i in range(R.degree_in(0) + 1):
        for j in range(R.degree_in(1) + 1):
            Rij = R.diff(i, j)
            if Rij.is_zero():
                continue
            gij = g.diff(i, j).at(point)
            if gij == 0:
                continue
            total += Fraction(gij, factorial(i) * factorial(j)) * apply_pd(Rij, f, point)
    return total


def _lex_lead(p):
    return max(p.items(), key=lambda t: t[0])


def exact_divide(p, d):
    """Return ``r`` with ``p == d * r``, or None when ``d`` does not divide ``p``.

    Multivariate division by lex-leading terms (x > y); exact because
    the lex-leading term of a product is the product of lex-leading terms.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    (di, dj), dc = _lex_lead(d)
    rem = p
    quot = {}
    while not rem.is_zero():
        (ri, rj), rc = _lex_lead(rem)
        if ri < di or rj < dj:
            return None
        e = (ri - di, rj - dj)
        c = rc / dc
        quot[e] = c
        rem = rem - d * BivarPoly.monomial(e[0], e[1], c)
    return BivarPoly(quot)


def divide_by_line(p, line):
    """Return ``r`` with ``p == line * r``, or None if the line does not divide ``p``.

    Raises DegenerateLine unless ``line`` has degree exactly 1.
    """
    if line.degree != 1:
        raise DegenerateLine(f"not a line: {line}")
    return exact_divide(p, line)


class TrivarForm:
    """Homogeneous polynomial in x, y, z of a fixed degree."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms, degree):
        clean = {}
        for e, c in terms.items():
            if sum(e) != degree:
                raise NotHomogeneous(f"term {e} is not of degree {degree}")
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean
        self.degree = degree

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return TrivarForm(out, self.degree + other.degree)

    def __eq__(self, other):
        if not isinstance(other, TrivarForm):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def dehomogenize(self):
        return BivarPoly({(i, j): c for (i, j, _), c in self.terms.items()})

    def __repr__(self):
        return f"TrivarForm({self.terms!r}, degree={self.degree})"


def homogenize(p):
    """Associated form ``sum a_ij x^i y^j z^(m-i-j)`` with ``m = deg p``."""
    if p.is_zero():
        raise ZeroPolynomial("cannot homogenize the zero polynomial")
    m = p.degree
    return TrivarForm({(i, j, m - i - j): c for (i, j), c in p.items()}, m)


def normalize(p):
    """Scale so the lex-leading coefficient (x > y) is 1."""
    if p.is_zero():
        return p
    return p * (1 / _lex_lead(p)[1])


def _split_monomial_content(u):
    ex = min(i for (i, _), _c in u.items())
    ey = min(j for (_, j), _c in u.items())
    rest = BivarPoly({(i - ex, j - ey): c for (i, j), c in u.items()})
    return ex, ey, rest


def form_gcd(u, v):
    """Gcd of two binary forms, monic in the lex-largest variable present.

    A form not divisible by x or y is determined by its dehomogenization at
    y = 1, so the work reduces to a univariate gcd over Q.
    """
    for w in (u, v):
        if not w.is_homogeneous():
            raise NotHomogeneous(f"not a form: {w}")
    if u.is_zero() and v.is_zero():
        raise ZeroPolynomial("form_gcd(0, 0) is undefined")
    if u.is_zero():
        return normalize(v)
    if v.is_zero():
        return normalize(u)
    ux, uy, ur = _split_monomial_content(u)
    vx, vy, vr = _split_monomial_content(v)
    # ur(t, 1) has degree deg ur and nonzero constant term
    ua = [ur.coeff(i, ur.degree - i) for i in range(ur.degree + 1)]
    va = [vr.coeff(i, vr.degree - i) for i in range(vr.degree + 1)]
    g = up.ugcd(ua, va)
    dg = len(g) - 1
    core = BivarPoly({(i, dg - i): c for i, c in enumerate(g)})
    return normalize(core * BivarPoly.monomial(min(ux, vx), min(uy, vy)))


# -- bivariate gcd, viewing polynomials in Q[x][y] --------------------------

def _to_ymajor(p):
    """List indexed by y-power of univariate coefficient lists in x."""
    if p.is_zero():
        return []
    dy = p.degree_in(1)
    rows = [[] for _ in range(dy + 1)]
    for (i, j), c in p.items():
        row = rows[j]
        if len(row) <= i:
            row.extend([Fraction(0)] * (i + 1 - len(row)))
        row[i] = c
    return [up.trim(r) for r in rows]


def _from_ymajor(rows):
    return BivarPoly({(i, j): c for j, row in enumerate(rows) for i, c in enumerate(row)})


def _ytrim(rows):
    rows = list(rows)
    while rows and not rows[-1]:
        rows.pop()
    return rows


def _content(rows):
    g = []
    for r in rows:
        g = up.ugcd(g, r)
        if len(g) == 1:
            break
    return g


def _primitive(rows):
    c = _content(rows)
    return [up.exact_div(r, c) if r else [] for r in rows]


def _prem(a, b):
    """Pseudo-remainder of a by b in Q[x][y] (up to a unit)."""
    a = _ytrim(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        new = [up.mul(lb, r) for r in a]
        for k, r in enumerate(b):
            new[k + shift] = up.sub(new[k + shift], up.mul(la, r))
        a = _ytrim(new)
    return a


def poly_gcd(p, q):
    """Gcd in Q[x, y] via primitive remainder sequences in y over Q[x].

    The result is normalized to lex-leading coefficient 1; a nonzero constant
    gcd comes back as 1.
    """
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    if p.is_zero():
        return normalize(q)
    if q.is_zero():
        return normalize(p)
    a, b = _to_ymajor(p), _to_ymajor(q)
    cont = up.ugcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            # primitive and free of y: a unit
            a = [[Fraction(1)]]
            break
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else [])
    g = _primitive(a)
    g = [up.mul(cont, r) for r in g]
    return normalize(_from_ymajor(g))


def resultant_y(p, q):
    """Res_y(p, q) as a univariate coefficient list in x.

    Computed by evaluating the formal Sylvester determinant at deg p * deg q + 1
    integer abscissae and interpolating.
    """
    from pdmult.linalg import RationalMatrix, determinant

    a, b = _to_ymajor(p), _to_ymajor(q)
    da, db = len(a) - 1, len(b) - 1
    if da < 0 or db < 0:
        return []
    if da == 0 and db == 0:
        return [Fraction(1)]
    bound = max(p.degree, 0) * max(q.degree, 0)
    xs = list(range(bound + 1))
    size = da + db
    values = []
    for x0 in xs:
        av = [up.evaluate(r, x0) for r in a]
        bv = [up.evaluate(r, x0) for r in b]
        rows = []
        for k in range(db):
            row = [Fraction(0)] * size
            for i, c in enumerate(reversed(av)):
                row[k + i] = c
            rows.append(row)
        for k in range(da):
            row = [Fraction(0)] * size
            for i, c in enumerate(reversed(bv)):
                row[k + i] = c
            rows.append(row)
        values.append(determinant(RationalMatrix.from_rows(rows)))
    return up.interpolate(xs, values)


def swap_xy(p):
    return BivarPoly({(j, i): c for (i, j), c in p.items()})


def specialize(p, var, value):
    """Substitute ``value`` for x (var=0) or y (var=1); coefficient list in the other."""
    out = []
    for (i, j), c in p.items():
        fixed, free = (i, j) if var == 0 else (j, i)
        if len(out) <= free:
            out.extend([Fraction(0)] * (free + 1 - len(out)))
        out[free] += c * Fraction(value) ** fixed
    return up.trim(out)

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import X, Y, oracle_apply, oracle_kernel, points, polys, random_poly
from pdmult.errors import DegenerateLine, MalformedInput, NotHomogeneous, ZeroPolynomial
from pdmult.poly import (
    NEG_INF,
    BivarPoly,
    Point,
    TrivarForm,
    apply_pd,
    dim_pi,
    divide_by_line,
    form_gcd,
    homogeneous_part,
    homogenize,
    leibniz_rhs,
    monomials,
    poly_gcd,
    resultant_y,
)

ORIGIN = (0, 0)


@pytest.mark.parametrize("n, expected", [(2, 6), (0, 1), (-1, 0), (-7, 0), (5, 21)])
def test_dim_pi(n, expected):
    assert dim_pi(n) == expected


def test_dim_pi_matches_monomial_count():
    for n in range(10):
        assert dim_pi(n) == len(monomials(n))


def test_zero_polynomial_degree_is_sentinel():
    zero = BivarPoly()
    assert zero.degree == NEG_INF
    assert zero.degree != -1
    assert (zero * X).is_zero()


@pytest.mark.parametrize(
    "k, expected",
    [(2, X**2), (1, -Y), (0, BivarPoly())],
)
def test_homogeneous_part(k, expected):
    assert homogeneous_part(X**2 - Y, k) == expected


@given(polys(4))
def test_homogeneous_parts_sum_back(p):
    if p.is_zero():
        return
    total = sum((homogeneous_part(p, k) for k in range(p.degree + 1)), BivarPoly())
    assert total == p


@pytest.mark.parametrize(
    "h, f, point, expected",
    [
        (BivarPoly.const(1), X**2 + Y, (1, 1), 2),
        (X, X**2, (1, 0), 2),
        (X * Y, X**2 * Y**2, (1, 1), 4),
    ],
)
def test_apply_pd_examples(h, f, point, expected):
    assert apply_pd(h, f, Point.of(*point)) == expected


@given(polys(3), polys(4), points)
def test_apply_pd_matches_literal_derivatives(h, f, pt):
    assert apply_pd(h, f, Point.of(*pt)) == oracle_apply(h, f, pt)


def test_leibniz_examples():
    g, f, pt = X + 2 * Y, X**2 - Y, Point.of(2, -1)
    assert leibniz_rhs(BivarPoly.const(1), g, f, pt) == g.at(pt) * f.at(pt)
    assert leibniz_rhs(X, X, X, Point.of(0, 0)) == 0
    assert apply_pd(X, X * X, Point.of(0, 0)) == 0
    # (R=x^2, g=y+1, f=x^3, (1,1)): d^2/dx^2 (y+1)x^3 = 6x(y+1) -> 12
    assert apply_pd(X**2, (Y + 1) * X**3, Point.of(1, 1)) == 12
    assert leibniz_rhs(X**2, Y + 1, X**3, Point.of(1, 1)) == 12


@settings(max_examples=60)
@given(polys(4), polys(4), polys(4), points)
def test_leibniz_identity(R, g, f, pt):
    pt = Point.of(*pt)
    assert apply_pd(R, g * f, pt) == leibniz_rhs(R, g, f, pt)


def test_degree_of_product_is_additive():
    rng = random.Random(7)
    for _ in range(50):
        p = random_poly(rng, rng.randint(0, 4)) + BivarPoly.monomial(rng.randint(0, 4), 0)
        q = random_poly(rng, rng.randint(0, 4)) + BivarPoly.monomial(0, rng.randint(0, 4))
        if p.is_zero() or q.is_zero():
            continue
        # monic x-power and y-power leading terms cannot cancel
        p = p + BivarPoly.monomial(5, 0)
        q = q + BivarPoly.monomial(0, 5)
        assert (p * q).degree == p.degree + q.degree


def test_divide_by_line_examples():
    assert divide_by_line(X**2 - Y**2, X - Y) == X + Y
    assert divide_by_line(X**2 + Y**2, X - Y) is None
    line = 2 * X - Y + 5
    assert divide_by_line(line * (X + 3 * Y - 1), line) == X + 3 * Y - 1


@pytest.mark.parametrize("line", [BivarPoly.const(3), BivarPoly(), X**2])
def test_divide_by_line_rejects_non_lines(line):
    with pytest.raises(DegenerateLine):
        divide_by_line(X + Y, line)


def _points_on_line(rng, a, b, c, count):
    """Distinct rational points on a x + b y + c = 0."""
    pts, t = [], 0
    used = set()
    while len(pts) < count:
        t = Fraction(rng.randint(-20, 20), rng.randint(1, 4))
        if t in used:
            continue
        used.add(t)
        if b != 0:
            pts.append((t, -(a * t + c) / b))
        else:
            pts.append((-c / a, t))
    return pts


@pytest.mark.parametrize("seed", range(25))
def test_line_vanishing_forces_division(seed):
    rng = random.Random(seed)
    a, b, c = (Fraction(rng.randint(-3, 3)) for _ in range(3))
    if a == 0 and b == 0:
        a = Fraction(1)
    line = BivarPoly({(1, 0): a, (0, 1): b, (0, 0): c})
    n = rng.randint(1, 4)
    pts = _points_on_line(rng, a, b, c, n + 1)
    cols = [BivarPoly.monomial(i, j) for i, j in monomials(n)]
    rows = [[m(*pt) for m in cols] for pt in pts]
    kernel = oracle_kernel(rows, len(cols))
    coeffs = [Fraction(rng.randint(-4, 4)) for _ in kernel]
    vec = [sum(cf * v[i] for cf, v in zip(coeffs, kernel)) for i in range(len(cols))]
    p = BivarPoly.from_vector(vec, n)
    r = divide_by_line(p, line)
    assert r is not None and line * r == p
    assert r.is_zero() or r.degree <= n - 1


@pytest.mark.parametrize("seed", range(25))
def test_line_nonvanishing_is_not_divisible(seed):
    rng = random.Random(100 + seed)
    line = BivarPoly({(1, 0): rng.randint(1, 3), (0, 1): rng.randint(-3, 3), (0, 0): rng.randint(-3, 3)})
    p = random_poly(rng, rng.randint(1, 4))
    (pt,) = _points_on_line(rng, line.coeff(1, 0), line.coeff(0, 1), line.coeff(0, 0), 1)
    if p(*pt) == 0:
        p = p + 1
    assert divide_by_line(p, line) is None


def test_line_with_double_point_still_divides():
    # p vanishes at (0,0) to order 2 along y = 0 and at (1,0): 3 conditions for n = 2
    p = Y * (X + Y - 7)
    assert divide_by_line(p, Y) == X + Y - 7


def test_homogenize_examples():
    assert homogenize(X + 1) == TrivarForm({(1, 0, 0): 1, (0, 0, 1): 1}, 1)
    assert homogenize(X**2 - Y) == TrivarForm({(2, 0, 0): 1, (0, 1, 1): -1}, 2)
    with pytest.raises(ZeroPolynomial):
        homogenize(BivarPoly())


@given(polys(3), polys(3))
def test_homogenize_is_multiplicative(p1, p2):
    if p1.is_zero() or p2.is_zero():
        return
    prod = homogenize(p1 * p2)
    assert prod == homogenize(p1) * homogenize(p2)
    assert prod.degree == (p1 * p2).degree
    assert prod.dehomogenize() == p1 * p2


def test_form_gcd_examples():
    assert form_gcd(X**2 * Y, X * Y**2) == X * Y
    assert form_gcd(X**2, Y**2) == BivarPoly.const(1)
    assert form_gcd(X**2 - Y**2, X - Y) == X - Y
    assert form_gcd(2 * Y, BivarPoly()) == Y


def test_form_gcd_errors():
    with pytest.raises(NotHomogeneous):
        form_gcd(X + 1, X)
    with pytest.raises(ZeroPolynomial):
        form_gcd(BivarPoly(), BivarPoly())


LINEAR_POOL = [X, Y, X + Y, X - Y, 2 * X + Y, X + 3 * Y]


def _normalized(p):
    lead = max(p.items())[1]
    return p * (1 / lead)


@settings(max_examples=150)
@given(
    st.lists(st.integers(0, len(LINEAR_POOL)), min_size=0, max_size=4),
    st.lists(st.integers(0, len(LINEAR_POOL)), min_size=0, max_size=4),
    st.integers(1, 5),
    st.integers(-5, -1),
)
def test_form_gcd_against_factor_enumeration(fa, fb, ca, cb):
    # index len(LINEAR_POOL) stands for the irreducible quadratic x^2 + y^2
    pool = LINEAR_POOL + [X**2 + Y**2]
    u = BivarPoly.const(ca)
    for i in fa:
        u = u * pool[i]
    v = BivarPoly.const(cb)
    for i in fb:
        v = v * pool[i]
    common = BivarPoly.const(1)
    for i in set(fa) & set(fb):
        for _ in range(min(fa.count(i), fb.count(i))):
            common = common * pool[i]
    g = form_gcd(u, v)
    assert g == _normalized(common)
    # g divides both inputs
    from pdmult.poly import exact_divide

    assert exact_divide(u, g) is not None and exact_divide(v, g) is not None


def test_poly_gcd():
    assert poly_gcd(X * Y, X * (Y - 1)) == X
    assert poly_gcd(X, Y) == BivarPoly.const(1)
    assert poly_gcd(Y - X**2, Y + X**2) == BivarPoly.const(1)
    common = X**2 + Y - 3
    assert poly_gcd(common * (X - Y), common * (X * Y + 1)) == common
    assert poly_gcd((X - 1) * (Y + 2), (X - 1) * (Y - 2)) == X - 1


def test_resultant_against_sympy():
    sympy = pytest.importorskip("sympy")
    xs, ys = sympy.symbols("x y")
    rng = random.Random(3)
    for _ in range(15):
        p = random_poly(rng, rng.randint(1, 3))
        q = random_poly(rng, rng.randint(1, 3))
        if p.degree_in(1) < 1 or q.degree_in(1) < 1:
            continue
        sp = sum(sympy.Rational(c.numerator, c.denominator) * xs**i * ys**j for (i, j), c in p.items())
        sq = sum(sympy.Rational(c.numerator, c.denominator) * xs**i * ys**j for (i, j), c in q.items())
        expected = sympy.Poly(sympy.resultant(sp, sq, ys), xs)
        got = resultant_y(p, q)
        coeffs = [sympy.Rational(c.numerator, c.denominator) for c in got]
        mine = sympy.Poly(sum(c * xs**i for i, c in enumerate(coeffs)), xs)
        # up to sign convention
        assert mine == expected or mine == -expected


def test_json_round_trip_and_order():
    p = 3 * X**2 - Fraction(1, 2) * Y + 7
    data = p.to_json()
    assert data == {"terms": [[2, 0, "3"], [0, 1, "-1/2"], [0, 0, "7"]]}
    assert BivarPoly.from_json(data) == p
    assert p.pretty() == "3*x^2 - 1/2*y + 7"


@pytest.mark.parametrize(
    "bad",
    [
        {"terms": [[0, 0, "1.5"]]},
        {"terms": [[-1, 0, "1"]]},
        {"terms": [[0, 0]]},
        {"term": []},
        {"terms": [[0, 0, "1/0"]]},
    ],
)
def test_json_rejects_malformed(bad):
    with pytest.raises(MalformedInput):
        BivarPoly.from_json(bad)


def test_point_parse():
    assert Point.parse("1/2,-3") == Point.of(Fraction(1, 2), -3)
    assert Point.from_json(Point.of(1, Fraction(-2, 3)).to_json()) == Point.of(1, Fraction(-2, 3))
    with pytest.raises(MalformedInput):
        Point.parse("1;2")


def test_shift_matches_substitution():
    rng = random.Random(11)
    for _ in range(20):
        p = random_poly(rng, 4)
        a, b = Fraction(rng.randint(-3, 3), 2), Fraction(rng.randint(-3, 3), 3)
        s = p.shift((a, b))
        for x0, y0 in itertools.product(range(-2, 3), repeat=2):
            assert s(x0, y0) == p(x0 + a, y0 + b)

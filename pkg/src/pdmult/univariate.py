"""Dense univariate polynomials over Q as coefficient lists, lowest degree first.

Only what the bivariate code needs: arithmetic, Euclidean gcd, interpolation
and rational root extraction.  The zero polynomial is the empty list.
"""

from fractions import Fraction
from math import gcd, isqrt, lcm


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    return len(a) - 1 if a else None


def add(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def scale(a, c):
    if c == 0:
        return []
    return [c * x for x in a]


def mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def shift_up(a, k):
    """Multiply by t**k."""
    return [Fraction(0)] * k + list(a) if a else []


def evaluate(a, t):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * t + c
    return acc


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(x) for x in a]
    db = len(b) - 1
    lead = Fraction(b[-1])
    if len(a) <= db:
        return [], trim(a)
    quot = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] / lead
        quot[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    return trim(quot), trim(a[:db])


def exact_div(a, b):
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def monic(a):
    if not a:
        return []
    lead = Fraction(a[-1])
    return [Fraction(x) / lead for x in a]


def ugcd(a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def interpolate(xs, ys):
    """Newton divided differences; returns the unique interpolant of degree < len(xs)."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = []
    for i in range(n - 1, -1, -1):
        # result = result * (t - xs[i]) + coef[i]
        result = add(sub(shift_up(result, 1), scale(result, Fraction(xs[i]))), [coef[i]])
    return result


def integer_primitive(a):
    """Scale to coprime integer coefficients with positive leading coefficient."""
    a = trim(a)
    if not a:
        return []
    den = lcm(*(Fraction(c).denominator for c in a))
    ints = [int(Fraction(c) * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(a):
    """Distinct rational roots in increasing order (rational root theorem)."""
    a = trim(a)
    if len(a) <= 1:
        return []
    # square-free part keeps the candidate search small
    sqf = exact_div(a, ugcd(a, derivative(a))) if len(a) > 2 else a
    ints = integer_primitive(sqf)
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        k = 0
        while ints[k] == 0:
            k += 1
        ints = ints[k:]
    while len(ints) > 1:
        found = None
        for s in _divisors(ints[-1]):
            for r in _divisors(ints[0]):
                for cand in (Fraction(r, s), Fraction(-r, s)):
                    if evaluate(ints, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        ints = integer_primitive(exact_div(ints, [-found, Fraction(1)]))
    return sorted(roots)

import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import strategies as st

from pdmult.corpus import load_corpus
from pdmult.multiplicity import MultiplicitySpace, check_d_invariance
from pdmult.poly import BivarPoly, monomials

X = BivarPoly.x()
Y = BivarPoly.y()


# -- independent oracles (plain Gauss-Jordan over Fractions) -----------------

def oracle_rref(rows):
    rows = [[Fraction(v) for v in r] for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def oracle_rank(rows):
    return len(oracle_rref(rows)[1])


def oracle_kernel(rows, ncols):
    red, pivots = oracle_rref(rows)
    out = []
    for j in range(ncols):
        if j in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -red[k][j]
        out.append(v)
    return out


def oracle_apply(h, f, point):
    """h(D) f at point by literal differentiation and evaluation."""
    total = Fraction(0)
    for (i, j), c in h.items():
        total += c * f.diff(i, j)(point[0], point[1])
    return total


def oracle_multiplicity_kernel(p, q, point, d):
    """Monolithic kernel of the PD conditions in Pi_d, entries from literal derivatives."""
    cols = [BivarPoly.monomial(i, j) for i, j in monomials(d)]
    rows = []
    for g in (p, q):
        for a1, a2 in monomials(d):
            rows.append([oracle_apply(m.diff(a1, a2), g, point) for m in cols])
    return [BivarPoly.from_vector(v, d) for v in oracle_kernel(rows, len(cols))]


def span_contains(symbols, f, n):
    """f lies in span(symbols) inside Pi_n, decided by oracle ranks."""
    base = [h.to_vector(n) for h in symbols]
    return oracle_rank(base) == oracle_rank(base + [f.to_vector(n)])


# -- random objects -----------------------------------------------------------

def random_poly(rng, deg, coeffs=range(-3, 4), density=0.7):
    terms = {}
    for i, j in monomials(deg):
        if rng.random() < density:
            terms[(i, j)] = Fraction(rng.choice(coeffs), rng.choice([1, 1, 2, 3]))
    return BivarPoly(terms)


def random_poly_exact_degree(rng, deg, **kw):
    while True:
        p = random_poly(rng, deg, **kw)
        if p.degree == deg:
            return p


def random_point(rng, span=3):
    return (Fraction(rng.randint(-span, span), rng.randint(1, 3)),
            Fraction(rng.randint(-span, span), rng.randint(1, 3)))


rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


@st.composite
def polys(draw, max_degree=3):
    d = draw(st.integers(0, max_degree))
    exps = monomials(d)
    coeffs = draw(st.lists(rationals, min_size=len(exps), max_size=len(exps)))
    return BivarPoly(dict(zip(exps, coeffs)))


points = st.tuples(rationals, rationals)


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


def fact(n):
    return factorial(n)


# -- D-invariance audit of every multiplicity space built during the run ------

_NEW_SPACES = []
AUDITED = {"spaces": set(), "failures": []}
_space_init = MultiplicitySpace.__init__


def _recording_init(self, *args, **kwargs):
    _space_init(self, *args, **kwargs)
    _NEW_SPACES.append(self)


MultiplicitySpace.__init__ = _recording_init


def audit_new_spaces():
    bad = []
    while _NEW_SPACES:
        space = _NEW_SPACES.pop()
        if space in AUDITED["spaces"]:
            continue
        AUDITED["spaces"].add(space)
        if not check_d_invariance(space):
            bad.append(space)
    AUDITED["failures"].extend(bad)
    return bad


@pytest.fixture(autouse=True)
def _d_invariance_audit():
    yield
    bad = audit_new_spaces()
    assert not bad, f"non D-invariant multiplicity spaces: {bad}"


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
    audit_new_spaces()
    terminalreporter.write_line(
        f"D-invariance audit: {len(AUDITED['spaces'])} distinct spaces built during the run, "
        f"{len(AUDITED['failures'])} failures"
    )

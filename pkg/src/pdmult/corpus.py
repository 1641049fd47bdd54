"""Curve-pair corpus: loading and the per-pair identity checks.

A corpus file holds ``{"name", "p", "q", "expected": {"mn", "multiplicities"}}``
where ``multiplicities`` lists ``[[x, y], k]`` for every intersection point.
"""

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from pdmult.errors import MalformedInput
from pdmult.interpolation import FunctionalSet, cayley_bacharach_analyze, evaluation_matrix
from pdmult.intersection import bezout_check
from pdmult.linalg import kernel_basis, rank
from pdmult.multiplicity import check_d_invariance
from pdmult.noether import DecompositionCertificate, noether_decompose, verify_dim_w
from pdmult.poly import BivarPoly, Point


@dataclass(frozen=True)
class CorpusPair:
    name: str
    p: BivarPoly
    q: BivarPoly
    mn: int
    multiplicities: tuple

    @classmethod
    def from_json(cls, data, name=None):
        try:
            exp = data["expected"]
            mults = tuple(sorted((Point.from_json(pt), int(k)) for pt, k in exp["multiplicities"]))
            return cls(
                data.get("name", name),
                BivarPoly.from_json(data["p"]),
                BivarPoly.from_json(data["q"]),
                int(exp["mn"]),
                mults,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad corpus entry {name}: {exc}") from None


def bundled_corpus_dir():
    return resources.files("pdmult") / "data" / "corpus"


def load_corpus(path=None):
    """Pairs sorted by file name.  Raises MalformedInput on an empty or unreadable corpus."""
    root = Path(str(bundled_corpus_dir())) if path is None else Path(path)
    if not root.is_dir():
        raise MalformedInput(f"corpus directory not found: {root}")
    files = sorted(root.glob("*.json"))
    if not files:
        raise MalformedInput(f"corpus directory is empty: {root}")
    pairs = []
    for f in files:
        try:
            data = json.loads(f.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise MalformedInput(f"cannot read {f.name}: {exc}") from None
        pairs.append(CorpusPair.from_json(data, f.stem))
    return pairs


def check_bezout(pair):
    report = bezout_check(pair.p, pair.q)
    got = tuple((r.point, r.multiplicity) for r in report.records)
    return report.complete and report.expected == pair.mn and got == pair.multiplicities


def check_d_invariant(pair):
    report = bezout_check(pair.p, pair.q)
    return all(check_d_invariance(r.space) for r in report.records)


def check_dimw(pair):
    m, n = pair.p.degree, pair.q.degree
    return all(verify_dim_w(pair.p, pair.q, k).match for k in range(max(m, n), m + n + 3))


def operator_set(pair):
    report = bezout_check(pair.p, pair.q)
    return FunctionalSet(L for r in report.records for L in r.space.functionals())


def check_ranks(pair):
    """Rank mn on Pi_(m+n-2) and mn-1 on Pi_(m+n-3)."""
    m, n = pair.p.degree, pair.q.degree
    S = operator_set(pair)
    ok = rank(evaluation_matrix(S, m + n - 2)) == m * n
    if m + n - 3 >= 0:
        ok = ok and rank(evaluation_matrix(S, m + n - 3)) == m * n - 1
    return ok


def check_cb(pair):
    report = cayley_bacharach_analyze(pair.p, pair.q)
    return report.implication_holds and all(pc.unique_top for pc in report.points if pc.tangent_free)


def vanishing_kernel(S, k):
    """Basis of the polynomials in Pi_k annihilated by every functional of S."""
    return [BivarPoly.from_vector(v, k) for v in kernel_basis(evaluation_matrix(S, k))]


def check_noether(pair):
    m, n = pair.p.degree, pair.q.degree
    S = operator_set(pair)
    for k in range(max(m + n - 3, 0), m + n + 2):
        for f in vanishing_kernel(S, k):
            cert = noether_decompose(f, pair.p, pair.q, k=k)
            if not isinstance(cert, DecompositionCertificate) or not cert.verify(f, pair.p, pair.q):
                return False
    return True


CHECKS = {
    "bezout": check_bezout,
    "d_invariance": check_d_invariant,
    "dimw": check_dimw,
    "ranks": check_ranks,
    "cb": check_cb,
    "noether": check_noether,
}


def run_pair(pair):
    results = {}
    for name, check in CHECKS.items():
        try:
            results[name] = bool(check(pair))
        except MalformedInput:
            raise
        except Exception as exc:  # a check that crashes counts as a failure
            results[name] = False
            results[f"{name}_error"] = f"{type(exc).__name__}: {exc}"
    return results


def run_corpus(path=None):
    pairs = load_corpus(path)
    entries = []
    for pair in pairs:
        res = run_pair(pair)
        entries.append({
            "name": pair.name,
            "p": pair.p.pretty(),
            "q": pair.q.pretty(),
            "checks": res,
            "pass": all(v for k, v in res.items() if k in CHECKS),
        })
    return {"pairs": entries, "all_pass": all(e["pass"] for e in entries)}

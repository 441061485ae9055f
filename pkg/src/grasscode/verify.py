"""Exhaustive checkers for the clique-structure results.

Each verifier returns a :class:`Report`; an empty ``violations`` list
means every instance checked agreed with the prediction.  Column indices
inside reports are 1-based.
"""

from __future__ import annotations

import functools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .cliques import find_maximal_cliques
from .codegraph import (
    CodeGraph,
    build_graph,
    check_graph_params,
    classify_maximal_cliques,
    column_groups,
    connectivity,
    hyperplane_sections,
    is_maximal_clique,
    star_codes,
    star_restricted,
    star_size_formula,
    top_codes,
    top_restricted,
)
from .codespace import (
    Subspace,
    coordinate_profile,
    enumerate_codes,
    enumerate_grassmannian,
    pivot_sets,
    q_integer,
)
from .gf import make_field

SCHEMA = 1


@dataclass
class Report:
    lemma: str
    params: dict
    checked_count: int = 0
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, meta: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "lemma": self.lemma,
            "params": self.params,
            "checked_count": self.checked_count,
            "violations": self.violations,
        }
        out.update(self.details)
        if meta:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _rows(S: Subspace) -> list[list[int]]:
    return [list(r) for r in S.gen]


def _cols1(cols) -> list[int]:
    return sorted(c + 1 for c in cols)


def _timed(fn: Callable[..., Report]) -> Callable[..., Report]:
    @functools.wraps(fn)
    def wrapper(*args, **kwargs) -> Report:
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed_ms = (time.perf_counter() - t0) * 1000
        return report

    return wrapper


def _chunked(task, n: int, k: int, q: int, dim: int, workers: int):
    """Run ``task(n, k, q, pivot_chunk)`` over pivot sets of ``dim``-subspaces, merged in order."""
    pivs = list(pivot_sets(n, dim))
    if workers <= 1 or len(pivs) < 2:
        return [task(n, k, q, pivs)]
    # one pivot set per task; map() keeps input order, so output matches a serial run
    chunks = [[p] for p in pivs]
    m = len(chunks)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(task, [n] * m, [k] * m, [q] * m, chunks))


# --- star sizes ---------------------------------------------------------------------

def _star_size_task(n: int, k: int, q: int, pivs) -> tuple[int, list, dict]:
    checked, bad, by_c = 0, [], {}
    for S in enumerate_grassmannian(n, k - 1, q, pivs):
        c = coordinate_profile(S).c
        size = len(star_codes(S))
        expected = q_integer(n - k + 1, q) if c == 0 else star_size_formula(c, n, k, q)
        checked += 1
        by_c.setdefault(c, set()).add(size)
        if size != expected:
            bad.append({"S": _rows(S), "c": c, "size": size, "expected": expected})
    return checked, bad, by_c


@_timed
def verify_star_sizes(n: int, k: int, q: int, workers: int = 1) -> Report:
    """Star restriction sizes against the closed forms, for every ``(k-1)``-dim ``S``."""
    check_graph_params(n, k, q)
    report = Report("star-size", {"n": n, "k": k, "q": q})
    by_c: dict[int, set] = {}
    for checked, bad, part in _chunked(_star_size_task, n, k, q, k - 1, workers):
        report.checked_count += checked
        report.violations.extend(bad)
        for c, sizes in part.items():
            by_c.setdefault(c, set()).update(sizes)
    report.details["sizes_by_c"] = {str(c): sorted(s) for c, s in sorted(by_c.items())}
    return report


# --- star maximality ----------------------------------------------------------------

def predicted_star_maximal(c: int, n: int, k: int, q: int) -> bool:
    return True if q >= 3 else c <= n - k - 1


@_timed
def verify_star_maximality(n: int, k: int, q: int, G: CodeGraph | None = None) -> Report:
    """Maximality of every star restriction against the predicted frontier."""
    check_graph_params(n, k, q)
    G = G if G is not None else build_graph(n, k, q)
    report = Report("star-maximality", {"n": n, "k": k, "q": q})
    counts: dict[str, list[int]] = {}
    for S in enumerate_grassmannian(n, k - 1, q):
        c = coordinate_profile(S).c
        members = star_restricted(S, G)
        actual = is_maximal_clique(G, members)
        predicted = predicted_star_maximal(c, n, k, q)
        report.checked_count += 1
        tally = counts.setdefault(str(c), [0, 0])
        tally[0 if actual else 1] += 1
        if actual != predicted:
            report.violations.append({"S": _rows(S), "c": c, "size": len(members),
                                      "maximal": actual, "predicted": predicted})
    report.details["maximal_nonmaximal_by_c"] = dict(sorted(counts.items()))
    return report


# --- tops ---------------------------------------------------------------------------

def top_bounds(n: int, k: int, q: int) -> tuple[int, int]:
    top = q_integer(k + 1, q)
    return max(0, top - n), top - k - 1


def _top_task(n: int, k: int, q: int, pivs) -> tuple[int, list, list, list]:
    lo, hi = top_bounds(n, k, q)
    F = make_field(q)
    checked, bound_bad, section_bad, sizes = 0, [], [], set()
    for U in enumerate_codes(n, k + 1, q, pivs):
        checked += 1
        size = len(top_codes(U))
        sizes.add(size)
        if not lo <= size <= hi:
            bound_bad.append({"U": _rows(U), "size": size, "bounds": [lo, hi]})
        secs = hyperplane_sections(U)
        cols = column_groups(F, U.gen)
        if secs.groups != cols or secs.distinct < k + 1 or any(s.k != k for s in secs.sections):
            section_bad.append({"U": _rows(U), "section_groups": [_cols1(g) for g in secs.groups],
                                "column_groups": [_cols1(g) for g in cols]})
    return checked, bound_bad, section_bad, sorted(sizes)


@functools.lru_cache(maxsize=8)
def _top_survey(n: int, k: int, q: int, workers: int = 1) -> tuple[int, tuple, tuple, tuple]:
    """Merged ``_top_task`` over all pivot sets; shared by the two top verifiers."""
    checked, bounds_bad, sections_bad, sizes = 0, [], [], set()
    for c, b, s, part in _chunked(_top_task, n, k, q, k + 1, workers):
        checked += c
        bounds_bad.extend(b)
        sections_bad.extend(s)
        sizes.update(part)
    return checked, tuple(bounds_bad), tuple(sections_bad), tuple(sorted(sizes))


@_timed
def verify_top_bounds(n: int, k: int, q: int, G: CodeGraph | None = None, workers: int = 1) -> Report:
    """Top restriction sizes within the bounds; when ``2k > n`` every top is maximal."""
    check_graph_params(n, k, q)
    report = Report("top-bounds", {"n": n, "k": k, "q": q})
    report.checked_count, bad, _, sizes = _top_survey(n, k, q, workers)
    report.violations.extend(bad)
    if 2 * k > n:
        G = G if G is not None else build_graph(n, k, q)
        for U in enumerate_codes(n, k + 1, q):
            members = top_restricted(U, G)
            if not members or not is_maximal_clique(G, members):
                report.violations.append({"U": _rows(U), "size": len(members), "maximal": False,
                                          "predicted": True})
        report.details["maximality_checked"] = True
    report.details["bounds"] = list(top_bounds(n, k, q))
    report.details["observed_sizes"] = list(sizes)
    return report


@_timed
def verify_top_sections(n: int, k: int, q: int, workers: int = 1) -> Report:
    """Equal coordinate sections of each ``U`` versus proportional generator columns."""
    check_graph_params(n, k, q)
    report = Report("top-sections", {"n": n, "k": k, "q": q})
    report.checked_count, _, bad, _ = _top_survey(n, k, q, workers)
    report.violations.extend(bad)
    return report


@_timed
def analyze_sections(rows: Sequence[Sequence[int]], q: int) -> Report:
    """Section analysis of one code given by a generator matrix (the ``U`` of a top)."""
    from .codespace import canonicalize

    F = make_field(q)
    U = canonicalize(F, rows)
    k = U.k - 1
    report = Report("top-sections", {"n": U.n, "k": k, "q": q, "dim_U": U.k})
    report.checked_count = 1
    secs = hyperplane_sections(U)
    cols = column_groups(F, rows)
    if secs.groups != cols:
        report.violations.append({"section_groups": [_cols1(g) for g in secs.groups],
                                  "column_groups": [_cols1(g) for g in cols]})
    if secs.distinct < U.k:
        report.violations.append({"distinct_sections": secs.distinct, "minimum": U.k})
    top = top_codes(U) if k >= 1 else []
    lo, hi = top_bounds(U.n, k, q)
    if not lo <= len(top) <= hi:
        report.violations.append({"top_size": len(top), "bounds": [lo, hi]})
    report.details.update({
        "distinct_sections": secs.distinct,
        "section_groups": [_cols1(g) for g in secs.groups],
        "top_size": len(top),
        "top": [_rows(X) for X in top],
    })
    return report


# --- separation inequalities ---------------------------------------------------------

def separation_checks(n: int, k: int, q: int) -> list[tuple[str, bool]]:
    """Named integer inequalities separating maximal-star sizes from top sizes."""
    star = q_integer(n - k + 1, q)
    top = q_integer(k + 1, q)
    checks = []
    if 2 * k <= n:
        checks.append(("[n-k+1]_q >= [k+1]_q", star >= top))
        checks.append(("[n-k+1]_q > [k+1]_q - k - 1", star > top - k - 1))
    else:
        for l in range(k + 1, n + 1):
            lhs = top - l - star
            steps = [
                Fraction(lhs),
                Fraction(q ** (k + 1) - q ** (n - k + 1), q - 1) - n,
                Fraction(q ** (n - k + 1) * q ** (2 * k - n - 1)) - n,
                Fraction(q**k - n),
                Fraction(2 * k - n),
            ]
            chain = all(a >= b for a, b in zip(steps, steps[1:])) and steps[-1] > 0
            checks.append((f"[k+1]_q - {l} > [n-k+1]_q (chain)", lhs > 0 and chain))
        line = top - n - (q + 1)
        steps = [
            Fraction(line),
            Fraction(q ** (k + 1) - q**2, q - 1) - n,
            Fraction(q**2 * q ** (k - 2)) - n,
            Fraction(2 * k - n),
        ]
        chain = all(a >= b for a, b in zip(steps, steps[1:])) and steps[-1] > 0
        checks.append(("[k+1]_q - n - (q+1) > 0 (chain)", line > 0 and chain))
    return checks


@_timed
def verify_separation(n: int, k: int, q: int) -> Report:
    check_graph_params(n, k, q)
    report = Report("separation", {"n": n, "k": k, "q": q})
    for name, ok in separation_checks(n, k, q):
        report.checked_count += 1
        if not ok:
            report.violations.append({"inequality": name})
    report.details.update({"star_max": q_integer(n - k + 1, q), "top_full": q_integer(k + 1, q),
                           "regime": "2k<=n" if 2 * k <= n else "2k>n"})
    return report


@_timed
def separation_sweep(qs: Sequence[int] = (2, 3, 4, 5), ns: Sequence[int] = range(4, 13)) -> Report:
    report = Report("separation", {"q": list(qs), "n": list(ns)})
    for q in qs:
        for n in ns:
            for k in range(2, n - 1):
                for name, ok in separation_checks(n, k, q):
                    report.checked_count += 1
                    if not ok:
                        report.violations.append({"n": n, "k": k, "q": q, "inequality": name})
    return report


# --- connectivity and clique completeness ---------------------------------------------

@_timed
def verify_connectivity(n: int, k: int, q: int, G: CodeGraph | None = None) -> Report:
    check_graph_params(n, k, q)
    G = G if G is not None else build_graph(n, k, q)
    report = Report("connectivity", {"n": n, "k": k, "q": q})
    connected, diameter = connectivity(G)
    report.checked_count = len(G)
    if not connected:
        report.violations.append({"connected": False})
    report.details.update({"vertices": len(G), "connected": connected, "diameter": diameter})
    return report


@_timed
def verify_cliques(n: int, k: int, q: int, G: CodeGraph | None = None) -> Report:
    """Bron-Kerbosch maximal cliques versus the star/top classification."""
    check_graph_params(n, k, q)
    G = G if G is not None else build_graph(n, k, q)
    report = Report("cliques", {"n": n, "k": k, "q": q})
    records = classify_maximal_cliques(G)
    classified = {r.members for r in records}
    found = set(find_maximal_cliques(G.adj))
    report.checked_count = len(found)
    for clique in sorted(found - classified, key=sorted):
        report.violations.append({"unclassified": [_rows(G.vertices[i]) for i in sorted(clique)]})
    for clique in sorted(classified - found, key=sorted):
        report.violations.append({"not_found_by_enumeration": sorted(clique)})
    report.details.update({
        "vertices": len(G),
        "maximal_cliques": len(found),
        "stars": sum(r.kind == "star" for r in records),
        "tops": sum(r.kind == "top" for r in records),
        "sizes": sorted({r.size for r in records}),
    })
    return report


VERIFIERS = {
    "star-size": verify_star_sizes,
    "star-maximality": verify_star_maximality,
    "top-bounds": verify_top_bounds,
    "top-sections": verify_top_sections,
    "separation": verify_separation,
    "connectivity": verify_connectivity,
    "cliques": verify_cliques,
}

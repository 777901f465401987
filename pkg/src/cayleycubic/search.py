"""Bounded exhaustive enumeration and classification of surface solutions.

Enumeration fixes the two smallest components and solves the quadratic in
the largest one with an exact integer square-root test, so a bound of B
costs about B^2/2 quadratic solves.  Classification then connects the
enumerated solutions by conjugation moves and tags each one.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import BudgetExceededError
from .sequences import scaled_cheb_t
from .triples import Triple, _conjugate_raw, base_value, reduction_trace

__all__ = [
    "Classification",
    "enumerate_solutions",
    "family_membership",
    "classify",
    "triples_to_csv",
    "triples_to_jsonl",
    "classifications_to_csv",
    "classifications_to_jsonl",
]

TAG_ORDER = ("base", "r-family", "isolated", "frontier-limited")


def _enumerate_range(s: int, bound: int, lo: int, hi: int) -> list[tuple[int, int, int]]:
    rows = []
    ss = s * s
    for a in range(lo, hi + 1):
        da = a * a - ss
        for b in range(a, bound + 1):
            disc = da * (b * b - ss)
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r != disc:
                continue
            for num in {a * b - r, a * b + r}:
                if num <= 0:
                    continue
                c, rem = divmod(num, s)
                if rem == 0 and b <= c <= bound:
                    rows.append((a, b, c))
    return rows


def enumerate_solutions(
    s: int,
    bound: int,
    *,
    budget: int | None = None,
    workers: int = 1,
) -> list[Triple]:
    """All solutions with 1 <= a <= b <= c <= bound, canonical and sorted.

    The number of quadratic solves is bound*(bound+1)/2; if a budget is given
    and would be exceeded the call fails up front rather than part-way.
    """
    if s < 1:
        raise ValueError(f"s must be a positive integer, got {s}")
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    planned = bound * (bound + 1) // 2
    if budget is not None and planned > budget:
        raise BudgetExceededError(
            f"enumeration at bound {bound} needs {planned} quadratic solves, budget is {budget}"
        )
    if workers <= 1:
        rows = _enumerate_range(s, bound, 1, bound)
    else:
        step = max(1, -(-bound // workers))
        spans = [(lo, min(lo + step - 1, bound)) for lo in range(1, bound + 1, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _enumerate_range,
                *zip(*((s, bound, lo, hi) for lo, hi in spans)),
            )
        rows = [r for part in parts for r in part]
    rows.sort()
    return [Triple(s, *r) for r in rows]


def family_membership(t: Triple) -> tuple[int, int, int] | None:
    """(b, n, m) such that t is a permutation of chain values (X_n, X_{n+m}, X_m).

    b is the base value of the triple's reduction terminal, and (n, m) are
    replayed from the trace (one index step per reduction step), so no grid
    search happens.  Returns None when the terminal is not base-shaped or
    when its base value fails the s | 2b integrality gate.
    """
    trace = reduction_trace(t)
    term = trace[-1]
    p = base_value(term)
    if p is None:
        return None
    s = t.s
    if (2 * p) % s:
        return None
    # Terminal is (X_0, X_1, X_1) = (s, p, p).  Walking the trace back up,
    # the replaced component always sits at index |i - j| and moves to i + j,
    # where i, j are the indices of the two untouched components.
    x0, x1, x2 = term.components
    if x1 == x2 and x0 == s:
        cur = [(x0, 0), (x1, 1), (x2, 1)]
    else:
        cur = [(x2, 0), (x0, 1), (x1, 1)]
    for prev in reversed(trace[:-1]):
        pc = Counter(prev.components)
        cc = Counter(v for v, _ in cur)
        added = list((pc - cc).elements())
        removed = list((cc - pc).elements())
        assert len(added) == 1 and len(removed) == 1
        v_new, v_old = added[0], removed[0]
        pos = next(k for k, (v, _) in enumerate(cur) if v == v_old)
        old_idx = cur[pos][1]
        del cur[pos]
        (i1, i2) = (cur[0][1], cur[1][1])
        assert old_idx == abs(i1 - i2)
        cur.append((v_new, i1 + i2))
    n, m, top = sorted(idx for _, idx in cur)
    assert top == n + m
    expect = sorted(scaled_cheb_t(s, p, i) for i in (n, m, top))
    assert expect == sorted(t.components)
    return (p, n, m)


@dataclass(frozen=True)
class Classification:
    """One enumerated solution with its tags and exact conjugate data.

    tags is an ordered subset of ("base", "r-family", "isolated",
    "frontier-limited"); component is the vertex index of the smallest
    member of the triple's conjugation component within the bound.
    """

    triple: Triple
    tags: tuple[str, ...]
    family: tuple[int, int, int] | None
    component: int
    conjugates: tuple[Fraction, Fraction, Fraction]


def classify(
    s: int,
    bound: int,
    *,
    budget: int | None = None,
    workers: int = 1,
) -> list[Classification]:
    """Classify every solution within the bound; deterministic triple order."""
    sols = enumerate_solutions(s, bound, budget=budget, workers=workers)
    verts = [t.components for t in sols]
    index = {v: i for i, v in enumerate(verts)}

    parent = list(range(len(verts)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    all_conjugates = []
    frontier = [False] * len(verts)
    isolated = [True] * len(verts)
    for i, v in enumerate(verts):
        conjs = tuple(_conjugate_raw(s, v, k) for k in range(3))
        all_conjugates.append(conjs)
        for k, conj in enumerate(conjs):
            if conj.denominator != 1 or conj < 1:
                continue
            isolated[i] = False
            cv = int(conj)
            if cv == v[k]:
                continue
            w = tuple(sorted(v[:k] + (cv,) + v[k + 1 :]))
            if max(w) <= bound:
                union(i, index[w])
            else:
                frontier[i] = True

    roots = [find(i) for i in range(len(verts))]
    component_of = {}
    for i, r in enumerate(roots):
        component_of.setdefault(r, i)

    out = []
    for i, t in enumerate(sols):
        fam = family_membership(t)
        tags = []
        if base_value(t) is not None:
            tags.append("base")
        if fam is not None:
            tags.append("r-family")
        if isolated[i]:
            tags.append("isolated")
        if frontier[i]:
            tags.append("frontier-limited")
        out.append(
            Classification(
                triple=t,
                tags=tuple(tags),
                family=fam,
                component=component_of[roots[i]],
                conjugates=all_conjugates[i],
            )
        )
    return out


def triples_to_csv(sols: list[Triple]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["s", "a", "b", "c"])
    for t in sols:
        w.writerow([t.s, t.a, t.b, t.c])
    return buf.getvalue()


def triples_to_jsonl(sols: list[Triple]) -> str:
    lines = [json.dumps({"s": t.s, "triple": [t.a, t.b, t.c]}) for t in sols]
    return "\n".join(lines) + ("\n" if lines else "")


def classifications_to_csv(rows: list[Classification]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["s", "a", "b", "c", "tags", "conj_a", "conj_b", "conj_c"])
    for r in rows:
        a, b, c = r.triple.components
        w.writerow([r.triple.s, a, b, c, "|".join(r.tags), *[str(f) for f in r.conjugates]])
    return buf.getvalue()


def classifications_to_jsonl(rows: list[Classification]) -> str:
    lines = []
    for r in rows:
        lines.append(
            json.dumps(
                {
                    "s": r.triple.s,
                    "triple": list(r.triple.components),
                    "tags": list(r.tags),
                    "family": list(r.family) if r.family is not None else None,
                    "component": r.component,
                    "conjugates": [str(f) for f in r.conjugates],
                }
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")

"""Triples on Cayley's cubic surface: conjugation, reduction, solution graphs.

The surface is s*(x^2 + y^2 + z^2) - s^3 - 2xyz = 0 over positive integers.
Fixing two components turns it into a quadratic in the third, so every
component x of a solution has a conjugate 2yz/s - x.  Swapping a component
for its conjugate is the move that grows and shrinks solutions; everything
in this module is built out of that move.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotASolutionError
from .sequences import scaled_cheb_t

__all__ = [
    "COMPONENT_NAMES",
    "Triple",
    "SolutionGraph",
    "cayley_value",
    "conjugate_component",
    "neighbors",
    "family_triple",
    "is_singular",
    "is_base",
    "base_value",
    "reduction_trace",
    "euclid_index_path",
    "solution_graph",
]

COMPONENT_NAMES = ("a", "b", "c")


def cayley_value(s: int, x: int, y: int, z: int) -> int:
    """s*(x^2+y^2+z^2) - s^3 - 2xyz; zero exactly when (x, y, z) solves the surface."""
    return s * (x * x + y * y + z * z) - s * s * s - 2 * x * y * z


@dataclass(frozen=True)
class Triple:
    """A positive component triple attached to the surface parameter s.

    Components keep the order they were built with; canonical() sorts them
    ascending, which is the form used by graphs and search output.
    """

    s: int
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for name, v in (("s", self.s), ("a", self.a), ("b", self.b), ("c", self.c)):
            if v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v}")

    @property
    def components(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def value(self) -> int:
        return cayley_value(self.s, self.a, self.b, self.c)

    @property
    def is_solution(self) -> bool:
        return self.value == 0

    def canonical(self) -> "Triple":
        x, y, z = sorted(self.components)
        return Triple(self.s, x, y, z)

    def replace(self, index: int, value: int) -> "Triple":
        comps = list(self.components)
        comps[index] = value
        return Triple(self.s, *comps)


def _require_solution(t: Triple) -> None:
    if not t.is_solution:
        raise NotASolutionError(
            f"(s={t.s}; {t.a},{t.b},{t.c}) is not a solution (value {t.value})"
        )


def _conjugate_raw(s: int, comps: tuple[int, int, int], index: int) -> Fraction:
    x = comps[index]
    y, z = (comps[j] for j in range(3) if j != index)
    return Fraction(2 * y * z, s) - x


def conjugate_component(t: Triple, index: int) -> Fraction:
    """The other root of the surface read as a quadratic in the chosen component."""
    _require_solution(t)
    if index not in (0, 1, 2):
        raise ValueError(f"component index must be 0, 1 or 2, got {index}")
    return _conjugate_raw(t.s, t.components, index)


def neighbors(t: Triple) -> list[Triple]:
    """Solutions reached by one conjugation move, in component order.

    A conjugate produces a neighbor only if it is a positive integer and
    differs from the component it replaces, so fixed points yield nothing.
    Results keep the component positions of t; identical solutions reached
    through different components are not merged here.
    """
    _require_solution(t)
    out = []
    for i in range(3):
        conj = _conjugate_raw(t.s, t.components, i)
        if conj.denominator != 1:
            continue
        v = int(conj)
        if v < 1 or v == t.components[i]:
            continue
        nt = t.replace(i, v)
        assert nt.is_solution
        out.append(nt)
    return out


def family_triple(s: int, b: int, n: int, m: int) -> Triple:
    """(X_n, X_{n+m}, X_m) from the scaled Chebyshev chain at base (s, b)."""
    if n < 0 or m < 0:
        raise ValueError(f"chain indices must be non-negative, got ({n}, {m})")
    if n == 0 and m == 0:
        raise ValueError("indices (0, 0) give the degenerate triple (s, s, s) twice over")
    t = Triple(
        s,
        scaled_cheb_t(s, b, n),
        scaled_cheb_t(s, b, n + m),
        scaled_cheb_t(s, b, m),
    )
    assert t.is_solution
    return t


def is_singular(t: Triple) -> bool:
    """Shape {x, x, 1}: the terminal shape of reduction on the s = 1 surface."""
    x0, x1, x2 = sorted(t.components)
    return x0 == 1 and x1 == x2


def base_value(t: Triple) -> int | None:
    """The p with component multiset {s, p, p}, or None if t is not base-shaped."""
    x0, x1, x2 = sorted(t.components)
    if x1 == x2 and x0 == t.s:
        return x1
    if x0 == x1 and x2 == t.s:
        return x0
    return None


def is_base(t: Triple) -> bool:
    """Shape {s, p, p}: the one-parameter family solving the surface for every p."""
    return base_value(t) is not None


def reduction_trace(t: Triple) -> list[Triple]:
    """Canonical triples visited while the maximal component can still shrink.

    Each step replaces the maximal component (smallest index on ties) by its
    conjugate, but only while that conjugate is an integer, positive, and
    strictly smaller.  The maximum strictly decreases, so this terminates.
    """
    _require_solution(t)
    cur = t.canonical()
    trace = [cur]
    while True:
        comps = cur.components
        idx = comps.index(max(comps))
        conj = _conjugate_raw(cur.s, comps, idx)
        if conj.denominator != 1:
            break
        v = int(conj)
        if v < 1 or v >= comps[idx]:
            break
        cur = cur.replace(idx, v).canonical()
        trace.append(cur)
    return trace


def euclid_index_path(n: int, m: int) -> list[tuple[int, int]]:
    """Subtractive-Euclid trail from (n, m) down to a pair containing zero.

    The larger entry is replaced by the difference (ties subtract from the
    second entry).  The path mirrors reduction_trace on the corresponding
    chain triple: both visit one state per step.
    """
    if n < 0 or m < 0:
        raise ValueError(f"indices must be non-negative, got ({n}, {m})")
    if n == 0 and m == 0:
        raise ValueError("(0, 0) has no reduction path")
    path = [(n, m)]
    while n != 0 and m != 0:
        if n > m:
            n -= m
        else:
            m -= n
        path.append((n, m))
    return path


def _integral_moves(s, comps):
    """(sorted replacement triple, component index) for every conjugate that
    is a positive integer different from the component it replaces."""
    for i in range(3):
        conj = _conjugate_raw(s, comps, i)
        if conj.denominator != 1:
            continue
        v = int(conj)
        if v < 1 or v == comps[i]:
            continue
        repl = list(comps)
        repl[i] = v
        yield tuple(sorted(repl)), i


@dataclass(frozen=True)
class SolutionGraph:
    """Bounded conjugation closure of one seed solution.

    vertices: canonical (ascending) component triples, sorted.
    edges: (i, j, k) with vertex indices i < j; k is the position in
        vertices[i] whose conjugation yields vertices[j] (smallest such k).
    frontier: indices of vertices having an integral positive conjugate
        whose triple would exceed the bound.
    """

    s: int
    bound: int
    vertices: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[int, int, int], ...]
    frontier: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "s": self.s,
            "bound": self.bound,
            "vertices": [list(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "frontier": list(self.frontier),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    def to_dot(self) -> str:
        lines = ["graph cayley {"]
        names = ["{},{},{}".format(*v) for v in self.vertices]
        for i, name in enumerate(names):
            mark = ' [peripheries=2]' if i in self.frontier else ""
            lines.append(f'  "{name}"{mark};')
        for i, j, k in self.edges:
            lines.append(f'  "{names[i]}" -- "{names[j]}" [label="{COMPONENT_NAMES[k]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def solution_graph(seed: Triple, bound: int) -> SolutionGraph:
    """Breadth-first conjugation closure of seed among triples with max <= bound."""
    _require_solution(seed)
    start = tuple(sorted(seed.components))
    if bound < max(start):
        raise ValueError("bound must cover the seed's maximal component")
    s = seed.s
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt, _ in _integral_moves(s, cur):
            if max(nxt) <= bound and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    vertices = sorted(seen)
    index = {v: i for i, v in enumerate(vertices)}
    labels: dict[tuple[int, int], int] = {}
    frontier = set()
    for v in vertices:
        i = index[v]
        for w, comp in _integral_moves(s, v):
            if max(w) > bound:
                frontier.add(i)
                continue
            j = index[w]
            if i < j and ((i, j) not in labels or comp < labels[(i, j)]):
                labels[(i, j)] = comp
    edges = tuple(sorted((i, j, k) for (i, j), k in labels.items()))
    return SolutionGraph(s, bound, tuple(vertices), edges, tuple(sorted(frontier)))

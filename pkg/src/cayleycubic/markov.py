"""Markov triples and the continuant calculus used to compare them with
the Cayley solution chains.

Markov's equation x^2 + y^2 + z^2 = 3xyz has its own tree of solutions.
Continuants (numerators of finite continued fractions) encode its vertices;
the same drop-last continuants of repeated words obey a two-term recurrence,
which is what makes a term-by-term comparison with the scaled Chebyshev
chains possible at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import NotASolutionError

__all__ = [
    "MarkovTriple",
    "markov_value",
    "markov_neighbor",
    "markov_tree",
    "markov_tree_dot",
    "continuant",
    "continuant_drop_last",
    "continuant_interior",
    "continuant_power_sequence",
    "splitting_identity_holds",
    "OverlapReport",
    "sequence_overlap_search",
]

MarkovTriple = tuple[int, int, int]

MAX_TREE_DEPTH = 64


def markov_value(x: int, y: int, z: int) -> int:
    """x^2 + y^2 + z^2 - 3xyz; zero exactly on Markov triples."""
    return x * x + y * y + z * z - 3 * x * y * z


def markov_neighbor(t: MarkovTriple, index: int) -> MarkovTriple:
    """Replace one component by 3*(product of the others) - component.

    The input must be a Markov triple; the output is one as well (the move
    swaps the component between the two roots of the quadratic it solves).
    """
    if index not in (0, 1, 2):
        raise ValueError(f"component index must be 0, 1 or 2, got {index}")
    if min(t) < 1:
        raise ValueError(f"components must be positive integers, got {t}")
    if markov_value(*t) != 0:
        raise NotASolutionError(f"{t} does not solve the Markov equation")
    y, z = (t[j] for j in range(3) if j != index)
    v = 3 * y * z - t[index]
    if v < 1:
        raise ValueError(f"replacement component {v} is not positive")
    out = list(t)
    out[index] = v
    result = (out[0], out[1], out[2])
    assert markov_value(*result) == 0
    return result


def _tree_levels(depth: int):
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    if depth > MAX_TREE_DEPTH:
        raise ValueError(f"depth {depth} exceeds the cap of {MAX_TREE_DEPTH}")
    root = (1, 1, 1)
    seen = {root}
    parents: dict[MarkovTriple, MarkovTriple] = {}
    level = [root]
    for _ in range(depth):
        nxt = []
        for t in level:
            for i in range(3):
                w = tuple(sorted(markov_neighbor(t, i)))
                if w not in seen:
                    seen.add(w)
                    parents[w] = t
                    nxt.append(w)
        level = sorted(nxt)
    return seen, parents


def markov_tree(depth: int) -> list[MarkovTriple]:
    """All canonical (sorted) Markov triples within `depth` moves of (1, 1, 1)."""
    seen, _ = _tree_levels(depth)
    return sorted(seen)


def markov_tree_dot(depth: int) -> str:
    """The same tree as a DOT digraph, parent pointing at child."""
    seen, parents = _tree_levels(depth)
    lines = ["digraph markov {"]
    for t in sorted(seen):
        lines.append('  "{},{},{}";'.format(*t))
    for child in sorted(parents):
        parent = parents[child]
        lines.append('  "{},{},{}" -> "{},{},{}";'.format(*parent, *child))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _check_word(word) -> tuple[int, ...]:
    w = tuple(word)
    for v in w:
        if v < 1:
            raise ValueError(f"word entries must be positive integers, got {v}")
    return w


def continuant(word) -> int:
    """K(word): K() = 1, K(x) = x, K(x0..xm) = x0*K(x1..xm) + K(x2..xm).

    Computed by the forward sweep p[k] = a[k]*p[k-1] + p[k-2], which agrees
    with the head recursion because continuants are mirror-symmetric.
    """
    back, cur = 0, 1
    for a in _check_word(word):
        back, cur = cur, a * cur + back
    return cur


def continuant_drop_last(word) -> int:
    """K of the word with its last entry removed; 1 for single-entry words."""
    w = _check_word(word)
    if not w:
        raise ValueError("need at least one entry to drop")
    return continuant(w[:-1])


def continuant_interior(word) -> int:
    """K of the word with first and last entries removed; needs length >= 2."""
    w = _check_word(word)
    if len(w) < 2:
        raise ValueError("need at least two entries to drop both ends")
    return continuant(w[1:-1])


def _drop_last_or_zero(word: tuple[int, ...]) -> int:
    # The empty word is the k = 0 case of the power sequence below; the
    # recurrence forces its value to 0.
    if not word:
        return 0
    return continuant_drop_last(word)


def continuant_power_sequence(alpha, beta, count: int) -> list[int]:
    """[K'(beta), K'(alpha beta), K'(alpha^2 beta), ...] for even-length alpha.

    K' drops the last entry.  Terms are produced by the two-term recurrence
    with exact rational multiplier K'(alpha^2)/K'(alpha) and every term is
    cross-checked against direct continuant evaluation.
    """
    a = _check_word(alpha)
    b = _check_word(beta)
    if not a or len(a) % 2:
        raise ValueError(f"alpha must be a non-empty word of even length, got {a}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    mult = Fraction(continuant_drop_last(a + a), continuant_drop_last(a))
    direct = [_drop_last_or_zero(a * k + b) for k in range(count)]
    terms = direct[:2]
    for k in range(2, count):
        nxt = mult * terms[k - 1] - terms[k - 2]
        if nxt.denominator != 1 or int(nxt) != direct[k]:
            raise ValueError(
                f"recurrence term {nxt} disagrees with direct value {direct[k]} at k={k}"
            )
        terms.append(int(nxt))
    return terms


def splitting_identity_holds(alpha, beta) -> bool:
    """K'(a a b) == K(a)*K'(a b) + K'(a)*K''(a b), with K'' the interior continuant."""
    a = _check_word(alpha)
    b = _check_word(beta)
    if not a:
        raise ValueError("alpha must be non-empty")
    ab = a + b
    lhs = continuant_drop_last(a + ab)
    rhs = continuant(a) * continuant_drop_last(ab) + continuant_drop_last(a) * continuant_interior(ab)
    return lhs == rhs


@dataclass
class OverlapReport:
    """Findings of sequence_overlap_search, JSON-ready via as_dict()."""

    bounds: dict
    matches_s_ge_2: list
    s1_coincidences: list

    def as_dict(self) -> dict:
        return {
            "bounds": self.bounds,
            "matches_s_ge_2": self.matches_s_ge_2,
            "s1_coincidences": self.s1_coincidences,
        }


def sequence_overlap_search(
    max_entry: int = 3,
    max_block_len: int = 4,
    max_terms: int = 6,
) -> OverlapReport:
    """Look for word pairs whose power sequence replays a scaled Chebyshev chain.

    For every alpha (even length <= max_block_len) and non-empty beta (length
    <= max_block_len) with entries <= max_entry, the first two power-sequence
    terms define s = K'(beta) and b = K'(alpha beta); the remaining terms are
    compared exactly against the chain X0 = s, X1 = b, X[k+1] = (2b/s)X[k] -
    X[k-1].  Full-prefix matches with s >= 2 land in matches_s_ge_2 (expected
    empty); matches with s = 1 are recorded as coincidences.  The first two
    terms agree by construction, so max_terms must be at least 3.
    """
    if max_terms < 3:
        raise ValueError(f"max_terms must be >= 3, got {max_terms}")
    if max_entry < 1 or max_block_len < 2:
        raise ValueError("need max_entry >= 1 and max_block_len >= 2")
    matches: list[dict] = []
    coincidences: list[dict] = []
    entries = range(1, max_entry + 1)
    for alen in range(2, max_block_len + 1, 2):
        for alpha in product(entries, repeat=alen):
            for blen in range(1, max_block_len + 1):
                for beta in product(entries, repeat=blen):
                    seq = continuant_power_sequence(alpha, beta, max_terms)
                    s0, b0 = seq[0], seq[1]
                    assert s0 == continuant_drop_last(beta)
                    x0, x1 = Fraction(s0), Fraction(b0)
                    mult = Fraction(2 * b0, s0)
                    ok = True
                    for k in range(2, max_terms):
                        x0, x1 = x1, mult * x1 - x0
                        if x1 != seq[k]:
                            ok = False
                            break
                    if not ok:
                        continue
                    finding = {
                        "alpha": list(alpha),
                        "beta": list(beta),
                        "s": s0,
                        "b": b0,
                        "terms": seq,
                    }
                    (matches if s0 >= 2 else coincidences).append(finding)
    bounds = {
        "max_entry": max_entry,
        "max_block_len": max_block_len,
        "max_terms": max_terms,
    }
    return OverlapReport(bounds, matches, coincidences)

"""Exact evaluation of the linear recurrence families used throughout.

Every sequence here satisfies a two-term recurrence X[k+1] = t*X[k] - q*X[k-1]
and is evaluated pointwise over Python integers.  There is no floating point
and no polynomial-coefficient algebra anywhere in this module.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NonIntegralFamilyError

__all__ = [
    "lucas_u",
    "lucas_v",
    "cheb_t",
    "cheb_u",
    "family_multiplier",
    "scaled_cheb_t",
    "scaled_cheb_u",
]


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"sequence index must be non-negative, got {n}")


def _check_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")


def _run(mult: int, q: int, x0: int, x1: int, steps: int) -> int:
    """Value after `steps` applications of X[k+1] = mult*X[k] - q*X[k-1]."""
    for _ in range(steps):
        x0, x1 = x1, mult * x1 - q * x0
    return x0


@lru_cache(maxsize=None)
def lucas_u(p: int, q: int, n: int) -> int:
    """Lucas sequence of the first kind: U0 = 0, U1 = 1, U[k+1] = p*U[k] - q*U[k-1]."""
    _check_index(n)
    return _run(p, q, 0, 1, n)


@lru_cache(maxsize=None)
def lucas_v(p: int, q: int, n: int) -> int:
    """Lucas sequence of the second kind: V0 = 2, V1 = p, same recurrence as lucas_u."""
    _check_index(n)
    return _run(p, q, 2, p, n)


@lru_cache(maxsize=None)
def cheb_t(n: int, x: int) -> int:
    """First-kind Chebyshev value T_n(x): T0 = 1, T1 = x, T[k+1] = 2x*T[k] - T[k-1]."""
    _check_index(n)
    _check_positive("x", x)
    return _run(2 * x, 1, 1, x, n)


@lru_cache(maxsize=None)
def cheb_u(n: int, x: int) -> int:
    """Second-kind Chebyshev value: seeds 1 and 2x, same recurrence as cheb_t."""
    _check_index(n)
    _check_positive("x", x)
    return _run(2 * x, 1, 1, 2 * x, n)


def family_multiplier(s: int, b: int) -> int:
    """The integer 2b/s driving the scaled chain at base (s, b); requires s | 2b."""
    _check_positive("s", s)
    _check_positive("b", b)
    if (2 * b) % s:
        raise NonIntegralFamilyError(
            f"s={s} does not divide 2b={2 * b}; the scaled chain is not integer-valued"
        )
    return (2 * b) // s


@lru_cache(maxsize=None)
def scaled_cheb_t(s: int, b: int, n: int) -> int:
    """Scaled first-kind value s*T_n(b/s), computed by integer recurrence (seeds s, b)."""
    _check_index(n)
    return _run(family_multiplier(s, b), 1, s, b, n)


@lru_cache(maxsize=None)
def scaled_cheb_u(s: int, b: int, n: int) -> int:
    """Companion second-kind value: seeds 1 and 2b/s, same multiplier as scaled_cheb_t."""
    _check_index(n)
    m = family_multiplier(s, b)
    return _run(m, 1, 1, m, n)

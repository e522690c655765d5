"""The Lehmer factorial norm (base 2) and the metric it induces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .lehmer import _code_digits, factorial_digits
from .perm import Permutation, PermutationError, _check_degree, _same_degree, compose, inverse

Invariance = Literal["left", "right"]


def _norm_from_code(digits: Sequence[int]) -> int:
    # sum over j of 2^(n-j) - 2^(n-j-c_j); each term is an integer since c_j <= n-j
    n = len(digits)
    total = 0
    for j, c in enumerate(digits, 1):
        e = n - j
        total += (1 << e) - (1 << (e - c))
    return total


def norm(sigma: Permutation) -> int:
    """LF_2 of ``sigma``; ranges over ``[0, 2**n - (n + 1)]``."""
    return _norm_from_code(_code_digits(sigma.word))


def norm_of_natural(m: int, n: int) -> int:
    """LF_2 evaluated on the factoradic digits of ``m`` (width ``n``).

    Agrees with ``norm(lex_unrank(m, n))``.
    """
    return _norm_from_code(factorial_digits(m, n))


def distance(sigma: Permutation, tau: Permutation, invariance: Invariance = "left") -> int:
    """``LF_2(sigma^-1 tau)`` (left-invariant) or ``LF_2(sigma tau^-1)`` (right-invariant).

    With the left-invariant default, swapping ranks ``s`` and ``s+1`` of any
    ranking costs ``2**(n-1-s)``.
    """
    _same_degree(sigma, tau)
    if invariance == "left":
        return norm(compose(inverse(sigma), tau))
    if invariance == "right":
        return norm(compose(sigma, inverse(tau)))
    raise ValueError(f"unknown invariance {invariance!r}")


def norm_of_adjacent_transposition(n: int, s: int) -> int:
    _check_degree(n)
    if not 1 <= s <= n - 1:
        raise PermutationError(f"transposition position {s} outside [1, {n - 1}]")
    return 1 << (n - 1 - s)


def transposition_delta(sigma: Permutation, s: int) -> int:
    """Signed change ``LF_2(sigma sigma_s) - LF_2(sigma)``.

    Needs only ``c_s`` and ``c_{s+1}``; positive exactly when ``sigma(s) < sigma(s+1)``.
    """
    n = sigma.n
    if not 1 <= s <= n - 1:
        raise PermutationError(f"transposition position {s} outside [1, {n - 1}]")
    w = sigma.word
    a, b = w[s - 1], w[s]
    if a < b:
        c_s = sum(1 for v in w[s:] if v < a)
        return 1 << (n - s - 1 - c_s)
    c_s1 = sum(1 for v in w[s + 1:] if v < b)
    return -(1 << (n - s - 1 - c_s1))


@dataclass(frozen=True)
class BoundsReport:
    c1: int
    norm: int
    bound: int
    relation: str  # "<=" when c1 == 0, ">=" otherwise
    passed: bool


def norm_bounds_check(sigma: Permutation) -> BoundsReport:
    """Check the first-digit stratum bound.

    If ``c_1 = 0`` the norm is at most ``2**(n-1) - n``; otherwise it is at
    least ``2**(n-2)``.
    """
    n = sigma.n
    digits = _code_digits(sigma.word)
    value = _norm_from_code(digits)
    c1 = digits[0]
    if c1 == 0:
        bound = (1 << (n - 1)) - n
        return BoundsReport(c1, value, bound, "<=", value <= bound)
    bound = 1 << (n - 2)
    return BoundsReport(c1, value, bound, ">=", value >= bound)

"""Lehmer codes, lexicographic rank/unrank and the factorial number system."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .perm import Permutation, PermutationError, _check_degree, _same_degree, compose, inverse


class CodeError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class LehmerCode:
    """Digits ``[c_1, ..., c_n]`` with ``0 <= c_i <= n - i``."""

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise CodeError("empty code")
        n = len(digits)
        for i, c in enumerate(digits, 1):
            if isinstance(c, bool) or not isinstance(c, int) or c < 0:
                raise CodeError(f"digit {c!r} at position {i} is not a nonnegative integer")
            if c > n - i:
                raise CodeError(f"digit c_{i}={c} exceeds bound {n - i}")

    @property
    def n(self) -> int:
        return len(self.digits)

    def c(self, i: int) -> int:
        """``c_i``, 1-based."""
        return self.digits[i - 1]

    def k(self, i: int) -> int:
        """Reindexed digit ``k_i = c_{n-i}``, for ``0 <= i <= n-1``."""
        return self.digits[self.n - i - 1]

    def factorial_digits(self) -> tuple[int, ...]:
        """``(k_{n-1}, ..., k_0)``; the same tuple as ``digits``."""
        return self.digits

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.digits)) + "]"

    @classmethod
    def _trusted(cls, digits: tuple[int, ...]) -> LehmerCode:
        obj = object.__new__(cls)
        object.__setattr__(obj, "digits", digits)
        return obj


def parse_code(text: str) -> LehmerCode:
    """Parse ``[2,0,0]`` (brackets optional)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        return LehmerCode(tuple(int(t) for t in body.split(",")))
    except ValueError as exc:
        if isinstance(exc, CodeError):
            raise
        raise CodeError(f"cannot parse code {text!r}") from None


def _code_digits(word: Sequence[int]) -> tuple[int, ...]:
    n = len(word)
    return tuple(
        sum(1 for j in range(i + 1, n) if word[j] < word[i]) for i in range(n)
    )


def lehmer_code(sigma: Permutation) -> LehmerCode:
    """``c_i`` counts the later positions holding a smaller value."""
    return LehmerCode._trusted(_code_digits(sigma.word))


def decode(code: LehmerCode) -> Permutation:
    unused = list(range(1, code.n + 1))
    return Permutation._trusted(tuple(unused.pop(c) for c in code.digits))


def lex_rank(sigma: Permutation) -> int:
    n = sigma.n
    rank = 0
    for c in _code_digits(sigma.word):
        n -= 1
        rank += c * factorial(n)
    return rank


def factorial_digits(m: int, n: int) -> list[int]:
    """Factoradic digits ``[k_{n-1}, ..., k_0]`` of ``m`` with ``0 <= k_i <= i``."""
    _check_degree(n)
    if m < 0 or m >= factorial(n):
        raise CodeError(f"{m} is outside [0, {n}!)")
    digits = [0] * n
    for i in range(1, n):
        m, digits[n - 1 - i] = divmod(m, i + 1)
    return digits


def lex_unrank(rank: int, n: int) -> Permutation:
    try:
        digits = factorial_digits(rank, n)
    except CodeError as exc:
        raise CodeError(f"rank {rank} out of range for degree {n}") from exc
    return decode(LehmerCode._trusted(tuple(digits)))


def inverse_code(sigma: Permutation) -> LehmerCode:
    """Code of ``sigma^-1`` read off the code of ``sigma``, never building the inverse word.

    ``c_i(sigma^-1) = c_p(sigma) + p - i`` with ``p = sigma^-1(i)``.
    """
    word = sigma.word
    c = _code_digits(word)
    position = [0] * (len(word) + 1)
    for p, v in enumerate(word, 1):
        position[v] = p
    return LehmerCode._trusted(
        tuple(c[position[i] - 1] + position[i] - i for i in range(1, len(word) + 1))
    )


def code_after_transposition(code: LehmerCode, sigma: Permutation, s: int) -> LehmerCode:
    """Code of ``sigma sigma_s`` obtained by touching only digits ``s`` and ``s+1``."""
    n = sigma.n
    if code.n != n:
        raise PermutationError(f"degree mismatch: code {code.n} vs permutation {n}")
    if not 1 <= s <= n - 1:
        raise PermutationError(f"transposition position {s} outside [1, {n - 1}]")
    digits = list(code.digits)
    cs, cs1 = digits[s - 1], digits[s]
    if sigma.word[s - 1] < sigma.word[s]:
        digits[s - 1], digits[s] = cs1 + 1, cs
    else:
        digits[s - 1], digits[s] = cs1, cs - 1
    return LehmerCode._trusted(tuple(digits))


@dataclass(frozen=True)
class CodeInequalityReport:
    """Per-index outcome of the three code relations for a pair ``(sigma, tau)``.

    ``value_bound[i-1]``: ``sigma(i) <= i + c_i(sigma)``;
    ``composition[i-1]``: ``c_i(sigma tau) <= c_i(tau) + c_{tau(i)}(sigma)``;
    ``inverse_identity[i-1]``: ``i + c_i(sigma) == sigma(i) + c_{sigma(i)}(sigma^-1)``.
    """

    value_bound: tuple[bool, ...]
    composition: tuple[bool, ...]
    inverse_identity: tuple[bool, ...]

    @property
    def passed(self) -> bool:
        return all(self.value_bound) and all(self.composition) and all(self.inverse_identity)


def check_code_inequalities(sigma: Permutation, tau: Permutation) -> CodeInequalityReport:
    _same_degree(sigma, tau)
    n = sigma.n
    s, t = sigma.word, tau.word
    cs = _code_digits(s)
    ct = _code_digits(t)
    cst = _code_digits(compose(sigma, tau).word)
    cinv = _code_digits(inverse(sigma).word)
    value_bound = tuple(s[i - 1] <= i + cs[i - 1] for i in range(1, n + 1))
    composition = tuple(
        cst[i - 1] <= ct[i - 1] + cs[t[i - 1] - 1] for i in range(1, n + 1)
    )
    inverse_identity = tuple(
        i + cs[i - 1] == s[i - 1] + cinv[s[i - 1] - 1] for i in range(1, n + 1)
    )
    return CodeInequalityReport(value_bound, composition, inverse_identity)

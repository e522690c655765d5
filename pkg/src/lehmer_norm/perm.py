"""Permutations of ``[n]`` in one-line notation.

Values are 1-based everywhere a caller can see them: ``Permutation((3, 1, 2))``
maps 1 -> 3, 2 -> 1, 3 -> 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

MAX_DEGREE = 62


class PermutationError(ValueError):
    """Raised for words that are not bijections of [n] or for mismatched degrees."""


@dataclass(frozen=True, slots=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        _validate_word(word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Image of ``i`` (1-based)."""
        if not 1 <= i <= len(self.word):
            raise PermutationError(f"position {i} outside [1, {len(self.word)}]")
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(map(str, self.word))

    @classmethod
    def _trusted(cls, word: tuple[int, ...]) -> Permutation:
        # internal fast path for words already known to be bijections
        obj = object.__new__(cls)
        object.__setattr__(obj, "word", word)
        return obj

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, 1))


def _validate_word(word: Sequence[int]) -> None:
    n = len(word)
    if n == 0:
        raise PermutationError("empty permutation; the smallest group is S_1")
    if n > MAX_DEGREE:
        raise PermutationError(f"degree {n} exceeds the cap of {MAX_DEGREE}")
    seen = [False] * (n + 1)
    for v in word:
        if isinstance(v, bool) or not isinstance(v, int):
            raise PermutationError(f"non-integer value {v!r}")
        if not 1 <= v <= n:
            raise PermutationError(f"value {v} out of range [1, {n}]")
        if seen[v]:
            raise PermutationError(f"duplicate value {v}")
        seen[v] = True


def make_permutation(word: Iterable[int]) -> Permutation:
    return Permutation(tuple(word))


def parse_permutation(text: str) -> Permutation:
    """Parse ``3,1,2`` or ``(3,1,2)``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    if not body:
        raise PermutationError("empty permutation; the smallest group is S_1")
    values = []
    for token in body.split(","):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise PermutationError(f"invalid token {token!r}") from None
    return Permutation(tuple(values))


def _check_degree(n: int) -> None:
    if n < 1:
        raise PermutationError(f"degree must be >= 1, got {n}")
    if n > MAX_DEGREE:
        raise PermutationError(f"degree {n} exceeds the cap of {MAX_DEGREE}")


def _same_degree(sigma: Permutation, tau: Permutation) -> None:
    if sigma.n != tau.n:
        raise PermutationError(f"degree mismatch: {sigma.n} vs {tau.n}")


def identity(n: int) -> Permutation:
    _check_degree(n)
    return Permutation(tuple(range(1, n + 1)))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """``(sigma tau)(i) = sigma(tau(i))``."""
    _same_degree(sigma, tau)
    s = sigma.word
    return Permutation._trusted(tuple(s[t - 1] for t in tau.word))


def inverse(sigma: Permutation) -> Permutation:
    inv = [0] * sigma.n
    for i, v in enumerate(sigma.word, 1):
        inv[v - 1] = i
    return Permutation._trusted(tuple(inv))


def reverse(sigma: Permutation) -> Permutation:
    return Permutation._trusted(sigma.word[::-1])


def adjacent_transposition(n: int, s: int) -> Permutation:
    """The swap of ``s`` and ``s+1``, for ``1 <= s <= n-1``."""
    _check_degree(n)
    if not 1 <= s <= n - 1:
        raise PermutationError(f"transposition position {s} outside [1, {n - 1}]")
    word = list(range(1, n + 1))
    word[s - 1], word[s] = word[s], word[s - 1]
    return Permutation(tuple(word))


def include_iota(sigma: Permutation) -> Permutation:
    """Embed into S_{n+1} by prepending a fixed 1 and shifting every value up."""
    return Permutation((1,) + tuple(v + 1 for v in sigma.word))


def include_j(sigma: Permutation) -> Permutation:
    """Embed into S_{n+1} by appending the fixed point n+1."""
    return Permutation(sigma.word + (sigma.n + 1,))


def conjugate_by_reverse(sigma: Permutation) -> Permutation:
    """``r sigma r`` where ``r`` is the reversed identity."""
    r = reverse(identity(sigma.n))
    return compose(compose(r, sigma), r)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every element of S_n in lexicographic order of words."""
    _check_degree(n)
    for word in _itertools_permutations(range(1, n + 1)):
        yield Permutation._trusted(word)

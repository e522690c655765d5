"""How often each norm value occurs over S_infinity.

A value ``m > 0`` is hit by exactly as many finitely supported permutations as
there are ways to write ``m`` as a sum of blocks of consecutive powers of two,
``2**m_j + 2**(m_j - 1) + ... + 2**(m_j - l_j)``, with strictly decreasing
leading exponents.  This module counts those decompositions three ways:

* ``enumerate_Sk`` / ``s_k_bruteforce`` list them straight from the definition;
* ``RecursionSession`` evaluates the closed recursion keyed on the binary shape of ``m``;
* ``s_total_permutation_oracle`` sweeps a whole symmetric group and tallies norms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple

from . import _kernels
from .lehmer import LehmerCode, _code_digits, decode
from .perm import MAX_DEGREE, Permutation


class DecompositionError(ValueError):
    pass


def _block_value(top: int, length: int) -> int:
    """``2**top + ... + 2**(top - length)``."""
    return (1 << (top + 1)) - (1 << (top - length))


def _run(hi: int, lo: int) -> int:
    """``2**hi + ... + 2**lo`` (zero when ``hi < lo``)."""
    if hi < lo:
        return 0
    return (1 << (hi + 1)) - (1 << lo)


def _max_value(top: int) -> int:
    """Largest value representable with leading exponent at most ``top``."""
    if top < 0:
        return 0
    return (1 << (top + 2)) - (top + 2)


@dataclass(frozen=True, slots=True)
class Decomposition:
    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        blocks = tuple((int(a), int(b)) for a, b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise DecompositionError("a decomposition needs at least one block")
        prev = None
        for top, length in blocks:
            if top < 0 or length < 0:
                raise DecompositionError(f"negative entry in block ({top},{length})")
            if length > top:
                raise DecompositionError(f"block ({top},{length}) has l > m")
            if prev is not None and top >= prev:
                raise DecompositionError("leading exponents must strictly decrease")
            prev = top

    @property
    def k(self) -> int:
        return self.blocks[0][0]

    @property
    def value(self) -> int:
        return sum(_block_value(top, length) for top, length in self.blocks)

    def __str__(self) -> str:
        return "(" + ",".join(f"({a},{b})" for a, b in self.blocks) + ")"

    def sum_expression(self) -> str:
        """``7=[2^2]+[2^1+2^0]`` style rendering."""
        parts = []
        for top, length in self.blocks:
            parts.append("[" + "+".join(f"2^{top - p}" for p in range(length + 1)) + "]")
        return f"{self.value}=" + "+".join(parts)


_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_decomposition(text: str) -> Decomposition:
    """Accepts ``((2,0),(1,1))`` as well as the bare one-block form ``(2,2)``."""
    body = re.sub(r"\s+", "", text)
    pairs = _PAIR.findall(body)
    if not pairs:
        raise DecompositionError(f"cannot parse decomposition {text!r}")
    rebuilt = ",".join(f"({a},{b})" for a, b in pairs)
    if body not in (rebuilt, f"({rebuilt})"):
        raise DecompositionError(f"cannot parse decomposition {text!r}")
    return Decomposition(tuple((int(a), int(b)) for a, b in pairs))


# --- definition-level enumeration -------------------------------------------


def _tails(remaining: int, below: int) -> Iterator[tuple[tuple[int, int], ...]]:
    # block sequences with leading exponent < below summing to remaining, lex order
    if remaining == 0:
        yield ()
        return
    for top in range(below - 1, -1, -1):
        if _max_value(top) < remaining:
            break
        for length in range(top + 1):
            v = _block_value(top, length)
            if v > remaining:
                break
            for rest in _tails(remaining - v, top):
                yield ((top, length),) + rest


def enumerate_Sk(m: int, k: int) -> list[Decomposition]:
    """All decompositions of ``m`` whose leading exponent is ``k``, lexicographically sorted."""
    if m < 1:
        raise DecompositionError(f"m must be positive, got {m}")
    if k < 0 or _max_value(k) < m:
        return []
    found = []
    for length in range(k + 1):
        v = _block_value(k, length)
        if v > m:
            break
        for rest in _tails(m - v, k):
            found.append(Decomposition(((k, length),) + rest))
    found.sort(key=lambda d: d.blocks)
    return found


def s_k_bruteforce(m: int, k: int) -> int:
    return len(enumerate_Sk(m, k))


def enumerate_decompositions(m: int) -> list[Decomposition]:
    """Every decomposition of ``m``: grouped by ascending ``k``, each group lexicographic."""
    if m < 1:
        raise DecompositionError(f"m must be positive, got {m}")
    top = m.bit_length() - 1
    out: list[Decomposition] = []
    for k in range(max(top - 1, 0), top + 1):
        out.extend(enumerate_Sk(m, k))
    return out


# --- closed recursion ----------------------------------------------------------


class Shape(NamedTuple):
    """Binary shape of a positive integer as seen by the recursion.

    ``case`` is one of ``"ii"`` (m = 1), ``"iii"`` (m = 2), ``"iv"`` (a power of
    two >= 4), ``"v"`` (a single run of ones ``top..low``), ``"vi"`` (a run
    ``top..low`` with ``low >= 2``, a zero at ``low-1`` and a nonzero tail) or
    ``"vii"`` (a lone top bit, a zero below it and a nonzero tail).
    """

    case: str
    top: int
    low: int
    tail: int


def classify(m: int) -> Shape:
    if m < 1:
        raise DecompositionError(f"m must be positive, got {m}")
    top = m.bit_length() - 1
    low = top
    while low > 0 and (m >> (low - 1)) & 1:
        low -= 1
    tail = m - _run(top, low)
    if m == 1:
        return Shape("ii", 0, 0, 0)
    if m == 2:
        return Shape("iii", 1, 1, 0)
    if low == top:
        return Shape("iv" if tail == 0 else "vii", top, low, tail)
    return Shape("v" if tail == 0 else "vi", top, low, tail)


@dataclass
class RecursionSession:
    """Memoised evaluation of ``s_k(m)`` through the recursion.

    A session owns its cache; use one per thread.
    """

    _memo: dict[tuple[int, int], int] = field(default_factory=dict)

    def s_k(self, m: int, k: int) -> int:
        if m <= 0 or k < 0:
            return 0
        top = m.bit_length() - 1
        if k != top and k != top - 1:
            return 0
        key = (m, k)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = self._evaluate(m, k)
        return hit

    def _sum_over(self, x: int, k_max: int) -> int:
        return sum(self.s_k(x, k) for k in range(k_max + 1))

    def _evaluate(self, m: int, k: int) -> int:
        shape = classify(m)
        p = shape.top
        if shape.case == "ii":
            return 1 if k == 0 else 0
        if shape.case == "iii":
            return 1 if k == 1 else 0
        if k == p - 1:
            # strip a leading block (p-1, p-1-j) for every j; identical in cases iv-vii
            return sum(self._sum_over(m - _run(p - 1, j), p - 2) for j in range(p))
        low, tail = shape.low, shape.tail
        if shape.case == "iv":
            return 1
        if shape.case == "v":
            return 1 + sum(self._sum_over(_run(j, low), p - 1) for j in range(low, p))
        if shape.case == "vi":
            return self._sum_over(tail, p - 1) + sum(
                self._sum_over(_run(j, low) + tail, p - 1) for j in range(low, p)
            )
        # vii
        return self._sum_over(tail, p - 1)

    def s_total(self, m: int) -> int:
        if m < 0:
            raise DecompositionError(f"m must be nonnegative, got {m}")
        if m == 0:
            return 1
        top = m.bit_length() - 1
        return self.s_k(m, top) + self.s_k(m, top - 1)


def s_k_recursive(m: int, k: int, session: RecursionSession | None = None) -> int:
    if m < 1:
        raise DecompositionError(f"m must be positive, got {m}")
    return (session or RecursionSession()).s_k(m, k)


def s_total(m: int, session: RecursionSession | None = None) -> int:
    """Number of elements of S_infinity with norm ``m`` (1 for ``m = 0``)."""
    return (session or RecursionSession()).s_total(m)


class DistributionRow(NamedTuple):
    m: int
    s_top: int  # s_k(m) for k = top bit of m
    s_below: int  # s_k(m) for k = top bit - 1
    s: int
    d: int


def distribution_table(M: int, session: RecursionSession | None = None) -> list[DistributionRow]:
    """Rows ``m = 1..M`` with the cumulative count ``d(m) = s(1) + ... + s(m)``."""
    if M < 1:
        raise DecompositionError(f"M must be positive, got {M}")
    session = session or RecursionSession()
    rows = []
    d = 0
    for m in range(1, M + 1):
        top = m.bit_length() - 1
        a, b = session.s_k(m, top), session.s_k(m, top - 1)
        d += a + b
        rows.append(DistributionRow(m, a, b, a + b, d))
    return rows


# --- decompositions <-> permutations -----------------------------------------


def decomposition_to_permutation(dec: Decomposition) -> Permutation:
    """The permutation of degree ``k + 2`` whose factorial digit ``k_{m_j+1}`` is ``l_j + 1``."""
    n = dec.k + 2
    if n > MAX_DEGREE:
        raise DecompositionError(f"leading exponent {dec.k} needs degree {n} > {MAX_DEGREE}")
    digits = [0] * n
    for top, length in dec.blocks:
        digits[n - top - 2] = length + 1  # c_{n-i} = k_i with i = top + 1
    return decode(LehmerCode(tuple(digits)))


def permutation_to_decomposition(sigma: Permutation) -> Decomposition:
    if sigma.is_identity():
        raise DecompositionError("the identity has norm 0 and no decomposition")
    n = sigma.n
    digits = _code_digits(sigma.word)
    if digits[0] == 0:
        raise DecompositionError(
            "c_1 = 0: not a minimal-degree representative; strip the leading fixed point first"
        )
    blocks = []
    for pos, c in enumerate(digits, 1):
        if c:
            i = n - pos
            blocks.append((i - 1, c - 1))
    return Decomposition(tuple(blocks))


# --- permutation-count oracle ---------------------------------------------------

ORACLE_MAX_DEGREE = 12


def oracle_degree(m: int) -> int:
    return m.bit_length() + 1  # floor(log2 m) + 2


@lru_cache(maxsize=None)
def _cached_histogram(n: int) -> tuple[int, ...]:
    return tuple(int(x) for x in _kernels.norm_histogram(n))


def norm_histogram(n: int) -> tuple[int, ...]:
    """``hist[v]`` = number of permutations in S_n of norm ``v``."""
    if not 1 <= n <= ORACLE_MAX_DEGREE:
        raise DecompositionError(f"degree {n} outside the sweep guard [1, {ORACLE_MAX_DEGREE}]")
    return _cached_histogram(n)


def s_total_permutation_oracle(m: int, degree: int | None = None) -> int:
    """Count permutations of norm ``m`` in S_N, ``N = floor(log2 m) + 2``.

    Every class of S_infinity with norm ``m`` has exactly one representative
    there.  A larger ``degree`` may be passed to reuse one sweep for many ``m``.
    """
    if m < 1:
        raise DecompositionError(f"m must be positive, got {m}")
    n = oracle_degree(m)
    if degree is not None:
        if degree < n:
            raise DecompositionError(f"degree {degree} too small for m={m}; need {n}")
        n = degree
    if n > ORACLE_MAX_DEGREE:
        raise DecompositionError(f"m={m} needs S_{n}, beyond the guard S_{ORACLE_MAX_DEGREE}")
    hist = norm_histogram(n)
    return hist[m] if m < len(hist) else 0


DEFINITION_MAX_M = 512
PERMUTATIONS_MAX_M = 256


def s_total_definition(m: int) -> int:
    """``s(m)`` by counting enumerated decompositions."""
    if m == 0:
        return 1
    top = m.bit_length() - 1
    return s_k_bruteforce(m, top) + s_k_bruteforce(m, top - 1)


def distribution_counts(M: int, method: str = "recursion") -> list[tuple[int, int, int]]:
    """``(m, s(m), d(m))`` for ``m = 1..M`` computed by the named method."""
    if M < 1:
        raise DecompositionError(f"M must be positive, got {M}")
    if method == "recursion":
        return [(r.m, r.s, r.d) for r in distribution_table(M)]
    if method == "definition":
        if M > DEFINITION_MAX_M:
            raise DecompositionError(f"method 'definition' supports M <= {DEFINITION_MAX_M}")
        counts = [s_total_definition(m) for m in range(1, M + 1)]
    elif method == "permutations":
        if M > PERMUTATIONS_MAX_M:
            raise DecompositionError(f"method 'permutations' supports M <= {PERMUTATIONS_MAX_M}")
        hist = norm_histogram(oracle_degree(M))
        counts = [hist[m] for m in range(1, M + 1)]
    else:
        raise DecompositionError(f"unknown method {method!r}")
    out, d = [], 0
    for m, s in enumerate(counts, 1):
        d += s
        out.append((m, s, d))
    return out

"""Batch kernels for whole-group sweeps.

Two interchangeable implementations live here: numba ``@njit`` loops and a
vectorised numpy path.  Set ``LEHMER_NORM_PURE_NUMPY=1`` to force numpy; the
numpy path is also used when numba cannot be imported.  Both return identical
integer arrays, which ``tests/test_kernels.py`` checks.
"""

from __future__ import annotations

import os
from math import factorial

import numpy as np

CHUNK = 1 << 18

_FLAG = os.environ.get("LEHMER_NORM_PURE_NUMPY", "").strip().lower()
_FORCE_NUMPY = _FLAG not in ("", "0", "false", "no")

try:
    if _FORCE_NUMPY:
        raise ImportError("numba disabled by LEHMER_NORM_PURE_NUMPY")
    from numba import njit
except ImportError:
    njit = None

BACKEND = "numpy" if njit is None else "numba"


# --- numpy ------------------------------------------------------------------------


def _unrank_numpy(n: int, ranks: np.ndarray) -> np.ndarray:
    rows = ranks.shape[0]
    digits = np.zeros((rows, n), dtype=np.int64)
    rest = ranks.astype(np.int64, copy=True)
    for i in range(1, n):
        digits[:, n - 1 - i] = rest % (i + 1)
        rest //= i + 1
    # selection decode: position p takes the (c_p + 1)-th smallest unused value
    available = np.ones((rows, n), dtype=bool)
    words = np.empty((rows, n), dtype=np.int64)
    row_idx = np.arange(rows)
    for p in range(n):
        seen = np.cumsum(available, axis=1)
        pick = np.argmax(seen == (digits[:, p] + 1)[:, None], axis=1)
        words[:, p] = pick + 1
        available[row_idx, pick] = False
    return words


def _codes_numpy(words: np.ndarray) -> np.ndarray:
    rows, n = words.shape
    codes = np.zeros((rows, n), dtype=np.int64)
    for i in range(n):
        codes[:, i] = (words[:, i + 1:] < words[:, i:i + 1]).sum(axis=1)
    return codes


def _norms_numpy(codes: np.ndarray) -> np.ndarray:
    n = codes.shape[1]
    exps = (n - 1 - np.arange(n, dtype=np.int64))[None, :]
    terms = np.left_shift(1, exps) - np.left_shift(1, exps - codes)
    return terms.sum(axis=1)


def _histogram_numpy(n: int, start: int, stop: int, size: int) -> np.ndarray:
    words = _unrank_numpy(n, np.arange(start, stop, dtype=np.int64))
    values = _norms_numpy(_codes_numpy(words))
    return np.bincount(values, minlength=size).astype(np.int64)


# --- numba ------------------------------------------------------------------------

if njit is not None:

    @njit(cache=True)
    def _unrank_into(n, rank, digits, unused, word):
        for i in range(1, n):
            digits[n - 1 - i] = rank % (i + 1)
            rank //= i + 1
        digits[n - 1] = 0
        for v in range(n):
            unused[v] = v + 1
        left = n
        for p in range(n):
            c = digits[p]
            word[p] = unused[c]
            for q in range(c, left - 1):
                unused[q] = unused[q + 1]
            left -= 1

    @njit(cache=True)
    def _norm_of_word(n, word):
        total = 0
        for i in range(n):
            c = 0
            for j in range(i + 1, n):
                if word[j] < word[i]:
                    c += 1
            e = n - 1 - i
            total += (1 << e) - (1 << (e - c))
        return total

    @njit(cache=True)
    def _histogram_numba(n, start, stop, hist):
        digits = np.empty(n, dtype=np.int64)
        unused = np.empty(n, dtype=np.int64)
        word = np.empty(n, dtype=np.int64)
        for r in range(start, stop):
            _unrank_into(n, r, digits, unused, word)
            hist[_norm_of_word(n, word)] += 1

    @njit(cache=True)
    def _codes_numba(words):
        rows, n = words.shape
        codes = np.zeros((rows, n), dtype=np.int64)
        for r in range(rows):
            for i in range(n):
                c = 0
                for j in range(i + 1, n):
                    if words[r, j] < words[r, i]:
                        c += 1
                codes[r, i] = c
        return codes

    @njit(cache=True)
    def _norms_numba(codes):
        rows, n = codes.shape
        out = np.zeros(rows, dtype=np.int64)
        for r in range(rows):
            total = 0
            for i in range(n):
                e = n - 1 - i
                total += (1 << e) - (1 << (e - codes[r, i]))
            out[r] = total
        return out

    @njit(cache=True)
    def _unrank_numba(n, ranks):
        rows = ranks.shape[0]
        words = np.empty((rows, n), dtype=np.int64)
        digits = np.empty(n, dtype=np.int64)
        unused = np.empty(n, dtype=np.int64)
        word = np.empty(n, dtype=np.int64)
        for r in range(rows):
            _unrank_into(n, ranks[r], digits, unused, word)
            words[r, :] = word
        return words


# --- public surface --------------------------------------------------------------


def histogram_size(n: int) -> int:
    """Number of distinct possible norm values in S_n, ``2**n - n``."""
    return (1 << n) - n


def norm_histogram_range(n: int, start: int, stop: int, backend: str | None = None) -> np.ndarray:
    """Histogram of norms over the lex-rank range ``[start, stop)`` of S_n."""
    size = histogram_size(n)
    if (backend or BACKEND) == "numba":
        hist = np.zeros(size, dtype=np.int64)
        _histogram_numba(n, start, stop, hist)
        return hist
    return _histogram_numpy(n, start, stop, size)


def norm_histogram(n: int, chunk: int = CHUNK, backend: str | None = None) -> np.ndarray:
    """Histogram of norms over all of S_n, accumulated over fixed rank chunks."""
    total = factorial(n)
    hist = np.zeros(histogram_size(n), dtype=np.int64)
    for start in range(0, total, chunk):
        hist += norm_histogram_range(n, start, min(start + chunk, total), backend)
    return hist


def unrank_batch(n: int, ranks: np.ndarray, backend: str | None = None) -> np.ndarray:
    """1-based words of the permutations with the given lex ranks, one per row."""
    ranks = np.ascontiguousarray(ranks, dtype=np.int64)
    if (backend or BACKEND) == "numba":
        return _unrank_numba(n, ranks)
    return _unrank_numpy(n, ranks)


def lehmer_codes_batch(words: np.ndarray, backend: str | None = None) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype=np.int64)
    if (backend or BACKEND) == "numba":
        return _codes_numba(words)
    return _codes_numpy(words)


def norms_batch(words: np.ndarray, backend: str | None = None) -> np.ndarray:
    codes = lehmer_codes_batch(words, backend)
    if (backend or BACKEND) == "numba":
        return _norms_numba(codes)
    return _norms_numpy(codes)


def available_backends() -> tuple[str, ...]:
    return ("numpy",) if njit is None else ("numba", "numpy")
